"""Blocks world with two action models.

``direct``: a top block moves onto another stack or to the table in one
action.  ``deep``: picking a block up and putting it down are separate
actions, with at most one block held.

States are canonical: stacks are tuples (bottom to top) sorted by their
bottom block, plus the held block (deep model only).  Blocks are numbered
1..n.  The heuristic counts blocks whose chain of blocks below them does
not match the goal's; each such block must move at least once (two actions
in the deep model).
"""
from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

# state = (stacks, holding); stacks = tuple of tuples, holding = int | None
BlocksState = tuple

MODELS = ("direct", "deep")


def canonical(stacks: Iterable[Sequence[int]], holding: Optional[int] = None) -> BlocksState:
    return (tuple(sorted(tuple(s) for s in stacks if s)), holding)


def tower_goal(n: int) -> BlocksState:
    """Default goal: one stack with block 1 at the bottom, n on top."""
    return canonical([tuple(range(1, n + 1))])


class BlocksDomain:
    """DomainAdapter over one blocks-world instance."""

    def __init__(self, start: BlocksState, goal: Optional[BlocksState] = None,
                 model: str = "direct"):
        if model not in MODELS:
            raise ValueError(f"unknown blocks model: {model!r}")
        stacks, holding = start
        blocks = sorted(b for s in stacks for b in s)
        if holding is not None:
            blocks = sorted(blocks + [holding])
        n = len(blocks)
        if blocks != list(range(1, n + 1)):
            raise ValueError("blocks must be exactly 1..n, each placed once")
        if model == "direct" and holding is not None:
            raise ValueError("direct model never holds a block")
        self.model = model
        self.n = n
        self.start = canonical(stacks, holding)
        self.goal = goal if goal is not None else tower_goal(n)
        # below[b]: the chain of blocks underneath b in the goal (bottom up).
        below: dict[int, tuple] = {}
        for stack in self.goal[0]:
            for i, b in enumerate(stack):
                below[b] = stack[:i]
        if sorted(below) != list(range(1, n + 1)):
            raise ValueError("goal must place every block")
        self._goal_below = below

    def initial(self) -> BlocksState:
        return self.start

    def is_goal(self, state: BlocksState) -> bool:
        return state == self.goal

    def key(self, state: BlocksState):
        return state

    def misplaced(self, state: BlocksState) -> int:
        """Blocks (in stacks) whose entire below-chain differs from the goal's."""
        goal_below = self._goal_below
        count = 0
        for stack in state[0]:
            for i, b in enumerate(stack):
                if stack[:i] != goal_below[b]:
                    count += 1
        return count

    def h(self, state: BlocksState) -> float:
        m = self.misplaced(state)
        if self.model == "deep":
            # A misplaced stacked block needs a pickup and a putdown; a
            # held block needs at least the putdown.
            return float(2 * m + (1 if state[1] is not None else 0))
        return float(m)

    def d(self, state: BlocksState) -> float:
        return float(self.misplaced(state) + (1 if state[1] is not None else 0))

    def successors(self, state: BlocksState) -> list[tuple[BlocksState, float]]:
        stacks, holding = state
        out = []
        if self.model == "direct":
            for i, src in enumerate(stacks):
                block = src[-1]
                rest = [list(s) for s in stacks]
                rest[i] = list(src[:-1])
                if len(src) > 1:  # to the table (a new singleton stack)
                    out.append((canonical(rest + [[block]]), 1.0))
                for j in range(len(stacks)):
                    if j == i:
                        continue
                    moved = [list(s) for s in rest]
                    moved[j].append(block)
                    out.append((canonical(moved), 1.0))
        else:
            if holding is None:
                for i, src in enumerate(stacks):
                    rest = [list(s) for s in stacks]
                    rest[i] = list(src[:-1])
                    out.append((canonical(rest, src[-1]), 1.0))
            else:
                out.append((canonical(list(stacks) + [[holding]], None), 1.0))
                for j in range(len(stacks)):
                    moved = [list(s) for s in stacks]
                    moved[j].append(holding)
                    out.append((canonical(moved, None), 1.0))
        return out


def parse_blocks_instances(text: str) -> list[BlocksState]:
    """One instance per line: stacks separated by ``|``, blocks by spaces,
    bottom block first.  ``#`` comments allowed."""
    states = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            stacks = [[int(b) for b in part.split()]
                      for part in line.split("|") if part.strip()]
        except ValueError as exc:
            raise ValueError(f"line {line_no}: malformed token: {exc}") from None
        state = canonical(stacks)
        blocks = sorted(b for s in state[0] for b in s)
        if blocks != list(range(1, len(blocks) + 1)):
            raise ValueError(f"line {line_no}: blocks must be exactly 1..n")
        states.append(state)
    return states


def serialize_blocks_instances(states: Iterable[BlocksState]) -> str:
    lines = []
    for stacks, _holding in states:
        lines.append(" | ".join(" ".join(str(b) for b in s) for s in stacks))
    return "\n".join(lines) + "\n"


def gen_blocks(n: int, count: int, seed: int) -> list[BlocksState]:
    """Deterministic random configurations: each block, in a shuffled
    order, goes to the table or on top of a uniformly chosen stack."""
    if n < 1 or count < 1:
        raise ValueError("need n >= 1 and count >= 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        stacks: list[list[int]] = []
        for block in order:
            choice = rng.randrange(len(stacks) + 1)
            if choice == len(stacks):
                stacks.append([block])
            else:
                stacks[choice].append(block)
        out.append(canonical(stacks))
    return out
