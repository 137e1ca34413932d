"""Pancake sorting: flip a prefix of the stack until it is sorted.

States are tuples, index 0 = top of the stack, goal = (1, 2, ..., N) with
an implicit plate of weight N+1 below the bottom pancake.  Unit cost
charges 1 per flip; heavy cost charges the ID of the deepest flipped
pancake (the one sitting directly above the spatula).
"""
from __future__ import annotations

import random
from itertools import permutations
from typing import Iterable, Sequence

PancakeState = tuple

COST_MODELS = ("unit", "heavy")


def gap_h(state: PancakeState) -> int:
    """Number of adjacent positions (plate included) differing by more
    than one.  Each flip changes at most one adjacency, so this lower
    bounds the number of flips."""
    n = len(state)
    gaps = 0
    for i in range(n - 1):
        if abs(state[i] - state[i + 1]) > 1:
            gaps += 1
    if abs(state[n - 1] - (n + 1)) > 1:
        gaps += 1
    return gaps


def heavy_gap_h(state: PancakeState) -> float:
    """Cost-to-go adaptation of the gap heuristic for heavy flips.

    Resolving a gap takes a flip whose boundary touches it, costing at
    least the smaller pancake of the gap pair, so the sum of those minima
    is admissible.
    """
    n = len(state)
    total = 0
    for i in range(n - 1):
        a, b = state[i], state[i + 1]
        if abs(a - b) > 1:
            total += a if a < b else b
    if abs(state[n - 1] - (n + 1)) > 1:
        total += state[n - 1]
    return float(total)


class PancakeDomain:
    """DomainAdapter over one pancake instance.

    Cost-to-go h is the gap heuristic (heavy-adapted under the heavy cost
    model); distance-to-go d is always the plain gap count.
    """

    def __init__(self, start: Sequence[int], cost_model: str = "unit"):
        start = tuple(start)
        n = len(start)
        if n < 2:
            raise ValueError("need at least 2 pancakes")
        if sorted(start) != list(range(1, n + 1)):
            raise ValueError("state is not a permutation of 1..N")
        if cost_model not in COST_MODELS:
            raise ValueError(f"unknown pancake cost model: {cost_model!r}")
        self.start = start
        self.n = n
        self.cost_model = cost_model
        self.goal = tuple(range(1, n + 1))

    def initial(self) -> PancakeState:
        return self.start

    def is_goal(self, state: PancakeState) -> bool:
        return state == self.goal

    def key(self, state: PancakeState):
        return state

    def h(self, state: PancakeState) -> float:
        if self.cost_model == "heavy":
            return heavy_gap_h(state)
        return float(gap_h(state))

    def d(self, state: PancakeState) -> float:
        return float(gap_h(state))

    def successors(self, state: PancakeState) -> list[tuple[PancakeState, float]]:
        """Flips of the top k pancakes for k = 2..N, in that order."""
        n = self.n
        heavy = self.cost_model == "heavy"
        out = []
        for k in range(2, n + 1):
            child = state[k - 1::-1] + state[k:]
            cost = float(state[k - 1]) if heavy else 1.0
            out.append((child, cost))
        return out


def parse_pancake_instances(text: str) -> list[PancakeState]:
    """One space-separated permutation of 1..N per line; ``#`` comments."""
    states = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            stack = tuple(int(t) for t in line.split())
        except ValueError as exc:
            raise ValueError(f"line {line_no}: malformed token: {exc}") from None
        if sorted(stack) != list(range(1, len(stack) + 1)):
            raise ValueError(f"line {line_no}: not a permutation of 1..N")
        states.append(stack)
    return states


def serialize_pancake_instances(states: Iterable[PancakeState]) -> str:
    return "\n".join(" ".join(str(p) for p in s) for s in states) + "\n"


def gen_pancake(n: int, count: int, seed: int) -> list[PancakeState]:
    """Deterministic random stacks via Fisher-Yates (random.Random(seed))."""
    if n < 2 or count < 1:
        raise ValueError("need n >= 2 and count >= 1")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        stack = list(range(1, n + 1))
        rng.shuffle(stack)
        out.append(tuple(stack))
    return out


def all_pancake_states(n: int) -> list[PancakeState]:
    """Every permutation of 1..n, in lexicographic order."""
    return [p for p in permutations(range(1, n + 1))]
