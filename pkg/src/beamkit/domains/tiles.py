"""Sliding tile puzzle (4x4, with a 3x3 variant for oracle-scale tests).

States are tuples giving the tile at each board position, 0 being the
blank; the goal is the identity arrangement with the blank at position 0.
Five cost models are supported; the cost-to-go heuristic is Manhattan
distance with each tile's distance weighted by its move cost, and the
distance-to-go estimate is the unweighted Manhattan distance.
"""
from __future__ import annotations

import math
import random
from typing import Iterable, Optional, Sequence

TileState = tuple

COST_MODELS = ("unit", "heavy", "sqrt", "inverse", "reverse")


def move_cost(tile: int, model: str, size: int = 4) -> float:
    """Cost of moving tile ``tile`` under the given model."""
    if model == "unit":
        return 1.0
    if model == "heavy":
        return float(tile)
    if model == "sqrt":
        return math.sqrt(tile)
    if model == "inverse":
        return 1.0 / tile
    if model == "reverse":
        return float(size * size - tile)
    raise ValueError(f"unknown tile cost model: {model!r}")


def _neighbors_table(size: int) -> list[tuple[int, ...]]:
    """For each blank position, the blank's destination squares in
    Up, Left, Right, Down order."""
    table = []
    for pos in range(size * size):
        row, col = divmod(pos, size)
        moves = []
        if row > 0:
            moves.append(pos - size)  # up
        if col > 0:
            moves.append(pos - 1)     # left
        if col < size - 1:
            moves.append(pos + 1)     # right
        if row < size - 1:
            moves.append(pos + size)  # down
        table.append(tuple(moves))
    return table


class TileDomain:
    """DomainAdapter over an n x n sliding tile puzzle with one cost model."""

    def __init__(self, start: Sequence[int], cost_model: str = "unit",
                 size: int = 4):
        start = tuple(start)
        if len(start) != size * size:
            raise ValueError(f"expected {size * size} tiles, got {len(start)}")
        if sorted(start) != list(range(size * size)):
            raise ValueError("state is not a permutation of the tiles")
        if cost_model not in COST_MODELS:
            raise ValueError(f"unknown tile cost model: {cost_model!r}")
        self.start = start
        self.size = size
        self.cost_model = cost_model
        self.goal = tuple(range(size * size))
        self._neighbors = _neighbors_table(size)
        n = size * size
        self._cost = [0.0] + [move_cost(t, cost_model, size) for t in range(1, n)]
        # md[t][pos]: Manhattan distance of tile t at board position pos
        # from its home square; wmd is the move-cost-weighted version.
        md = [[0] * n for _ in range(n)]
        wmd = [[0.0] * n for _ in range(n)]
        for t in range(1, n):
            hr, hc = divmod(t, size)
            for pos in range(n):
                r, c = divmod(pos, size)
                md[t][pos] = abs(r - hr) + abs(c - hc)
                wmd[t][pos] = md[t][pos] * self._cost[t]
        self._md = md
        self._wmd = wmd
        # Integer-valued cost models admit exact incremental h updates;
        # sqrt/inverse are recomputed from the table to keep h a pure
        # function of the state.
        self._exact = cost_model in ("unit", "heavy", "reverse")

    def initial(self) -> TileState:
        return self.start

    def is_goal(self, state: TileState) -> bool:
        return state == self.goal

    def key(self, state: TileState):
        return state

    def h(self, state: TileState) -> float:
        wmd = self._wmd
        return sum(wmd[t][pos] for pos, t in enumerate(state) if t)

    def d(self, state: TileState) -> float:
        md = self._md
        return float(sum(md[t][pos] for pos, t in enumerate(state) if t))

    def successors(self, state: TileState) -> list[tuple[TileState, float]]:
        blank = state.index(0)
        cost = self._cost
        out = []
        for dest in self._neighbors[blank]:
            tile = state[dest]
            child = list(state)
            child[blank] = tile
            child[dest] = 0
            out.append((tuple(child), cost[tile]))
        return out

    def expand(self, state: TileState, h0: float, d0: float
               ) -> list[tuple[TileState, float, float, float]]:
        """Successors with h and d derived from the parent's values.

        Incremental h updates are exact for integer-valued cost models;
        sqrt/inverse recompute from the table so h stays a pure function
        of the state.
        """
        blank = state.index(0)
        cost = self._cost
        md = self._md
        wmd = self._wmd
        out = []
        append = out.append
        if self._exact:
            for dest in self._neighbors[blank]:
                tile = state[dest]
                child = list(state)
                child[blank] = tile
                child[dest] = 0
                mdt = md[tile]
                wmdt = wmd[tile]
                append((tuple(child), cost[tile],
                        h0 - wmdt[dest] + wmdt[blank],
                        d0 - mdt[dest] + mdt[blank]))
        else:
            for dest in self._neighbors[blank]:
                tile = state[dest]
                child = list(state)
                child[blank] = tile
                child[dest] = 0
                child = tuple(child)
                mdt = md[tile]
                ch = sum(wmd[t][pos] for pos, t in enumerate(child) if t)
                append((child, cost[tile], ch,
                        d0 - mdt[dest] + mdt[blank]))
        return out


def is_solvable(state: Sequence[int], size: int) -> bool:
    """Reachability from the goal (blank at the top-left) by parity.

    On odd board widths the tile-sequence inversion count must be even;
    on even widths the inversion count plus the blank's row must be even.
    """
    inversions = 0
    tiles = [t for t in state if t != 0]
    for i, a in enumerate(tiles):
        for b in tiles[i + 1:]:
            if a > b:
                inversions += 1
    if size % 2 == 1:
        return inversions % 2 == 0
    blank_row = list(state).index(0) // size
    return (inversions + blank_row) % 2 == 0


class TileParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_tiles(text: str, size: int = 4) -> list[TileState]:
    """Parse tile instances, one per line (Korf-style listing).

    Each instance is size*size whitespace-separated integers, optionally
    preceded by an index token.  ``#`` starts a comment.  Malformed or
    unsolvable instances raise TileParseError with the line number.
    """
    n = size * size
    states = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == n + 1:
            tokens = tokens[1:]  # leading instance index
        if len(tokens) != n:
            raise TileParseError(line_no, f"expected {n} tiles, got {len(tokens)}")
        try:
            tiles = [int(t) for t in tokens]
        except ValueError as exc:
            raise TileParseError(line_no, f"malformed token: {exc}") from None
        if sorted(tiles) != list(range(n)):
            raise TileParseError(line_no, "not a permutation of the tiles")
        if not is_solvable(tiles, size):
            raise TileParseError(line_no, "unsolvable instance (parity)")
        states.append(tuple(tiles))
    return states


# The 15-puzzle parser name mirrors the standard benchmark usage.
def parse_korf_tiles(text: str) -> list[TileState]:
    return parse_tiles(text, size=4)


def serialize_tiles(states: Iterable[TileState]) -> str:
    return "\n".join(" ".join(str(t) for t in s) for s in states) + "\n"


def scrambled_state(size: int, steps: int, rng: random.Random) -> TileState:
    """Random solvable instance produced by a random walk from the goal."""
    domain = TileDomain(tuple(range(size * size)), "unit", size)
    state = domain.goal
    prev = None
    for _ in range(steps):
        succs = [s for s, _ in domain.successors(state) if s != prev]
        prev = state
        state = rng.choice(succs)
    return state


def gen_tiles(size: int, count: int, seed: int, steps: int = 30) -> list[TileState]:
    """Deterministic batch of random-walk instances."""
    rng = random.Random(seed)
    return [scrambled_state(size, steps, rng) for _ in range(count)]
