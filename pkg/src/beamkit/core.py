"""Shared search primitives: nodes, ordering policies, candidate pool, closed table.

Everything here is domain-independent and used by all engine variants.
Mutable containers (CandidatePool, closed tables) are confined to a single
search run; nodes are treated as immutable once constructed.
"""
from __future__ import annotations

from enum import Enum
from heapq import heappop, heappush
from typing import Any, Hashable, Optional, Protocol, Sequence

State = Any
StateKey = Hashable


class OrderingPolicy(Enum):
    """How candidate nodes are ranked when filling the next beam."""

    # (f, h, seq): cheapest estimated total cost first, ties on low h,
    # final ties on generation order (FIFO).
    COST_GUIDED = "cost"
    # (depth + d, f, g, seq): shortest estimated solution length first,
    # cost values only as tie-breakers.
    DISTANCE_GUIDED = "distance"


class SearchNode:
    """One reached state, with enough bookkeeping to reconstruct the path."""

    __slots__ = ("state", "g", "h", "d", "f", "depth", "origin_slot", "seq", "parent")

    def __init__(self, state, g, h, d, f, depth, origin_slot, seq, parent=None):
        self.state = state
        self.g = g
        self.h = h
        self.d = d
        self.f = f  # pathmax-adjusted, see pathmax_adjust()
        self.depth = depth
        self.origin_slot = origin_slot  # 1-based slot of the generating parent
        self.seq = seq  # strictly increasing generation counter
        self.parent = parent

    def path(self) -> list:
        """States from the start node to this node, in order."""
        states = []
        node: Optional[SearchNode] = self
        while node is not None:
            states.append(node.state)
            node = node.parent
        states.reverse()
        return states

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (f"SearchNode(state={self.state!r}, g={self.g}, h={self.h}, "
                f"f={self.f}, depth={self.depth}, seq={self.seq})")


def pathmax_adjust(parent_f: float, child_g: float, child_h: float) -> float:
    """Child f-value, forced to be at least the parent's.

    Keeps f nondecreasing along every path even when the heuristic is
    inconsistent, which the engines' stopping rules rely on.
    """
    f = child_g + child_h
    return parent_f if f < parent_f else f


def ordering_key(node: SearchNode, policy: OrderingPolicy) -> tuple:
    """Lexicographic sort key for a node under the given policy. Lower is better."""
    if policy is OrderingPolicy.COST_GUIDED:
        return (node.f, node.h, node.seq)
    return (node.depth + node.d, node.f, node.g, node.seq)


class CandidatePool:
    """Priority collection of generated children under one ordering policy."""

    __slots__ = ("policy", "_heap")

    def __init__(self, policy: OrderingPolicy):
        self.policy = policy
        self._heap: list = []

    def push(self, node: SearchNode) -> None:
        # seq is unique, so the trailing node is never compared by heapq.
        heappush(self._heap, ordering_key(node, self.policy) + (node,))

    def pop(self) -> Optional[SearchNode]:
        if not self._heap:
            return None
        return heappop(self._heap)[-1]

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)


class ClosedEntry:
    """Per-state record driving duplicate elimination.

    ``width`` is the 1-based beam slot at which the state's node was
    selected; it never increases across updates within one run.
    """

    __slots__ = ("f", "width")

    def __init__(self, f: float, width: int):
        self.f = f
        self.width = width

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClosedEntry)
                and self.f == other.f and self.width == other.width)

    def __repr__(self) -> str:
        return f"ClosedEntry(f={self.f}, width={self.width})"


# A closed table is a plain dict from state key to ClosedEntry; at most one
# entry per state.
ClosedTable = dict


def closed_lookup(table: ClosedTable, key: StateKey) -> Optional[ClosedEntry]:
    return table.get(key)


def closed_store(table: ClosedTable, key: StateKey, entry: ClosedEntry) -> None:
    table[key] = entry


class DomainAdapter(Protocol):
    """What a benchmark domain must provide to the search engines.

    ``successors`` must be deterministic (same state, same ordered list) and
    the state space must not contain cycles of zero total cost.  Goal states
    must have h = d = 0.
    """

    def initial(self) -> State: ...

    def successors(self, state: State) -> Sequence[tuple[State, float]]: ...

    def is_goal(self, state: State) -> bool: ...

    def h(self, state: State) -> float: ...

    def d(self, state: State) -> float: ...

    def key(self, state: State) -> StateKey: ...


def expand_evaluated(domain: DomainAdapter, state: State,
                     h: Optional[float] = None,
                     d: Optional[float] = None) -> Sequence[tuple[State, float, float, float]]:
    """Successors of ``state`` as (child, cost, h, d) tuples.

    Domains may supply a fused ``expand(state, h, d)`` method that derives
    the children's heuristic values incrementally from the parent's; this
    falls back to the basic interface.
    """
    expand = getattr(domain, "expand", None)
    if expand is not None:
        if h is None:
            h = domain.h(state)
        if d is None:
            d = domain.d(state)
        return expand(state, h, d)
    return [(s, c, domain.h(s), domain.d(s)) for s, c in domain.successors(state)]
