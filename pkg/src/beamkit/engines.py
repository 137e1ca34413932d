"""Beam search engines: beam, monobeam, bead, monobead, and a best-first oracle.

All engines are level-synchronous.  ``beam_search`` keeps the classic
semantics: expand the whole beam, keep the best ``width`` children, stop
after the level where a goal first appears.  ``monobeam`` fills beam slots
sequentially so that the node chosen for slot c never depends on slots
after c, keeps searching until no beam node can beat the incumbent, and
optionally prunes against the incumbent and eliminates duplicates in a
slot-aware way.  Those three ingredients make its solution cost
nonincreasing in the beam width.

``bead``/``monobead`` are the same engines ordered on estimated remaining
actions (depth + d) instead of f.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from heapq import heappop, heappush, nsmallest
from typing import Callable, Optional

from .core import (
    CandidatePool,
    ClosedEntry,
    DomainAdapter,
    OrderingPolicy,
    SearchNode,
    expand_evaluated,
)

INFINITY = math.inf


class DedupMode(Enum):
    NONE = "none"
    FULL_BEAM = "full"   # duplicate iff the closed copy's f is no worse
    SLOT_AWARE = "slot"  # closed entries remember the selecting slot


class Termination(Enum):
    SOLUTION_FOUND = "solution-found"
    EXHAUSTED = "exhausted"
    RESOURCE_LIMIT = "resource-limit"


TraceFn = Callable[[dict], None]


@dataclass
class SearchOptions:
    policy: OrderingPolicy = OrderingPolicy.COST_GUIDED
    incumbent_pruning: bool = False
    dedup: DedupMode = DedupMode.NONE
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    trace: Optional[TraceFn] = None


@dataclass
class SearchResult:
    solution: Optional[list]  # states from start to goal, or None
    cost: float               # inf when unsolved
    length: int               # number of actions in the solution (0 if none)
    expansions: int = 0
    generations: int = 0
    duplicates_rejected: int = 0
    incumbent_pruned: int = 0
    levels: int = 0
    wall_time: float = 0.0
    termination: Termination = Termination.EXHAUSTED
    # False when the configuration voids the nonincreasing-cost guarantee
    # (plain beam/bead, or monobeam combined with full-beam dedup).
    monotonic_guarantee: bool = False

    @property
    def solved(self) -> bool:
        return self.solution is not None


class _LimitReached(Exception):
    pass


def _result_from(incumbent: Optional[SearchNode], termination: Termination,
                 counters: dict, started: float,
                 monotonic_guarantee: bool) -> SearchResult:
    if incumbent is not None:
        solution = incumbent.path()
        cost = incumbent.g
        length = incumbent.depth
    else:
        solution, cost, length = None, INFINITY, 0
    return SearchResult(
        solution=solution, cost=cost, length=length,
        expansions=counters["expansions"],
        generations=counters["generations"],
        duplicates_rejected=counters["duplicates"],
        incumbent_pruned=counters["pruned"],
        levels=counters["levels"],
        wall_time=time.perf_counter() - started,
        termination=termination,
        monotonic_guarantee=monotonic_guarantee,
    )


def _trivial_goal_result(domain: DomainAdapter, started: float,
                         monotonic_guarantee: bool) -> SearchResult:
    start = domain.initial()
    return SearchResult(
        solution=[start], cost=0.0, length=0, levels=0,
        wall_time=time.perf_counter() - started,
        termination=Termination.SOLUTION_FOUND,
        monotonic_guarantee=monotonic_guarantee,
    )


def select_for_slot(pool: CandidatePool, closed: dict, slot: int,
                    dedup: DedupMode, counters: Optional[dict] = None,
                    key_of: Optional[Callable[[object], object]] = None,
                    ) -> Optional[SearchNode]:
    """Pop the best candidate for beam slot ``slot``, honoring duplicate rules.

    With slot-aware dedup, a candidate whose state was already selected is
    accepted only if it is being considered at a strictly lower slot, or if
    its f is no worse than the stored copy's; otherwise it is discarded and
    selection continues.  The stored slot never increases.
    """
    if dedup is not DedupMode.SLOT_AWARE:
        return pool.pop()
    while True:
        node = pool.pop()
        if node is None:
            return None
        key = key_of(node.state) if key_of is not None else node.state
        dup = closed.get(key)
        if dup is None:
            closed[key] = ClosedEntry(node.f, slot)
            return node
        if slot < dup.width:
            closed[key] = ClosedEntry(node.f, slot)
            return node
        if node.f <= dup.f:
            if slot == dup.width:
                closed[key] = ClosedEntry(node.f, slot)
            return node
        if counters is not None:
            counters["duplicates"] += 1


def prune_next_beam(next_beam: list, solution_cost: float,
                    counters: Optional[dict] = None,
                    trace: Optional[TraceFn] = None,
                    level: int = 0) -> None:
    """Empty every slot whose node has f >= the incumbent cost (in place)."""
    if solution_cost == INFINITY:
        return
    for i, node in enumerate(next_beam):
        if node is not None and node.f >= solution_cost:
            next_beam[i] = None
            if counters is not None:
                counters["pruned"] += 1
            if trace is not None:
                trace(_trace_record("pruned-incumbent", level, i + 1, node))


def _trace_record(event: str, level: int, slot: int,
                  node: Optional[SearchNode], key=None) -> dict:
    rec = {"event": event, "level": level, "slot": slot}
    if node is not None:
        rec.update(key=str(key if key is not None else node.state),
                   g=node.g, h=node.h, f=node.f,
                   depth=node.depth, origin_slot=node.origin_slot)
    return rec


def _check_limits(counters: dict, opts: SearchOptions, started: float) -> None:
    if opts.node_limit is not None and counters["generations"] >= opts.node_limit:
        raise _LimitReached
    if opts.time_limit is not None and time.perf_counter() - started > opts.time_limit:
        raise _LimitReached


def monobeam(domain: DomainAdapter, width: int,
             opts: Optional[SearchOptions] = None) -> SearchResult:
    """Monotonic beam search (slot-sequential selection, f < incumbent guard).

    With the cost-guided policy and dedup in {NONE, SLOT_AWARE}, solution
    cost is nonincreasing in ``width``.  Combining FULL_BEAM dedup with this
    engine is allowed but voids that guarantee (the result is flagged).
    """
    if width < 1:
        raise ValueError(f"beam width must be >= 1, got {width}")
    if opts is None:
        opts = SearchOptions()
    started = time.perf_counter()
    guarantee = opts.dedup is not DedupMode.FULL_BEAM

    start_state = domain.initial()
    if domain.is_goal(start_state):
        return _trivial_goal_result(domain, started, guarantee)

    key_of = domain.key
    is_goal = domain.is_goal
    # Domains exposing a single goal state get an inline equality test.
    goal_state = getattr(domain, "goal", None)
    dedup = opts.dedup
    policy = opts.policy
    trace = opts.trace
    limited = opts.node_limit is not None or opts.time_limit is not None
    expand = getattr(domain, "expand", None)
    if expand is None:
        expand = lambda s, h, d: expand_evaluated(domain, s)

    h0 = domain.h(start_state)
    root = SearchNode(start_state, 0.0, h0, domain.d(start_state),
                      0.0 + h0, 0, 1, 0, None)
    counters = {"expansions": 0, "generations": 0, "duplicates": 0,
                "pruned": 0, "levels": 0}
    seq = 1
    closed: dict = {key_of(start_state): ClosedEntry(root.f, 1)}
    identity_key = key_of(start_state) is start_state
    beam: list = [root]
    incumbent: Optional[SearchNode] = None
    solution_cost = INFINITY
    termination = Termination.EXHAUSTED
    expansions = generations = 0  # hot-loop counters, synced into `counters`

    cost_guided = policy is OrderingPolicy.COST_GUIDED
    try:
        while any(n is not None and n.f < solution_cost for n in beam):
            counters["levels"] += 1
            level = counters["levels"]
            pool = CandidatePool(policy)
            heap = pool._heap
            next_beam: list = []
            filled = len(beam)
            while filled and beam[filled - 1] is None:
                filled -= 1
            for c in range(1, width + 1):
                parent = beam[c - 1] if c <= len(beam) else None
                if parent is not None:
                    expansions += 1
                    parent_f = parent.f
                    g0 = parent.g
                    depth = parent.depth + 1
                    for child_state, cost, ch, cd in expand(parent.state, parent.h, parent.d):
                        generations += 1
                        cg = g0 + cost
                        cf = cg + ch
                        if cf < parent_f:
                            cf = parent_f
                        if (child_state == goal_state if goal_state is not None
                                else is_goal(child_state)):
                            if cf < solution_cost:
                                incumbent = SearchNode(child_state, cg, ch, cd, cf,
                                                       depth, c, seq, parent)
                                seq += 1
                                solution_cost = cf
                            continue
                        if dedup is DedupMode.FULL_BEAM:
                            entry = closed.get(child_state if identity_key
                                               else key_of(child_state))
                            if entry is not None and entry.f <= cf:
                                counters["duplicates"] += 1
                                if trace is not None:
                                    trace({"event": "rejected-duplicate",
                                           "level": level, "slot": c,
                                           "key": str(key_of(child_state)),
                                           "g": cg, "f": cf})
                                continue
                        child = SearchNode(child_state, cg, ch, cd, cf,
                                           depth, c, seq, parent)
                        # inlined pool.push, hot path
                        if cost_guided:
                            heappush(heap, (cf, ch, seq, child))
                        else:
                            heappush(heap, (depth + cd, cf, cg, seq, child))
                        seq += 1
                    if limited and not expansions & 0x3F:
                        counters["expansions"] = expansions
                        counters["generations"] = generations
                        _check_limits(counters, opts, started)
                elif c > filled and not pool:
                    # No node in this or any later slot, and no candidates
                    # left over: the rest of the level stays empty.
                    break
                chosen = select_for_slot(pool, closed, c, dedup, counters, key_of)
                if chosen is not None and dedup is DedupMode.FULL_BEAM:
                    k = key_of(chosen.state)
                    entry = closed.get(k)
                    if entry is None or chosen.f < entry.f:
                        closed[k] = ClosedEntry(chosen.f, c)
                next_beam.append(chosen)
                if trace is not None:
                    if chosen is not None:
                        trace(_trace_record("selected", level, c, chosen,
                                            key_of(chosen.state)))
                    else:
                        trace(_trace_record("left-empty", level, c, None))
            if opts.incumbent_pruning:
                prune_next_beam(next_beam, solution_cost, counters, trace, level)
            while next_beam and next_beam[-1] is None:
                next_beam.pop()
            beam = next_beam
            if limited:
                counters["expansions"] = expansions
                counters["generations"] = generations
                _check_limits(counters, opts, started)
        if incumbent is not None:
            termination = Termination.SOLUTION_FOUND
    except _LimitReached:
        termination = Termination.RESOURCE_LIMIT
    counters["expansions"] = expansions
    counters["generations"] = generations

    return _result_from(incumbent, termination, counters, started, guarantee)


def beam_search(domain: DomainAdapter, width: int,
                opts: Optional[SearchOptions] = None) -> SearchResult:
    """Classic breadth-first beam search.

    Expands every beam node, pools the children, keeps the best ``width``
    of them, and stops after completing the level at which a solution is
    first found (returning the cheapest solution from that level).
    """
    if width < 1:
        raise ValueError(f"beam width must be >= 1, got {width}")
    if opts is None:
        opts = SearchOptions(dedup=DedupMode.FULL_BEAM)
    if opts.dedup is DedupMode.SLOT_AWARE:
        raise ValueError("slot-aware dedup requires the monobeam engine")
    started = time.perf_counter()

    start_state = domain.initial()
    if domain.is_goal(start_state):
        return _trivial_goal_result(domain, started, False)

    key_of = domain.key
    is_goal = domain.is_goal
    # Domains exposing a single goal state get an inline equality test.
    goal_state = getattr(domain, "goal", None)
    full_dedup = opts.dedup is DedupMode.FULL_BEAM
    policy = opts.policy
    cost_guided = policy is OrderingPolicy.COST_GUIDED
    trace = opts.trace
    limited = opts.node_limit is not None or opts.time_limit is not None
    expand = getattr(domain, "expand", None)
    if expand is None:
        expand = lambda s, h, d: expand_evaluated(domain, s)

    h0 = domain.h(start_state)
    root = SearchNode(start_state, 0.0, h0, domain.d(start_state),
                      0.0 + h0, 0, 1, 0, None)
    counters = {"expansions": 0, "generations": 0, "duplicates": 0,
                "pruned": 0, "levels": 0}
    seq = 1
    closed: dict = {key_of(start_state): ClosedEntry(root.f, 1)}
    identity_key = key_of(start_state) is start_state
    beam: list = [root]
    incumbent: Optional[SearchNode] = None
    solution_cost = INFINITY
    termination = Termination.EXHAUSTED
    expansions = generations = 0  # hot-loop counters, synced into `counters`

    try:
        while beam:
            counters["levels"] += 1
            level = counters["levels"]
            # Candidates are plain tuples ordered by the policy key with a
            # seq tie-break; SearchNodes are built only for selected slots.
            pool: list = []
            pool_append = pool.append
            for slot, parent in enumerate(beam, 1):
                expansions += 1
                parent_f = parent.f
                g0 = parent.g
                depth = parent.depth + 1
                for child_state, cost, ch, cd in expand(parent.state, parent.h, parent.d):
                    generations += 1
                    cg = g0 + cost
                    cf = cg + ch
                    if cf < parent_f:
                        cf = parent_f
                    if (child_state == goal_state if goal_state is not None
                            else is_goal(child_state)):
                        if cf < solution_cost:
                            incumbent = SearchNode(child_state, cg, ch, cd, cf,
                                                   depth, slot, seq, parent)
                            seq += 1
                            solution_cost = cf
                        continue
                    if full_dedup:
                        entry = closed.get(child_state if identity_key
                                           else key_of(child_state))
                        if entry is not None and entry.f <= cf:
                            counters["duplicates"] += 1
                            if trace is not None:
                                trace({"event": "rejected-duplicate",
                                       "level": level, "slot": slot,
                                       "key": str(key_of(child_state)),
                                       "g": cg, "f": cf})
                            continue
                    if cost_guided:
                        pool_append((cf, ch, seq,
                                     child_state, cg, cd, depth, slot, parent))
                    else:
                        pool_append((depth + cd, cf, cg, seq,
                                     child_state, ch, cd, depth, slot, parent))
                    seq += 1
                if limited and not expansions & 0x3F:
                    counters["expansions"] = expansions
                    counters["generations"] = generations
                    _check_limits(counters, opts, started)
            if incumbent is not None:
                termination = Termination.SOLUTION_FOUND
                break
            if limited:
                counters["expansions"] = expansions
                counters["generations"] = generations
                _check_limits(counters, opts, started)
            next_beam = []
            for c, entry_tuple in enumerate(nsmallest(width, pool), 1):
                if cost_guided:
                    cf, ch, _, child_state, cg, cd, depth, slot, parent = entry_tuple
                else:
                    _, cf, cg, _, child_state, ch, cd, depth, slot, parent = entry_tuple
                node = SearchNode(child_state, cg, ch, cd, cf,
                                  depth, slot, seq, parent)
                seq += 1
                if full_dedup:
                    k = key_of(child_state)
                    prev = closed.get(k)
                    if prev is None or cf < prev.f:
                        closed[k] = ClosedEntry(cf, c)
                next_beam.append(node)
                if trace is not None:
                    trace(_trace_record("selected", level, c, node,
                                        key_of(child_state)))
            beam = next_beam
    except _LimitReached:
        termination = Termination.RESOURCE_LIMIT
    counters["expansions"] = expansions
    counters["generations"] = generations

    return _result_from(incumbent, termination, counters, started, False)


def bead(domain: DomainAdapter, width: int,
         node_limit: Optional[int] = None,
         time_limit: Optional[float] = None,
         trace: Optional[TraceFn] = None) -> SearchResult:
    """Beam search ordered on estimated solution length (depth + d)."""
    opts = SearchOptions(policy=OrderingPolicy.DISTANCE_GUIDED,
                         dedup=DedupMode.FULL_BEAM,
                         node_limit=node_limit, time_limit=time_limit,
                         trace=trace)
    return beam_search(domain, width, opts)


def monobead(domain: DomainAdapter, width: int,
             node_limit: Optional[int] = None,
             time_limit: Optional[float] = None,
             trace: Optional[TraceFn] = None) -> SearchResult:
    """Monotonic beam search ordered on depth + d.

    No incumbent pruning: the pruning argument only holds when the search
    is ordered on the same value used for pruning.
    """
    opts = SearchOptions(policy=OrderingPolicy.DISTANCE_GUIDED,
                         incumbent_pruning=False,
                         dedup=DedupMode.SLOT_AWARE,
                         node_limit=node_limit, time_limit=time_limit,
                         trace=trace)
    return monobeam(domain, width, opts)


def default_options(algorithm: str) -> SearchOptions:
    """The standard configuration for each engine name."""
    if algorithm == "beam":
        return SearchOptions(policy=OrderingPolicy.COST_GUIDED,
                             dedup=DedupMode.FULL_BEAM)
    if algorithm == "monobeam":
        return SearchOptions(policy=OrderingPolicy.COST_GUIDED,
                             incumbent_pruning=True,
                             dedup=DedupMode.SLOT_AWARE)
    if algorithm == "bead":
        return SearchOptions(policy=OrderingPolicy.DISTANCE_GUIDED,
                             dedup=DedupMode.FULL_BEAM)
    if algorithm == "monobead":
        return SearchOptions(policy=OrderingPolicy.DISTANCE_GUIDED,
                             incumbent_pruning=False,
                             dedup=DedupMode.SLOT_AWARE)
    raise ValueError(f"unknown algorithm: {algorithm!r}")


ALGORITHMS = ("beam", "monobeam", "bead", "monobead")


def run_algorithm(algorithm: str, domain: DomainAdapter, width: int,
                  opts: Optional[SearchOptions] = None) -> SearchResult:
    """Dispatch one engine run by name, using its default options if none given."""
    if opts is None:
        opts = default_options(algorithm)
    engine = monobeam if algorithm in ("monobeam", "monobead") else beam_search
    return engine(domain, width, opts)


def optimal_oracle(domain: DomainAdapter, node_limit: Optional[int] = None) -> float:
    """Optimal solution cost via best-first search on g + h with reopening.

    Independent of the beam engines; meant for verification on instances
    small enough for exhaustive search.  Returns inf when no solution
    exists; raises if the node limit is exceeded.
    """
    start = domain.initial()
    if domain.is_goal(start):
        return 0.0
    key_of = domain.key
    is_goal = domain.is_goal
    h0 = domain.h(start)
    seq = 0
    open_heap = [(h0, 0.0, seq, start, domain.d(start))]
    best_g = {key_of(start): 0.0}
    generated = 1
    while open_heap:
        f, g, _, state, d = heappop(open_heap)
        k = key_of(state)
        if g > best_g.get(k, INFINITY):
            continue  # stale entry
        if is_goal(state):
            return g
        for child, cost, ch, cd in expand_evaluated(domain, state, f - g, d):
            cg = g + cost
            ck = key_of(child)
            old = best_g.get(ck)
            if old is not None and old <= cg:
                continue
            best_g[ck] = cg
            seq += 1
            generated += 1
            if node_limit is not None and generated > node_limit:
                raise RuntimeError("optimal_oracle: node limit exceeded")
            heappush(open_heap, (cg + ch, cg, seq, child, cd))
    return INFINITY
