"""Explicit directed graphs as search domains, loaded from a small
line-oriented text format:

    node <id> h=<float> [d=<float>] [goal] [start]
    edge <src> <dst> <cost>

Successors are returned in edge file order.  d defaults to h.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class GraphNode:
    node_id: str
    h: float
    d: float
    is_goal: bool = False
    is_start: bool = False


class GraphDomain:
    """DomainAdapter over an explicit graph; states are node ids."""

    def __init__(self, nodes: dict[str, GraphNode],
                 edges: list[tuple[str, str, float]]):
        starts = [n for n in nodes.values() if n.is_start]
        if len(starts) != 1:
            raise ValueError(f"expected exactly one start node, got {len(starts)}")
        for n in nodes.values():
            if n.h < 0 or n.d < 0:
                raise ValueError(f"node {n.node_id}: negative h or d")
            if n.is_goal and (n.h != 0 or n.d != 0):
                raise ValueError(f"goal node {n.node_id} must have h = d = 0")
        self.nodes = nodes
        self.start = starts[0].node_id
        self._succ: dict[str, list[tuple[str, float]]] = {k: [] for k in nodes}
        for src, dst, cost in edges:
            if src not in nodes or dst not in nodes:
                raise ValueError(f"edge references unknown node: {src} -> {dst}")
            if cost < 0:
                raise ValueError(f"negative edge cost: {src} -> {dst}")
            self._succ[src].append((dst, cost))

    def initial(self) -> str:
        return self.start

    def is_goal(self, state: str) -> bool:
        return self.nodes[state].is_goal

    def key(self, state: str) -> str:
        return state

    def h(self, state: str) -> float:
        return self.nodes[state].h

    def d(self, state: str) -> float:
        return self.nodes[state].d

    def successors(self, state: str) -> list[tuple[str, float]]:
        return self._succ[state]


def graph_domain_from_spec(text: str) -> GraphDomain:
    """Parse the line-oriented graph format; errors carry line numbers."""
    nodes: dict[str, GraphNode] = {}
    edges: list[tuple[str, str, float]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "node":
            if len(parts) < 3:
                raise ValueError(f"line {line_no}: node needs an id and h=")
            node_id = parts[1]
            h: Optional[float] = None
            d: Optional[float] = None
            is_goal = is_start = False
            for tok in parts[2:]:
                if tok.startswith("h="):
                    h = float(tok[2:])
                elif tok.startswith("d="):
                    d = float(tok[2:])
                elif tok == "goal":
                    is_goal = True
                elif tok == "start":
                    is_start = True
                else:
                    raise ValueError(f"line {line_no}: unknown token {tok!r}")
            if h is None:
                raise ValueError(f"line {line_no}: node {node_id} missing h=")
            if node_id in nodes:
                raise ValueError(f"line {line_no}: duplicate node {node_id}")
            nodes[node_id] = GraphNode(node_id, h, h if d is None else d,
                                       is_goal, is_start)
        elif kind == "edge":
            if len(parts) != 4:
                raise ValueError(f"line {line_no}: edge needs src dst cost")
            try:
                cost = float(parts[3])
            except ValueError:
                raise ValueError(f"line {line_no}: malformed cost {parts[3]!r}") from None
            edges.append((parts[1], parts[2], cost))
        else:
            raise ValueError(f"line {line_no}: unknown record {kind!r}")
    try:
        return GraphDomain(nodes, edges)
    except ValueError as exc:
        raise ValueError(str(exc)) from None
