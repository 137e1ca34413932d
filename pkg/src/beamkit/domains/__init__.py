"""Benchmark domains: sliding tiles, pancake sorting, blocks world, and
explicit graphs (including the bundled fixture graphs)."""
from importlib import resources

from .blocks import BlocksDomain, gen_blocks, parse_blocks_instances, serialize_blocks_instances, tower_goal
from .graph import GraphDomain, graph_domain_from_spec
from .pancake import (
    PancakeDomain,
    all_pancake_states,
    gap_h,
    gen_pancake,
    heavy_gap_h,
    parse_pancake_instances,
    serialize_pancake_instances,
)
from .tiles import (
    TileDomain,
    TileParseError,
    gen_tiles,
    is_solvable,
    move_cost,
    parse_korf_tiles,
    parse_tiles,
    scrambled_state,
    serialize_tiles,
)

__all__ = [
    "BlocksDomain", "GraphDomain", "PancakeDomain", "TileDomain",
    "TileParseError", "all_pancake_states", "fixture_graph", "fixture_text",
    "gap_h", "gen_blocks", "gen_pancake", "gen_tiles",
    "graph_domain_from_spec", "heavy_gap_h", "is_solvable", "move_cost",
    "parse_blocks_instances", "parse_korf_tiles", "parse_pancake_instances",
    "parse_tiles", "scrambled_state", "serialize_blocks_instances",
    "serialize_pancake_instances", "serialize_tiles", "tower_goal",
]


def fixture_text(name: str) -> str:
    """Contents of a bundled data file (e.g. 'fig2.graph', 'korf15.txt')."""
    return resources.files("beamkit.data").joinpath(name).read_text()


def fixture_graph(name: str) -> GraphDomain:
    return graph_domain_from_spec(fixture_text(f"{name}.graph"))
