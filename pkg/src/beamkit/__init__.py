"""Beam search toolkit: beam, monobeam, bead, and monobead engines with
benchmark domains and an experiment workbench."""
from .core import (
    CandidatePool,
    ClosedEntry,
    DomainAdapter,
    OrderingPolicy,
    SearchNode,
    closed_lookup,
    closed_store,
    ordering_key,
    pathmax_adjust,
)
from .engines import (
    ALGORITHMS,
    DedupMode,
    SearchOptions,
    SearchResult,
    Termination,
    beam_search,
    bead,
    default_options,
    monobead,
    monobeam,
    optimal_oracle,
    prune_next_beam,
    run_algorithm,
    select_for_slot,
)

__all__ = [
    "ALGORITHMS", "CandidatePool", "ClosedEntry", "DedupMode",
    "DomainAdapter", "OrderingPolicy", "SearchNode", "SearchOptions",
    "SearchResult", "Termination", "beam_search", "bead", "closed_lookup",
    "closed_store", "default_options", "monobead", "monobeam",
    "optimal_oracle", "ordering_key", "pathmax_adjust", "prune_next_beam",
    "run_algorithm", "select_for_slot",
]

__version__ = "0.1.0"
