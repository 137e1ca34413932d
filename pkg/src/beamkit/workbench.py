"""Experiment harness: width sweeps, CSV results, monotonicity checks,
the ill-behaved-width statistic, and plot-data emission."""
from __future__ import annotations

import csv
import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Optional, Sequence

from .core import DomainAdapter
from .engines import (
    SearchOptions,
    SearchResult,
    Termination,
    default_options,
    run_algorithm,
)

INFINITY = math.inf

CSV_COLUMNS = [
    "instance", "algorithm", "width", "solved", "cost", "length",
    "expansions", "generations", "duplicates_rejected", "incumbent_pruned",
    "levels", "wall_time", "termination",
]


@dataclass
class ResultRow:
    instance: str
    algorithm: str
    width: int
    solved: bool
    cost: float          # inf when unsolved
    length: int
    expansions: int
    generations: int
    duplicates_rejected: int
    incumbent_pruned: int
    levels: int
    wall_time: float
    termination: str

    @classmethod
    def from_result(cls, instance: str, algorithm: str, width: int,
                    result: SearchResult) -> "ResultRow":
        return cls(
            instance=instance, algorithm=algorithm, width=width,
            solved=result.solved, cost=result.cost, length=result.length,
            expansions=result.expansions, generations=result.generations,
            duplicates_rejected=result.duplicates_rejected,
            incumbent_pruned=result.incumbent_pruned, levels=result.levels,
            wall_time=result.wall_time,
            termination=result.termination.value,
        )


@dataclass
class ExperimentConfig:
    """One experiment: a set of instances swept over a list of widths."""

    instances: Sequence[tuple[str, DomainAdapter]]
    algorithm: str
    widths: Sequence[int]
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    parallelism: int = field(default_factory=lambda: os.cpu_count() or 1)
    options: Optional[SearchOptions] = None  # overrides the algorithm default

    def __post_init__(self):
        widths = list(self.widths)
        if any(w < 1 for w in widths):
            raise ValueError("widths must be positive")
        if any(b <= a for a, b in zip(widths, widths[1:])):
            raise ValueError("widths must be strictly increasing")


def _options_for(cfg: ExperimentConfig) -> SearchOptions:
    opts = cfg.options if cfg.options is not None else default_options(cfg.algorithm)
    return replace(
        opts,
        node_limit=cfg.node_limit if cfg.node_limit is not None else opts.node_limit,
        time_limit=cfg.time_limit if cfg.time_limit is not None else opts.time_limit,
    )


def _run_one(task) -> ResultRow:
    instance_id, domain, algorithm, width, opts = task
    result = run_algorithm(algorithm, domain, width, opts)
    return ResultRow.from_result(instance_id, algorithm, width, result)


def run_experiment(cfg: ExperimentConfig) -> list[ResultRow]:
    """Run every (instance, width) pair; rows come back in deterministic
    (instance, width) order regardless of the parallelism degree."""
    opts = _options_for(cfg)
    tasks = [(instance_id, domain, cfg.algorithm, width, opts)
             for instance_id, domain in cfg.instances
             for width in cfg.widths]
    if cfg.parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = list(pool.map(_run_one, tasks))
    else:
        rows = [_run_one(t) for t in tasks]
    rows.sort(key=lambda r: (r.instance, r.algorithm, r.width))
    return rows


def write_rows(path, rows: Iterable[ResultRow]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow([
                r.instance, r.algorithm, r.width, int(r.solved),
                repr(r.cost) if r.solved else "",
                r.length if r.solved else "",
                r.expansions, r.generations, r.duplicates_rejected,
                r.incumbent_pruned, r.levels, f"{r.wall_time:.6f}",
                r.termination,
            ])


def read_rows(path) -> list[ResultRow]:
    rows = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            solved = rec["solved"] == "1"
            rows.append(ResultRow(
                instance=rec["instance"], algorithm=rec["algorithm"],
                width=int(rec["width"]), solved=solved,
                cost=float(rec["cost"]) if solved else INFINITY,
                length=int(rec["length"]) if solved else 0,
                expansions=int(rec["expansions"]),
                generations=int(rec["generations"]),
                duplicates_rejected=int(rec["duplicates_rejected"]),
                incumbent_pruned=int(rec["incumbent_pruned"]),
                levels=int(rec["levels"]),
                wall_time=float(rec["wall_time"]),
                termination=rec["termination"],
            ))
    return rows


def ill_behaved_fraction(costs_by_width: Mapping[int, float]) -> float:
    """Fraction of widths in a contiguous range whose cost exceeds the
    previous width's (unsolved counting as infinite cost)."""
    widths = sorted(costs_by_width)
    if len(widths) < 2:
        raise ValueError("need costs for at least two widths")
    lo, hi = widths[0], widths[-1]
    if widths != list(range(lo, hi + 1)):
        raise ValueError("widths must form a contiguous range")
    bad = sum(1 for k in range(lo + 1, hi + 1)
              if costs_by_width[k] > costs_by_width[k - 1])
    return bad / (hi - lo)


@dataclass
class MonotonicityReport:
    algorithm: str
    widths: list[int]
    costs: list[float]
    violations: list[tuple[int, float, float]]  # (k, cost_k, cost_{k+1})

    @property
    def ok(self) -> bool:
        return not self.violations


def check_monotonic(algorithm: str, domain: DomainAdapter,
                    widths: Sequence[int],
                    options: Optional[SearchOptions] = None,
                    node_limit: Optional[int] = None,
                    time_limit: Optional[float] = None) -> MonotonicityReport:
    """Run the algorithm at each width and list every adjacent pair of
    widths where the solution cost increased."""
    widths = sorted(widths)
    opts = options if options is not None else default_options(algorithm)
    opts = replace(
        opts,
        node_limit=node_limit if node_limit is not None else opts.node_limit,
        time_limit=time_limit if time_limit is not None else opts.time_limit,
    )
    costs = []
    for w in widths:
        result = run_algorithm(algorithm, domain, w, opts)
        costs.append(result.cost)
    violations = [(widths[i], costs[i], costs[i + 1])
                  for i in range(len(widths) - 1)
                  if costs[i + 1] > costs[i]]
    return MonotonicityReport(algorithm, list(widths), costs, violations)


def emit_plot_data(rows: Sequence[ResultRow], out_prefix: str,
                   mean_action_cost: Optional[float] = None) -> tuple[str, str]:
    """Write plot-ready series from a result table.

    ``<prefix>-averages.csv`` holds (algorithm, width, mean wall time, mean
    cost, mean length), averaging only over (algorithm, width) groups in
    which every instance was solved.  ``<prefix>-scatter.csv`` holds one
    (length, cost) point per solved row, plus a reference series of
    length x mean_action_cost when a mean action cost is given.
    """
    if not rows:
        raise ValueError("no rows to plot")
    groups: dict[tuple[str, int], list[ResultRow]] = {}
    for r in rows:
        groups.setdefault((r.algorithm, r.width), []).append(r)

    avg_path = f"{out_prefix}-averages.csv"
    eligible = 0
    with open(avg_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["algorithm", "width", "mean_wall_time", "mean_cost",
                         "mean_length"])
        for (alg, width) in sorted(groups):
            grp = groups[(alg, width)]
            if not all(r.solved for r in grp):
                continue  # a width counts only if it solved every instance
            eligible += 1
            n = len(grp)
            writer.writerow([
                alg, width,
                f"{sum(r.wall_time for r in grp) / n:.6f}",
                repr(sum(r.cost for r in grp) / n),
                repr(sum(r.length for r in grp) / n),
            ])
    if eligible == 0:
        warnings.warn("no (algorithm, width) group solved all instances; "
                      "averaged series is empty", stacklevel=2)

    scatter_path = f"{out_prefix}-scatter.csv"
    with open(scatter_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["series", "length", "cost"])
        lengths = set()
        for r in sorted(rows, key=lambda r: (r.algorithm, r.instance, r.width)):
            if r.solved:
                writer.writerow([r.algorithm, r.length, repr(r.cost)])
                lengths.add(r.length)
        if mean_action_cost is not None:
            for length in sorted(lengths):
                writer.writerow(["reference", length,
                                 repr(length * mean_action_cost)])
    return avg_path, scatter_path
