"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 instance unsolved (solve only),
3 resource limit hit.
"""
from __future__ import annotations

import json
import sys
from typing import Optional

import click

from .core import OrderingPolicy
from .domains import (
    BlocksDomain,
    GraphDomain,
    PancakeDomain,
    TileDomain,
    gen_blocks,
    gen_pancake,
    graph_domain_from_spec,
    parse_blocks_instances,
    parse_pancake_instances,
    parse_tiles,
    serialize_blocks_instances,
    serialize_pancake_instances,
)
from .engines import (
    ALGORITHMS,
    DedupMode,
    SearchOptions,
    Termination,
    default_options,
    run_algorithm,
)
from .workbench import (
    ExperimentConfig,
    ResultRow,
    emit_plot_data,
    ill_behaved_fraction,
    check_monotonic,
    read_rows,
    run_experiment,
    write_rows,
)

DOMAINS = ("tiles", "pancake", "blocks", "graph")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSOLVED = 2
EXIT_RESOURCE = 3


def load_instances(domain: str, path: str, cost_model: str, size: int,
                   blocks_model: str) -> list[tuple[str, object]]:
    """Build (instance id, DomainAdapter) pairs from an instance file."""
    text = open(path).read()
    try:
        return _build_instances(domain, text, cost_model, size, blocks_model)
    except ValueError as exc:
        raise click.UsageError(f"{path}: {exc}") from None


def _build_instances(domain, text, cost_model, size, blocks_model):
    if domain == "tiles":
        states = parse_tiles(text, size=size)
        return [(str(i + 1), TileDomain(s, cost_model, size))
                for i, s in enumerate(states)]
    if domain == "pancake":
        if cost_model not in ("unit", "heavy"):
            raise click.UsageError(
                f"pancake supports unit/heavy cost, not {cost_model!r}")
        states = parse_pancake_instances(text)
        return [(str(i + 1), PancakeDomain(s, cost_model))
                for i, s in enumerate(states)]
    if domain == "blocks":
        states = parse_blocks_instances(text)
        return [(str(i + 1), BlocksDomain(s, model=blocks_model))
                for i, s in enumerate(states)]
    if domain == "graph":
        return [("1", graph_domain_from_spec(text))]
    raise click.UsageError(f"unknown domain {domain!r}")


def parse_width_list(text: str) -> list[int]:
    try:
        return [int(w) for w in text.split(",") if w.strip()]
    except ValueError:
        raise click.UsageError(f"bad width list: {text!r}") from None


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise click.UsageError(f"bad range (expected LO:HI): {text!r}") from None


_common = [
    click.option("--domain", "domain_name", type=click.Choice(DOMAINS), required=True),
    click.option("--cost-model", default="unit",
                 type=click.Choice(["unit", "heavy", "sqrt", "inverse", "reverse"])),
    click.option("--size", default=4, type=int, show_default=True,
                 help="Tile board side length."),
    click.option("--blocks-model", default="direct",
                 type=click.Choice(["direct", "deep"]), show_default=True),
    click.option("--instance", "instance_path", required=True,
                 type=click.Path(exists=True)),
]


def common_options(fn):
    for opt in reversed(_common):
        fn = opt(fn)
    return fn


@click.group()
def cli():
    """Beam search toolkit: monotonic and distance-guided beam variants."""


@cli.command()
@common_options
@click.option("--algorithm", type=click.Choice(ALGORITHMS), required=True)
@click.option("--width", type=int, required=True)
@click.option("--no-pruning", is_flag=True, help="Disable incumbent pruning.")
@click.option("--dedup", type=click.Choice(["none", "full", "slot"]), default=None,
              help="Override the algorithm's duplicate-elimination mode.")
@click.option("--node-limit", type=int, default=None)
@click.option("--time-limit", type=float, default=None)
@click.option("--trace", "trace_path", type=click.Path(), default=None,
              help="Write per-(level, slot) trace records as JSON lines.")
def solve(domain_name, cost_model, size, blocks_model, instance_path,
          algorithm, width, no_pruning, dedup, node_limit, time_limit,
          trace_path):
    """Solve every instance in a file with one algorithm and width."""
    if width < 1:
        raise click.UsageError("--width must be >= 1")
    instances = load_instances(domain_name, instance_path, cost_model, size,
                               blocks_model)
    opts = default_options(algorithm)
    if no_pruning:
        opts.incumbent_pruning = False
    if dedup is not None:
        opts.dedup = DedupMode(dedup)
    opts.node_limit = node_limit
    opts.time_limit = time_limit

    trace_fh = open(trace_path, "w") if trace_path else None
    exit_code = EXIT_OK
    try:
        for instance_id, dom in instances:
            if trace_fh is not None:
                opts.trace = (lambda rec, _id=instance_id: trace_fh.write(
                    json.dumps({"instance": _id, **rec}) + "\n"))
            result = run_algorithm(algorithm, dom, width, opts)
            if result.solved:
                click.echo(f"instance {instance_id}: solved "
                           f"cost={result.cost:g} length={result.length} "
                           f"expansions={result.expansions} "
                           f"generations={result.generations} "
                           f"levels={result.levels} "
                           f"time={result.wall_time:.3f}s")
            else:
                click.echo(f"instance {instance_id}: unsolved "
                           f"({result.termination.value}) "
                           f"expansions={result.expansions} "
                           f"time={result.wall_time:.3f}s")
            if result.termination is Termination.RESOURCE_LIMIT:
                exit_code = EXIT_RESOURCE
            elif not result.solved and exit_code != EXIT_RESOURCE:
                exit_code = EXIT_UNSOLVED
    finally:
        if trace_fh is not None:
            trace_fh.close()
    return exit_code


@cli.command()
@common_options
@click.option("--algorithm", type=click.Choice(ALGORITHMS), required=True)
@click.option("--widths", required=True, help="Comma-separated width list.")
@click.option("--node-limit", type=int, default=None)
@click.option("--time-limit", type=float, default=None)
@click.option("--parallelism", type=int, default=1, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def sweep(domain_name, cost_model, size, blocks_model, instance_path,
          algorithm, widths, node_limit, time_limit, parallelism, out_path):
    """Run a width sweep over an instance file and write a CSV."""
    width_list = parse_width_list(widths)
    instances = load_instances(domain_name, instance_path, cost_model, size,
                               blocks_model)
    if not width_list:
        write_rows(out_path, [])
        click.echo("empty width list; wrote empty results")
        return EXIT_OK
    try:
        cfg = ExperimentConfig(instances=instances, algorithm=algorithm,
                               widths=width_list, node_limit=node_limit,
                               time_limit=time_limit, parallelism=parallelism)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    rows = run_experiment(cfg)
    write_rows(out_path, rows)
    solved_all = [w for w in width_list
                  if all(r.solved for r in rows if r.width == w)]
    click.echo(f"wrote {len(rows)} rows to {out_path}; "
               f"widths solving all instances: {solved_all}")
    return EXIT_OK


@cli.group()
def analyze():
    """Post-hoc analysis of sweep result files."""


@analyze.command(name="ill-behaved")
@click.option("--in", "in_path", required=True, type=click.Path(exists=True))
@click.option("--range", "width_range", required=True,
              help="Contiguous width range LO:HI.")
def analyze_ill_behaved(in_path, width_range):
    """Per-instance fraction of widths that worsened the solution cost."""
    lo, hi = parse_range(width_range)
    rows = read_rows(in_path)
    by_key: dict[tuple[str, str], dict[int, float]] = {}
    for r in rows:
        if lo <= r.width <= hi:
            by_key.setdefault((r.algorithm, r.instance), {})[r.width] = r.cost
    if not by_key:
        raise click.UsageError("no rows in the requested width range")
    fractions = []
    for (alg, inst), costs in sorted(by_key.items()):
        try:
            frac = ill_behaved_fraction(costs)
        except ValueError as exc:
            raise click.UsageError(
                f"{alg}/{inst}: {exc}") from None
        fractions.append(frac)
        click.echo(f"{alg} instance {inst}: ill-behaved fraction {frac:.4f}")
    click.echo(f"mean ill-behaved fraction: {sum(fractions) / len(fractions):.4f}")
    return EXIT_OK


@cli.group()
def check():
    """Consistency checks on algorithm behavior."""


@check.command(name="monotonic")
@common_options
@click.option("--algorithm", type=click.Choice(ALGORITHMS), required=True)
@click.option("--widths", "width_range", required=True, help="Range LO:HI.")
@click.option("--node-limit", type=int, default=None)
@click.option("--time-limit", type=float, default=None)
def check_monotonic_cmd(domain_name, cost_model, size, blocks_model,
                        instance_path, algorithm, width_range, node_limit,
                        time_limit):
    """Report every adjacent width pair whose cost increased."""
    lo, hi = parse_range(width_range)
    if lo < 1 or hi < lo:
        raise click.UsageError("need 1 <= LO <= HI")
    instances = load_instances(domain_name, instance_path, cost_model, size,
                               blocks_model)
    any_violation = False
    for instance_id, dom in instances:
        report = check_monotonic(algorithm, dom, range(lo, hi + 1),
                                 node_limit=node_limit, time_limit=time_limit)
        if report.ok:
            click.echo(f"instance {instance_id}: monotonic over widths {lo}..{hi}")
        else:
            any_violation = True
            for k, ck, ck1 in report.violations:
                click.echo(f"instance {instance_id}: VIOLATION width {k} -> "
                           f"{k + 1}: cost {ck:g} -> {ck1:g}")
    click.echo("result: " + ("violations found" if any_violation else "all monotonic"))
    return EXIT_OK


@cli.command()
@click.argument("kind", type=click.Choice(["pancake", "blocks"]))
@click.option("--n", type=int, required=True)
@click.option("--count", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_path", required=True, type=click.Path())
def gen(kind, n, count, seed, out_path):
    """Generate deterministic random instances."""
    try:
        if kind == "pancake":
            text = serialize_pancake_instances(gen_pancake(n, count, seed))
        else:
            text = serialize_blocks_instances(gen_blocks(n, count, seed))
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    with open(out_path, "w") as fh:
        fh.write(text)
    click.echo(f"wrote {count} {kind} instances to {out_path}")
    return EXIT_OK


@cli.command(name="plot-data")
@click.option("--in", "in_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_prefix", required=True)
@click.option("--mean-action-cost", type=float, default=None,
              help="Slope of the length-vs-cost reference series.")
def plot_data(in_path, out_prefix, mean_action_cost):
    """Emit averaged (time, cost) series and a (length, cost) scatter."""
    rows = read_rows(in_path)
    if not rows:
        raise click.UsageError("result file has no rows")
    avg_path, scatter_path = emit_plot_data(rows, out_prefix, mean_action_cost)
    click.echo(f"wrote {avg_path} and {scatter_path}")
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    """Entry point mapping click's behavior onto the documented exit codes."""
    try:
        code = cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
