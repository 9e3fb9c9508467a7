"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
limit exceeded.
"""

from __future__ import annotations

import json
import sys

import click

from splitfuse.bench import BenchConfig, run_bench, table_report
from splitfuse.exceptions import ResourceLimitError, SplitFuseError
from splitfuse.families import FAMILY_CODES, FamilySpec, build, random_dh, random_er_connected
from splitfuse.graph import read_graph_json
from splitfuse.heuristic import triangle_greedy
from splitfuse.orbit import oracle_min_stats
from splitfuse.planner import STRATEGIES, PreparationPlan, compare_strategies, comparison_csv, make_plan
from splitfuse.split import Qasst, decompose, reconstruct
from splitfuse.verify import diagnose_plan

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}") from None


def _emit(ctx: click.Context, text: str, out: str | None) -> None:
    if out is None or out == "-":
        click.echo(text, nl=not text.endswith("\n"))
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _json(ctx: click.Context, data) -> str:
    indent = ctx.obj["json_indent"]
    return json.dumps(data, indent=indent if indent and indent > 0 else None) + "\n"


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


@click.group()
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed for random generators.")
@click.option("--threads", type=click.IntRange(1), default=1, show_default=True, help="Worker processes for bench.")
@click.option("--json-indent", type=int, default=None, help="Indent JSON output (compact when omitted).")
@click.pass_context
def cli(ctx, seed, threads, json_indent):
    """Split-decomposition based graph-state preparation toolkit."""
    ctx.obj = {"seed": seed, "threads": threads, "json_indent": json_indent}


@cli.command()
@click.option("--family", type=click.Choice(sorted(FAMILY_CODES)), default=None)
@click.option("--parts", default=None, help="Comma-separated part sizes, e.g. 2,2,2.")
@click.option("--r", "r", type=int, default=1, show_default=True, help="Central clique of a clique-star (1-based).")
@click.option("--random", "rand", type=click.Choice(["dh", "er"]), default=None)
@click.option("--n", type=int, default=None, help="Vertex count for random graphs.")
@click.option("--p", type=float, default=0.5, show_default=True, help="Edge probability for er.")
@click.option("--out", default=None, help="Output graph JSON (stdout when omitted).")
@click.pass_context
def gen(ctx, family, parts, r, rand, n, p, out):
    """Build a named family member or a seeded random graph."""
    if (family is None) == (rand is None):
        raise click.UsageError("give exactly one of --family or --random")
    if family is not None:
        if parts is None:
            raise click.UsageError("--family needs --parts")
        g = build(FamilySpec(family, _ints(parts), r))
    else:
        if n is None:
            raise click.UsageError("--random needs --n")
        seed = ctx.obj["seed"]
        g = random_dh(n, seed) if rand == "dh" else random_er_connected(n, p, seed)
    _emit(ctx, _json(ctx, g.to_dict()), out)


@cli.command("decompose")
@click.option("--in", "inp", required=True, help="Graph JSON.")
@click.option("--out", default=None, help="QASST JSON (stdout when omitted).")
@click.pass_context
def decompose_cmd(ctx, inp, out):
    """Split decomposition of a connected graph."""
    _emit(ctx, _json(ctx, decompose(read_graph_json(inp)).to_dict()), out)


@cli.command("reconstruct")
@click.option("--in", "inp", required=True, help="QASST JSON.")
@click.option("--out", default=None, help="Graph JSON (stdout when omitted).")
@click.pass_context
def reconstruct_cmd(ctx, inp, out):
    """Rebuild the graph encoded by a QASST."""
    _emit(ctx, _json(ctx, reconstruct(Qasst.from_dict(_load_json(inp))).to_dict()), out)


@cli.command()
@click.option("--in", "inp", required=True, help="Graph JSON.")
@click.option("--out", default=None, help="Reconstructed graph JSON (stdout when omitted).")
@click.pass_context
def roundtrip(ctx, inp, out):
    """Decompose, serialise, parse and reconstruct; exit 1 if the graph changes."""
    g = read_graph_json(inp)
    q = Qasst.from_dict(json.loads(json.dumps(decompose(g).to_dict())))
    h = reconstruct(q)
    _emit(ctx, _json(ctx, h.to_dict()), out)
    if h != g:
        click.echo("roundtrip changed the graph", err=True)
        ctx.exit(EXIT_VERIFY)


@cli.command()
@click.option("--in", "inp", required=True, help="Graph JSON.")
@click.option("--max", "max_size", type=click.IntRange(1), default=100_000, show_default=True)
@click.option("--report", default=None, help="Report JSON (stdout when omitted).")
@click.pass_context
def orbit(ctx, inp, max_size, report):
    """Exact LC-orbit statistics by breadth-first enumeration."""
    _emit(ctx, _json(ctx, oracle_min_stats(read_graph_json(inp), max_size).to_dict()), report)


@cli.command()
@click.option("--in", "inp", required=True, help="Graph JSON.")
@click.option("--out", default=None, help="Result JSON (stdout when omitted).")
@click.option("--iterate", is_flag=True, help="Repeat passes until nothing improves.")
@click.pass_context
def heuristic(ctx, inp, out, iterate):
    """Greedy edge reduction by local complements at triangle vertices."""
    _emit(ctx, _json(ctx, triangle_greedy(read_graph_json(inp), iterate=iterate).to_dict()), out)


@cli.command()
@click.option("--in", "inp", required=True, help="Graph JSON.")
@click.option("--strategy", type=click.Choice(STRATEGIES), default="splitfuse", show_default=True)
@click.option("--compress", is_flag=True, help="Drop empty layers.")
@click.option("--out", default=None, help="Plan JSON (stdout when omitted).")
@click.pass_context
def plan(ctx, inp, strategy, compress, out):
    """Synthesise a preparation plan."""
    _emit(ctx, _json(ctx, make_plan(read_graph_json(inp), strategy, compress=compress).to_dict()), out)


@cli.command()
@click.option("--plan", "plan_path", required=True, help="Plan JSON.")
@click.option("--target", required=True, help="Target graph JSON.")
@click.pass_context
def verify(ctx, plan_path, target):
    """Execute a plan on a stabilizer tableau and compare with the target."""
    diag = diagnose_plan(PreparationPlan.from_dict(_load_json(plan_path)), read_graph_json(target))
    click.echo(_json(ctx, diag.to_dict()), nl=False)
    if not diag.ok:
        ctx.exit(EXIT_VERIFY)


@cli.command()
@click.option("--in", "inp", required=True, help="Graph JSON.")
@click.option("--csv", "csv_path", default=None, help="CSV output (stdout when omitted).")
@click.pass_context
def compare(ctx, inp, csv_path):
    """Resource comparison across strategies."""
    _emit(ctx, comparison_csv(compare_strategies(read_graph_json(inp))), csv_path)


@cli.command()
@click.option("--generator", type=click.Choice(["dh", "er"]), default="dh", show_default=True)
@click.option("--sizes", default="10", show_default=True, help="Comma-separated vertex counts.")
@click.option("--samples", type=click.IntRange(1), default=10, show_default=True)
@click.option("--strategies", default="naive,heuristic,splitfuse", show_default=True)
@click.option("--p", type=float, default=0.5, show_default=True)
@click.option("--out", default=None, help="CSV output (stdout when omitted).")
@click.pass_context
def bench(ctx, generator, sizes, samples, strategies, p, out):
    """Resource statistics over seeded random graphs."""
    cfg = BenchConfig(
        generator=generator,
        sizes=_ints(sizes),
        samples=samples,
        strategies=tuple(s for s in strategies.split(",") if s),
        seed=ctx.obj["seed"],
        p=p,
        threads=ctx.obj["threads"],
    )
    _emit(ctx, run_bench(cfg), out)


@cli.command()
@click.option("--kind", type=click.Choice(["table2", "table3"]), required=True)
@click.option("--min-n", type=int, default=None)
@click.option("--max-n", type=int, default=12, show_default=True)
@click.option("--out", default=None, help="CSV output (stdout when omitted).")
@click.pass_context
def table(ctx, kind, min_n, max_n, out):
    """Regenerate the closed-form summary tables."""
    _emit(ctx, table_report(kind, min_n, max_n), out)



def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rc = cli.main(args=argv, prog_name="splitfuse", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_INPUT
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except ResourceLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_LIMIT
    except (SplitFuseError, OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    return rc if isinstance(rc, int) else EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
