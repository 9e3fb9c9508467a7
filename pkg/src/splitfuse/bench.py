"""Batch resource benchmarks and closed-form table reports as CSV."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from splitfuse.exceptions import InvalidInputError, SplitFuseError
from splitfuse.families import complete_multipartite, clique_star, random_dh, random_er_connected
from splitfuse.orbit import (
    min_degree_formula,
    orbit_size_bipartite,
    orbit_size_cliquestar,
    orbit_size_multipartite,
    select_min_edges,
)
from splitfuse.planner import STRATEGIES, make_plan, resource_formulas
from splitfuse.split import decompose

BENCH_COLUMNS = ("seed", "n", "strategy", "cz", "depth", "qubits", "aux")


@dataclass(frozen=True)
class BenchConfig:
    """Random-graph benchmark settings.

    Sample ``i`` (counting over all sizes in order) uses seed ``seed + i``.
    """

    generator: str = "dh"
    sizes: tuple[int, ...] = (10,)
    samples: int = 10
    strategies: tuple[str, ...] = ("naive", "heuristic", "splitfuse")
    seed: int = 0
    p: float = 0.5
    threads: int = 1

    def __post_init__(self):
        if self.generator not in ("dh", "er"):
            raise InvalidInputError(f"generator must be dh or er, got {self.generator!r}")
        if self.samples < 1:
            raise InvalidInputError("samples must be >= 1")
        if not self.strategies:
            raise InvalidInputError("at least one strategy is required")
        for s in self.strategies:
            if s not in STRATEGIES:
                raise InvalidInputError(f"unknown strategy {s!r}")
        if not self.sizes or min(self.sizes) < 1:
            raise InvalidInputError("sizes must be a nonempty list of positive integers")


def _sample(args):
    index, seed, n, cfg = args
    try:
        if cfg.generator == "dh":
            g = random_dh(n, seed)
        else:
            g = random_er_connected(n, cfg.p, seed)
        rows = []
        for s in cfg.strategies:
            summary = make_plan(g, s).summary
            rows.append((seed, n, s, *summary.as_tuple()))
        return rows
    except SplitFuseError as exc:
        raise type(exc)(f"sample {index} (seed {seed}, n={n}): {exc}") from exc


def run_bench_rows(cfg: BenchConfig) -> list[tuple]:
    jobs = []
    i = 0
    for n in cfg.sizes:
        for _ in range(cfg.samples):
            jobs.append((i, cfg.seed + i, n, cfg))
            i += 1
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            chunks = list(pool.map(_sample, jobs, chunksize=8))
    else:
        chunks = [_sample(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r[0], r[2]))
    return rows


def _to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def run_bench(cfg: BenchConfig) -> str:
    """One CSV row per (sample, strategy), sorted by (seed, strategy)."""
    return _to_csv(BENCH_COLUMNS, run_bench_rows(cfg))


# -- table reports --------------------------------------------------------------------

TABLE2_COLUMNS = ("n_total", "n", "m", "orbit_size", "min_edges", "min_max_degree")
TABLE3_COLUMNS = (
    "n", "k", "parts",
    "km_orbit_size", "km_min_edges", "km_min_max_degree_plus1",
    "cs_orbit_size", "cs_min_edges", "cs_min_max_degree_plus1",
    "sf_cz", "sf_time_steps", "sf_qubits", "sf_aux",
)


def _partitions(n: int, k_min: int, smallest: int = 2, largest: int | None = None):
    """Partitions of ``n`` into parts >= ``smallest``, non-increasing, lexicographically descending."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), smallest - 1, -1):
        for rest in _partitions(n - first, 0, smallest, first):
            if 1 + len(rest) >= k_min:
                yield (first, *rest)


def table2_rows(min_n: int = 4, max_n: int = 12) -> list[tuple]:
    rows = []
    for total in range(max(min_n, 4), max_n + 1):
        for n in range(total - 2, (total - 1) // 2, -1):
            m = total - n
            if n >= m >= 2:
                rows.append((total, n, m, orbit_size_bipartite(n, m), n + m - 1, max(n, m)))
    return rows


def _min_edges_cell(family: str, parts) -> str | int:
    sel = select_min_edges(family, parts)
    return sel.value if sel.value is not None else "unknown"


def table3_rows(min_n: int = 6, max_n: int = 12) -> list[tuple]:
    rows = []
    for total in range(max(min_n, 6), max_n + 1):
        for parts in _partitions(total, 3):
            k = len(parts)
            sf = resource_formulas(decompose(complete_multipartite(parts)))
            if sf != resource_formulas(decompose(clique_star(parts))):
                raise AssertionError(f"split-fuse resources differ between families for {parts}")
            rows.append((
                total, k, "-".join(map(str, parts)),
                orbit_size_multipartite(parts), _min_edges_cell("multipartite", parts),
                min_degree_formula("multipartite", parts) + 1,
                orbit_size_cliquestar(parts), _min_edges_cell("clique_star", parts),
                min_degree_formula("clique_star", parts) + 1,
                *sf.as_tuple(),
            ))
    return rows


def table_report(kind: str, min_n: int | None = None, max_n: int = 12) -> str:
    """Regenerate the bipartite (``table2``) or multipartite (``table3``) summary as CSV.

    Orbit sizes and minimum degrees come from closed forms; minimum edge
    counts from the reference data or, for untabulated sizes, the orbit
    oracle. Ranges outside the formula domain yield a header-only CSV.
    """
    if kind == "table2":
        return _to_csv(TABLE2_COLUMNS, table2_rows(4 if min_n is None else min_n, max_n))
    if kind == "table3":
        return _to_csv(TABLE3_COLUMNS, table3_rows(6 if min_n is None else min_n, max_n))
    raise InvalidInputError(f"kind must be table2 or table3, got {kind!r}")
