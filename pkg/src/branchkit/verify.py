"""Exhaustive verification grids: closed formulas against the oracle.

Each grid enumerates every label combination up to a size cap and compares
the Littlewood-Richardson formula with the character-theoretic
decomposition, cell by cell, at the smallest ranks satisfying the rule's
hypotheses.  Orthogonal ranks additionally respect the oracle-safe floor
n >= 2*size+2 (size being the grid's size cap), which keeps every label
readable through SO characters.  Beyond the compared cells the full
nonzero supports of both sides are held equal at the largest rank used,
so a constituent appearing on only one side fails the grid even when it
is larger than the requested cap.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .branching import (
    PAIR_IDS,
    bilinear_sum,
    branch_decompose,
    diagonal_gl_sum,
    littlewood_restriction,
)
from .lr import lr_coeff
from .oracle import duality_dim_check, oracle_decomposition
from .partitions import GLLabel, Partition, partitions_up_to

DEFAULT_MAX_SIZE = {pair: 5 for pair in PAIR_IDS} | {"gl-diag": 4}


@dataclass
class GridReport:
    pair: str
    cases: int = 0
    mismatches: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def line(self) -> str:
        status = "ok" if self.ok else f"{len(self.mismatches)} mismatches"
        return f"{self.pair}: {self.cases} cases, {status}"


def partition_labels(max_size: int) -> list[Partition]:
    return list(partitions_up_to(max_size))


def gl_labels(max_total: int) -> list[GLLabel]:
    out = []
    for total in range(max_total + 1):
        for a in range(total + 1):
            for pp in partitions_up_to(a):
                if sum(pp) != a:
                    continue
                for mm in partitions_up_to(total - a):
                    if sum(mm) != total - a:
                        continue
                    out.append(GLLabel(pp, mm))
    return out


def _compare(report: GridReport, context, fmap: dict, omap: dict, compared):
    """Cell comparisons plus full support equality."""
    compared = set(compared)
    for key in set(fmap) | set(omap) | compared:
        f = fmap.get(key, 0)
        o = omap.get(key, 0)
        if key in compared:
            report.cases += 1
        if f != o:
            report.mismatches.append(
                {"context": context, "small": key, "formula": f, "oracle": o})


def _compare_cells(report: GridReport, context, fmap, omap, compared):
    """Cell comparisons only (support checked elsewhere)."""
    for key in compared:
        report.cases += 1
        f = fmap.get(key, 0)
        o = omap.get(key, 0)
        if f != o:
            report.mismatches.append(
                {"context": context, "small": key, "formula": f, "oracle": o})


def _run_groups(report, pair, big, by_rank, ranks_of, fmap_of):
    """Compare cell groups at their own minimal ranks; check supports at
    the largest rank in play (where both maps carry the full support)."""
    support_n = max(by_rank)
    for n, compared in sorted(by_rank.items()):
        ranks = ranks_of(n)
        fmap = fmap_of(n)
        omap = oracle_decomposition(pair, ranks, big)
        if n == support_n:
            _compare(report, (pair, ranks, big), fmap, omap, compared)
        else:
            _compare_cells(report, (pair, ranks, big), fmap, omap, compared)


def run_grid(pair: str, max_size: int | None = None) -> GridReport:
    """Formula-vs-oracle grid for one pair at the given size cap."""
    if max_size is None:
        max_size = DEFAULT_MAX_SIZE[pair]
    report = GridReport(pair)
    t0 = time.perf_counter()
    _GRID_RUNNERS[pair](report, max_size)
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def _grid_gl_diag(report: GridReport, max_size: int):
    labels = gl_labels(max_size)
    for mu in labels:
        for nu in labels:
            p, q = len(mu.plus), len(mu.minus)
            r, s = len(nu.plus), len(nu.minus)
            n = max(p + q + r + s, 1)
            compared = [
                lam for lam in labels
                if len(lam.plus) <= p + r and len(lam.minus) <= q + s
            ]
            fmap = branch_decompose("gl-diag", (mu, nu), (n,))
            omap = oracle_decomposition("gl-diag", (n,), (mu, nu))
            _compare(report, ("gl-diag", (n,), mu, nu), fmap, omap, compared)


def _grid_onsp_diag(report: GridReport, max_size: int, pair: str):
    labels = partition_labels(max_size)
    safe_floor = 2 * max_size + 2
    for mu in labels:
        for nu in labels:
            if pair == "o-diag":
                n = max(safe_floor, 2 * (len(mu) + len(nu)))
                by_rank = {n: labels}
            else:
                by_rank = {}
                for lam in labels:
                    n = max(len(lam), len(mu) + len(nu), 1)
                    by_rank.setdefault(n, []).append(lam)
            _run_groups(
                report, pair, (mu, nu), by_rank,
                lambda n: (n,),
                lambda n: branch_decompose(pair, (mu, nu), (n,)),
            )


def _grid_gl_sum(report: GridReport, max_size: int):
    labels = gl_labels(max_size)
    for lam in labels:
        fmap = branch_decompose("gl-sum", lam, None)
        by_rank: dict[int, list] = {}
        for mu in labels:
            for nu in labels:
                k = (max(len(lam.plus), len(mu.plus), len(nu.plus))
                     + max(len(lam.minus), len(mu.minus), len(nu.minus)))
                by_rank.setdefault(max(k, 1), []).append((mu, nu))
        _run_groups(
            report, "gl-sum", lam, by_rank,
            lambda n: (n, n), lambda n: fmap,
        )


def _grid_onsp_sum(report: GridReport, max_size: int, pair: str):
    labels = partition_labels(max_size)
    safe_floor = 2 * max_size + 2
    for lam in labels:
        fmap = branch_decompose(pair, lam, None)
        by_rank: dict[int, list] = {}
        for mu in labels:
            for nu in labels:
                lmax = max(len(lam), len(mu), len(nu))
                if pair == "o-sum":
                    n = max(2 * lmax, safe_floor)
                else:
                    n = max(lmax, 1)
                by_rank.setdefault(n, []).append((mu, nu))
        _run_groups(report, pair, lam, by_rank,
                    lambda n: (n, n), lambda n: fmap)


def _grid_polarization(report: GridReport, max_size: int, pair: str):
    bigs = partition_labels(max_size)
    smalls = gl_labels(max_size)
    for lam in bigs:
        by_rank: dict[int, list] = {}
        for mu in smalls:
            n = max(2 * len(lam), 2 * len(mu.plus), 2 * len(mu.minus), 1)
            by_rank.setdefault(n, []).append(mu)
        _run_groups(
            report, pair, lam, by_rank,
            lambda n: (n,),
            lambda n: branch_decompose(pair, lam, (n,)),
        )


def _grid_bilinear(report: GridReport, max_size: int, pair: str):
    bigs = gl_labels(max_size)
    smalls = partition_labels(max_size)
    safe_floor = 2 * max_size + 2
    for lam in bigs:
        depth = len(lam.plus) + len(lam.minus)
        by_rank: dict[int, list] = {}
        for mu in smalls:
            if pair == "o-in-gl":
                n = max(2 * depth, 2 * len(mu), safe_floor)
            else:
                n = max(depth, len(mu), 1)
            by_rank.setdefault(n, []).append(mu)
        _run_groups(
            report, pair, lam, by_rank,
            lambda n: (n,),
            lambda n: branch_decompose(pair, lam, (n,)),
        )


_GRID_RUNNERS = {
    "gl-diag": _grid_gl_diag,
    "o-diag": lambda r, s: _grid_onsp_diag(r, s, "o-diag"),
    "sp-diag": lambda r, s: _grid_onsp_diag(r, s, "sp-diag"),
    "gl-sum": _grid_gl_sum,
    "o-sum": lambda r, s: _grid_onsp_sum(r, s, "o-sum"),
    "sp-sum": lambda r, s: _grid_onsp_sum(r, s, "sp-sum"),
    "gl-in-o": lambda r, s: _grid_polarization(r, s, "gl-in-o"),
    "gl-in-sp": lambda r, s: _grid_polarization(r, s, "gl-in-sp"),
    "o-in-gl": lambda r, s: _grid_bilinear(r, s, "o-in-gl"),
    "sp-in-gl": lambda r, s: _grid_bilinear(r, s, "sp-in-gl"),
}


# ---------------------------------------------------------------------------
# other verification sweeps


def run_littlewood_consistency(max_size: int = 6) -> GridReport:
    """Restriction theorems against the bilinear-form rules with empty
    negative part, for both subgroup families."""
    report = GridReport("littlewood")
    t0 = time.perf_counter()
    for lam in partitions_up_to(max_size):
        for mu in partitions_up_to(sum(lam)):
            n = max(2 * sum(lam), 2 * len(mu), 2)
            lhs = littlewood_restriction(lam, mu, "O", n)
            rhs = bilinear_sum(GLLabel(lam, ()), mu, "rows")
            report.cases += 1
            if lhs != rhs:
                report.mismatches.append(
                    {"context": ("O", n, lam), "small": mu,
                     "formula": rhs, "oracle": lhs})
            n = max(sum(lam), len(mu), 1)
            lhs = littlewood_restriction(lam, mu, "Sp", n)
            rhs = bilinear_sum(GLLabel(lam, ()), mu, "columns")
            report.cases += 1
            if lhs != rhs:
                report.mismatches.append(
                    {"context": ("Sp", n, lam), "small": mu,
                     "formula": rhs, "oracle": lhs})
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def run_duality_sweeps(max_degree: int = 8) -> GridReport:
    """Graded-dimension identities for the multiplicity-free
    decompositions behind the rules."""
    report = GridReport("duality")
    t0 = time.perf_counter()

    def check(kind, d, **kw):
        report.cases += 1
        if not duality_dim_check(kind, d, **kw):
            report.mismatches.append(
                {"context": (kind, kw), "small": d,
                 "formula": "dimension mismatch", "oracle": ""})

    for n in range(1, 5):
        for p in range(1, 5):
            for d in range(max_degree + 1):
                check("cauchy_gl", d, n=n, p=p)
    for k in range(1, 5):
        for d in range(max_degree + 1):
            check("sym_square", d, k=k)
            check("wedge_square", d, k=k)
    cap = min(max_degree, 6)
    for k in range(1, 3):
        for n in range(2 * k + 1, 2 * k + 4):
            for d in range(cap + 1):
                check("o_duality", d, n=n, k=k)
        for n in range(k, k + 3):
            for d in range(cap + 1):
                check("sp_duality", d, n=n, k=k)
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def run_padding_probe(max_size: int = 3) -> GridReport:
    """Rational tensor sums with the internal length caps padded by one
    beyond minimal.  Deviations are findings, not failures: callers should
    report the mismatch list rather than assert on it."""
    report = GridReport("padding-probe")
    t0 = time.perf_counter()
    labels = gl_labels(max_size)
    for mu in labels:
        for nu in labels:
            p, q = len(mu.plus), len(mu.minus)
            r, s = len(nu.plus), len(nu.minus)
            for lam in labels:
                if len(lam.plus) > p + r or len(lam.minus) > q + s:
                    continue
                report.cases += 1
                minimal = diagonal_gl_sum(lam, mu, nu, caps=(p, q, r, s))
                padded = diagonal_gl_sum(
                    lam, mu, nu, caps=(p + 1, q + 1, r + 1, s + 1))
                free = diagonal_gl_sum(lam, mu, nu)
                if not (minimal == padded == free):
                    report.mismatches.append({
                        "context": ("padding", mu, nu), "small": lam,
                        "formula": (minimal, padded), "oracle": free})
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def run_lr_spot_checks(count: int = 60, seed: int = 1) -> GridReport:
    """Random coefficients recomputed with the two factors' roles swapped
    (an independent search over a different skew shape)."""
    from .lr import lr_count_direct

    report = GridReport("lr-spot")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    pool = list(partitions_up_to(7))
    for _ in range(count):
        mu = rng.choice(pool)
        nu = rng.choice(pool)
        outer_pool = [p for p in partitions_up_to(sum(mu) + sum(nu))
                      if sum(p) == sum(mu) + sum(nu)]
        if not outer_pool:
            continue
        lam = rng.choice(outer_pool)
        report.cases += 1
        a = lr_count_direct(lam, mu, nu)
        b = lr_count_direct(lam, nu, mu)
        c = lr_coeff(lam, mu, nu)
        if not (a == b == c):
            report.mismatches.append(
                {"context": (lam, mu, nu), "small": lam,
                 "formula": c, "oracle": (a, b)})
    report.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return report


def run_all(max_size: int | None = None, seed: int = 1) -> list[GridReport]:
    """The grids for all ten pairs plus the auxiliary sweeps.  With no
    explicit cap each grid runs at its default size."""
    reports = []
    for pair in PAIR_IDS:
        cap = DEFAULT_MAX_SIZE[pair] if max_size is None else max_size
        reports.append(run_grid(pair, cap))
    reports.append(
        run_littlewood_consistency(6 if max_size is None else max_size))
    reports.append(run_duality_sweeps())
    reports.append(run_lr_spot_checks(seed=seed))
    reports.append(run_padding_probe())
    return reports
