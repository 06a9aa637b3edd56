"""Littlewood-Richardson coefficients by pruned skew-tableau search.

c^λ_{μν} counts skew semistandard tableaux of shape λ/μ and content ν whose
reverse reading word is a lattice word.  The search fills cells in reverse
reading order (rows top to bottom, each row right to left) so that the
lattice condition, row-weakness and column-strictness can all be enforced
the moment a value is placed.  One traversal of a shape collects every
admissible content at once, which is what the branching sums actually
consume.

All results are cached.  The caches are plain dicts holding immutable
values: under concurrent use the worst case is recomputing an entry, never
an inconsistent one.
"""

from __future__ import annotations

from .partitions import Partition, contains, partitions_over

_INF = 10 ** 9

# (outer, inner) -> {content: count}; maps are complete and must not be mutated
_SKEW_CACHE: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def _skew_fillings(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """Count lattice fillings of outer/inner, grouped by content."""
    rows = len(outer)
    inner_padded = tuple(inner) + (0,) * (rows - len(inner))
    cells = []
    for r in range(rows):
        for c in range(outer[r] - 1, inner_padded[r] - 1, -1):
            cells.append((r, c))
    result: dict[Partition, int] = {}
    if not cells:
        result[()] = 1
        return result

    table = [[0] * outer[r] for r in range(rows)]
    counts = [0] * (rows + 2)
    ncells = len(cells)

    def fill(i: int):
        if i == ncells:
            content = tuple(c for c in counts[1:] if c)
            result[content] = result.get(content, 0) + 1
            return
        r, c = cells[i]
        row = table[r]
        right = row[c + 1] if c + 1 < outer[r] else _INF
        above = table[r - 1][c] if r > 0 and c >= inner_padded[r - 1] else 0
        # lattice words force the value at row r to be at most r+1
        hi = min(right, r + 1)
        for v in range(above + 1, hi + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            counts[v] += 1
            row[c] = v
            fill(i + 1)
            counts[v] -= 1
        row[c] = 0

    fill(0)
    return result


def skew_expand(outer: Partition, inner: Partition) -> dict[Partition, int]:
    """All ν with c^outer_{inner,ν} > 0, as a map ν -> coefficient.

    Returns {} when inner is not contained in outer.  The returned dict is
    shared with the cache; treat it as read-only.
    """
    key = (outer, inner)
    cached = _SKEW_CACHE.get(key)
    if cached is not None:
        return cached
    if not contains(outer, inner):
        out: dict[Partition, int] = {}
    else:
        out = _skew_fillings(outer, inner)
    _SKEW_CACHE[key] = out
    return out


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^λ_{μν}.

    Zero unless |λ| = |μ| + |ν| and both μ and ν fit inside λ.  The search
    runs over the skew shape left by the larger of μ, ν, which keeps the
    tableau count (and the shared cache) small.
    """
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    inner, content = (mu, nu) if (sum(mu), mu) >= (sum(nu), nu) else (nu, mu)
    return skew_expand(lam, inner).get(content, 0)


def lr_count_direct(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^λ_{μν} without the μ/ν canonical swap; used by symmetry tests."""
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    return _skew_fillings(lam, mu).get(nu, 0)


def tensor_expand(
    mu: Partition, nu: Partition, max_length: int | None = None
) -> dict[Partition, int]:
    """Decomposition of the product s_μ · s_ν: {λ -> c^λ_{μν} > 0}.

    Support facts prune the candidates: λ contains both factors, its first
    row is at most μ₁+ν₁ and its length at most ℓ(μ)+ℓ(ν).
    """
    total = sum(mu) + sum(nu)
    lower = tuple(
        max(a, b)
        for a, b in zip(
            tuple(mu) + (0,) * max(0, len(nu) - len(mu)),
            tuple(nu) + (0,) * max(0, len(mu) - len(nu)),
        )
    )
    rows = len(mu) + len(nu)
    if max_length is not None:
        rows = min(rows, max_length)
    first = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    out: dict[Partition, int] = {}
    for lam in partitions_over(lower, total, max_first=first, max_length=rows):
        c = lr_coeff(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def even_row_sum(expansion: dict[Partition, int]) -> int:
    """Sum of coefficients over keys with all parts even."""
    return sum(c for nu, c in expansion.items() if all(x % 2 == 0 for x in nu))


def even_column_sum(expansion: dict[Partition, int]) -> int:
    """Sum of coefficients over keys whose column heights are all even."""
    total = 0
    for nu, c in expansion.items():
        if len(nu) % 2 == 0 and all(nu[i] == nu[i + 1] for i in range(0, len(nu), 2)):
            total += c
    return total


def expansion_dot(a: dict[Partition, int], b: dict[Partition, int]) -> int:
    """Σ_γ a[γ]·b[γ], iterating over the smaller map."""
    if len(a) > len(b):
        a, b = b, a
    return sum(c * b.get(k, 0) for k, c in a.items())


def cache_size() -> int:
    return len(_SKEW_CACHE)


def clear_cache() -> None:
    _SKEW_CACHE.clear()


def dump_cache_lines():
    """Serialize the cache, one complete skew expansion per line."""
    for (outer, inner), expansion in _SKEW_CACHE.items():
        entries = ",".join(
            ".".join(map(str, nu)) + ":" + str(c) for nu, c in sorted(expansion.items())
        )
        yield "%s|%s|%s" % (
            ".".join(map(str, outer)),
            ".".join(map(str, inner)),
            entries,
        )


def load_cache_lines(lines) -> int:
    """Load lines produced by dump_cache_lines; returns entries loaded."""

    def parse(part: str) -> Partition:
        return tuple(int(x) for x in part.split(".")) if part else ()

    n = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        outer_s, inner_s, entries_s = line.split("|")
        expansion = {}
        if entries_s:
            for item in entries_s.split(","):
                nu_s, c_s = item.split(":")
                expansion[parse(nu_s)] = int(c_s)
        _SKEW_CACHE[(parse(outer_s), parse(inner_s))] = expansion
        n += 1
    return n
