"""Exact characters of the classical groups on a maximal torus.

Characters are sparse Laurent polynomials: dicts mapping integer exponent
vectors (length = torus rank) to integer coefficients, with no zero entries.
Two independent routes produce them:

  * irreducible_character: the alternating-sum quotient (numerator
    antisymmetrization divided by the Weyl denominator, exact polynomial
    division).  Self-checking — a nonzero remainder cannot slip through —
    but enumerates the full Weyl group, so it is for low rank.

  * weight_multiplicities + orbit expansion: Freudenthal's recursion on
    dominant weights.  Scales to the ranks the verification grids need.

The two are cross-checked against each other in the test suite, and
decompose_character re-verifies every decomposition by rebuilding its input
from Freudenthal weight systems.

Families: "GL" (torus rank n), "Sp" (Sp of rank n), "SOOdd" (SO(2n+1)),
"SOEven" (SO(2n)).

All functions are pure; the memo caches hold immutable values keyed by
immutable keys, so concurrent use at worst recomputes an entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .errors import ExactnessError, NotACharacter, NotDominant, UnknownPair

Weight = tuple[int, ...]
LaurentPoly = dict[Weight, int]

FAMILIES = ("GL", "Sp", "SOOdd", "SOEven")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    torus_rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.torus_rank < 1:
            raise ValueError("torus rank must be positive")


def GL(n: int) -> GroupSpec:
    return GroupSpec("GL", n)


def Sp(n: int) -> GroupSpec:
    return GroupSpec("Sp", n)


def SO(n: int) -> GroupSpec:
    """The special orthogonal group SO(n), n >= 2."""
    if n % 2:
        return GroupSpec("SOOdd", n // 2)
    return GroupSpec("SOEven", n // 2)


# ---------------------------------------------------------------------------
# root data


def positive_roots(g: GroupSpec) -> list[Weight]:
    n = g.torus_rank
    roots = []

    def e(i, j=None, sj=1):
        v = [0] * n
        v[i] = 1
        if j is not None:
            v[j] = sj
        return tuple(v)

    for i in range(n):
        for j in range(i + 1, n):
            roots.append(e(i, j, -1))  # e_i - e_j
    if g.family in ("Sp", "SOOdd", "SOEven"):
        for i in range(n):
            for j in range(i + 1, n):
                roots.append(e(i, j, +1))  # e_i + e_j
    if g.family == "Sp":
        for i in range(n):
            v = [0] * n
            v[i] = 2
            roots.append(tuple(v))  # 2e_i
    if g.family == "SOOdd":
        for i in range(n):
            roots.append(e(i))  # e_i
    return roots


def two_rho(g: GroupSpec) -> Weight:
    n = g.torus_rank
    if g.family == "GL":
        return tuple(n - 1 - 2 * i for i in range(n))
    if g.family == "Sp":
        return tuple(2 * (n - i) for i in range(n))
    if g.family == "SOOdd":
        return tuple(2 * (n - i) - 1 for i in range(n))
    return tuple(2 * (n - 1 - i) for i in range(n))  # SOEven


def weyl_order(g: GroupSpec) -> int:
    import math

    n = g.torus_rank
    base = math.factorial(n)
    if g.family == "GL":
        return base
    if g.family == "SOEven":
        return base * 2 ** (n - 1) if n > 1 else 1
    return base * 2 ** n


def is_dominant(g: GroupSpec, w: Weight) -> bool:
    if len(w) != g.torus_rank:
        return False
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            return False
    if g.family in ("Sp", "SOOdd"):
        return not w or w[-1] >= 0
    if g.family == "SOEven":
        return len(w) < 2 or w[-2] >= abs(w[-1])
    return True


def dominant_rep(g: GroupSpec, w: Weight) -> Weight:
    """The dominant Weyl-chamber representative of w's orbit."""
    if g.family == "GL":
        return tuple(sorted(w, reverse=True))
    mags = sorted((abs(x) for x in w), reverse=True)
    if g.family in ("Sp", "SOOdd"):
        return tuple(mags)
    # SOEven: even number of sign flips; a zero coordinate absorbs parity
    negatives = sum(1 for x in w if x < 0)
    if negatives % 2 and mags[-1] != 0:
        return tuple(mags[:-1]) + (-mags[-1],)
    return tuple(mags)


def _pad(g: GroupSpec, w) -> Weight:
    w = tuple(w)
    if len(w) > g.torus_rank:
        raise NotDominant(f"weight {w} longer than rank {g.torus_rank}")
    return w + (0,) * (g.torus_rank - len(w))


def ensure_dominant(g: GroupSpec, w) -> Weight:
    w = _pad(g, w)
    if not is_dominant(g, w):
        raise NotDominant(f"{w} is not dominant for {g.family} rank {g.torus_rank}")
    return w


# ---------------------------------------------------------------------------
# Laurent polynomial helpers


def poly_add_scaled(acc: LaurentPoly, poly: LaurentPoly, factor: int) -> None:
    for e, c in poly.items():
        v = acc.get(e, 0) + factor * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if len(a) > len(b):
        a, b = b, a
    out: LaurentPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def poly_eval_ones(poly: LaurentPoly) -> int:
    return sum(poly.values())


def poly_invert_variables(poly: LaurentPoly) -> LaurentPoly:
    return {tuple(-x for x in e): c for e, c in poly.items()}


# ---------------------------------------------------------------------------
# the alternating-sum quotient


def _signed_orbit_terms(g: GroupSpec, v: Weight):
    """All (w(v), sign(w)) over the Weyl group; duplicates cancel later."""
    n = g.torus_rank
    idx = list(range(n))
    for perm in permutations(idx):
        # permutation parity by counting inversions
        inv = 0
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    inv += 1
        psign = -1 if inv % 2 else 1
        base = tuple(v[p] for p in perm)
        if g.family == "GL":
            yield base, psign
            continue
        for signs in product((1, -1), repeat=n):
            if g.family == "SOEven" and signs.count(-1) % 2:
                continue
            ssign = -1 if signs.count(-1) % 2 else 1
            yield tuple(s * x for s, x in zip(signs, base)), psign * ssign


def _alternating_sum(g: GroupSpec, v: Weight) -> LaurentPoly:
    out: LaurentPoly = {}
    for e, s in _signed_orbit_terms(g, v):
        c = out.get(e, 0) + s
        if c:
            out[e] = c
        else:
            del out[e]
    return out


def _divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials by peeling lex-leading terms.

    Requires the lex-leading coefficient of den to be 1.  Raises
    ExactnessError if the division leaves a remainder (detected by the
    quotient escaping the exponent box spanned by the inputs).
    """
    if not num:
        return {}
    lead = max(den)
    if den[lead] != 1:
        raise ExactnessError("denominator leading coefficient must be 1")
    n = len(lead)
    # every exact-quotient exponent is a difference of a numerator exponent
    # and a denominator exponent; escaping this box means a remainder
    lo = [min(e[i] for e in num) - max(e[i] for e in den) for i in range(n)]
    hi = [max(e[i] for e in num) - min(e[i] for e in den) for i in range(n)]
    rem = dict(num)
    quo: LaurentPoly = {}
    while rem:
        v = max(rem)
        c = rem[v]
        u = tuple(x - y for x, y in zip(v, lead))
        if any(x < a or x > b for x, a, b in zip(u, lo, hi)):
            raise ExactnessError("division left a remainder")
        quo[u] = quo.get(u, 0) + c
        for e, ce in den.items():
            key = tuple(x + y for x, y in zip(u, e))
            val = rem.get(key, 0) - c * ce
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return quo


_CHAR_CACHE: dict[tuple[str, int, Weight], LaurentPoly] = {}


def irreducible_character(g: GroupSpec, weight) -> LaurentPoly:
    """Exact irreducible character by the alternating-sum quotient.

    Enumerates the full Weyl group twice (numerator and denominator), so
    rank beyond ~6 is impractical; use weight_multiplicities there.  The
    division is exact by construction and raises if it is not.
    """
    w = ensure_dominant(g, weight)
    key = (g.family, g.torus_rank, w)
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    tr = two_rho(g)
    if g.family == "SOOdd":
        # half-integral rho: work with doubled exponents, halve afterwards
        num = _alternating_sum(g, tuple(2 * x + r for x, r in zip(w, tr)))
        den = _alternating_sum(g, tr)
        doubled = _divide_exact(num, den)
        out: LaurentPoly = {}
        for e, c in doubled.items():
            if any(x % 2 for x in e):
                raise ExactnessError("odd exponent after SOOdd division")
            out[tuple(x // 2 for x in e)] = c
    else:
        rho = tuple(r // 2 for r in tr)
        num = _alternating_sum(g, tuple(x + r for x, r in zip(w, rho)))
        den = _alternating_sum(g, rho)
        out = _divide_exact(num, den)
    _CHAR_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# Freudenthal weight multiplicities


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _dominant_candidates(g: GroupSpec, lam: Weight) -> list[Weight]:
    """Dominant vectors that could be weights of the irrep with highest
    weight lam.  Supersets are harmless: non-weights get multiplicity 0."""
    from .partitions import partitions_of

    n = g.torus_rank
    cands: list[Weight] = []
    if g.family == "GL":
        pos_budget = 0
        run = 0
        for x in lam:
            run += x
            pos_budget = max(pos_budget, run)
        total = sum(lam)
        for psize in range(max(total, 0), pos_budget + 1):
            msize = psize - total
            for pp in partitions_of(psize, max_length=n):
                for mm in partitions_of(msize, max_length=n - len(pp)):
                    cands.append(
                        pp + (0,) * (n - len(pp) - len(mm))
                        + tuple(-x for x in reversed(mm))
                    )
        return cands
    total = sum(abs(x) for x in lam)
    step = 1 if g.family == "SOOdd" else 2
    for s in range(total, -1, -step):
        for pp in partitions_of(s, max_length=n):
            padded = pp + (0,) * (n - len(pp))
            cands.append(padded)
            if g.family == "SOEven" and len(pp) == n:
                cands.append(padded[:-1] + (-padded[-1],))
    return cands


_FREUD_CACHE: dict[tuple[str, int, Weight], dict[Weight, int]] = {}


def weight_multiplicities(g: GroupSpec, weight) -> dict[Weight, int]:
    """Dominant weight multiplicities of an irreducible, by Freudenthal's
    recursion.  The full weight system is the union of Weyl orbits of these
    (see full_weight_support)."""
    lam = ensure_dominant(g, weight)
    key = (g.family, g.torus_rank, lam)
    cached = _FREUD_CACHE.get(key)
    if cached is not None:
        return cached
    roots = positive_roots(g)
    tr = two_rho(g)
    lam_norm = _dot(lam, lam) + _dot(lam, tr)
    mults: dict[Weight, int] = {lam: 1}
    cands = [c for c in _dominant_candidates(g, lam) if c != lam]
    cands.sort(key=lambda m: _dot(m, tr), reverse=True)
    height_cap = _dot(lam, tr)
    for mu in cands:
        if _dot(mu, tr) > height_cap:
            continue
        acc = 0
        for alpha in roots:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, alpha))
                rep = dominant_rep(g, v)
                if _dot(rep, tr) > height_cap:
                    break
                m = mults.get(rep, 0)
                if m:
                    acc += m * _dot(v, alpha)
                k += 1
        if acc == 0:
            continue
        denom = lam_norm - _dot(mu, mu) - _dot(mu, tr)
        if denom <= 0 or (2 * acc) % denom:
            raise ExactnessError(
                f"Freudenthal failed at {mu} for {g.family} {lam}")
        mults[mu] = (2 * acc) // denom
    _FREUD_CACHE[key] = mults
    return mults


def _multiset_permutations(values: tuple):
    """Distinct permutations of a value multiset."""
    values = sorted(values, reverse=True)
    n = len(values)
    out: list[int] = []

    def rec(pool: list):
        if not pool:
            yield tuple(out)
            return
        prev = None
        for i, v in enumerate(pool):
            if v == prev:
                continue
            prev = v
            out.append(v)
            yield from rec(pool[:i] + pool[i + 1:])
            out.pop()

    yield from rec(values)


def orbit_vectors(g: GroupSpec, w: Weight):
    """All distinct vectors in the Weyl orbit of a dominant weight."""
    if g.family == "GL":
        yield from _multiset_permutations(w)
        return
    mags = tuple(abs(x) for x in w)
    flip_parity_free = 0 in mags or g.family != "SOEven"
    base_neg = sum(1 for x in w if x < 0)
    for placed in _multiset_permutations(mags):
        nz = [i for i, x in enumerate(placed) if x]
        for signs in product((1, -1), repeat=len(nz)):
            if not flip_parity_free and signs.count(-1) % 2 != base_neg % 2:
                continue
            v = list(placed)
            for i, s in zip(nz, signs):
                v[i] *= s
            yield tuple(v)


_SUPPORT_CACHE: dict[tuple[str, int, Weight], LaurentPoly] = {}


def full_weight_support(g: GroupSpec, weight) -> LaurentPoly:
    """The complete weight system {vector -> multiplicity} of an irrep."""
    lam = ensure_dominant(g, weight)
    key = (g.family, g.torus_rank, lam)
    cached = _SUPPORT_CACHE.get(key)
    if cached is not None:
        return cached
    out: LaurentPoly = {}
    for dom, m in weight_multiplicities(g, lam).items():
        for v in orbit_vectors(g, dom):
            out[v] = m
    _SUPPORT_CACHE[key] = out
    return out


def dim_of_weight(g: GroupSpec, weight) -> int:
    """Dimension by the Weyl product formula (any rank)."""
    w = ensure_dominant(g, weight)
    tr = two_rho(g)
    doubled = tuple(2 * x + r for x, r in zip(w, tr))
    d = Fraction(1)
    for alpha in positive_roots(g):
        d *= Fraction(_dot(doubled, alpha), _dot(tr, alpha))
    if d.denominator != 1:
        raise ExactnessError("Weyl dimension formula gave a non-integer")
    return int(d)


# ---------------------------------------------------------------------------
# restriction along the ten embeddings


def restrict_character(chi: LaurentPoly, pair: str, ranks) -> LaurentPoly:
    """Substitute the subgroup's torus into a character of the big group.

    ``ranks`` is (n,) or (n, m) in the pair's own convention.  The input
    lives on the big group's torus; the output on the subgroup's.
    """
    out: LaurentPoly = {}

    def emit(key: Weight, c: int):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            del out[key]

    if pair in ("gl-diag", "o-diag", "sp-diag"):
        n = ranks[0]
        k = n // 2 if pair == "o-diag" else n
        for e, c in chi.items():
            if len(e) != 2 * k:
                raise ValueError("character does not live on the product torus")
            emit(tuple(x + y for x, y in zip(e[:k], e[k:])), c)
    elif pair in ("gl-sum", "o-sum", "sp-sum"):
        n, m = ranks
        if pair == "gl-sum":
            a, b, big = n, m, n + m
        elif pair == "sp-sum":
            a, b, big = n, m, n + m
        else:
            a, b, big = n // 2, m // 2, (n + m) // 2
        for e, c in chi.items():
            if len(e) != big:
                raise ValueError("character does not live on the big torus")
            # first factor's coordinates, then the second's; a leftover
            # coordinate (odd-odd orthogonal split) is evaluated at 1
            emit(e[:a] + e[a:a + b], c)
    elif pair in ("gl-in-o", "gl-in-sp"):
        out = dict(chi)  # identical torus, re-read as GL_n
    elif pair in ("o-in-gl", "sp-in-gl"):
        n = ranks[0]
        big = n if pair == "o-in-gl" else 2 * n
        k = big // 2
        for e, c in chi.items():
            if len(e) != big:
                raise ValueError("character does not live on the big torus")
            emit(tuple(e[i] - e[big - 1 - i] for i in range(k)), c)
    else:
        raise UnknownPair(pair)
    return out


# ---------------------------------------------------------------------------
# decomposition into irreducible characters


def decompose_character(
    chi: LaurentPoly, g: GroupSpec, verify: bool = True
) -> dict[Weight, int]:
    """Decompose a genuine character into irreducibles.

    Greedy highest-weight subtraction: repeatedly take the lexicographically
    greatest dominant weight in the (dominant sector of the) remainder and
    subtract that many irreducible weight systems.  With ``verify`` the
    input is rebuilt from the result and compared exactly; any mismatch, a
    negative multiplicity, or junk exponents raise NotACharacter.
    """
    if not chi:
        return {}
    n = g.torus_rank
    for e in chi:
        if len(e) != n:
            raise NotACharacter(f"exponent {e} does not match rank {n}")
    rem = {w: c for w, c in chi.items() if is_dominant(g, w)}
    if not rem and chi:
        raise NotACharacter("no dominant weight in support")
    out: dict[Weight, int] = {}
    while rem:
        w = max(rem)
        m = rem.pop(w)
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at {w}")
        out[w] = m
        for u, mu in weight_multiplicities(g, w).items():
            if u == w:
                continue
            v = rem.get(u, 0) - m * mu
            if v:
                rem[u] = v
            else:
                rem.pop(u, None)
    if verify:
        rebuilt: LaurentPoly = {}
        for w, m in out.items():
            poly_add_scaled(rebuilt, full_weight_support(g, w), m)
        if rebuilt != chi:
            raise NotACharacter("input is not a non-negative sum of characters")
    return out
