"""The ten stable branching rules for classical symmetric pairs.

Every rule is a finite sum of products of Littlewood-Richardson
coefficients.  The sums are quantified over "all partitions" but LR support
truncates them: each summation variable is enumerated through the skew
expansion of a fixed outer shape, never by filtering a partition universe.

Pair identifiers (the external interface):

    gl-diag   GL_n ⊂ GL_n × GL_n          (tensor products, rational labels)
    o-diag    O_n ⊂ O_n × O_n
    sp-diag   Sp_2n ⊂ Sp_2n × Sp_2n
    gl-sum    GL_n × GL_m ⊂ GL_{n+m}
    o-sum     O_n × O_m ⊂ O_{n+m}
    sp-sum    Sp_2n × Sp_2m ⊂ Sp_{2(n+m)}
    gl-in-o   GL_n ⊂ O_2n                 (polarization)
    gl-in-sp  GL_n ⊂ Sp_2n                (polarization)
    o-in-gl   O_n ⊂ GL_n                  (invariant bilinear form)
    sp-in-gl  Sp_2n ⊂ GL_2n               (invariant bilinear form)

For the diagonal pairs a query carries the two tensor factors as ``small``
and the target constituent as ``big``; for all other pairs ``big`` is the
representation being restricted.

Diagnostics name rules by a fixed numbering: 2.1.x the diagonal rules,
2.2.x the direct sums, 2.3.x the polarizations, 2.4.x the bilinear-form
rules (x ordered GL, O, Sp), and 1.1/1.2 the two classical restriction
theorems that the bilinear rules generalize.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidLabel, StableRangeViolation, UnknownPair
from .lr import (
    even_column_sum,
    even_row_sum,
    expansion_dot,
    lr_coeff,
    skew_expand,
)
from .partitions import (
    GLLabel,
    Partition,
    first_two_columns,
    meet,
    partitions_of,
    subpartitions,
)

PAIR_IDS = (
    "gl-diag", "o-diag", "sp-diag",
    "gl-sum", "o-sum", "sp-sum",
    "gl-in-o", "gl-in-sp",
    "o-in-gl", "sp-in-gl",
)

# rule ids quoted in stable-range violation reports
RULE_ID = {
    "gl-diag": "2.1.1", "o-diag": "2.1.2", "sp-diag": "2.1.3",
    "gl-sum": "2.2.1", "o-sum": "2.2.2", "sp-sum": "2.2.3",
    "gl-in-o": "2.3.1", "gl-in-sp": "2.3.2",
    "o-in-gl": "2.4.1", "sp-in-gl": "2.4.2",
}

TWO_RANK_PAIRS = ("gl-sum", "o-sum", "sp-sum")


@dataclass(frozen=True)
class RepLabel:
    """A representation label: group family, rank, and highest-weight data.

    rank means n for GL_n and O_n and the rank n for Sp_2n.  ``data`` is a
    GLLabel for the GL family and a plain partition otherwise.
    """

    family: str  # "GL" | "O" | "Sp"
    rank: int
    data: GLLabel | Partition

    def validate(self) -> None:
        if self.rank < 0:
            raise InvalidLabel(f"negative rank {self.rank}")
        if self.family == "GL":
            if not isinstance(self.data, GLLabel):
                raise InvalidLabel("GL label needs a (plus, minus) pair")
            if not self.data.valid_for_rank(self.rank):
                raise InvalidLabel(
                    f"GL label {self.data} needs ℓ(plus)+ℓ(minus) <= {self.rank}"
                )
        elif self.family == "O":
            if first_two_columns(self.data) > self.rank:
                raise InvalidLabel(
                    f"O label {self.data}: first two columns exceed {self.rank}"
                )
        elif self.family == "Sp":
            if len(self.data) > self.rank:
                raise InvalidLabel(
                    f"Sp label {self.data} has more than {self.rank} parts"
                )
        else:
            raise InvalidLabel(f"unknown family {self.family!r}")


@dataclass(frozen=True)
class BranchingQuery:
    """One multiplicity question for a named symmetric pair.

    ``small`` holds two labels for the diagonal pairs (the tensor factors)
    and for the direct-sum pairs (the factor-group labels); one otherwise.
    """

    pair: str
    big: RepLabel
    small: tuple[RepLabel, ...]

    def validate_labels(self) -> None:
        if self.pair not in PAIR_IDS:
            raise UnknownPair(self.pair)
        self.big.validate()
        for s in self.small:
            s.validate()
        expected = 2 if self.pair in TWO_RANK_PAIRS or self.pair.endswith("diag") else 1
        if len(self.small) != expected:
            raise InvalidLabel(
                f"{self.pair} expects {expected} small label(s), got {len(self.small)}"
            )


def query(pair: str, ranks, big, small) -> BranchingQuery:
    """Build a BranchingQuery from raw label data.

    ranks: (n,) or (n, m) per pair.  big/small: partitions or GLLabels in
    the layout the pair expects.
    """
    if pair not in PAIR_IDS:
        raise UnknownPair(pair)
    n = ranks[0]
    m = ranks[1] if len(ranks) > 1 else None
    gl = lambda lab, r: RepLabel("GL", r, lab)
    o = lambda lam, r: RepLabel("O", r, lam)
    sp = lambda lam, r: RepLabel("Sp", r, lam)
    if pair == "gl-diag":
        return BranchingQuery(pair, gl(big, n), (gl(small[0], n), gl(small[1], n)))
    if pair == "o-diag":
        return BranchingQuery(pair, o(big, n), (o(small[0], n), o(small[1], n)))
    if pair == "sp-diag":
        return BranchingQuery(pair, sp(big, n), (sp(small[0], n), sp(small[1], n)))
    if pair == "gl-sum":
        return BranchingQuery(pair, gl(big, n + m), (gl(small[0], n), gl(small[1], m)))
    if pair == "o-sum":
        return BranchingQuery(pair, o(big, n + m), (o(small[0], n), o(small[1], m)))
    if pair == "sp-sum":
        return BranchingQuery(pair, sp(big, n + m), (sp(small[0], n), sp(small[1], m)))
    if pair == "gl-in-o":
        return BranchingQuery(pair, o(big, 2 * n), (gl(small[0], n),))
    if pair == "gl-in-sp":
        return BranchingQuery(pair, sp(big, n), (gl(small[0], n),))
    if pair == "o-in-gl":
        return BranchingQuery(pair, gl(big, n), (o(small[0], n),))
    # sp-in-gl
    return BranchingQuery(pair, gl(big, 2 * n), (sp(small[0], n),))


# ---------------------------------------------------------------------------
# stable-range validation


def stable_range_violations(q: BranchingQuery) -> list[str]:
    """Empty list when the rule's hypotheses hold, else the failed
    inequalities, quoted with their numbers filled in."""
    pair = q.pair
    out: list[str] = []

    def need(cond: bool, text: str):
        if not cond:
            out.append(text)

    if pair == "gl-diag":
        lam, mu, nu = q.big.data, q.small[0].data, q.small[1].data
        n = q.big.rank
        p, qq, r, s = len(mu.plus), len(mu.minus), len(nu.plus), len(nu.minus)
        need(n >= p + qq + r + s,
             f"n >= p+q+r+s fails: {n} < {p}+{qq}+{r}+{s}")
        need(len(lam.plus) <= p + r,
             f"ℓ(λ+) <= p+r fails: {len(lam.plus)} > {p + r}")
        need(len(lam.minus) <= qq + s,
             f"ℓ(λ-) <= q+s fails: {len(lam.minus)} > {qq + s}")
    elif pair == "o-diag":
        lam, mu, nu = q.big.data, q.small[0].data, q.small[1].data
        half = q.big.rank // 2
        need(len(lam) <= half, f"ℓ(λ) <= ⌊n/2⌋ fails: {len(lam)} > {half}")
        need(len(mu) + len(nu) <= half,
             f"ℓ(μ)+ℓ(ν) <= ⌊n/2⌋ fails: {len(mu) + len(nu)} > {half}")
    elif pair == "sp-diag":
        lam, mu, nu = q.big.data, q.small[0].data, q.small[1].data
        n = q.big.rank
        need(len(lam) <= n, f"ℓ(λ) <= n fails: {len(lam)} > {n}")
        need(len(mu) + len(nu) <= n,
             f"ℓ(μ)+ℓ(ν) <= n fails: {len(mu) + len(nu)} > {n}")
    elif pair == "gl-sum":
        lam = q.big.data
        mu, nu = q.small[0].data, q.small[1].data
        n, m = q.small[0].rank, q.small[1].rank
        p = max(len(lam.plus), len(mu.plus), len(nu.plus))
        qq = max(len(lam.minus), len(mu.minus), len(nu.minus))
        need(p + qq <= min(n, m),
             f"p+q <= min(n,m) fails: {p}+{qq} > {min(n, m)}")
    elif pair == "o-sum":
        lam = q.big.data
        mu, nu = q.small[0].data, q.small[1].data
        n, m = q.small[0].rank, q.small[1].rank
        for name, part in (("λ", lam), ("μ", mu), ("ν", nu)):
            need(2 * len(part) <= min(n, m),
                 f"ℓ({name}) <= ½min(n,m) fails: {len(part)} > {min(n, m)}/2")
    elif pair == "sp-sum":
        lam = q.big.data
        mu, nu = q.small[0].data, q.small[1].data
        n, m = q.small[0].rank, q.small[1].rank
        for name, part in (("λ", lam), ("μ", mu), ("ν", nu)):
            need(len(part) <= min(n, m),
                 f"ℓ({name}) <= min(n,m) fails: {len(part)} > {min(n, m)}")
    elif pair in ("gl-in-o", "gl-in-sp"):
        lam = q.big.data
        mu = q.small[0].data
        n = q.small[0].rank
        half = n // 2
        need(len(lam) <= half, f"ℓ(λ) <= ⌊n/2⌋ fails: {len(lam)} > {half}")
        need(len(mu.plus) <= half,
             f"ℓ(μ+) <= ⌊n/2⌋ fails: {len(mu.plus)} > {half}")
        need(len(mu.minus) <= half,
             f"ℓ(μ-) <= ⌊n/2⌋ fails: {len(mu.minus)} > {half}")
    elif pair == "o-in-gl":
        # the dual-pair derivation needs n >= 2(ℓ(λ+)+ℓ(λ-)), which is
        # stronger than bounding each length by ⌊n/2⌋ separately
        lam = q.big.data
        mu = q.small[0].data
        n = q.big.rank
        need(2 * (len(lam.plus) + len(lam.minus)) <= n,
             f"ℓ(λ+)+ℓ(λ-) <= n/2 fails: "
             f"{len(lam.plus) + len(lam.minus)} > {n}/2")
        need(len(mu) <= n // 2, f"ℓ(μ) <= ⌊n/2⌋ fails: {len(mu)} > {n // 2}")
    elif pair == "sp-in-gl":
        # likewise the derivation needs n >= ℓ(λ+)+ℓ(λ-), not just each <= n
        lam = q.big.data
        mu = q.small[0].data
        n = q.small[0].rank
        need(len(lam.plus) + len(lam.minus) <= n,
             f"ℓ(λ+)+ℓ(λ-) <= n fails: "
             f"{len(lam.plus) + len(lam.minus)} > {n}")
        need(len(mu) <= n, f"ℓ(μ) <= n fails: {len(mu)} > {n}")
    else:
        raise UnknownPair(pair)
    return out


def validate_stable_range(q: BranchingQuery) -> BranchingQuery:
    """Return the query when its rule's hypotheses hold, else raise
    StableRangeViolation naming the rule and the failing inequality."""
    q.validate_labels()
    violations = stable_range_violations(q)
    if violations:
        raise StableRangeViolation(RULE_ID[q.pair], violations)
    return q


def decompose_range_violations(pair: str, big, ranks) -> list[str]:
    """The rule's hypotheses that involve only the side being decomposed.

    The small-side inequalities are enforced per candidate by
    branch_decompose's length caps."""
    out: list[str] = []

    def need(cond, text):
        if not cond:
            out.append(text)

    if pair == "gl-diag":
        mu, nu = big
        n = ranks[0]
        total = (len(mu.plus) + len(mu.minus)
                 + len(nu.plus) + len(nu.minus))
        need(n >= total, f"n >= p+q+r+s fails: {n} < {total}")
    elif pair == "o-diag":
        mu, nu = big
        half = ranks[0] // 2
        need(len(mu) + len(nu) <= half,
             f"ℓ(μ)+ℓ(ν) <= ⌊n/2⌋ fails: {len(mu) + len(nu)} > {half}")
    elif pair == "sp-diag":
        mu, nu = big
        n = ranks[0]
        need(len(mu) + len(nu) <= n,
             f"ℓ(μ)+ℓ(ν) <= n fails: {len(mu) + len(nu)} > {n}")
    elif pair == "gl-sum":
        n, m = ranks
        need(len(big.plus) + len(big.minus) <= min(n, m),
             f"ℓ(λ+)+ℓ(λ-) <= min(n,m) fails: "
             f"{len(big.plus) + len(big.minus)} > {min(n, m)}")
    elif pair == "o-sum":
        n, m = ranks
        need(2 * len(big) <= min(n, m),
             f"ℓ(λ) <= ½min(n,m) fails: {len(big)} > {min(n, m)}/2")
    elif pair == "sp-sum":
        n, m = ranks
        need(len(big) <= min(n, m),
             f"ℓ(λ) <= min(n,m) fails: {len(big)} > {min(n, m)}")
    elif pair in ("gl-in-o", "gl-in-sp"):
        half = ranks[0] // 2
        need(len(big) <= half, f"ℓ(λ) <= ⌊n/2⌋ fails: {len(big)} > {half}")
    elif pair == "o-in-gl":
        n = ranks[0]
        need(2 * (len(big.plus) + len(big.minus)) <= n,
             f"ℓ(λ+)+ℓ(λ-) <= n/2 fails: "
             f"{len(big.plus) + len(big.minus)} > {n}/2")
    elif pair == "sp-in-gl":
        n = ranks[0]
        need(len(big.plus) + len(big.minus) <= n,
             f"ℓ(λ+)+ℓ(λ-) <= n fails: "
             f"{len(big.plus) + len(big.minus)} > {n}")
    else:
        raise UnknownPair(pair)
    return out


# ---------------------------------------------------------------------------
# the formulas (label-level helpers; unconstrained sums via LR support)


def diagonal_gl_sum(
    lam: GLLabel, mu: GLLabel, nu: GLLabel,
    caps: tuple[int, int, int, int] | None = None,
) -> int:
    """Six-fold LR sum for rational tensor product multiplicities.

    ``caps = (p, q, r, s)`` optionally bounds the lengths of the internal
    summation variables the way the derivation's parameters do; with caps
    at least the minimal values the sum is unchanged (the padding probe in
    the verification suite exercises exactly this).
    """
    if lam.degree() != mu.degree() + nu.degree():
        return 0
    if caps is not None:
        p, q, r, s = caps
        g1cap, g2cap = min(p, s), min(q, r)

    def ok(part: Partition, cap: int) -> bool:
        return len(part) <= cap

    total = 0
    for a1 in subpartitions(meet(lam.plus, mu.plus)):
        if caps is not None and not ok(a1, p):
            continue
        for g1, c2 in skew_expand(mu.plus, a1).items():
            if caps is not None and not ok(g1, g1cap):
                continue
            for b2, c3 in skew_expand(nu.minus, g1).items():
                if caps is not None and not ok(b2, s):
                    continue
                for b1, c4 in skew_expand(lam.minus, b2).items():
                    if caps is not None and not ok(b1, q):
                        continue
                    for g2, c5 in skew_expand(mu.minus, b1).items():
                        if caps is not None and not ok(g2, g2cap):
                            continue
                        for a2, c6 in skew_expand(nu.plus, g2).items():
                            if caps is not None and not ok(a2, r):
                                continue
                            c1 = lr_coeff(lam.plus, a2, a1)
                            if c1:
                                total += c1 * c2 * c3 * c4 * c5 * c6
    return total


def diagonal_onsp_sum(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Σ_{α,β,γ} c^λ_{αβ} c^μ_{αγ} c^ν_{βγ} (orthogonal and symplectic
    tensor products share this shape)."""
    asize2 = sum(lam) + sum(mu) - sum(nu)
    if asize2 < 0 or asize2 % 2:
        return 0
    asize = asize2 // 2
    total = 0
    for alpha in subpartitions(meet(lam, mu), asize):
        sk_lam = skew_expand(lam, alpha)  # β -> c^λ_{αβ}
        sk_mu = skew_expand(mu, alpha)    # γ -> c^μ_{αγ}
        if not sk_mu:
            continue
        for beta, c_lam in sk_lam.items():
            total += c_lam * expansion_dot(sk_mu, skew_expand(nu, beta))
    return total


def direct_sum_gl_sum(lam: GLLabel, mu: GLLabel, nu: GLLabel) -> int:
    """Σ c^{γ+}_{μ+ν+} c^{γ-}_{μ-ν-} c^{λ+}_{γ+δ} c^{λ-}_{γ-δ}."""
    splus = sum(mu.plus) + sum(nu.plus)
    sminus = sum(mu.minus) + sum(nu.minus)
    d = sum(lam.plus) - splus
    if d < 0 or sum(lam.minus) - sminus != d:
        return 0
    minus_terms = []
    for gm in subpartitions(lam.minus, sminus):
        c2 = lr_coeff(gm, mu.minus, nu.minus)
        if c2:
            minus_terms.append((c2, skew_expand(lam.minus, gm)))
    if not minus_terms:
        return 0
    total = 0
    for gp in subpartitions(lam.plus, splus):
        c1 = lr_coeff(gp, mu.plus, nu.plus)
        if not c1:
            continue
        sk_p = skew_expand(lam.plus, gp)
        for c2, sk_m in minus_terms:
            total += c1 * c2 * expansion_dot(sk_p, sk_m)
    return total


def direct_sum_onsp_sum(
    lam: Partition, mu: Partition, nu: Partition, even_mode: str
) -> int:
    """Σ_{γ,δ} c^γ_{μν} c^λ_{γ 2δ} with 2δ running over even rows for the
    orthogonal case and even columns ((2δ)') for the symplectic case."""
    s = sum(mu) + sum(nu)
    rem = sum(lam) - s
    if rem < 0 or rem % 2:
        return 0
    even_sum = even_row_sum if even_mode == "rows" else even_column_sum
    total = 0
    for gamma in subpartitions(lam, s):
        c1 = lr_coeff(gamma, mu, nu)
        if c1:
            total += c1 * even_sum(skew_expand(lam, gamma))
    return total


def polarization_sum(lam: Partition, mu: GLLabel, even_mode: str) -> int:
    """Σ_{γ,δ} c^γ_{μ+μ-} c^λ_{γ ...}: even columns pair with the
    orthogonal group, even rows with the symplectic group."""
    s = mu.total_size()
    rem = sum(lam) - s
    if rem < 0 or rem % 2:
        return 0
    even_sum = even_column_sum if even_mode == "columns" else even_row_sum
    total = 0
    for gamma in subpartitions(lam, s):
        c1 = lr_coeff(gamma, mu.plus, mu.minus)
        if c1:
            total += c1 * even_sum(skew_expand(lam, gamma))
    return total


def bilinear_sum(lam: GLLabel, mu: Partition, even_mode: str) -> int:
    """Σ_{α,β,γ,δ} c^μ_{αβ} c^{λ+}_{α 2γ} c^{λ-}_{β 2δ} (even rows) or the
    even-column variant for the symplectic subgroup."""
    even_sum = even_row_sum if even_mode == "rows" else even_column_sum

    def even_complements(outer: Partition) -> dict[Partition, int]:
        out = {}
        for alpha in subpartitions(outer):
            if (sum(outer) - sum(alpha)) % 2:
                continue
            w = even_sum(skew_expand(outer, alpha))
            if w:
                out[alpha] = w
        return out

    aa = even_complements(lam.plus)
    if not aa:
        return 0
    bb = even_complements(lam.minus)
    if not bb:
        return 0
    total = 0
    for alpha, wa in aa.items():
        sk_mu = skew_expand(mu, alpha)  # β -> c^μ_{αβ}
        if not sk_mu:
            continue
        total += wa * sum(c * bb.get(beta, 0) for beta, c in sk_mu.items())
    return total


def littlewood_restriction(
    lam: Partition, mu: Partition, family: str, rank: int
) -> int:
    """Restriction multiplicity from GL to the orthogonal or symplectic
    subgroup: Σ_{2δ} c^λ_{μ 2δ} (O) or Σ c^λ_{μ (2δ)'} (Sp)."""
    if family == "O":
        violations = []
        if 2 * len(lam) > rank:
            violations.append(f"ℓ(λ) <= n/2 fails: {len(lam)} > {rank}/2")
        if first_two_columns(mu) > rank:
            violations.append(
                f"(μ')₁+(μ')₂ <= n fails: {first_two_columns(mu)} > {rank}"
            )
        if violations:
            raise StableRangeViolation("1.1", violations)
        return even_row_sum(skew_expand(lam, mu))
    if family == "Sp":
        violations = []
        if len(lam) > rank:
            violations.append(f"ℓ(λ) <= n fails: {len(lam)} > {rank}")
        if len(mu) > rank:
            violations.append(f"ℓ(μ) <= n fails: {len(mu)} > {rank}")
        if violations:
            raise StableRangeViolation("1.2", violations)
        return even_column_sum(skew_expand(lam, mu))
    raise InvalidLabel(f"family must be 'O' or 'Sp', got {family!r}")


# ---------------------------------------------------------------------------
# query-level operations


def _formula_value(q: BranchingQuery) -> int:
    pair = q.pair
    if pair == "gl-diag":
        return diagonal_gl_sum(q.big.data, q.small[0].data, q.small[1].data)
    if pair in ("o-diag", "sp-diag"):
        return diagonal_onsp_sum(q.big.data, q.small[0].data, q.small[1].data)
    if pair == "gl-sum":
        return direct_sum_gl_sum(q.big.data, q.small[0].data, q.small[1].data)
    if pair == "o-sum":
        return direct_sum_onsp_sum(
            q.big.data, q.small[0].data, q.small[1].data, "rows")
    if pair == "sp-sum":
        return direct_sum_onsp_sum(
            q.big.data, q.small[0].data, q.small[1].data, "columns")
    if pair == "gl-in-o":
        return polarization_sum(q.big.data, q.small[0].data, "columns")
    if pair == "gl-in-sp":
        return polarization_sum(q.big.data, q.small[0].data, "rows")
    if pair == "o-in-gl":
        return bilinear_sum(q.big.data, q.small[0].data, "rows")
    if pair == "sp-in-gl":
        return bilinear_sum(q.big.data, q.small[0].data, "columns")
    raise UnknownPair(pair)


def diagonal_multiplicity(q: BranchingQuery) -> int:
    """Multiplicity of q.big in q.small[0] ⊗ q.small[1] (diagonal pairs)."""
    if not q.pair.endswith("diag"):
        raise UnknownPair(f"{q.pair} is not a diagonal pair")
    validate_stable_range(q)
    return _formula_value(q)


def direct_sum_multiplicity(q: BranchingQuery) -> int:
    if not q.pair.endswith("sum"):
        raise UnknownPair(f"{q.pair} is not a direct-sum pair")
    validate_stable_range(q)
    return _formula_value(q)


def polarization_multiplicity(q: BranchingQuery) -> int:
    if q.pair not in ("gl-in-o", "gl-in-sp"):
        raise UnknownPair(f"{q.pair} is not a polarization pair")
    validate_stable_range(q)
    return _formula_value(q)


def bilinear_multiplicity(q: BranchingQuery) -> int:
    if q.pair not in ("o-in-gl", "sp-in-gl"):
        raise UnknownPair(f"{q.pair} is not a bilinear-form pair")
    validate_stable_range(q)
    return _formula_value(q)


def branching_multiplicity(q: BranchingQuery, unsafe: bool = False) -> int:
    """Dispatch on the pair id.  With ``unsafe`` the formula is evaluated
    even when the stable-range hypotheses fail (labels are still checked)."""
    q.validate_labels()
    if not unsafe:
        validate_stable_range(q)
    return _formula_value(q)


# ---------------------------------------------------------------------------
# full decompositions


def branch_decompose(pair: str, big, ranks=None, bound: int | None = None) -> dict:
    """All small labels with nonzero multiplicity under the named rule.

    ``big`` is the big-side data: a GLLabel or partition, or a pair of them
    for the diagonal rules (the two tensor factors).  ``ranks`` is (n,) or
    (n, m) as the pair expects; candidates are capped at the rule's
    stable-range lengths for those ranks, so every key of the result is a
    valid query.  The direct-sum rules have no rank-dependent caps and
    accept ranks=None.  ``bound`` optionally caps candidate label sizes.

    The big side must itself satisfy the rule's hypotheses at ``ranks``
    (use validate_stable_range on a query first if unsure).
    """
    if pair not in PAIR_IDS:
        raise UnknownPair(pair)
    out: dict = {}

    def keep(key, value):
        if value:
            out[key] = value

    def sizes(total: int) -> range:
        hi = total if bound is None else min(total, bound)
        return range(hi, -1, -1)

    if pair == "gl-diag":
        mu, nu = big
        n = ranks[0]
        splus = sum(mu.plus) + sum(nu.plus)
        sminus = sum(mu.minus) + sum(nu.minus)
        lp_cap = min(len(mu.plus) + len(nu.plus), n)
        lm_cap = min(len(mu.minus) + len(nu.minus), n)
        for k in range(0, min(splus, sminus) + 1):
            if bound is not None and (splus - k) + (sminus - k) > bound:
                continue
            for lp in partitions_of(splus - k, max_length=lp_cap):
                for lm in partitions_of(sminus - k, max_length=lm_cap):
                    if len(lp) + len(lm) > n:
                        continue
                    lam = GLLabel(lp, lm)
                    keep(lam, diagonal_gl_sum(lam, mu, nu))
    elif pair in ("o-diag", "sp-diag"):
        mu, nu = big
        n = ranks[0]
        total = sum(mu) + sum(nu)
        len_cap = len(mu) + len(nu)
        len_cap = min(len_cap, n // 2 if pair == "o-diag" else n)
        for s in sizes(total):
            if (total - s) % 2:
                continue
            for lam in partitions_of(s, max_length=len_cap):
                keep(lam, diagonal_onsp_sum(lam, mu, nu))
    elif pair == "gl-sum":
        lam = big
        for mu_p in subpartitions(lam.plus):
            for nu_p in subpartitions(lam.plus):
                d = sum(lam.plus) - sum(mu_p) - sum(nu_p)
                if d < 0:
                    continue
                sminus = sum(lam.minus) - d
                if sminus < 0:
                    continue
                for mu_m in subpartitions(lam.minus):
                    rest = sminus - sum(mu_m)
                    if rest < 0:
                        continue
                    for nu_m in subpartitions(lam.minus, rest):
                        mu = GLLabel(mu_p, mu_m)
                        nu = GLLabel(nu_p, nu_m)
                        if bound is not None and (
                            mu.total_size() > bound or nu.total_size() > bound
                        ):
                            continue
                        keep((mu, nu), direct_sum_gl_sum(lam, mu, nu))
    elif pair in ("o-sum", "sp-sum"):
        lam = big
        mode = "rows" if pair == "o-sum" else "columns"
        for mu in subpartitions(lam):
            if bound is not None and sum(mu) > bound:
                continue
            for nu in subpartitions(lam):
                if sum(mu) + sum(nu) > sum(lam):
                    continue
                if (sum(lam) - sum(mu) - sum(nu)) % 2:
                    continue
                if bound is not None and sum(nu) > bound:
                    continue
                keep((mu, nu), direct_sum_onsp_sum(lam, mu, nu, mode))
    elif pair in ("gl-in-o", "gl-in-sp"):
        lam = big
        n = ranks[0]
        mode = "columns" if pair == "gl-in-o" else "rows"
        len_cap = n // 2
        for mu_p in subpartitions(lam):
            if len(mu_p) > len_cap:
                continue
            for mu_m in subpartitions(lam):
                if len(mu_m) > len_cap:
                    continue
                s = sum(mu_p) + sum(mu_m)
                if s > sum(lam) or (sum(lam) - s) % 2:
                    continue
                if bound is not None and s > bound:
                    continue
                mu = GLLabel(mu_p, mu_m)
                keep(mu, polarization_sum(lam, mu, mode))
    else:  # o-in-gl, sp-in-gl
        lam = big
        n = ranks[0]
        mode = "rows" if pair == "o-in-gl" else "columns"
        len_cap = min(len(lam.plus) + len(lam.minus),
                      n // 2 if pair == "o-in-gl" else n)
        total = lam.total_size()
        width = (lam.plus[0] if lam.plus else 0) + (lam.minus[0] if lam.minus else 0)
        for s in sizes(total):
            if (total - s) % 2:
                continue
            for mu in partitions_of(s, max_part=width or None, max_length=len_cap):
                keep(mu, bilinear_sum(lam, mu, mode))
    return out
