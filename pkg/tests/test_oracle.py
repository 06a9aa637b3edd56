import pytest

from branchkit import query
from branchkit.branching import RepLabel
from branchkit.characters import (
    GL,
    SO,
    Sp,
    decompose_character,
    full_weight_support,
    poly_mul,
)
from branchkit.errors import OutOfSafeRegime, StableRangeViolation
from branchkit.oracle import (
    decompose_tensor,
    dim_irrep,
    duality_dim_check,
    gl_weight,
    oracle_decomposition,
    oracle_multiplicity,
    so_weight,
    sp_weight,
    weight_to_gl_label,
)
from branchkit.partitions import GLLabel, partitions_up_to

E = ()


def L(plus, minus=()):
    return GLLabel(tuple(plus), tuple(minus))


class TestTranslation:
    def test_gl_weight_roundtrip(self):
        lab = L((2, 1), (1,))
        w = gl_weight(lab, 5)
        assert w == (2, 1, 0, 0, -1)
        assert weight_to_gl_label(w) == lab

    def test_so_weight_safety(self):
        assert so_weight((2, 1), 8) == (2, 1, 0, 0)
        with pytest.raises(OutOfSafeRegime):
            so_weight((1, 1), 4)
        with pytest.raises(OutOfSafeRegime):
            so_weight((1, 1, 1), 6)

    def test_sp_weight(self):
        assert sp_weight((2,), 3) == (2, 0, 0)
        with pytest.raises(OutOfSafeRegime):
            sp_weight((1, 1), 1)


class TestDims:
    def test_examples(self):
        assert dim_irrep(RepLabel("GL", 3, L((1,)))) == 3
        assert dim_irrep(RepLabel("Sp", 2, (1, 1))) == 5
        assert dim_irrep(RepLabel("O", 7, (1,))) == 7
        assert dim_irrep(RepLabel("O", 10, (1, 1))) == 45
        assert dim_irrep(RepLabel("GL", 4, L((1, 1), (1,)))) == 20

    def test_safe_regime_refusal(self):
        with pytest.raises(OutOfSafeRegime):
            dim_irrep(RepLabel("O", 4, (1, 1)))
        with pytest.raises(OutOfSafeRegime):
            dim_irrep(RepLabel("O", 6, (1, 1, 1)))


class TestOracleExamples:
    def test_spec_cases(self):
        assert oracle_multiplicity(query("o-diag", (8,), E, [(1,), (1,)])) == 1
        assert oracle_multiplicity(query("gl-in-sp", (6,), (1, 1), [L(E)])) == 0
        assert oracle_multiplicity(
            query("gl-sum", (2, 2), L((1,)), [L((1,)), L(E)])) == 1

    def test_safe_regime_refusal(self):
        with pytest.raises(OutOfSafeRegime):
            oracle_multiplicity(query("o-diag", (4,), (1, 1), [(1,), (1,)]))

    def test_fast_tensor_path_equals_slow_pipeline(self):
        # explicit poly product + greedy decomposition, against the
        # dominant-sector convolution
        cases = [
            (GL(3), (2, 1, 0), (1, 1, 0)),
            (GL(3), (2, 0, -1), (1, 0, -1)),
            (Sp(2), (2, 1), (1, 1)),
            (Sp(3), (1, 1, 0), (1, 1, 1)),
            (SO(5), (2, 1), (1, 1)),
            (SO(7), (1, 1, 1), (2, 0, 0)),
            (SO(8), (1, 1, 1, 1), (1, 0, 0, 0)),
            (SO(8), (1, 1, 1, -1), (1, 1, 0, 0)),
        ]
        for g, w1, w2 in cases:
            slow = decompose_character(
                poly_mul(full_weight_support(g, w1), full_weight_support(g, w2)),
                g)
            fast = decompose_tensor(g, w1, w2)
            assert slow == fast, (g, w1, w2)

    def test_polarization_oracle_example(self):
        # E^(1)_(O12) restricted to GL6 is the standard plus its dual
        dec = oracle_decomposition("gl-in-o", (6,), (1,))
        assert dec == {L((1,)): 1, L(E, (1,)): 1}

    def test_sum_oracle_splits_standard(self):
        dec = oracle_decomposition("o-sum", (6, 6), (1,))
        assert dec == {((1,), E): 1, (E, (1,)): 1}
        dec = oracle_decomposition("sp-sum", (3, 3), (1,))
        assert dec == {((1,), E): 1, (E, (1,)): 1}

    def test_sum_oracle_odd_ranks(self):
        # odd-odd orthogonal split exercises the leftover torus coordinate
        dec = oracle_decomposition("o-sum", (7, 5), (1,))
        assert dec == {((1,), E): 1, (E, (1,)): 1}
        dec = oracle_decomposition("o-sum", (7, 5), (1, 1))
        assert dec == {((1, 1), E): 1, ((1,), (1,)): 1, (E, (1, 1)): 1}


class TestDuality:
    def test_spec_examples(self):
        assert duality_dim_check("cauchy_gl", 2, n=2, p=2)
        assert duality_dim_check("sym_square", 3, k=1)
        assert duality_dim_check("o_duality", 2, n=5, k=2)

    def test_preconditions(self):
        with pytest.raises(StableRangeViolation):
            duality_dim_check("o_duality", 2, n=4, k=2)
        with pytest.raises(StableRangeViolation):
            duality_dim_check("sp_duality", 2, n=1, k=2)
        with pytest.raises(ValueError):
            duality_dim_check("nope", 2, n=1, k=1)


def test_oracle_decomposition_memoized_symmetric():
    a = oracle_decomposition("o-diag", (12,), ((2, 1), (1,)))
    b = oracle_decomposition("o-diag", (12,), ((1,), (2, 1)))
    assert a is b  # tensor factors commute and share one cache entry


def test_odd_orthogonal_ranks_agree_with_formulas():
    from branchkit.branching import branch_decompose

    for mu, nu, n in [((2,), (1,), 13), ((1, 1), (2, 1), 13),
                      ((2, 2), (1, 1, 1), 15)]:
        assert branch_decompose("o-diag", (mu, nu), (n,)) == \
            oracle_decomposition("o-diag", (n,), (mu, nu))
    for lam, n in [(L((2,), (1,)), 13), (L((2, 1), (1, 1)), 15)]:
        assert branch_decompose("o-in-gl", lam, (n,)) == \
            oracle_decomposition("o-in-gl", (n,), lam)
    for lam, n, m in [((2, 1), 9, 7), ((3,), 9, 9)]:
        assert branch_decompose("o-sum", lam, None) == \
            oracle_decomposition("o-sum", (n, m), lam)


def test_o_diag_self_associate_folding():
    # Λ³ ⊗ Λ³ over O_12 contains the self-associate label (1^6), which the
    # SO-side decomposition sees as a +/- pair of rank-6 weights; the
    # translation folds the pair into one O label
    dec = oracle_decomposition("o-diag", (12,), ((1, 1, 1), (1, 1, 1)))
    assert dec[(1, 1, 1, 1, 1, 1)] == 1
    from branchkit.branching import branch_decompose

    assert branch_decompose("o-diag", ((1, 1, 1), (1, 1, 1)), (12,)) == dec
