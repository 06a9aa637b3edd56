import pytest

from branchkit.characters import (
    GL,
    SO,
    Sp,
    GroupSpec,
    decompose_character,
    dim_of_weight,
    dominant_rep,
    full_weight_support,
    irreducible_character,
    is_dominant,
    orbit_vectors,
    poly_eval_ones,
    poly_mul,
    positive_roots,
    restrict_character,
    two_rho,
    weight_multiplicities,
    weyl_order,
)
from branchkit.errors import NotACharacter, NotDominant, UnknownPair
from branchkit.partitions import partitions_up_to

from bruteforce import naive_schur_poly

ALL_SMALL_GROUPS = [
    GroupSpec(fam, r)
    for fam in ("GL", "Sp", "SOOdd", "SOEven")
    for r in (1, 2, 3)
]


def dominant_weights(g, max_size):
    """Small dominant test weights, including the sign and mixed-negative
    variants each family allows."""
    out = []
    for lam in partitions_up_to(max_size, max_length=g.torus_rank):
        w = tuple(lam) + (0,) * (g.torus_rank - len(lam))
        out.append(w)
        if g.family == "SOEven" and len(lam) == g.torus_rank and lam[-1]:
            out.append(w[:-1] + (-w[-1],))
    if g.family == "GL":
        extra = []
        for w in out:
            shifted = tuple(x - 1 for x in w)
            extra.append(shifted)
        out.extend(extra)
    return sorted(set(out))


def test_root_system_sanity():
    assert positive_roots(GL(3)) == [(1, -1, 0), (1, 0, -1), (0, 1, -1)]
    assert len(positive_roots(Sp(3))) == 9
    assert len(positive_roots(SO(7))) == 9
    assert len(positive_roots(SO(8))) == 12
    assert two_rho(GL(3)) == (2, 0, -2)
    assert two_rho(Sp(2)) == (4, 2)
    assert two_rho(SO(5)) == (3, 1)
    assert two_rho(SO(6)) == (4, 2, 0)
    assert weyl_order(GL(4)) == 24
    assert weyl_order(Sp(3)) == 48
    assert weyl_order(SO(8)) == 192


def test_dominance_and_reps():
    g = GroupSpec("SOEven", 3)
    assert is_dominant(g, (2, 1, -1))
    assert not is_dominant(g, (2, -1, 1))
    assert dominant_rep(g, (-1, 2, 1)) == (2, 1, -1)
    assert dominant_rep(g, (-1, 2, -1)) == (2, 1, 1)
    assert dominant_rep(Sp(3), (-1, 2, -1)) == (2, 1, 1)
    assert dominant_rep(GL(3), (0, 2, -1)) == (2, 0, -1)


def test_character_examples():
    assert irreducible_character(GL(2), (1, 0)) == {(1, 0): 1, (0, 1): 1}
    assert irreducible_character(Sp(2), (1, 0)) == {
        (1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    chi = irreducible_character(Sp(2), (1, 1))
    assert len(chi) == 5 and poly_eval_ones(chi) == 5
    # SO(3) vector representation
    assert irreducible_character(SO(3), (1,)) == {(1,): 1, (0,): 1, (-1,): 1}
    # SO(2) is a torus: characters are single monomials
    assert irreducible_character(SO(2), (3,)) == {(3,): 1}


def test_not_dominant_raises():
    with pytest.raises(NotDominant):
        irreducible_character(GL(2), (0, 1))
    with pytest.raises(NotDominant):
        irreducible_character(Sp(2), (1, -1))


def test_character_engines_agree():
    for g in ALL_SMALL_GROUPS:
        for w in dominant_weights(g, 4):
            assert irreducible_character(g, w) == full_weight_support(g, w), (g, w)


def test_gl_characters_are_schur_polynomials():
    for n in (1, 2, 3, 4):
        for lam in partitions_up_to(5, max_length=n):
            w = tuple(lam) + (0,) * (n - len(lam))
            assert irreducible_character(GL(n), w) == naive_schur_poly(lam, n)


def test_weyl_symmetry_generators():
    for g in ALL_SMALL_GROUPS:
        n = g.torus_rank
        for w in dominant_weights(g, 4):
            chi = irreducible_character(g, w)
            for i in range(n - 1):
                swapped = {
                    e[:i] + (e[i + 1], e[i]) + e[i + 2:]: c
                    for e, c in chi.items()
                }
                assert swapped == chi, (g, w, "swap", i)
            if g.family in ("Sp", "SOOdd"):
                flipped = {e[:-1] + (-e[-1],): c for e, c in chi.items()}
                assert flipped == chi, (g, w, "flip")
            if g.family == "SOEven" and n >= 2:
                flipped = {
                    e[:-2] + (-e[-2], -e[-1]): c for e, c in chi.items()
                }
                assert flipped == chi, (g, w, "double flip")


def test_variable_inversion_sends_characters_to_duals():
    from branchkit.characters import poly_invert_variables

    for g in ALL_SMALL_GROUPS:
        for w in dominant_weights(g, 4):
            chi = irreducible_character(g, w)
            inv = poly_invert_variables(chi)
            if g.family in ("Sp", "SOOdd"):
                assert inv == chi, (g, w)  # self-dual throughout
            elif g.family == "SOEven":
                # dual weight negates the last coordinate when the rank is
                # odd (an odd number of sign flips is outside the group)
                dual = w if g.torus_rank % 2 == 0 else w[:-1] + (-w[-1],)
                assert inv == irreducible_character(g, dual), (g, w)
            else:
                dual = tuple(-x for x in reversed(w))
                assert inv == irreducible_character(g, dual), (g, w)


def test_dimensions_match_character_values():
    for g in ALL_SMALL_GROUPS:
        for w in dominant_weights(g, 5):
            chi = irreducible_character(g, w)
            assert poly_eval_ones(chi) == dim_of_weight(g, w), (g, w)


def test_weight_multiplicities_known_values():
    # adjoint of GL(3): zero weight has multiplicity 2
    mults = weight_multiplicities(GL(3), (1, 0, -1))
    assert mults[(0, 0, 0)] == 2
    assert mults[(1, 0, -1)] == 1
    # Sp(4) fundamental (1,1): zero weight multiplicity 1
    assert weight_multiplicities(Sp(2), (1, 1))[(0, 0)] == 1
    # SO(5) adjoint (1,1): dimension 10, zero weight multiplicity 2
    m = weight_multiplicities(SO(5), (1, 1))
    assert m[(0, 0)] == 2 and dim_of_weight(SO(5), (1, 1)) == 10


def test_orbit_vectors_signed_counts():
    assert sorted(orbit_vectors(GL(3), (2, 1, 0))) == sorted(
        {(2, 1, 0), (2, 0, 1), (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2)})
    assert len(list(orbit_vectors(Sp(2), (1, 1)))) == 4
    # D3 orbit of (1,1,1): even sign flips only, 4 vectors
    assert len(list(orbit_vectors(GroupSpec("SOEven", 3), (1, 1, 1)))) == 4
    # a zero coordinate absorbs sign parity
    assert len(list(orbit_vectors(GroupSpec("SOEven", 3), (1, 1, 0)))) == 12


def test_decompose_character_roundtrip():
    import random

    rng = random.Random(7)
    for g in ALL_SMALL_GROUPS:
        weights = dominant_weights(g, 3)
        for _ in range(5):
            combo = {}
            chosen = rng.sample(weights, min(3, len(weights)))
            for w in chosen:
                combo[w] = rng.randint(1, 3)
            chi = {}
            for w, m in combo.items():
                for e, c in full_weight_support(g, w).items():
                    chi[e] = chi.get(e, 0) + m * c
            dec = decompose_character(chi, g)
            assert dec == combo, (g, combo)


def test_decompose_point_mass():
    for g in ALL_SMALL_GROUPS:
        for w in dominant_weights(g, 3):
            chi = irreducible_character(g, w)
            assert decompose_character(chi, g) == {w: 1}
    assert decompose_character({}, GL(2)) == {}


def test_decompose_rejects_junk():
    g = GL(2)
    with pytest.raises(NotACharacter):
        decompose_character({(1, 0): 1}, g)  # missing the (0,1) orbit term
    with pytest.raises(NotACharacter):
        decompose_character({(0, 0): -1}, g)
    with pytest.raises(NotACharacter):
        decompose_character({(0, 1): 1}, g)  # no dominant weight in support


def test_restrict_character_examples():
    # diagonal GL(2): s1(x)s1(y) at y=x
    chi = poly_mul({(1, 0, 0, 0): 1, (0, 1, 0, 0): 1},
                   {(0, 0, 1, 0): 1, (0, 0, 0, 1): 1})
    assert restrict_character(chi, "gl-diag", (2,)) == {
        (2, 0): 1, (1, 1): 2, (0, 2): 1}
    # bilinear O2 in GL2
    assert restrict_character({(1, 0): 1, (0, 1): 1}, "o-in-gl", (2,)) == {
        (1,): 1, (-1,): 1}
    # polarization: identity re-read
    chi_sp = irreducible_character(Sp(2), (1, 0))
    assert restrict_character(dict(chi_sp), "gl-in-sp", (2,)) == chi_sp
    # odd orthogonal bilinear folding has a middle variable at 1
    chi_gl3 = irreducible_character(GL(3), (1, 0, 0))
    assert restrict_character(dict(chi_gl3), "o-in-gl", (3,)) == {
        (1,): 1, (0,): 1, (-1,): 1}
    with pytest.raises(UnknownPair):
        restrict_character({}, "nope", (2,))


def test_restriction_decomposes_consistently():
    # C^4 ⊗ C^4 as a diagonal GL(4) module: full slow pipeline
    g = GL(4)
    std = irreducible_character(g, (1, 0, 0, 0))
    big = {}
    for e1, c1 in std.items():
        for e2, c2 in std.items():
            key = e1 + e2
            big[key] = big.get(key, 0) + c1 * c2
    restricted = restrict_character(big, "gl-diag", (4,))
    dec = decompose_character(restricted, g)
    assert dec == {(2, 0, 0, 0): 1, (1, 1, 0, 0): 1}
