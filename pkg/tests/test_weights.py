from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satake_lab import freudenthal, is_p_small, restrict_mod_p, torus_basis, weight_string_max, weyl_dim
from satake_lab.errors import BasisShapeMismatch, DimensionCap, NotDominant, NotDominantForJ, ShapeMismatch
from satake_lab.root_datum import Preset
from satake_lab.weights import ModPCharacter, as_underline
from satake_lab.weyl import enumerate_weyl, minimal_coset_reps, weyl_group

from conftest import datum, gl


def _mul(a, b):
    out = Counter()
    for x, cx in a.items():
        for y, cy in b.items():
            out[tuple(i + j for i, j in zip(x, y))] += cx * cy
    return {k: v for k, v in out.items() if v}


def _alternant(d, shifted):
    out = Counter()
    for w in enumerate_weyl(d):
        out[tuple(w.act(shifted))] += (-1) ** w.length
    return {k: v for k, v in out.items() if v}


def weyl_character_holds(d, lam):
    """Character times the Weyl denominator equals the alternant, in doubled weights."""
    table = freudenthal(d, lam)
    ch = {tuple(2 * x for x in mu): m for mu, m in table.entries.items()}
    denom = _alternant(d, d.two_rho)
    top = _alternant(d, tuple(2 * x + y for x, y in zip(lam, d.two_rho)))
    return _mul(ch, denom) == top


DOMINANT = {
    "A2": [(0, 0), (1, 0), (1, 1), (2, 1), (3, 0)],
    "B2": [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)],
    "G2": [(0, 0), (1, 0), (0, 1), (1, 1)],
}


@pytest.mark.parametrize("name,lam", [(n, l) for n, ls in DOMINANT.items() for l in ls])
def test_freudenthal_matches_weyl_character_formula(name, lam):
    d = datum(name[0], int(name[1]))
    assert weyl_character_holds(d, lam)


def test_freudenthal_gl3_adjoint():
    d = gl(3)
    t = freudenthal(d, (1, 0, -1))
    assert t.dimension == 8
    assert t[(0, 0, 0)] == 2
    assert weight_string_max(d, (1, 0, -1)) == 3


def test_g2_dimensions():
    d = datum("G", 2)
    dims = [weyl_dim(d, {0, 1}, [lam]) for lam in [(1, 0), (0, 1), (2, 0), (1, 1)]]
    assert dims == [7, 14, 27, 64]
    assert freudenthal(d, (1, 1)).dimension == 64


def test_multiplicities_are_weyl_invariant():
    d = datum("B", 2)
    t = freudenthal(d, (2, 1))
    for w in enumerate_weyl(d):
        for mu, m in t.entries.items():
            assert t[w.act(mu)] == m


def test_levi_freudenthal_dimension():
    d = gl(3)
    # L_J(mu) for J = {alpha_1} is a GL2 x GL1 module of dimension mu_1 - mu_2 + 1
    t = freudenthal(d, (3, 0, 5), J={0})
    assert t.dimension == weyl_dim(d, {0}, [(3, 0, 5)]) == 4


def test_weyl_dim_errors():
    d = gl(3)
    with pytest.raises(NotDominantForJ):
        weyl_dim(d, {0}, [(0, 1, 0)])
    with pytest.raises(NotDominant):
        is_p_small(d, [(0, 1, 0)], 5)


def test_dimension_cap():
    with pytest.raises(DimensionCap):
        freudenthal(datum("A", 2), (10, 10), cap=50)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6), st.sampled_from([5, 7, 11, 13]))
def test_p_small_matches_definition(a, b, p):
    d = datum("A", 2)
    res = is_p_small(d, [(a, b)], p)
    # highest coroot pairing of lam + rho is the largest one
    assert bool(res) == (a + b + 2 <= p)
    if not res:
        idx, j, val = res.witness
        assert j == 0 and val > p


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3),
       st.lists(st.integers(-20, 20), min_size=3, max_size=3),
       st.sampled_from([3, 5, 7]), st.integers(1, 2))
def test_restriction_is_additive(u, v, p, f):
    d = gl(3)
    basis = torus_basis(d)
    lu = [tuple(u)] + [tuple(reversed(u))] * (f - 1)
    lv = [tuple(v)] * f
    s = [tuple(a + b for a, b in zip(x, y)) for x, y in zip(lu, lv)]
    assert restrict_mod_p(s, basis, p, f) == restrict_mod_p(lu, basis, p, f) + restrict_mod_p(lv, basis, p, f)


def test_restriction_periodicity_gl2():
    d = gl(2)
    basis = torus_basis(d)
    a = restrict_mod_p([(3, 0)], basis, 5, 1)
    b = restrict_mod_p([(-1, 4)], basis, 5, 1)
    assert a == b == ModPCharacter(4, "T", (3, 0))


def test_restriction_shape_errors():
    d = gl(2)
    with pytest.raises(BasisShapeMismatch):
        restrict_mod_p([(1, 0)], torus_basis(d), 5, 2)
    with pytest.raises(BasisShapeMismatch):
        restrict_mod_p([(1, 0, 0)], torus_basis(d), 5, 1)
    with pytest.raises(ShapeMismatch):
        as_underline([(1, 0)], d, 2)


def test_character_sum_requires_same_torus():
    with pytest.raises(BasisShapeMismatch):
        ModPCharacter(4, "T", (1,)) + ModPCharacter(4, "C", (1,))


@pytest.mark.parametrize("p", [5, 7])
def test_weight_string_bound_on_small_weights(p):
    d = datum("B", 2)
    for a in range(p):
        for b in range(p):
            if is_p_small(d, [(a, b)], p) and weyl_dim(d, {0, 1}, [(a, b)]) <= 300:
                assert weight_string_max(d, (a, b)) <= p
