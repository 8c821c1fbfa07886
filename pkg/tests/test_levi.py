from itertools import combinations, product

import pytest

from satake_lab import build_levi, delta_character, dot_action, is_abelian_nilradical, xi_and_hM
from satake_lab.intlinalg import is_saturated
from satake_lab.levi import hermite_check
from satake_lab.root_datum import Preset
from satake_lab.weyl import longest_relative_element, parabolic_subgroup, weyl_group

from conftest import CORPUS_TYPES, datum, gl


def subsets(rank):
    return [frozenset(c) for k in range(rank + 1) for c in combinations(range(rank), k)]


def brute_h_M(d, J, box=6):
    """Minimum of <alpha_0, xi> over a coweight box, per component, then max."""
    best = 0
    for c, comp in enumerate(d.components):
        free = [i for i in comp if i not in J]
        if not free:
            continue
        top = d.positive_roots.highest_roots[c]
        val = None
        for xi in product(range(-box, box + 1), repeat=d.lattice_rank):
            pairs = [sum(a * b for a, b in zip(alpha, xi)) for alpha in d.simple_roots]
            if all(pairs[i] >= 1 if i in free else pairs[i] == 0 for i in range(d.rank)):
                v = sum(a * b for a, b in zip(top.vector, xi))
                val = v if val is None else min(val, v)
        best = max(best, val)
    return best


BRUTE = [("A", 1, Preset.SIMPLY_CONNECTED), ("A", 2, Preset.SIMPLY_CONNECTED), ("A", 2, Preset.ADJOINT),
         ("A", 2, Preset.GL_STYLE), ("B", 2, Preset.SIMPLY_CONNECTED), ("B", 2, Preset.ADJOINT),
         ("G", 2, Preset.SIMPLY_CONNECTED), ("A", 3, Preset.GL_STYLE)]


@pytest.mark.parametrize("fam,rank,preset", BRUTE)
def test_h_M_matches_brute_force(fam, rank, preset):
    d = datum(fam, rank, preset)
    for J in subsets(d.rank):
        assert xi_and_hM(d, J).h_M == brute_h_M(d, J)


def test_xi_examples():
    assert xi_and_hM(gl(2), []).h_M == 1
    assert xi_and_hM(gl(2), []).components[0].xi == (1, 0)
    assert xi_and_hM(datum("A", 1), []).h_M == 2
    assert xi_and_hM(datum("B", 2), []).h_M == 4
    assert xi_and_hM(datum("B", 2, Preset.ADJOINT), []).h_M == 3
    assert xi_and_hM(gl(5), [0, 1, 3]).components[0].xi == (1, 1, 1, 0, 0)
    assert xi_and_hM(gl(5), range(4)).h_M == 0


@pytest.mark.parametrize("label,fam,rank,preset", CORPUS_TYPES)
def test_xi_constraints(label, fam, rank, preset):
    d = datum(fam, rank, preset)
    for J in subsets(d.rank):
        data = xi_and_hM(d, J)
        for c in data.components:
            if c.skipped:
                continue
            for i, alpha in enumerate(d.simple_roots):
                pair = sum(a * b for a, b in zip(alpha, c.xi))
                if i in c.simple_indices and i not in J:
                    assert pair >= 1
                else:
                    assert pair == 0


@pytest.mark.parametrize("label,fam,rank,preset", CORPUS_TYPES)
def test_central_basis(label, fam, rank, preset):
    d = datum(fam, rank, preset)
    for J in subsets(d.rank):
        levi = build_levi(d, J, f=2)
        basis = levi.central_basis
        assert len(basis) == d.lattice_rank - len(J)
        for xi in basis.vectors:
            for j in J:
                assert sum(a * b for a, b in zip(d.simple_roots[j], xi)) == 0
        if basis.vectors:
            assert is_saturated([list(v) for v in basis.vectors])
        assert hermite_check(basis)
        assert levi.dim_N0 == 2 * levi.dim_N_alg


def test_gl3_levi():
    levi = build_levi(gl(3), {0})
    assert set(levi.central_basis.vectors) == {(1, 1, 0), (0, 0, 1)}
    assert levi.dim_N_alg == 2
    assert levi.central_basis.tag == "C_M{1}"


@pytest.mark.parametrize("label,fam,rank,preset", CORPUS_TYPES)
def test_delta_plus_relative_longest_dot_zero(label, fam, rank, preset):
    d = datum(fam, rank, preset)
    W = weyl_group(d)
    for J in subsets(d.rank):
        wM = max(parabolic_subgroup(d, J), key=lambda w: w.length)
        w = W.multiply(wM, W.longest)
        assert w == longest_relative_element(d, J)
        for f in (1, 2):
            zero = [(0,) * d.lattice_rank] * f
            mu = dot_action([w] * f, zero, d)
            total = [tuple(a + b for a, b in zip(x, y)) for x, y in zip(delta_character(d, J, f), mu)]
            assert all(not any(v) for v in total)


def test_delta_gl3():
    assert delta_character(gl(3), {0}) == ((1, 1, -2),)


def test_abelian_nilradicals():
    assert is_abelian_nilradical(gl(3), {0})
    assert is_abelian_nilradical(gl(4), {0, 1})
    assert not is_abelian_nilradical(gl(3), set())
    assert is_abelian_nilradical(datum("C", 3), {0, 1})
    assert is_abelian_nilradical(datum("D", 4), {1, 2, 3})
    assert not is_abelian_nilradical(datum("G", 2), {0})
