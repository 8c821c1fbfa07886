from itertools import combinations
from math import comb

import pytest

from satake_lab import (
    group_cohomology_report,
    kostant_report,
    left_adjoint_report,
    parameter_support,
    principal_series_report,
    satake_target_report,
    torus_basis,
)
from satake_lab.cohomology import all_subsets, torus_ext_ranks
from satake_lab.errors import AssumptionViolated, BasisShapeMismatch, OrthogonalityFails
from satake_lab.levi import build_levi
from satake_lab.weights import ModPCharacter
from satake_lab.weyl import minimal_coset_reps

from conftest import CORPUS_TYPES, datum, gl


def subsets(rank):
    return [frozenset(c) for k in range(rank + 1) for c in combinations(range(rank), k)]


@pytest.mark.parametrize("label,fam,rank,preset", CORPUS_TYPES)
def test_constituent_counts(label, fam, rank, preset):
    d = datum(fam, rank, preset)
    for J in subsets(d.rank):
        reps = minimal_coset_reps(d, J)
        for f in (1, 2):
            rep = kostant_report(d, J, None, 13, f)
            assert sum(rep.counts().values()) == len(reps) ** f
            # degree 0 and the top degree each carry exactly one constituent
            degs = sorted(rep.degrees)
            assert degs[0] == 0 and len(rep.degrees[0]) == 1
            assert degs[-1] == f * build_levi(d, J).dim_N_alg and len(rep.degrees[degs[-1]]) == 1
            if f == 1:
                assert rep.counts() == reps.by_length


def test_kostant_dims_gl3():
    rep = kostant_report(gl(3), {0}, None, 5)
    assert rep.dims() == {0: 1, 1: 2, 2: 1}
    assert [c.weight for c in rep.degrees[1]] == [((0, -1, 1),)]
    assert [c.weight for c in rep.degrees[2]] == [((-1, -1, 2),)]


@pytest.mark.parametrize("label,fam,rank,preset", CORPUS_TYPES)
def test_left_adjoint_twist(label, fam, rank, preset):
    d = datum(fam, rank, preset)
    for J in subsets(d.rank):
        k = kostant_report(d, J, None, 13, 1)
        la = left_adjoint_report(d, J, None, 13, 1)
        shift = la.metadata["dim_N0"]
        assert sorted(la.degrees) == [n - shift for n in sorted(k.degrees)]
        for n, cs in k.degrees.items():
            assert [c.dim for c in cs] == [c.dim for c in la.degrees[n - shift]]
        # top degree lands at 0 with trivial weight
        top = la.degrees[0]
        assert len(top) == 1 and not any(any(x) for x in top[0].weight)


def test_group_report_caveat():
    rep = group_cohomology_report(gl(3), {0}, None, 5)
    assert rep.caveat and rep.to_dict()["caveat_filtration"]
    assert not kostant_report(gl(3), {0}, None, 5).caveat


def test_satake_gl3():
    rep = satake_target_report(gl(3), {0}, None, 5)
    assert sorted(rep.targets) == [-2, -1, 0]
    assert rep.torus_ext_ranks is None
    assert "non_canonical" in rep.metadata


def test_satake_torus_ranks():
    rep = satake_target_report(gl(2), [], None, 5)
    assert rep.torus_ext_ranks == [1, 2, 1]
    assert torus_ext_ranks(datum("A", 1), 2) == [1, 2, 1]


def test_satake_failures():
    with pytest.raises(OrthogonalityFails) as exc:
        satake_target_report(gl(2), [], [(3, 0)], 5)
    assert exc.value.report.witnesses
    with pytest.raises(AssumptionViolated):
        kostant_report(datum("G", 2), [], None, 7)
    with pytest.raises(AssumptionViolated):
        kostant_report(gl(2), [], [(9, 0)], 5)


def _chi(d, exps, p, f=1):
    return ModPCharacter(p**f - 1, torus_basis(d).tag, tuple(exps))


def test_principal_series_sl2():
    d = datum("A", 1)
    unram = principal_series_report(d, _chi(d, [0], 5), 5)
    assert unram.dims == {0: 1, 1: 1}
    alpha = principal_series_report(d, _chi(d, [2], 5), 5)
    assert alpha.dims == {1: 1, 2: 1}
    assert alpha.matched_w[0].label() == "s1"
    for e in (1, 3):
        assert principal_series_report(d, _chi(d, [e], 5), 5).dims == {}


def test_principal_series_window_f2():
    d = datum("A", 1)
    rep = principal_series_report(d, _chi(d, [0], 5, 2), 5, 2)
    assert rep.dims == {0: 1, 1: 2, 2: 1}


def test_principal_series_shape():
    d = gl(2)
    with pytest.raises(BasisShapeMismatch):
        principal_series_report(d, ModPCharacter(4, "T", (0,)), 5)


def test_parameter_support():
    d = gl(3)
    supports = parameter_support(d, None, 5)
    assert [s.J for s in supports] == all_subsets(2)
    full = supports[-1]
    assert full.points is not None and [degs for _, degs in full.points] == [[0]]
    for s in supports:
        if s.points is not None:
            # orthogonality: every support point carries a single degree
            assert all(len(ns) == 1 for _, ns in s.points)
    bad = parameter_support(gl(2), [(3, 0)], 5)
    assert bad[0].points is None and bad[0].verdict == "Fail"
