import sympy
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from satake_lab.intlinalg import (
    hermite_rows,
    invariant_factors,
    is_saturated,
    kernel_basis,
    mat_vec,
    rank_mod_p,
    smith_normal_form,
    solve,
)

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_transforms(A):
    D, U, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    nz = [d for d in diag if d]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_invariant_factors_match_sympy(A):
    S = sympy_snf(sympy.Matrix(A), domain=sympy.ZZ)
    theirs = [abs(int(S[i, i])) for i in range(min(S.shape)) if S[i, i] != 0]
    assert [abs(d) for d in invariant_factors(A)] == theirs


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_kernel_is_saturated_and_complete(A):
    n = len(A[0])
    K = kernel_basis(A, n)
    for v in K:
        assert not any(mat_vec(A, v))
    rank = sympy.Matrix(A).rank()
    assert len(K) == n - rank
    assert is_saturated(K)


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_solve_recovers_consistent_rhs(A, data):
    n = len(A[0])
    x = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    b = mat_vec(A, x)
    y = solve(A, b, n)
    assert y is not None and list(mat_vec(A, y)) == list(b)


def test_solve_detects_divisibility_obstruction():
    assert solve([[2, 0], [0, 3]], [1, 3], 2) is None
    assert tuple(solve([[2, 0], [0, 3]], [4, 3], 2)) == (2, 1)


def test_hermite_is_canonical():
    a = hermite_rows([[2, 4], [1, 1]])
    b = hermite_rows([[1, 1], [3, 5]])
    assert a == b


@settings(max_examples=100, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_against_sympy(A, p):
    expected = DomainMatrix.from_list_sympy(len(A), len(A[0]), A).convert_to(GF(p)).rank()
    assert rank_mod_p(A, p) == expected
