"""Exact integer and prime-field linear algebra.

Matrices are lists of rows of Python ints; nothing here touches floats.
"""

from math import gcd


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def mat_vec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def smith_normal_form(A, ncols=None):
    """Return ``(D, U, V)`` with ``U @ A @ V == D`` and D in Smith form.

    ``D`` is returned as the full m x n matrix; U and V are unimodular.
    ``ncols`` is only needed when ``A`` has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(r) for r in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        for M in (D, U):
            M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, c):
        for M in (D, V):
            for row in M:
                row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
            rest = [(abs(D[i][t]), i, "r") for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), j, "c") for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, k, kind = min(rest)
                if kind == "r":
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return D, U, V


def invariant_factors(A, ncols=None):
    D, _, _ = smith_normal_form(A, ncols)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def rank_over_z(A):
    return len(invariant_factors(A)) if A else 0


def kernel_basis(A, ncols):
    """Saturated basis of ``{x in Z^ncols : A x = 0}`` in row Hermite form."""
    if not A:
        return identity(ncols)
    D, _, V = smith_normal_form(A, ncols)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    cols = [[V[row][c] for row in range(ncols)] for c in range(r, ncols)]
    return hermite_rows(cols)


def solve(A, b, ncols):
    """An integer solution of ``A x = b`` or None when none exists."""
    if not A:
        return tuple([0] * ncols) if not any(b) else None
    D, U, V = smith_normal_form(A, ncols)
    c = mat_vec(U, b)
    y = [0] * ncols
    for i, ci in enumerate(c):
        d = D[i][i] if i < ncols else 0
        if d == 0:
            if ci:
                return None
        else:
            if ci % d:
                return None
            y[i] = ci // d
    return mat_vec(V, y)


def hermite_rows(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above each pivot are reduced into
    ``[0, pivot)``, zero rows are dropped.  The result is unique for a
    given lattice, so it doubles as a canonical basis.
    """
    H = [list(r) for r in rows if any(r)]
    if not H:
        return []
    ncols = len(H[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(H):
            break
        # Euclid on column `col` among rows pivot_row..end
        while True:
            cand = [(abs(H[i][col]), i) for i in range(pivot_row, len(H)) if H[i][col]]
            if not cand:
                break
            _, k = min(cand)
            H[pivot_row], H[k] = H[k], H[pivot_row]
            done = True
            for i in range(pivot_row + 1, len(H)):
                if H[i][col]:
                    q = H[i][col] // H[pivot_row][col]
                    H[i] = [a - q * b for a, b in zip(H[i], H[pivot_row])]
                    if H[i][col]:
                        done = False
            if done:
                break
        if pivot_row < len(H) and H[pivot_row][col]:
            if H[pivot_row][col] < 0:
                H[pivot_row] = [-a for a in H[pivot_row]]
            piv = H[pivot_row][col]
            for i in range(pivot_row):
                q = H[i][col] // piv
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[pivot_row])]
            pivot_row += 1
    return [tuple(r) for r in H[:pivot_row] if any(r)]


def is_saturated(rows):
    """True when the lattice spanned by ``rows`` is saturated in Z^d."""
    if not rows:
        return True
    return all(d == 1 for d in invariant_factors(rows))


def rank_mod_p(rows, p):
    """Rank over F_p of a matrix given as a list of rows."""
    M = [[a % p for a in r] for r in rows]
    M = [r for r in M if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = pow(M[rank][col], -1, p)
        M[rank] = [(a * inv) % p for a in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][col]:
                c = M[i][col]
                M[i] = [(a - c * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
        if rank == len(M):
            break
    return rank


def mat_mul_mod_p(A, B, p):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % p for col in Bt] for row in A]


def lcm(a, b):
    return a * b // gcd(a, b) if a and b else 0
