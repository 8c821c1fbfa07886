"""Brute-force cross-checks that share no code path with the Kostant reports.

* Chevalley structure constants from extraspecial pairs, certified by the
  Jacobi identity.
* The Chevalley-Eilenberg complex of f copies of the nilradical over F_p
  with trivial coefficients, split into T-weight blocks.
* An explicit sl_2 module with its raising operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import JacobiFailure, SizeCap, WeightOutOfRange
from .intlinalg import mat_mul_mod_p, rank_mod_p
from .root_datum import RootDatum
from .weyl import normalize_subset, phi_J_plus

DEFAULT_CE_CAP = 12
FULL_JACOBI_MAX_DIM = 80


def _neg(v):
    return tuple(-x for x in v)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


@dataclass
class ChevalleyTable:
    """Structure constants N[(a, b)] for roots a, b (coefficient tuples) with a + b a root."""

    datum: RootDatum
    constants: dict
    positive: tuple  # positive roots as coefficient tuples, in the fixed order
    extraspecial: dict  # xi -> (alpha, beta)

    def N(self, a, b):
        return self.constants.get((tuple(a), tuple(b)), 0)

    def restricted(self, J):
        """Constants among the roots of the nilradical for J."""
        idx = phi_J_plus(self.datum, J)
        keep = {r.coeffs for r in self.datum.positive_roots.roots if r.index not in idx}
        return {k: v for k, v in self.constants.items() if k[0] in keep and k[1] in keep}


def chevalley_constants(datum: RootDatum, max_rank: int = 8) -> ChevalleyTable:
    """Signed Chevalley constants, extraspecial pairs taken positive."""
    if datum.rank > max_rank:
        raise SizeCap(f"rank {datum.rank} exceeds cap {max_rank}")
    table = datum.positive_roots
    pos = [r.coeffs for r in table.roots]
    order = {c: i for i, c in enumerate(pos)}
    roots = set(pos) | {_neg(c) for c in pos}
    vec = {}
    for r in table.roots:
        vec[r.coeffs] = r.vector
        vec[_neg(r.coeffs)] = _neg(r.vector)
    coroots = [r.coroot for r in table.roots]

    def form(a, b):
        va, vb = vec[a], vec[b]
        return sum(
            sum(x * y for x, y in zip(va, c)) * sum(x * y for x, y in zip(vb, c)) for c in coroots
        )

    def string_r(a, b):
        r = 0
        while _sub(b, tuple((r + 1) * x for x in a)) in roots:
            r += 1
        return r

    def is_pos(a):
        return a in order

    N = {}

    def get(x, y):
        """N_{x,y} for any roots with x + y a root, derived from stored positive pairs."""
        if (x, y) in N:
            return N[(x, y)]
        z = _neg(_add(x, y))
        if is_pos(x) and is_pos(y):
            if order[x] > order[y]:
                val = -get(y, x)
            else:  # pragma: no cover - positive pairs are filled before use
                raise KeyError((x, y))
        elif not is_pos(x) and not is_pos(y):
            val = -get(_neg(x), _neg(y))
        elif is_pos(z) == is_pos(x):
            # (z, x) share a sign: N_{x,y}/(z,z) = N_{z,x}/(y,y)
            val = Fraction(form(z, z), form(y, y)) * get(z, x)
        else:
            # (y, z) share a sign: N_{x,y}/(z,z) = N_{y,z}/(x,x)
            val = Fraction(form(z, z), form(x, x)) * get(y, z)
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise JacobiFailure(f"non-integral constant N{(x, y)} = {val}")
            val = int(val)
        N[(x, y)] = val
        return val

    extra = {}
    for xi in pos:
        pairs = [(a, _sub(xi, a)) for a in pos if is_pos(_sub(xi, a)) and order[a] < order[_sub(xi, a)]]
        if not pairs:
            continue
        pairs.sort(key=lambda ab: order[ab[0]])
        alpha, beta = pairs[0]
        extra[xi] = (alpha, beta)
        nab = string_r(alpha, beta) + 1
        N[(alpha, beta)] = nab
        xx = form(xi, xi)
        for gamma, delta in pairs[1:]:
            total = Fraction(0)
            bg = _sub(beta, gamma)
            if bg in roots:
                total += Fraction(get(beta, _neg(gamma)) * get(alpha, _neg(delta)), form(bg, bg))
            ag = _sub(alpha, gamma)
            if ag in roots:
                total += Fraction(get(_neg(gamma), alpha) * get(beta, _neg(delta)), form(ag, ag))
            val = Fraction(xx, nab) * total
            if val.denominator != 1:
                raise JacobiFailure(f"non-integral constant for pair {(gamma, delta)}")
            N[(gamma, delta)] = int(val)
    # fill every remaining pair of roots whose sum is a root
    allroots = sorted(roots, key=lambda c: (not is_pos(c), order.get(c, order.get(_neg(c)))))
    for x in allroots:
        for y in allroots:
            if _add(x, y) in roots:
                get(x, y)
    for (x, y), v in N.items():
        if abs(v) != string_r(x, y) + 1:
            raise JacobiFailure(f"|N{(x, y)}| = {abs(v)} but expected {string_r(x, y) + 1}")
    result = ChevalleyTable(datum, dict(N), tuple(pos), extra)
    verify_jacobi(result)
    return result


def _bracket_full(table: ChevalleyTable):
    """Bracket on the Chevalley basis {e_a} ∪ {h_i} of the whole Lie algebra over Z."""
    datum = table.datum
    coroot_coeffs = {}
    for r in datum.positive_roots.roots:
        coroot_coeffs[r.coeffs] = r.coroot_coeffs
        coroot_coeffs[_neg(r.coeffs)] = tuple(-c for c in r.coroot_coeffs)
    cartan = datum.cartan  # cartan[i][j] = <alpha_i, alpha_j^vee>

    def pair_h(a, i):
        return sum(c * cartan[k][i] for k, c in enumerate(a))

    def br(x, y):
        kx, ky = x[0], y[0]
        if kx == "h" and ky == "h":
            return {}
        if kx == "h":
            return {y: pair_h(y[1], x[1])}
        if ky == "h":
            return {x: -pair_h(x[1], y[1])}
        a, b = x[1], y[1]
        s = _add(a, b)
        if not any(s):
            return {("h", i): c for i, c in enumerate(coroot_coeffs[a]) if c}
        n = table.N(a, b)
        return {("e", s): n} if n else {}

    return br


def verify_jacobi(table: ChevalleyTable):
    """Exhaustive Jacobi check; on the full algebra when small, else on n^+."""
    datum = table.datum
    pos = list(table.positive)
    dim = 2 * len(pos) + datum.rank
    br = _bracket_full(table)
    if dim <= FULL_JACOBI_MAX_DIM:
        basis = [("e", a) for a in pos] + [("e", _neg(a)) for a in pos] + [("h", i) for i in range(datum.rank)]
    else:
        basis = [("e", a) for a in pos]

    def br_lin(u, y):
        out = {}
        for x, c in u.items():
            for z, d in br(x, y).items():
                out[z] = out.get(z, 0) + c * d
        return {k: v for k, v in out.items() if v}

    for x, y, z in combinations(basis, 3):
        total = {}
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for k, v in br_lin(br(a, b), c).items():
                total[k] = total.get(k, 0) + v
        if any(total.values()):
            raise JacobiFailure(f"Jacobi identity fails on {(x, y, z)}")
    return True


@dataclass
class NilpotentAlgebraFp:
    """f copies of the nilradical over F_p; basis entries are (root coeffs, copy)."""

    p: int
    f: int
    basis: tuple
    weights: tuple  # underline weight (tuple of f vectors in X^*) per basis element
    brackets: dict  # (i, j) with i < j -> (coefficient mod p, k) meaning [b_i, b_j] = c b_k

    def check_jacobi(self):
        n = len(self.basis)

        def br(i, j):
            if i == j:
                return {}
            if i < j:
                c, k = self.brackets.get((i, j), (0, None))
                return {k: c} if c else {}
            c, k = self.brackets.get((j, i), (0, None))
            return {k: -c % self.p} if c else {}

        for x, y, z in combinations(range(n), 3):
            total = {}
            for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
                for k, v in br(a, b).items():
                    for m, w in br(k, c).items():
                        total[m] = (total.get(m, 0) + v * w) % self.p
            if any(total.values()):
                raise JacobiFailure(f"Jacobi identity fails mod {self.p}")
        return True


def nilpotent_algebra(datum: RootDatum, J, p: int, f: int, table: ChevalleyTable | None = None):
    J = normalize_subset(datum, J)
    table = table or chevalley_constants(datum)
    idx = phi_J_plus(datum, J)
    roots = [r for r in datum.positive_roots.roots if r.index not in idx]
    zero = (0,) * datum.lattice_rank
    basis, weights = [], []
    for j in range(f):
        for r in roots:
            basis.append((r.coeffs, j))
            weights.append(tuple(r.vector if k == j else zero for k in range(f)))
    where = {b: i for i, b in enumerate(basis)}
    brackets = {}
    for i, (a, j) in enumerate(basis):
        for k in range(i + 1, len(basis)):
            b, j2 = basis[k]
            if j2 != j:
                continue
            n = table.N(a, b)
            if n % p:
                brackets[(i, k)] = (n % p, where[(_add(a, b), j)])
    return NilpotentAlgebraFp(p, f, tuple(basis), tuple(weights), brackets)


@dataclass
class CEResult:
    p: int
    f: int
    dims: list  # per degree
    weight_dims: dict  # (degree, underline weight) -> dimension
    blocks: int
    d_squared_zero: bool = True
    meta: dict = field(default_factory=dict)

    def weight_multiset(self, degree):
        out = []
        for (i, mu), d in sorted(self.weight_dims.items()):
            if i == degree:
                out.extend([mu] * d)
        return sorted(out)


def _wedge_insert(sorted_idx, k):
    """Insert k at the front of a sorted tuple; returns (sign, tuple) or None if repeated."""
    if k in sorted_idx:
        return None
    pos = sum(1 for x in sorted_idx if x < k)
    return (-1) ** pos, tuple(sorted(sorted_idx + (k,)))


def ce_cohomology_trivial(datum: RootDatum, J, p: int, f: int = 1, cap: int = DEFAULT_CE_CAP,
                          table: ChevalleyTable | None = None) -> CEResult:
    """Dimensions of H^i(n, F_p) split by T-weight, by explicit linear algebra."""
    J = normalize_subset(datum, J)
    n_alg = len(datum.positive_roots) - len(phi_J_plus(datum, J))
    if f * n_alg > cap:
        raise SizeCap(f"f * dim n = {f * n_alg} exceeds cap {cap}")
    alg = nilpotent_algebra(datum, J, p, f, table)
    n = len(alg.basis)
    alg.check_jacobi()
    # d e*_k = - sum_{i<j} c^k_{ij} e*_i ^ e*_j
    d1 = {k: [] for k in range(n)}
    for (i, j), (c, k) in alg.brackets.items():
        d1[k].append(((-c) % p, (i, j)))

    def dual_weight(S):
        mu = [[0] * datum.lattice_rank for _ in range(f)]
        for s in S:
            for j in range(f):
                for t, x in enumerate(alg.weights[s][j]):
                    mu[j][t] -= x
        return tuple(tuple(v) for v in mu)

    def d(S):
        """Differential of e*_S as {sorted tuple: coefficient mod p}."""
        out = {}
        for t, s in enumerate(S):
            for c, (i, j) in d1[s]:
                # e*_{S[:t]} ^ (e*_i ^ e*_j) ^ e*_{S[t+1:]}
                seq = S[:t] + (i, j) + S[t + 1:]
                if len(set(seq)) < len(seq):
                    continue
                sign = _perm_sign(seq)
                key = tuple(sorted(seq))
                out[key] = (out.get(key, 0) + (-1) ** t * sign * c) % p
        return {k: v for k, v in out.items() if v}

    blocks = {}
    for i in range(n + 1):
        for S in combinations(range(n), i):
            blocks.setdefault((i, dual_weight(S)), []).append(S)
    rank = {}
    nblocks = 0
    for (i, mu), cols in sorted(blocks.items()):
        rows = blocks.get((i + 1, mu), [])
        if not rows:
            rank[(i, mu)] = 0
            continue
        ridx = {S: r for r, S in enumerate(rows)}
        M = [[0] * len(cols) for _ in rows]
        for c, S in enumerate(cols):
            for T, v in d(S).items():
                M[ridx[T]][c] = v
        rank[(i, mu)] = rank_mod_p(M, p)
        nblocks += 1
        nxt_rows = blocks.get((i + 2, mu), [])
        if nxt_rows:
            nidx = {S: r for r, S in enumerate(nxt_rows)}
            M2 = [[0] * len(rows) for _ in nxt_rows]
            for c, S in enumerate(rows):
                for T, v in d(S).items():
                    M2[nidx[T]][c] = v
            if any(any(row) for row in mat_mul_mod_p(M2, M, p)):
                raise JacobiFailure("d o d is nonzero")
    weight_dims = {}
    dims = [0] * (n + 1)
    for (i, mu), cols in blocks.items():
        h = len(cols) - rank.get((i, mu), 0) - rank.get((i - 1, mu), 0)
        if h:
            weight_dims[(i, mu)] = h
            dims[i] += h
    return CEResult(p, f, dims, weight_dims, nblocks)


def _perm_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass
class SL2OracleResult:
    lam: int
    p: int
    h0_weights: list
    h1_weights: list
    group_h0_dim: int
    group_h1_dim: int


def sl2_module_oracle(lam: int, p: int) -> SL2OracleResult:
    """Cohomology of the raising operator on the (lam+1)-dimensional sl_2 module."""
    if not 0 <= lam <= p - 1:
        raise WeightOutOfRange(f"lambda = {lam} not in [0, {p - 1}]")
    dim = lam + 1
    # basis v_k of weight lam - 2k; e v_k = (lam - k + 1) v_{k-1}
    E = [[0] * dim for _ in range(dim)]
    for k in range(1, dim):
        E[k - 1][k] = (lam - k + 1) % p
    h0, h1 = [], []
    # e preserves the grading weight(v) -> weight(v) + 2; dual of n has weight -2,
    # so H^0 in weight mu is ker(e) there and H^1 in weight mu - 2 is coker(e) at mu.
    for k in range(dim):
        mu = lam - 2 * k
        if k == 0 or E[k - 1][k] == 0:
            h0.append(mu)
        image_hits = k + 1 < dim and E[k][k + 1] != 0
        if not image_hits:
            h1.append(mu - 2)
    # exponential action of u(1) = sum_n e^n / n!
    U = [[int(i == j) for j in range(dim)] for i in range(dim)]
    power = [row[:] for row in U]
    fact = 1
    for m in range(1, p):
        power = mat_mul_mod_p(power, E, p)
        fact = fact * m % p
        inv = pow(fact, -1, p)
        U = [[(U[i][j] + power[i][j] * inv) % p for j in range(dim)] for i in range(dim)]
    G = [[(U[i][j] - int(i == j)) % p for j in range(dim)] for i in range(dim)]
    r = rank_mod_p(G, p)
    return SL2OracleResult(lam, p, h0, h1, dim - r, dim - r)

