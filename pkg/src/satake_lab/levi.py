"""Data attached to a standard Levi J: positive roots, rho_M, nilradical size,
central cocharacters, the xi_j minimizers with h_M, and the delta twist."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import SearchBoxExhausted
from .intlinalg import dot, hermite_rows, is_saturated, kernel_basis, solve
from .root_datum import RootDatum
from .weights import CocharBasis, two_rho_J
from .weyl import normalize_subset, phi_J_plus


def subset_label(J):
    return "{" + ",".join(str(j + 1) for j in sorted(J)) + "}"


@dataclass(frozen=True)
class LeviDatum:
    J: frozenset
    phi_J_plus: tuple  # Root records
    two_rho_M: tuple
    dim_N_alg: int
    dim_N0: int
    central_basis: CocharBasis


def central_cochar_basis(datum: RootDatum, J) -> CocharBasis:
    """Saturated basis of {xi in X_* : <alpha, xi> = 0 for alpha in J}."""
    J = normalize_subset(datum, J)
    rows = [list(datum.simple_roots[j]) for j in sorted(J)]
    basis = kernel_basis(rows, datum.lattice_rank)
    return CocharBasis(f"C_M{subset_label(J)}", tuple(tuple(v) for v in basis))


def build_levi(datum: RootDatum, J, f: int = 1) -> LeviDatum:
    J = normalize_subset(datum, J)
    idx = phi_J_plus(datum, J)
    roots = tuple(r for r in datum.positive_roots.roots if r.index in idx)
    n = len(datum.positive_roots) - len(roots)
    basis = central_cochar_basis(datum, J)
    if basis.vectors:
        assert is_saturated([list(v) for v in basis.vectors])
    return LeviDatum(J, roots, two_rho_J(datum, J), n, f * n, basis)


def nilradical_roots(datum: RootDatum, J):
    idx = phi_J_plus(datum, J)
    return [r for r in datum.positive_roots.roots if r.index not in idx]


def is_abelian_nilradical(datum: RootDatum, J) -> bool:
    """True iff no two roots of the nilradical sum to a root."""
    roots = nilradical_roots(datum, J)
    idx = datum.root_index
    for a in roots:
        for b in roots:
            if tuple(x + y for x, y in zip(a.vector, b.vector)) in idx:
                return False
    return True


def delta_character(datum: RootDatum, J, f: int = 1):
    """Underline weight with every component equal to 2rho - 2rho_M."""
    t = two_rho_J(datum, J)
    delta = tuple(a - b for a, b in zip(datum.two_rho, t))
    return tuple(delta for _ in range(f))


@dataclass(frozen=True)
class ComponentXi:
    component: int
    simple_indices: tuple
    xi: tuple | None
    pairing_with_highest: int | None
    skipped: bool  # component lies inside J, no xi exists


@dataclass(frozen=True)
class XiData:
    J: frozenset
    components: tuple
    h_M: int

    def to_dict(self):
        return {
            "h_M": self.h_M,
            "components": [
                {
                    "component": c.component + 1,
                    "simple_roots": [i + 1 for i in c.simple_indices],
                    "xi": list(c.xi) if c.xi is not None else None,
                    "pairing_with_highest": c.pairing_with_highest,
                    "skipped": c.skipped,
                }
                for c in self.components
            ],
            "choice": "first feasible pairing vector in lex order; xi has least negative mass, then least L1 norm, then is lex largest",
        }


def _weighted_compositions(weights, total):
    """Positive integer vectors t with sum(w_i t_i) == total, in lex order."""
    if not weights:
        if total == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    floor_rest = sum(rest)
    t = 1
    while w * t + floor_rest <= total:
        for tail in _weighted_compositions(rest, total - w * t):
            yield (t,) + tail
        t += 1


def _canonical_in_coset(xi0, kernel, max_doublings):
    """Pick the canonical representative of xi0 + span(kernel)."""
    if not kernel:
        return tuple(xi0)
    big = 10**6

    def cost(v):
        neg = sum(-x for x in v if x < 0)
        return (neg * big + sum(abs(x) for x in v), tuple(-x for x in v))

    best = None
    radius = max(1, max(abs(x) for x in xi0))
    for _ in range(max_doublings):
        cand = None
        for coeffs in product(range(-radius, radius + 1), repeat=len(kernel)):
            v = tuple(x + sum(c * k[i] for c, k in zip(coeffs, kernel)) for i, x in enumerate(xi0))
            if cand is None or cost(v) < cost(cand):
                cand = v
        if cand == best:
            return best
        best = cand
        radius *= 2
    raise SearchBoxExhausted("canonical central representative did not stabilize")


def xi_and_hM(datum: RootDatum, J, max_doublings: int = 12) -> XiData:
    """Integer xi_j minimizing <highest root of component j, xi_j>.

    Constraints: <beta, xi_j> >= 1 for simple beta of component j outside J,
    and 0 for every other simple root.  Objective values are scanned upward
    from their trivial lower bound, so the first feasible value is the
    certified minimum.
    """
    J = normalize_subset(datum, J)
    A = [list(v) for v in datum.simple_roots]
    d = datum.lattice_rank
    kernel = kernel_basis(A, d) if A else [tuple(int(i == k) for k in range(d)) for i in range(d)]
    table = datum.positive_roots
    out = []
    for c, comp in enumerate(datum.components):
        free = [i for i in comp if i not in J]
        if not free:
            out.append(ComponentXi(c, tuple(comp), None, None, True))
            continue
        top = table.highest_roots[c]
        weights = [top.coeffs[i] for i in free]
        # t = 1 on every free simple root is realized by a rational coweight;
        # clearing its denominator bounds the search.
        bound = None
        scale = 1
        while bound is None:
            t = [0] * datum.rank
            for i in free:
                t[i] = scale
            if solve(A, t, d) is not None:
                bound = scale * sum(weights)
            scale += 1
            if scale > 10**4:  # pragma: no cover
                raise SearchBoxExhausted("no integral coweight found")
        found = None
        value = sum(weights)
        while found is None and value <= bound:
            for ts in _weighted_compositions(weights, value):
                t = [0] * datum.rank
                for i, x in zip(free, ts):
                    t[i] = x
                xi = solve(A, t, d)
                if xi is not None:
                    found = (value, xi)
                    break
            value += 1
        if found is None:
            raise SearchBoxExhausted(f"no xi found for component {c + 1} up to value {bound}")
        value, xi = found
        xi = _canonical_in_coset(xi, [list(k) for k in kernel], max_doublings)
        assert dot(top.vector, xi) == value
        out.append(ComponentXi(c, tuple(comp), tuple(xi), value, False))
    h = max((x.pairing_with_highest for x in out if not x.skipped), default=0)
    return XiData(J, tuple(out), h)


def hermite_check(basis: CocharBasis):
    """The basis is already in row Hermite form (canonical)."""
    return [tuple(r) for r in hermite_rows(basis.vectors)] == list(basis.vectors)
