"""Weights: dominance, p-smallness, dimensions, multiplicities, mod-p restriction.

An underline weight is a tuple of ``f`` integer vectors, one per embedding
of the residue field; component ``j`` is read through ``Frob^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisShapeMismatch, DimensionCap, NotDominant, NotDominantForJ, ShapeMismatch
from .intlinalg import dot
from .root_datum import RootDatum
from .weyl import normalize_subset, phi_J_plus

DEFAULT_DIM_CAP = 10**5


def as_underline(lams, datum: RootDatum, f: int):
    """Normalize ``lams`` into an f-tuple of length-d integer tuples.

    ``None``, ``0`` and ``[]`` all mean the zero weight.
    """
    d = datum.lattice_rank
    if lams is None or lams == 0 or lams == []:
        return tuple((0,) * d for _ in range(f))
    out = tuple(tuple(int(x) for x in lam) for lam in lams)
    if len(out) != f:
        raise ShapeMismatch(f"expected {f} weight components, got {len(out)}")
    for lam in out:
        if len(lam) != d:
            raise ShapeMismatch(f"weight {lam} does not have length {d}")
    return out


def add_weights(a, b):
    return tuple(tuple(x + y for x, y in zip(u, v)) for u, v in zip(a, b))


def two_rho_J(datum: RootDatum, J):
    """2 rho_J: the sum of the positive roots supported on J."""
    idx = phi_J_plus(datum, J)
    out = [0] * datum.lattice_rank
    for r in datum.positive_roots.roots:
        if r.index in idx:
            out = [a + b for a, b in zip(out, r.vector)]
    return tuple(out)


def is_dominant(datum: RootDatum, lam, J=None) -> bool:
    idx = range(datum.rank) if J is None else J
    return all(dot(lam, datum.simple_coroots[i]) >= 0 for i in idx)


def _require_dominant(datum, lams, J=None):
    for j, lam in enumerate(lams):
        if not is_dominant(datum, lam, J):
            cls = NotDominant if J is None else NotDominantForJ
            raise cls(f"weight {lam} (embedding {j}) is not dominant")


@dataclass(frozen=True)
class PSmallResult:
    ok: bool
    witness: tuple | None = None  # (positive root index, embedding j, pairing)

    def __bool__(self):
        return self.ok


def is_p_small(datum: RootDatum, lams, p: int) -> PSmallResult:
    """Check <lam_j + rho, alpha^vee> <= p for every positive root and embedding."""
    _require_dominant(datum, lams)
    two_rho = datum.two_rho
    for j, lam in enumerate(lams):
        for r in datum.positive_roots.roots:
            twice = dot([2 * x + y for x, y in zip(lam, two_rho)], r.coroot)
            if twice > 2 * p:
                return PSmallResult(False, (r.index, j, Fraction(twice, 2)))
    return PSmallResult(True)


def weyl_dim(datum: RootDatum, J, mus) -> int:
    """Dimension of the irreducible L_J(mu) (product over the embeddings)."""
    J = normalize_subset(datum, J)
    _require_dominant(datum, mus, J)
    idx = phi_J_plus(datum, J)
    t = two_rho_J(datum, J)
    total = Fraction(1)
    for mu in mus:
        shifted = [2 * x + y for x, y in zip(mu, t)]
        for r in datum.positive_roots.roots:
            if r.index in idx:
                total *= Fraction(dot(shifted, r.coroot), dot(t, r.coroot))
    assert total.denominator == 1
    return int(total)


@dataclass
class MultiplicityTable:
    highest_weight: tuple
    entries: dict  # weight vector -> multiplicity

    @property
    def dimension(self):
        return sum(self.entries.values())

    def __getitem__(self, mu):
        return self.entries.get(tuple(mu), 0)

    def dominant_weights(self, datum, J=None):
        return [mu for mu in self.entries if is_dominant(datum, mu, J)]


def _invariant_form(datum, J):
    """Integer W_J-invariant form (x, y) = sum_{alpha in Phi_J^+} <x,a^v><y,a^v>."""
    coroots = [r.coroot for r in datum.positive_roots.roots if r.index in phi_J_plus(datum, J)]

    def form(x, y):
        return sum(dot(x, c) * dot(y, c) for c in coroots)

    return form


def freudenthal(datum: RootDatum, lam, J=None, cap=DEFAULT_DIM_CAP) -> MultiplicityTable:
    """Characteristic-zero weight multiplicities of L_J(lam).

    Weights are processed by depth below ``lam``.  Only J-dominant weights
    run the recursion; every other weight copies the multiplicity of its
    dominant conjugate, which always sits at a smaller depth.
    """
    J = normalize_subset(datum, range(datum.rank) if J is None else J)
    lam = tuple(lam)
    if not is_dominant(datum, lam, J):
        raise NotDominant(f"weight {lam} is not dominant")
    dim = weyl_dim(datum, J, (lam,))
    if dim > cap:
        raise DimensionCap(f"dim L({lam}) = {dim} exceeds cap {cap}")
    form = _invariant_form(datum, J)
    two_rho = two_rho_J(datum, J)
    Js = sorted(J)
    pos = [r for r in datum.positive_roots.roots if r.index in phi_J_plus(datum, J)]
    simple = datum.simple_roots
    lam_norm = form(lam, [x + y for x, y in zip(lam, two_rho)])

    def dominant_conjugate(mu):
        mu = list(mu)
        moved = True
        while moved:
            moved = False
            for i in Js:
                c = dot(mu, datum.simple_coroots[i])
                if c < 0:
                    mu = [a - c * b for a, b in zip(mu, simple[i])]
                    moved = True
        return tuple(mu)

    mult = {lam: 1}
    layer = [lam]
    level = 0
    while layer:
        level += 1
        cands = []
        seen = set()
        for mu in layer:
            for i in Js:
                nu = tuple(a - b for a, b in zip(mu, simple[i]))
                if nu not in seen:
                    seen.add(nu)
                    cands.append(nu)
        # dominant weights first so non-dominant ones at this level can copy them
        cands.sort(key=lambda nu: not is_dominant(datum, nu, J))
        nxt = []
        for nu in cands:
            if is_dominant(datum, nu, J):
                lhs = lam_norm - form(nu, [x + y for x, y in zip(nu, two_rho)])
                rhs = 0
                for r in pos:
                    k = 1
                    while level - k * r.height >= 0:
                        up = tuple(a + k * b for a, b in zip(nu, r.vector))
                        m = mult.get(up, 0)
                        if m:
                            rhs += form(up, r.vector) * m
                        k += 1
                rhs *= 2
                m = 0
                if rhs:
                    assert lhs > 0 and rhs % lhs == 0
                    m = rhs // lhs
            else:
                m = mult.get(dominant_conjugate(nu), 0)
            if m:
                mult[nu] = m
                nxt.append(nu)
        layer = nxt
    table = MultiplicityTable(lam, mult)
    assert table.dimension == dim
    return table


def weight_string_max(datum: RootDatum, lam, cap=DEFAULT_DIM_CAP) -> int:
    """Longest alpha-string length <mu, alpha^vee> + 1 over weights mu of L(lam)."""
    table = freudenthal(datum, lam, cap=cap)
    best = 1
    for mu in table.dominant_weights(datum):
        for r in datum.positive_roots.roots:
            best = max(best, dot(mu, r.coroot) + 1)
    return best


@dataclass(frozen=True)
class CocharBasis:
    tag: str
    vectors: tuple

    def __len__(self):
        return len(self.vectors)


def torus_basis(datum: RootDatum) -> CocharBasis:
    d = datum.lattice_rank
    return CocharBasis("T", tuple(tuple(int(i == k) for k in range(d)) for i in range(d)))


@dataclass(frozen=True)
class ModPCharacter:
    modulus: int
    basis_tag: str
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) % self.modulus for e in self.exponents))

    def __add__(self, other):
        if (self.modulus, self.basis_tag) != (other.modulus, other.basis_tag):
            raise BasisShapeMismatch("characters live on different tori")
        return ModPCharacter(self.modulus, self.basis_tag, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def is_trivial(self):
        return not any(self.exponents)

    def to_dict(self):
        return {"modulus": self.modulus, "basis": self.basis_tag, "exponents": list(self.exponents)}


def restrict_mod_p(lams, basis: CocharBasis, p: int, f: int) -> ModPCharacter:
    """Restrict an underline weight to the residue-field points of a torus."""
    lams = tuple(tuple(x) for x in lams)
    if len(lams) != f:
        raise BasisShapeMismatch(f"expected {f} components, got {len(lams)}")
    for xi in basis.vectors:
        for lam in lams:
            if len(xi) != len(lam):
                raise BasisShapeMismatch(f"cocharacter {xi} and weight {lam} differ in length")
    q1 = p**f - 1
    exps = tuple(sum(p**j * dot(lam, xi) for j, lam in enumerate(lams)) % q1 for xi in basis.vectors)
    return ModPCharacter(q1, basis.tag, exps)
