"""Cohomology of nilradicals at the level of constituents.

Every report lists, per degree, the irreducible Levi constituents
L_J(w . lambda) indexed by underline elements of ^J W, with dimensions and
central characters.  Module structure is never modeled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import comb

from .checkers import DEFAULT_UNDERLINE_CAP, check_orthogonality_direct, check_p_bound, underline_words
from .errors import AssumptionViolated, BasisShapeMismatch, EnumerationCap, NotDominant, NotPSmall, OrthogonalityFails
from .levi import build_levi, delta_character, xi_and_hM
from .parallel import ordered_map
from .root_datum import RootDatum
from .weights import ModPCharacter, add_weights, as_underline, is_p_small, restrict_mod_p, torus_basis, weyl_dim
from .weyl import DEFAULT_WEYL_CAP, dot_action, enumerate_weyl, minimal_coset_reps, normalize_subset

NON_CANONICAL_NOTE = (
    "the identification of the Satake targets depends on a choice of realization; "
    "only constituents and central characters are reported"
)


class ReportKind(str, Enum):
    LIE_ALGEBRA = "LieAlgebra"
    GROUP = "GroupSemisimplified"
    LEFT_ADJOINT = "LeftAdjoint"


@dataclass(frozen=True)
class Constituent:
    weight: tuple  # underline weight
    witness_w: tuple  # underline Weyl element
    dim: int
    central_char: ModPCharacter

    @property
    def length(self):
        return sum(w.length for w in self.witness_w)

    def to_dict(self):
        return {
            "weight": [list(x) for x in self.weight],
            "w": underline_words(self.witness_w),
            "length": self.length,
            "dim": self.dim,
            "central_character": self.central_char.to_dict(),
        }


@dataclass
class CohomologyReport:
    kind: ReportKind
    J: frozenset
    degrees: dict  # degree -> list of Constituent
    caveat: bool
    metadata: dict = field(default_factory=dict)

    def dims(self):
        """Total dimension per degree, sorted by degree."""
        return {n: sum(c.dim for c in cs) for n, cs in sorted(self.degrees.items())}

    def counts(self):
        return {n: len(cs) for n, cs in sorted(self.degrees.items())}

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "J": sorted(j + 1 for j in self.J),
            "caveat_filtration": self.caveat,
            "metadata": self.metadata,
            "degrees": [
                {"degree": n, "constituents": [c.to_dict() for c in cs]} for n, cs in sorted(self.degrees.items())
            ],
            "dims": [[n, d] for n, d in self.dims().items()],
        }


def _require_assumptions(datum, lams, p):
    pb = check_p_bound(datum, p)
    if not pb.passed:
        raise AssumptionViolated(f"p = {p} does not exceed h + 1 = {pb.details['h'] + 1}", pb)
    try:
        small = is_p_small(datum, lams, p)
    except NotDominant as exc:
        raise AssumptionViolated(str(exc)) from exc
    if not small:
        raise AssumptionViolated(f"lambda is not {p}-small", small)


def _constituents(datum, J, lams, p, f, cap, weyl_cap):
    reps = minimal_coset_reps(datum, J, weyl_cap).elements
    if len(reps) ** f > cap:
        raise EnumerationCap(f"|^J W|^f = {len(reps) ** f} exceeds cap {cap}")
    basis = build_levi(datum, J, f).central_basis
    out = []
    for ws in product(reps, repeat=f):
        mu = dot_action(ws, lams, datum)
        out.append(Constituent(mu, ws, weyl_dim(datum, J, mu), restrict_mod_p(mu, basis, p, f)))
    return out, basis


def kostant_report(datum: RootDatum, J, lams, p: int, f: int = 1,
                   cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP) -> CohomologyReport:
    """Degree i holds L_J(w . lambda) for the underline w in ^J W of total length i."""
    J = normalize_subset(datum, J)
    lams = as_underline(lams, datum, f)
    _require_assumptions(datum, lams, p)
    cons, basis = _constituents(datum, J, lams, p, f, cap, weyl_cap)
    degrees = {}
    for c in cons:
        degrees.setdefault(c.length, []).append(c)
    return CohomologyReport(ReportKind.LIE_ALGEBRA, J, dict(sorted(degrees.items())), False,
                            {"basis": basis.tag, "basis_vectors": [list(v) for v in basis.vectors]})


def group_cohomology_report(datum: RootDatum, J, lams, p: int, f: int = 1,
                            cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP) -> CohomologyReport:
    """Same constituents as the Lie algebra report, flagged as graded pieces of a filtration."""
    rep = kostant_report(datum, J, lams, p, f, cap, weyl_cap)
    rep.kind = ReportKind.GROUP
    rep.caveat = True
    rep.metadata["caveat"] = "graded pieces of a stable filtration, not a canonical direct sum"
    return rep


def left_adjoint_report(datum: RootDatum, J, lams, p: int, f: int = 1,
                        cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP) -> CohomologyReport:
    """Degree n = l(w) - dim N_0 holds L_J(w . lambda) twisted by delta."""
    J = normalize_subset(datum, J)
    rep = group_cohomology_report(datum, J, lams, p, f, cap, weyl_cap)
    levi = build_levi(datum, J, f)
    delta = delta_character(datum, J, f)
    dchar = restrict_mod_p(delta, levi.central_basis, p, f)
    degrees = {}
    for n, cs in rep.degrees.items():
        degrees[n - levi.dim_N0] = [
            Constituent(add_weights(c.weight, delta), c.witness_w, c.dim, c.central_char + dchar) for c in cs
        ]
    rep.kind = ReportKind.LEFT_ADJOINT
    rep.degrees = degrees
    rep.metadata["delta"] = [list(x) for x in delta]
    rep.metadata["dim_N0"] = levi.dim_N0
    return rep


@dataclass
class SatakeTargetReport:
    J: frozenset
    targets: dict  # n -> list of Constituent
    orthogonality: object  # CheckReport
    torus_ext_ranks: list | None
    metadata: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "J": sorted(j + 1 for j in self.J),
            "orthogonality": self.orthogonality.to_dict(),
            "targets": [
                {"n": n, "constituents": [c.to_dict() for c in cs]} for n, cs in sorted(self.targets.items())
            ],
            "torus_ext_ranks": self.torus_ext_ranks,
            "metadata": self.metadata,
        }


def torus_ext_ranks(datum: RootDatum, f: int):
    """Free ranks C(f rk, i) of the torus Ext algebra, i = 0..f rk."""
    n = f * datum.lattice_rank
    return [comb(n, i) for i in range(n + 1)]


def satake_target_report(datum: RootDatum, J, lams, p: int, f: int = 1,
                         cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP) -> SatakeTargetReport:
    J = normalize_subset(datum, J)
    lams = as_underline(lams, datum, f)
    _require_assumptions(datum, lams, p)
    orth = check_orthogonality_direct(datum, J, lams, p, f, cap, weyl_cap)
    if not orth.passed:
        raise OrthogonalityFails("central characters of distinct degrees coincide", orth)
    la = left_adjoint_report(datum, J, lams, p, f, cap, weyl_cap)
    meta = {
        "non_canonical": NON_CANONICAL_NOTE,
        "xi": xi_and_hM(datum, J).to_dict(),
        "dim_N0": la.metadata["dim_N0"],
    }
    ranks = torus_ext_ranks(datum, f) if not J else None
    return SatakeTargetReport(J, la.degrees, orth, ranks, meta)


@dataclass
class PrincipalSeriesReport:
    chi0: ModPCharacter
    matched_w: tuple | None
    dims: dict  # degree -> dimension (empty when unmatched: everything vanishes)

    def to_dict(self):
        return {
            "chi0": self.chi0.to_dict(),
            "matched_w": underline_words(self.matched_w) if self.matched_w is not None else None,
            "dims": [[i, d] for i, d in sorted(self.dims.items())],
        }


def principal_series_report(datum: RootDatum, chi0: ModPCharacter, p: int, f: int = 1,
                            cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP) -> PrincipalSeriesReport:
    """Cohomology dimensions of the principal series attached to chi0."""
    pb = check_p_bound(datum, p)
    if not pb.passed:
        raise AssumptionViolated(f"p = {p} does not exceed h + 1", pb)
    basis = torus_basis(datum)
    if chi0.modulus != p**f - 1 or chi0.basis_tag != basis.tag or len(chi0.exponents) != len(basis):
        raise BasisShapeMismatch("chi0 must be a character of the full torus modulo p^f - 1")
    elems = enumerate_weyl(datum, weyl_cap)
    if len(elems) ** f > cap:
        raise EnumerationCap(f"|W|^f = {len(elems) ** f} exceeds cap {cap}")
    zero = as_underline(None, datum, f)
    matches = []
    for ws in product(elems, repeat=f):
        mu = dot_action(ws, zero, datum)
        neg = tuple(tuple(-x for x in m) for m in mu)
        if restrict_mod_p(neg, basis, p, f) == chi0:
            matches.append(ws)
    if len(matches) > 1:  # pragma: no cover - excluded by multiplicity-freeness
        raise AssumptionViolated("character matched by several Weyl elements")
    if not matches:
        return PrincipalSeriesReport(chi0, None, {})
    ws = matches[0]
    ell = sum(w.length for w in ws)
    n = f * datum.lattice_rank
    return PrincipalSeriesReport(chi0, ws, {ell + i: comb(n, i) for i in range(n + 1)})


@dataclass
class ParameterSupport:
    J: frozenset
    verdict: str
    points: list | None  # [(ModPCharacter, [degrees])] or None when orthogonality fails
    reason: str | None = None

    def to_dict(self):
        return {
            "J": sorted(j + 1 for j in self.J),
            "verdict": self.verdict,
            "reason": self.reason,
            "points": None if self.points is None else [
                {"character": z.to_dict(), "degrees": degs} for z, degs in self.points
            ],
        }


def all_subsets(rank):
    return [frozenset(c) for k in range(rank + 1) for c in combinations(range(rank), k)]


def parameter_support(datum: RootDatum, lams, p: int, f: int = 1, subsets=None,
                      cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP):
    """Support points of the left adjoint's cohomology on each central torus."""
    lams = as_underline(lams, datum, f)
    subsets = all_subsets(datum.rank) if subsets is None else [normalize_subset(datum, J) for J in subsets]

    def one(J):
        try:
            orth = check_orthogonality_direct(datum, J, lams, p, f, cap, weyl_cap)
        except NotPSmall as exc:
            return ParameterSupport(J, "NotApplicable", None, str(exc))
        if not orth.passed:
            return ParameterSupport(J, orth.verdict.value, None, "orthogonality fails")
        levi = build_levi(datum, J, f)
        delta = delta_character(datum, J, f)
        reps = minimal_coset_reps(datum, J, weyl_cap).elements
        found = {}
        for ws in product(reps, repeat=f):
            mu = add_weights(dot_action(ws, lams, datum), delta)
            z = restrict_mod_p(mu, levi.central_basis, p, f)
            n = sum(w.length for w in ws) - levi.dim_N0
            degs = found.setdefault(z, [])
            if n not in degs:
                degs.append(n)
        points = sorted(((z, sorted(d)) for z, d in found.items()), key=lambda t: (t[1], t[0].exponents))
        return ParameterSupport(J, orth.verdict.value, points)

    return ordered_map(one, subsets)
