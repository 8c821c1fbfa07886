"""Decision procedures for the hypotheses on p, lambda and J.

The direct orthogonality check is exact and is the ground truth; the four
sufficient criteria are cross-checks against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product

from .errors import EnumerationCap, NotPSmall, WrongMode
from .intlinalg import dot
from .levi import build_levi, is_abelian_nilradical, nilradical_roots, xi_and_hM
from .root_datum import RootDatum, center_is_connected, coxeter_number
from .weights import ModPCharacter, as_underline, is_p_small, restrict_mod_p
from .weyl import DEFAULT_WEYL_CAP, dot as dot_single, minimal_coset_reps, normalize_subset, weak_order_leq

DEFAULT_UNDERLINE_CAP = 10**6
DEFAULT_STATE_CAP = 4 * 10**6
MAX_WITNESSES = 20


class Verdict(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


class Criterion(str, Enum):
    MT = "MT"
    TRIVIAL_WT = "TrivialWt"
    BRUHAT = "Bruhat"
    ABELIAN = "Abelian"


@dataclass
class CheckReport:
    name: str
    verdict: Verdict
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == Verdict.FAIL and not self.witnesses:
            raise ValueError(f"failing check {self.name} must carry a witness")

    @property
    def passed(self):
        return self.verdict == Verdict.PASS

    def to_dict(self):
        return {
            "name": self.name,
            "verdict": self.verdict.value,
            "witnesses": [w.to_dict() if hasattr(w, "to_dict") else w for w in self.witnesses],
            "details": self.details,
        }


def underline_words(ws):
    return [list(w.word_1based) for w in ws]


def underline_label(ws):
    return ",".join(w.label() for w in ws)


@dataclass(frozen=True)
class OrthogonalityWitness:
    v: tuple  # underline Weyl element
    w: tuple
    character: object  # ModPCharacter shared by both

    @property
    def lengths(self):
        return (sum(x.length for x in self.v), sum(x.length for x in self.w))

    def to_dict(self):
        return {
            "v": underline_words(self.v),
            "w": underline_words(self.w),
            "v_label": underline_label(self.v),
            "w_label": underline_label(self.w),
            "lengths": list(self.lengths),
            "character": self.character.to_dict(),
        }


def check_p_bound(datum: RootDatum, p: int) -> CheckReport:
    h = coxeter_number(datum)
    details = {"p": p, "h": h, "unramified": "structural: only unramified extensions are modeled"}
    if p > h + 1:
        return CheckReport("p_bound", Verdict.PASS, details=details)
    return CheckReport("p_bound", Verdict.FAIL, [{"p": p, "h_plus_1": h + 1}], details)


def _require_p_small(datum, lams, p):
    res = is_p_small(datum, lams, p)
    if not res:
        idx, j, val = res.witness
        raise NotPSmall(
            f"weight is not {p}-small: <lambda_{j} + rho, coroot of root #{idx + 1}> = {val}",
            witness={"root": idx + 1, "embedding": j, "pairing": str(val)},
        )


def _component_characters(datum, reps, lam_j, basis, p, j, q1):
    """Per-element contribution p^j <w . lam_j, xi_b> mod (q - 1)."""
    pj = p**j
    out = []
    for w in reps:
        mu = dot_single(w, lam_j, datum)
        out.append(tuple(pj * dot(mu, xi) % q1 for xi in basis.vectors))
    return out


def check_orthogonality_direct(
    datum: RootDatum, J, lams, p: int, f: int = 1,
    cap: int = DEFAULT_UNDERLINE_CAP, weyl_cap: int = DEFAULT_WEYL_CAP,
    state_cap: int = DEFAULT_STATE_CAP,
) -> CheckReport:
    """Distinct total lengths must give distinct central characters on C_M."""
    J = normalize_subset(datum, J)
    lams = as_underline(lams, datum, f)
    _require_p_small(datum, lams, p)
    levi = build_levi(datum, J, f)
    basis = levi.central_basis
    reps = minimal_coset_reps(datum, J, weyl_cap).elements
    size = len(reps) ** f
    details = {"J": sorted(j + 1 for j in J), "basis": basis.tag, "underline_count": size}
    if size <= cap:
        details["method"] = "enumeration"
        seen = {}  # character -> {length: first underline element}
        witnesses = []
        collisions = 0
        for ws in product(reps, repeat=f):
            mu = tuple(dot_single(w, lam, datum) for w, lam in zip(ws, lams))
            chi = restrict_mod_p(mu, basis, p, f)
            length = sum(w.length for w in ws)
            by_len = seen.setdefault(chi, {})
            if length not in by_len:
                other = next(iter(by_len.values()), None)
                if other is not None:
                    collisions += 1
                    if len(witnesses) < MAX_WITNESSES:
                        witnesses.append(OrthogonalityWitness(other, ws, chi))
                by_len[length] = ws
        details["distinct_characters"] = len(seen)
    else:
        details["method"] = "stratified"
        witnesses, collisions, n = _stratified(datum, reps, lams, basis, p, f, state_cap)
        details["distinct_characters"] = n
    details["collisions"] = collisions
    verdict = Verdict.FAIL if witnesses else Verdict.PASS
    return CheckReport("orthogonality_direct", verdict, witnesses, details)


def _stratified(datum, reps, lams, basis, p, f, state_cap):
    """Dynamic programme over embeddings keyed by (partial character, length)."""
    q1 = p**f - 1
    states = {((0,) * len(basis.vectors), 0): ()}
    for j in range(f):
        contrib = _component_characters(datum, reps, lams[j], basis, p, j, q1)
        nxt = {}
        for (chi, length), rep in states.items():
            for w, c in zip(reps, contrib):
                key = (tuple((a + b) % q1 for a, b in zip(chi, c)), length + w.length)
                if key not in nxt:
                    nxt[key] = rep + (w,)
        if len(nxt) > state_cap:
            raise EnumerationCap(f"stratified state count {len(nxt)} exceeds cap {state_cap}")
        states = nxt
    grouped = {}
    for (chi, length), rep in sorted(states.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        grouped.setdefault(chi, []).append(rep)
    witnesses, collisions = [], 0
    for chi, reps_ in grouped.items():
        for other in reps_[1:]:
            collisions += 1
            if len(witnesses) < MAX_WITNESSES:
                witnesses.append(OrthogonalityWitness(reps_[0], other, ModPCharacter(q1, basis.tag, chi)))
    return witnesses, collisions, len(grouped)


def _top_coroot_roots(datum):
    """Roots whose coroot is highest or second-highest in its component."""
    tops = {}
    for r in datum.positive_roots.roots:
        tops[r.component] = max(tops.get(r.component, 0), r.coroot_height)
    return [r for r in datum.positive_roots.roots if r.coroot_height >= tops[r.component] - 1]


def weak_order_cross_length_pairs(datum: RootDatum, J, weyl_cap=DEFAULT_WEYL_CAP):
    """Pairs of elements of ^J W with distinct lengths that are incomparable."""
    reps = minimal_coset_reps(datum, J, weyl_cap).elements
    bad = []
    for v in reps:
        for w in reps:
            if v.length < w.length and not weak_order_leq(v, w):
                bad.append((v, w))
    return bad


def check_sufficient_criterion(
    datum: RootDatum, J, lams, p: int, f: int, which, refine: bool = False,
    weyl_cap: int = DEFAULT_WEYL_CAP,
) -> CheckReport:
    which = Criterion(which)
    J = normalize_subset(datum, J)
    lams = as_underline(lams, datum, f)
    zero = not any(any(lam) for lam in lams)
    if which in (Criterion.MT, Criterion.TRIVIAL_WT) and J:
        raise WrongMode(f"criterion {which.value} requires J = empty set")
    if which != Criterion.MT and not zero:
        raise WrongMode(f"criterion {which.value} requires lambda = 0")
    name = f"criterion_{which.value}"
    pb = check_p_bound(datum, p)
    failures = []
    details = {"criterion": which.value, "p_bound": pb.verdict.value}
    if not pb.passed:
        failures.append({"hypothesis": "p_bound", "p": p, "h": pb.details["h"]})

    if which == Criterion.MT:
        connected = center_is_connected(datum)
        details["center_connected"] = connected
        if not connected:
            failures.append({"hypothesis": "center_connected"})
        small = is_p_small(datum, lams, p)
        details["p_small"] = small.ok
        if not small:
            failures.append({"hypothesis": "p_small", "root": small.witness[0] + 1, "embedding": small.witness[1]})
        roots = _top_coroot_roots(datum) if refine else list(datum.positive_roots.roots)
        details["refined"] = refine
        two_rho = datum.two_rho
        for r in roots:
            vals = [dot([2 * x + y for x, y in zip(lam, two_rho)], r.coroot) for lam in lams]
            if all(v == 2 * (p - 1) for v in vals):
                failures.append({"hypothesis": "pairing_not_p_minus_1", "root": r.index + 1, "coeffs": list(r.coeffs)})
    elif which in (Criterion.BRUHAT, Criterion.ABELIAN):
        n = len(nilradical_roots(datum, J))
        h_M = xi_and_hM(datum, J).h_M
        bound = n * h_M + 1
        details.update({"dim_N_alg": n, "h_M": h_M, "p_lower_bound": bound})
        if not p > bound:
            failures.append({"hypothesis": "p_gt_dimN_hM_plus_1", "p": p, "bound": bound})
        if which == Criterion.BRUHAT:
            bad = weak_order_cross_length_pairs(datum, J, weyl_cap)
            details["incomparable_pairs"] = len(bad)
            for v, w in bad[:MAX_WITNESSES]:
                failures.append({"hypothesis": "weak_order_comparable", "v": v.word_1based, "w": w.word_1based})
        else:
            ab = is_abelian_nilradical(datum, J)
            details["abelian"] = ab
            if not ab:
                failures.append({"hypothesis": "abelian_nilradical"})
    verdict = Verdict.FAIL if failures else Verdict.PASS
    return CheckReport(name, verdict, failures, details)


@dataclass(frozen=True)
class ValuationEntry:
    root: object
    value: Fraction


def p_valuation_entries(datum: RootDatum, J):
    """ht(alpha)/h(alpha) for every root of the nilradical."""
    cox = datum.positive_roots.coxeter_numbers
    return [ValuationEntry(r, Fraction(r.height, cox[r.component])) for r in nilradical_roots(datum, J)]


def p_valuation_table(datum: RootDatum, J, p: int) -> CheckReport:
    """Valuation table with the saturation window 1/(p-1) < value <= 1."""
    entries = p_valuation_entries(datum, J)
    bad = []
    lo = Fraction(1, p - 1)
    for e in entries:
        r, v = e.root, e.value
        if not (lo < v <= 1):
            bad.append({"root": r.index + 1, "value": str(v)})
    details = {
        "p": p,
        "entries": [{"root": e.root.index + 1, "coeffs": list(e.root.coeffs), "value": str(e.value)} for e in entries],
        "max": str(max((e.value for e in entries), default=Fraction(0))),
    }
    return CheckReport("p_valuation", Verdict.FAIL if bad else Verdict.PASS, bad, details)


def run_all_checks(datum, J, lams, p, f, cap=DEFAULT_UNDERLINE_CAP, weyl_cap=DEFAULT_WEYL_CAP):
    """Every check that applies to the configuration, in a fixed order."""
    lams = as_underline(lams, datum, f)
    reports = [check_p_bound(datum, p), p_valuation_table(datum, J, p)]
    try:
        reports.append(check_orthogonality_direct(datum, J, lams, p, f, cap, weyl_cap))
    except NotPSmall as exc:
        reports.append(CheckReport("orthogonality_direct", Verdict.NOT_APPLICABLE, details={"reason": str(exc)}))
    for which in Criterion:
        try:
            reports.append(check_sufficient_criterion(datum, J, lams, p, f, which, weyl_cap=weyl_cap))
        except WrongMode as exc:
            reports.append(CheckReport(f"criterion_{which.value}", Verdict.NOT_APPLICABLE, details={"reason": str(exc)}))
    return reports
