"""Comparison of the Chevalley-Eilenberg oracle against Kostant reports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .cohomology import kostant_report
from .oracle import ce_cohomology_trivial, chevalley_constants
from .root_datum import RootDatum
from .weights import freudenthal


def torus_character(report) -> dict:
    """T-weight multiset of each degree, expanding every L_J constituent by Freudenthal."""
    datum_J = report.J
    out = {}
    for n, cons in report.degrees.items():
        counter = Counter()
        for c in cons:
            tables = [freudenthal(_datum_of(c), mu, datum_J).entries for mu in c.weight]
            for combo in product(*(t.items() for t in tables)):
                mult = 1
                for _, m in combo:
                    mult *= m
                counter[tuple(w for w, _ in combo)] += mult
        out[n] = counter
    return out


def _datum_of(constituent):
    return constituent.witness_w[0].datum


@dataclass
class OracleComparison:
    agree: bool
    kostant_dims: list
    oracle_dims: list
    weight_mismatches: list = field(default_factory=list)

    def to_dict(self):
        return {
            "agree": self.agree,
            "kostant_dims": self.kostant_dims,
            "oracle_dims": self.oracle_dims,
            "weight_mismatch_degrees": self.weight_mismatches,
        }


def compare_with_oracle(datum: RootDatum, J, p: int, f: int = 1, table=None) -> OracleComparison:
    """Per-degree dimensions and T-weight multisets for lambda = 0."""
    rep = kostant_report(datum, J, None, p, f)
    ce = ce_cohomology_trivial(datum, J, p, f, table=table or chevalley_constants(datum))
    top = len(ce.dims) - 1
    kdims = [rep.dims().get(i, 0) for i in range(top + 1)]
    chars = torus_character(rep)
    bad = []
    for i in range(top + 1):
        oracle = Counter({mu: d for (k, mu), d in ce.weight_dims.items() if k == i})
        if oracle != chars.get(i, Counter()):
            bad.append(i)
    agree = kdims == ce.dims and not bad
    return OracleComparison(agree, kdims, list(ce.dims), bad)
