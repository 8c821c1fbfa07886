"""Split root data: Cartan types, lattice presets and positive-root tables.

Characters and cocharacters both live in ``Z^d`` with the standard dot
product as the pairing.  The Cartan matrix convention is Bourbaki's:
``cartan[i][j] = <alpha_i, alpha_j^vee>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import prod

from .errors import InvalidRootDatum, InvalidType, UnsupportedPreset
from .intlinalg import dot, invariant_factors, rank_over_z


class Preset(str, Enum):
    SIMPLY_CONNECTED = "SimplyConnected"
    ADJOINT = "Adjoint"
    GL_STYLE = "GLStyle"
    RAW = "Raw"


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(fam)
        if not isinstance(n, int) or not ok:
            raise InvalidType(f"no Cartan type {fam}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        try:
            return cls(text[0].upper(), int(text[1:]))
        except (IndexError, ValueError):
            raise InvalidType(f"cannot parse Cartan type {text!r}") from None


def cartan_matrix(ct: CartanType):
    """Bourbaki-numbered Cartan matrix, ``M[i][j] = <alpha_i, alpha_j^vee>``."""
    n, fam = ct.rank, ct.family
    M = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        # M[i][j] = a, M[j][i] = b (0-based)
        M[i][j], M[j][i] = a, b

    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            link(n - 2, n - 1, -2, -1)
        elif fam == "C":
            link(n - 2, n - 1, -1, -2)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -1, -3)
    return M


@dataclass(frozen=True)
class Root:
    index: int
    vector: tuple  # in X^*
    coeffs: tuple  # in the basis of simple roots
    height: int
    component: int
    coroot: tuple  # in X_*
    coroot_coeffs: tuple  # in the basis of simple coroots

    @property
    def coroot_height(self):
        return sum(self.coroot_coeffs)


@dataclass(frozen=True)
class PositiveRootTable:
    roots: tuple
    highest_roots: tuple  # one Root per component
    coxeter_numbers: tuple  # one h per component

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


@dataclass(frozen=True)
class RootDatum:
    lattice_rank: int
    simple_roots: tuple
    simple_coroots: tuple
    preset: Preset
    cartan_type: CartanType | None = None

    def __post_init__(self):
        d = self.lattice_rank
        n = len(self.simple_roots)
        if len(self.simple_coroots) != n:
            raise InvalidRootDatum("need as many simple coroots as simple roots")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != d:
                raise InvalidRootDatum(f"vector {v} does not have length {d}")
        if n and (rank_over_z(self.simple_roots) != n or rank_over_z(self.simple_coroots) != n):
            raise InvalidRootDatum("simple roots and coroots must be linearly independent")
        M = self.cartan
        for i in range(n):
            if M[i][i] != 2:
                raise InvalidRootDatum(f"<alpha_{i+1}, alpha_{i+1}^vee> = {M[i][i]}, expected 2")
            for j in range(n):
                if i != j and (M[i][j] > 0 or (M[i][j] == 0) != (M[j][i] == 0)):
                    raise InvalidRootDatum("pairing matrix is not a generalized Cartan matrix")
        if self.cartan_type is not None and M != cartan_matrix(self.cartan_type):
            raise InvalidRootDatum(f"pairing matrix does not match type {self.cartan_type}")

    @property
    def rank(self):
        """Semisimple rank |Delta|."""
        return len(self.simple_roots)

    @cached_property
    def cartan(self):
        return [[dot(a, c) for c in self.simple_coroots] for a in self.simple_roots]

    @cached_property
    def components(self):
        """Partition of simple-root indices into irreducible components."""
        n = self.rank
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(n):
            for j in range(n):
                if i != j and self.cartan[i][j]:
                    parent[find(i)] = find(j)
        groups = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        return tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: g[0]))

    @cached_property
    def component_of(self):
        out = {}
        for c, comp in enumerate(self.components):
            for i in comp:
                out[i] = c
        return out

    @cached_property
    def positive_roots(self) -> PositiveRootTable:
        return positive_root_table(self)

    @cached_property
    def two_rho(self):
        d = self.lattice_rank
        return tuple(sum(r.vector[k] for r in self.positive_roots.roots) for k in range(d))

    @cached_property
    def root_index(self):
        """Map from root vector (positive or negative) to signed 1-based index."""
        out = {}
        for r in self.positive_roots.roots:
            out[r.vector] = r.index + 1
            out[tuple(-x for x in r.vector)] = -(r.index + 1)
        return out

    def pairing(self, weight, coweight):
        return dot(weight, coweight)

    def to_dict(self):
        return {
            "cartan_type": str(self.cartan_type) if self.cartan_type else None,
            "preset": self.preset.value,
            "lattice_rank": self.lattice_rank,
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
        }


def _unit(d, i):
    return tuple(int(k == i) for k in range(d))


def build_root_datum(ct: CartanType, preset=Preset.SIMPLY_CONNECTED) -> RootDatum:
    """Construct the root datum of type ``ct`` for one of the lattice presets."""
    try:
        preset = Preset(preset)
    except ValueError:
        raise UnsupportedPreset(f"unknown preset {preset!r}") from None
    M = cartan_matrix(ct)
    n = ct.rank
    if preset is Preset.SIMPLY_CONNECTED:
        # X^* = weight lattice in the fundamental-weight basis
        roots = tuple(tuple(M[i]) for i in range(n))
        coroots = tuple(_unit(n, i) for i in range(n))
        d = n
    elif preset is Preset.ADJOINT:
        # X^* = root lattice, X_* = coweight lattice
        roots = tuple(_unit(n, i) for i in range(n))
        coroots = tuple(tuple(M[i][j] for i in range(n)) for j in range(n))
        d = n
    elif preset is Preset.GL_STYLE:
        if ct.family != "A":
            raise UnsupportedPreset("GLStyle is only available for type A")
        d = n + 1
        roots = tuple(
            tuple(int(k == i) - int(k == i + 1) for k in range(d)) for i in range(n)
        )
        coroots = roots
    else:
        raise UnsupportedPreset("use build_raw_root_datum for user-supplied vectors")
    return RootDatum(d, roots, coroots, preset, ct)


def build_raw_root_datum(simple_roots, simple_coroots, cartan_type=None) -> RootDatum:
    simple_roots = tuple(tuple(int(x) for x in v) for v in simple_roots)
    simple_coroots = tuple(tuple(int(x) for x in v) for v in simple_coroots)
    if not simple_roots:
        raise InvalidRootDatum("raw mode needs at least one simple root")
    datum = RootDatum(len(simple_roots[0]), simple_roots, simple_coroots, Preset.RAW, cartan_type)
    # finiteness check: enumeration raises on an infinite (non-finite-type) system
    datum.positive_roots
    return datum


_ROOT_CAP = 10_000


def positive_root_table(datum: RootDatum) -> PositiveRootTable:
    """Enumerate positive roots by closure under addition of simple roots.

    Uses root strings: for a positive root beta and simple alpha_i with
    beta - r alpha_i the bottom of the string, beta + alpha_i is a root iff
    r - <beta, alpha_i^vee> > 0.
    """
    n = datum.rank
    M = datum.cartan
    simple = [_unit(n, i) for i in range(n)]
    known = set(simple)
    layers = [list(simple)]
    while layers[-1]:
        nxt = []
        for beta in layers[-1]:
            for i in range(n):
                pair = sum(beta[k] * M[k][i] for k in range(n))
                r = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        r += 1
                    else:
                        break
                if r - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        if len(known) > _ROOT_CAP:
            raise InvalidRootDatum("root system is not of finite type")
        layers.append(nxt)

    coeff_list = sorted(known, key=lambda c: (sum(c), tuple(-x for x in c)))
    d = datum.lattice_rank

    def to_lattice(coeffs, basis):
        return tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(d))

    # coroot coefficients via descent: beta = s_i(gamma) with gamma lower
    coroot_coeffs = {c: c for c in simple}
    for c in coeff_list:
        if c in coroot_coeffs:
            continue
        for i in range(n):
            pair = sum(c[k] * M[k][i] for k in range(n))
            if pair > 0:
                gamma = tuple(c[k] - (pair if k == i else 0) for k in range(n))
                g = coroot_coeffs[gamma]
                # s_i(gamma^vee) = gamma^vee - <alpha_i, gamma^vee> alpha_i^vee
                a = sum(M[i][k] * g[k] for k in range(n))
                coroot_coeffs[c] = tuple(g[k] - (a if k == i else 0) for k in range(n))
                break
        else:  # pragma: no cover - unreachable for finite systems
            raise InvalidRootDatum(f"no descent found for root {c}")

    comp_of = datum.component_of
    roots = []
    for idx, c in enumerate(coeff_list):
        support = [i for i in range(n) if c[i]]
        roots.append(
            Root(
                index=idx,
                vector=to_lattice(c, datum.simple_roots),
                coeffs=c,
                height=sum(c),
                component=comp_of[support[0]],
                coroot=to_lattice(coroot_coeffs[c], datum.simple_coroots),
                coroot_coeffs=coroot_coeffs[c],
            )
        )
    highest, cox = [], []
    for comp in range(len(datum.components)):
        top = max((r for r in roots if r.component == comp), key=lambda r: r.height)
        highest.append(top)
        cox.append(top.height + 1)
    return PositiveRootTable(tuple(roots), tuple(highest), tuple(cox))


def center_is_connected(datum: RootDatum) -> bool:
    """True iff X^*/ZPhi is torsion-free (Smith form of the simple roots)."""
    if not datum.rank:
        return True
    return all(x == 1 for x in invariant_factors([list(v) for v in datum.simple_roots]))


def coxeter_number(datum: RootDatum) -> int:
    """Maximum Coxeter number over the irreducible components (1 if none)."""
    return max(datum.positive_roots.coxeter_numbers, default=1)


def weyl_group_order(datum: RootDatum) -> int:
    """|W| from the exponents, read off as the dual of the height partition."""
    total = 1
    table = datum.positive_roots
    for comp in range(len(datum.components)):
        heights = [r.height for r in table.roots if r.component == comp]
        top = max(heights)
        counts = [sum(1 for h in heights if h == k) for k in range(1, top + 1)]
        # exponents: conjugate partition of the (weakly decreasing) counts
        exps = [sum(1 for c in counts if c > j) for j in range(counts[0])]
        total *= prod(e + 1 for e in exps)
    return total
