"""Weyl groups: enumeration, lengths, inversion sets, parabolic cosets.

Words are read as products: the word ``(2, 1)`` is ``s_2 s_1`` and acts on
a character by applying ``s_1`` first.  The inversion set of ``w`` is
``Phi^+ ∩ w(Phi^-)``; inclusion of inversion sets is the right weak order
(prefix order on reduced words).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import GroupTooLarge, NotDominant, ShapeMismatch
from .intlinalg import mat_vec
from .root_datum import RootDatum, weyl_group_order

DEFAULT_WEYL_CAP = 10**6


@dataclass(frozen=True, eq=False)
class WeylElement:
    index: int
    word: tuple  # 0-based simple reflection indices
    matrix: tuple  # action on X^* (column vectors)
    key: tuple  # w(2 rho)
    datum: RootDatum = field(repr=False)

    @property
    def length(self):
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.key == other.key and self.datum == other.datum

    def __hash__(self):
        return hash(self.key)

    def act(self, v):
        return mat_vec(self.matrix, v)

    @cached_property
    def inversion_set(self):
        """Indices of the positive roots in ``Phi^+ ∩ w(Phi^-)``."""
        idx = self.datum.root_index
        out = set()
        for r in self.datum.positive_roots.roots:
            s = idx[self.act(r.vector)]
            if s < 0:
                out.add(-s - 1)
        return frozenset(out)

    @property
    def word_1based(self):
        return [i + 1 for i in self.word]

    def label(self):
        return "e" if not self.word else "".join(f"s{i + 1}" for i in self.word)


def _reflection_matrix(datum, i):
    a, c = datum.simple_roots[i], datum.simple_coroots[i]
    d = datum.lattice_rank
    return tuple(tuple(int(r == k) - a[r] * c[k] for k in range(d)) for r in range(d))


def _mat_mul(A, B):
    Bt = list(zip(*B))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in Bt) for row in A)


class WeylGroup:
    """All elements of W in BFS order, with reduced words and actions."""

    def __init__(self, datum: RootDatum, cap=DEFAULT_WEYL_CAP):
        order = weyl_group_order(datum) if datum.rank else 1
        if order > cap:
            raise GroupTooLarge(f"|W| = {order} exceeds cap {cap}")
        self.datum = datum
        d = datum.lattice_rank
        ident = tuple(tuple(int(r == k) for k in range(d)) for r in range(d))
        refl = [_reflection_matrix(datum, i) for i in range(datum.rank)]
        idx = datum.root_index
        e = WeylElement(0, (), ident, datum.two_rho, datum)
        elements = [e]
        seen = {e.key: e}
        layer = [e]
        while layer:
            nxt = []
            for w in layer:
                for i in range(datum.rank):
                    img = w.act(datum.simple_roots[i])
                    if idx[img] < 0:
                        continue
                    key = tuple(k - 2 * x for k, x in zip(w.key, img))
                    if key in seen:
                        continue
                    new = WeylElement(len(elements), w.word + (i,), _mat_mul(w.matrix, refl[i]), key, datum)
                    seen[key] = new
                    elements.append(new)
                    nxt.append(new)
            layer = nxt
        self.elements = elements
        self._by_key = seen
        self.identity = e

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def from_key(self, key):
        return self._by_key[tuple(key)]

    def multiply(self, v: WeylElement, w: WeylElement) -> WeylElement:
        return self._by_key[v.act(w.key)]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(tuple(reversed(w.word)))

    def from_word(self, word) -> WeylElement:
        x = self.identity
        for i in word:
            x = self.multiply(x, self.simple(i))
        return x

    def simple(self, i) -> WeylElement:
        return self.elements[1 + i] if self.elements[1 + i].word == (i,) else self.from_key(
            _reflection_image(self.datum, i)
        )

    @cached_property
    def longest(self):
        return max(self.elements, key=lambda w: w.length)


def _reflection_image(datum, i):
    return tuple(k - 2 * a for k, a in zip(datum.two_rho, datum.simple_roots[i]))


_GROUPS: dict = {}


def weyl_group(datum: RootDatum, cap=DEFAULT_WEYL_CAP) -> WeylGroup:
    g = _GROUPS.get(datum)
    if g is None:
        g = WeylGroup(datum, cap)
        _GROUPS[datum] = g
    elif len(g) > cap:
        raise GroupTooLarge(f"|W| = {len(g)} exceeds cap {cap}")
    return g


def enumerate_weyl(datum: RootDatum, cap=DEFAULT_WEYL_CAP):
    """List of all Weyl group elements (BFS order, one reduced word each)."""
    return list(weyl_group(datum, cap).elements)


def length_counts(elements):
    counts = {}
    for w in elements:
        counts[w.length] = counts.get(w.length, 0) + 1
    return dict(sorted(counts.items()))


def normalize_subset(datum: RootDatum, J):
    J = frozenset(int(j) for j in J)
    bad = [j for j in J if not 0 <= j < datum.rank]
    if bad:
        raise ValueError(f"simple-root indices {sorted(bad)} out of range for rank {datum.rank}")
    return J


def phi_J_plus(datum: RootDatum, J):
    """Indices of positive roots supported on J."""
    J = normalize_subset(datum, J)
    return frozenset(
        r.index for r in datum.positive_roots.roots
        if all(c == 0 or i in J for i, c in enumerate(r.coeffs))
    )


@dataclass(frozen=True)
class CosetReps:
    J: frozenset
    elements: tuple
    by_length: dict

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def minimal_coset_reps(datum: RootDatum, J, cap=DEFAULT_WEYL_CAP) -> CosetReps:
    """The set {w in W : w^{-1}(Phi_J^+) ⊆ Phi^+} in canonical BFS order."""
    J = normalize_subset(datum, J)
    pj = phi_J_plus(datum, J)
    elems = tuple(w for w in weyl_group(datum, cap) if not (w.inversion_set & pj))
    return CosetReps(J, elems, length_counts(elems))


def parabolic_subgroup(datum: RootDatum, J, cap=DEFAULT_WEYL_CAP):
    """Elements of W_J (those whose inversion set lies in Phi_J^+)."""
    J = normalize_subset(datum, J)
    pj = phi_J_plus(datum, J)
    return [w for w in weyl_group(datum, cap) if w.inversion_set <= pj]


def longest_relative_element(datum: RootDatum, J, cap=DEFAULT_WEYL_CAP) -> WeylElement:
    """The unique element of ^J W of length |Phi^+ - Phi_J^+|."""
    J = normalize_subset(datum, J)
    target = len(datum.positive_roots) - len(phi_J_plus(datum, J))
    reps = minimal_coset_reps(datum, J, cap)
    top = [w for w in reps if w.length == target]
    assert len(top) == 1, "relative longest element must be unique"
    return top[0]


def weak_order_leq(v: WeylElement, w: WeylElement) -> bool:
    """Right weak order: Phi_v ⊆ Phi_w."""
    return v.inversion_set <= w.inversion_set


def dot(w: WeylElement, lam, datum: RootDatum):
    """w . lam = w(lam + rho) - rho for a single weight."""
    lam = tuple(lam)
    if len(lam) != datum.lattice_rank:
        raise ShapeMismatch(f"weight {lam} does not have length {datum.lattice_rank}")
    shift = [k - r for k, r in zip(w.key, datum.two_rho)]
    if any(s % 2 for s in shift):  # pragma: no cover - w(2rho) - 2rho is a sum of roots times 2
        raise ValueError("non-integral dot action result")
    return tuple(x + s // 2 for x, s in zip(w.act(lam), shift))


def dot_action(ws, lams, datum: RootDatum):
    """Componentwise dot action of an underline element on an underline weight."""
    ws, lams = tuple(ws), tuple(tuple(x) for x in lams)
    if len(ws) != len(lams):
        raise ShapeMismatch(f"{len(ws)} Weyl components but {len(lams)} weight components")
    return tuple(dot(w, lam, datum) for w, lam in zip(ws, lams))


def underline_elements(reps, f):
    """All f-tuples of elements of ``reps`` in lexicographic product order."""
    return product(tuple(reps), repeat=f)


def total_length(ws):
    return sum(w.length for w in ws)


def check_dominant(datum: RootDatum, lam, J=None):
    """Raise NotDominant unless <lam, alpha^vee> >= 0 for the simple roots in J."""
    idx = range(datum.rank) if J is None else sorted(J)
    for i in idx:
        if sum(a * b for a, b in zip(lam, datum.simple_coroots[i])) < 0:
            raise NotDominant(f"weight {tuple(lam)} is not dominant at alpha_{i + 1}")
