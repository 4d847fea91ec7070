"""Normal forms in the quotient of the braid group by the commutator
subgroup of the pure braid group.

Every class has a unique expression ``A^v * L(p)`` where ``p`` is the image
permutation, ``v`` the abelianized pure part, and ``L`` a fixed set-theoretic
section assigning each permutation a positive lift word.  The default section
is :func:`canonical_lift` (bubble-sort lift, length = inversion count); all
group operations accept a ``section`` argument so that results can be checked
to be independent of that choice.

Multiplication uses the twisted-product formula

    (p1, v1) * (p2, v2) = (p1*p2, v1 + v2.precompose(p1) + c(p1, p2))

with the 2-cocycle ``c(p1, p2) = linking_vector(L(p1) L(p2) L(p1*p2)^-1)``.
Ground truth is concatenation of representative words followed by
:func:`normalize`; the tests cross-check the two routes.

Conjugation acts on the lattice through pairs:
``g A[P] g^-1 = A[Q]`` with ``Q = perm(g)^{-1}(P)`` applied pointwise.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Mapping

from .braidword import BraidWord, PairVector, linking_vector, pairs, pure_word
from .permutation import Permutation

Section = Callable[[Permutation], BraidWord]

#: Returned by :func:`element_order` for elements of infinite order.
INFINITE = math.inf


@functools.lru_cache(maxsize=None)
def canonical_lift(p: Permutation) -> BraidWord:
    """Positive bubble-sort lift of ``p``: scan positions left to right and
    swap whenever the strands at adjacent positions are inverted with respect
    to their target positions.

    >>> str(canonical_lift(Permutation.from_text(3, "(1,3,2)")))
    '1 2'
    """
    order = list(range(1, p.n + 1))
    letters: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for pos in range(1, p.n):
            if p(order[pos - 1]) > p(order[pos]):
                order[pos - 1], order[pos] = order[pos], order[pos - 1]
                letters.append(pos)
                swapped = True
    return BraidWord(p.n, tuple(letters))


@functools.lru_cache(maxsize=None)
def reverse_scan_lift(p: Permutation) -> BraidWord:
    """Alternative deterministic section scanning positions right to left.
    Same length and permutation as :func:`canonical_lift`, generally a
    different word; used to check section independence."""
    order = list(range(1, p.n + 1))
    letters: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for pos in range(p.n - 1, 0, -1):
            if p(order[pos - 1]) > p(order[pos]):
                order[pos - 1], order[pos] = order[pos], order[pos - 1]
                letters.append(pos)
                swapped = True
    return BraidWord(p.n, tuple(letters))


@dataclass(frozen=True)
class QuotientElement:
    """Normal form ``A^vec * L(perm)`` relative to a fixed section."""

    perm: Permutation
    vec: PairVector

    def __post_init__(self) -> None:
        if self.perm.n != self.vec.n:
            raise ValueError("degree mismatch between permutation and vector")

    @property
    def n(self) -> int:
        return self.perm.n

    @staticmethod
    def identity(n: int) -> "QuotientElement":
        return QuotientElement(Permutation.identity(n), PairVector.zero(n))

    def is_identity(self) -> bool:
        return self.perm.is_identity() and self.vec.is_zero()

    def is_pure(self) -> bool:
        return self.perm.is_identity()

    # Operator sugar fixed to the default section.
    def __mul__(self, other: "QuotientElement") -> "QuotientElement":
        if not isinstance(other, QuotientElement):
            return NotImplemented
        return mul(self, other)

    def inverse(self) -> "QuotientElement":
        return inverse(self)

    def __pow__(self, m: int) -> "QuotientElement":
        return power(self, m)

    def conj(self, c: "QuotientElement") -> "QuotientElement":
        return conjugate(self, c)

    def order(self) -> int | float:
        return element_order(self)

    def embed(self, m: int) -> "QuotientElement":
        return embed(self, m)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "perm": list(self.perm.images),
            "vec": self.vec.to_json(),
        }

    @staticmethod
    def from_json(data: Mapping) -> "QuotientElement":
        n = int(data["n"])
        perm = Permutation(tuple(int(i) for i in data["perm"]))
        if perm.n != n:
            raise ValueError("perm length does not match n")
        vec = PairVector.from_json(n, data.get("vec", {}))
        return QuotientElement(perm, vec)

    def __str__(self) -> str:
        return f"{self.perm} | {self.vec}"


def pure(vec: PairVector) -> QuotientElement:
    """The lattice vector ``vec`` as a quotient element."""
    return QuotientElement(Permutation.identity(vec.n), vec)


def basis_element(n: int, i: int, j: int) -> QuotientElement:
    return pure(PairVector.basis(n, i, j))


def normalize(word: BraidWord, section: Section = canonical_lift) -> QuotientElement:
    """Normal form of a word: split off the section lift of its permutation.

    >>> normalize(BraidWord.from_text(3, "-1 2 -1 2 -1 2")).is_identity()
    True
    """
    p = word.permutation()
    vec = linking_vector(word * section(p).inverse())
    return QuotientElement(p, vec)


@functools.lru_cache(maxsize=None)
def _cocycle(p1: Permutation, p2: Permutation, section: Section) -> PairVector:
    lift = section
    return linking_vector(lift(p1) * lift(p2) * lift(p1 * p2).inverse())


def mul(g: QuotientElement, h: QuotientElement,
        section: Section = canonical_lift) -> QuotientElement:
    if g.n != h.n:
        raise ValueError("degree mismatch")
    p = g.perm * h.perm
    vec = g.vec + h.vec.precompose(g.perm) + _cocycle(g.perm, h.perm, section)
    return QuotientElement(p, vec)


def inverse(g: QuotientElement, section: Section = canonical_lift) -> QuotientElement:
    q = g.perm.inverse()
    w = (-g.vec) - _cocycle(g.perm, q, section)
    return QuotientElement(q, w.precompose(q))


def power(g: QuotientElement, m: int, section: Section = canonical_lift) -> QuotientElement:
    if m < 0:
        return power(inverse(g, section), -m, section)
    out = QuotientElement.identity(g.n)
    base = g
    while m:
        if m & 1:
            out = mul(out, base, section)
        m >>= 1
        if m:
            base = mul(base, base, section)
    return out


def conjugate(g: QuotientElement, c: QuotientElement,
              section: Section = canonical_lift) -> QuotientElement:
    """``c * g * c^-1``."""
    return mul(mul(c, g, section), inverse(c, section), section)


def element_order(g: QuotientElement, section: Section = canonical_lift) -> int | float:
    """Order of ``g``; finite exactly when ``g^order(perm)`` has zero vector."""
    k = g.perm.order()
    return k if power(g, k, section).vec.is_zero() else INFINITE


def action_on_basis(g: QuotientElement, pair: tuple[int, int]) -> tuple[int, int]:
    """The pair ``Q`` with ``g A[pair] g^-1 = A[Q]``."""
    return g.perm.inverse().pair_action(pair)


def basis_orbits(g: QuotientElement) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Orbits of the conjugation action of ``g`` on the pair basis.

    Each orbit is listed following the action direction starting from its
    lexicographically least pair; orbits are sorted by their first pair.
    """
    seen: set[tuple[int, int]] = set()
    orbits: list[tuple[tuple[int, int], ...]] = []
    for start in pairs(g.n):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        q = action_on_basis(g, start)
        while q != start:
            orbit.append(q)
            seen.add(q)
            q = action_on_basis(g, q)
        k = orbit.index(min(orbit))
        orbits.append(tuple(orbit[k:] + orbit[:k]))
    return tuple(sorted(orbits, key=lambda o: o[0]))


def to_word(g: QuotientElement, section: Section = canonical_lift) -> BraidWord:
    """A representative word: pure part in lex pair order, then the lift."""
    return pure_word(g.vec) * section(g.perm)


def embed(g: QuotientElement, m: int) -> QuotientElement:
    """Image under the standard inclusion on the first ``n`` strands.

    Normal forms include coordinatewise: the permutation gains fixed points
    and pair coefficients are carried over unchanged.
    """
    if m < g.n:
        raise ValueError("cannot embed into fewer strands")
    perm = Permutation(g.perm.images + tuple(range(g.n + 1, m + 1)))
    vec = PairVector.from_pairs(m, dict(g.vec.support()))
    return QuotientElement(perm, vec)
