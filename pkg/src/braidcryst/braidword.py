"""Braid words and the abelianized pure-braid lattice.

A word on ``n`` strands is a sequence of nonzero letters; letter ``k > 0`` is
the positive Artin generator crossing positions ``k, k+1`` and ``-k`` its
inverse.  Text form is space-separated, e.g. ``"2 -1 5 -4"``; the empty
string is the empty word.

The free abelian group on the pure-braid generators ``A[i,j]``
(``1 <= i < j <= n``) is represented by :class:`PairVector` with coordinates
in lexicographic pair order.  ``linking_vector`` maps a *pure* word to its
class there: sweep the word tracking the strand order, credit each letter
``+-k`` to the two strands currently at positions ``k, k+1``, and halve the
totals (a pure word crosses every strand pair an even number of times).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .permutation import Permutation


class NotPureError(ValueError):
    """Raised when a pure-braid-only operation gets a non-pure word."""


def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs ``(i, j)`` with ``1 <= i < j <= n`` in lexicographic order."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def pair_index(n: int, i: int, j: int) -> int:
    """Position of ``(i, j)`` in ``pairs(n)``.

    >>> [pair_index(3, *p) for p in pairs(3)]
    [0, 1, 2]
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"bad pair ({i},{j}) for n={n}")
    return (i - 1) * (2 * n - i) // 2 + (j - i) - 1


@dataclass(frozen=True)
class BraidWord:
    """An unreduced word in the Artin generators of the n-strand braid group."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need at least 2 strands")
        for e in self.letters:
            if e == 0 or abs(e) > self.n - 1:
                raise ValueError(f"letter {e} out of range for n={self.n}")

    @staticmethod
    def from_text(n: int, text: str) -> "BraidWord":
        text = text.strip()
        letters = tuple(int(tok) for tok in text.split()) if text else ()
        return BraidWord(n, letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-e for e in reversed(self.letters)))

    def free_reduced(self) -> "BraidWord":
        """Cancel adjacent inverse letters until none remain."""
        out: list[int] = []
        for e in self.letters:
            if out and out[-1] == -e:
                out.pop()
            else:
                out.append(e)
        return BraidWord(self.n, tuple(out))

    def permutation(self) -> Permutation:
        """Strand ``s`` goes to its final position; first letter acts first."""
        order = list(range(1, self.n + 1))  # order[pos-1] = strand at position pos
        for e in self.letters:
            k = abs(e)
            order[k - 1], order[k] = order[k], order[k - 1]
        images = [0] * self.n
        for pos, strand in enumerate(order, start=1):
            images[strand - 1] = pos
        return Permutation(tuple(images))

    def is_pure(self) -> bool:
        return self.permutation().is_identity()

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


@dataclass(frozen=True)
class PairVector:
    """Integer vector indexed by strand pairs in lexicographic order."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n * (self.n - 1) // 2:
            raise ValueError("coefficient count does not match n")

    @staticmethod
    def zero(n: int) -> "PairVector":
        return PairVector(n, (0,) * (n * (n - 1) // 2))

    @staticmethod
    def basis(n: int, i: int, j: int) -> "PairVector":
        coeffs = [0] * (n * (n - 1) // 2)
        coeffs[pair_index(n, i, j)] = 1
        return PairVector(n, tuple(coeffs))

    @staticmethod
    def from_pairs(n: int, data: Mapping[tuple[int, int], int]) -> "PairVector":
        coeffs = [0] * (n * (n - 1) // 2)
        for (i, j), c in data.items():
            coeffs[pair_index(n, i, j)] = c
        return PairVector(n, tuple(coeffs))

    def coefficient(self, i: int, j: int) -> int:
        return self.coeffs[pair_index(self.n, i, j)]

    def support(self) -> dict[tuple[int, int], int]:
        return {
            p: c for p, c in zip(pairs(self.n), self.coeffs) if c != 0
        }

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "PairVector") -> "PairVector":
        if not isinstance(other, PairVector):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return PairVector(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PairVector") -> "PairVector":
        if not isinstance(other, PairVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PairVector":
        return PairVector(self.n, tuple(-a for a in self.coeffs))

    def scaled(self, c: int) -> "PairVector":
        return PairVector(self.n, tuple(c * a for a in self.coeffs))

    def precompose(self, p: Permutation) -> "PairVector":
        """The vector ``w`` with ``w[P] = self[pair_action(p, P)]``."""
        if p.n != self.n:
            raise ValueError("degree mismatch")
        return PairVector(
            self.n,
            tuple(self.coeffs[pair_index(self.n, *p.pair_action(q))] for q in pairs(self.n)),
        )

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": c for (i, j), c in sorted(self.support().items())}

    @staticmethod
    def from_json(n: int, data: Mapping[str, int]) -> "PairVector":
        parsed: dict[tuple[int, int], int] = {}
        for key, c in data.items():
            i, j = (int(tok) for tok in key.split(","))
            parsed[(i, j)] = int(c)
        return PairVector.from_pairs(n, parsed)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ", ".join(f"{{{i},{j}}}:{c}" for (i, j), c in sorted(self.support().items()))


def linking_vector(word: BraidWord) -> PairVector:
    """Abelianized pure-braid class of a pure word.

    >>> linking_vector(BraidWord(3, (2, 1, 1, -2))).support()
    {(1, 3): 1}
    """
    n = word.n
    order = list(range(1, n + 1))  # order[pos-1] = strand at position pos
    counts = [0] * (n * (n - 1) // 2)
    for e in word.letters:
        k = abs(e)
        a, b = order[k - 1], order[k]
        counts[pair_index(n, min(a, b), max(a, b))] += 1 if e > 0 else -1
        order[k - 1], order[k] = b, a
    if order != list(range(1, n + 1)):
        raise NotPureError(f"word is not pure: {word}")
    if any(c % 2 for c in counts):
        raise AssertionError("pure word with odd crossing count")
    return PairVector(n, tuple(c // 2 for c in counts))


def pure_generator_word(n: int, i: int, j: int) -> BraidWord:
    """The standard representative of ``A[i,j]``: conjugate ``sigma_i^2``
    down from position ``j-1``."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad pair ({i},{j}) for n={n}")
    prefix = list(range(j - 1, i, -1))
    letters = prefix + [i, i] + [-k for k in reversed(prefix)]
    return BraidWord(n, tuple(letters))


def pure_generator_word_lower(n: int, i: int, j: int) -> BraidWord:
    """Equivalent form of ``A[i,j]`` conjugating ``sigma_{j-1}^2`` up from
    position ``i``; equal to :func:`pure_generator_word` in the braid group."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad pair ({i},{j}) for n={n}")
    prefix = [-k for k in range(i, j - 1)]
    letters = prefix + [j - 1, j - 1] + list(range(j - 2, i - 1, -1))
    return BraidWord(n, tuple(letters))


def pure_word(vec: PairVector) -> BraidWord:
    """A word representing a lattice vector: generator words in lex pair order."""
    out = BraidWord(vec.n, ())
    for (i, j), c in sorted(vec.support().items()):
        g = pure_generator_word(vec.n, i, j)
        if c < 0:
            g = g.inverse()
        for _ in range(abs(c)):
            out = out * g
    return out


def full_twist_word(n: int) -> BraidWord:
    """``(sigma_1 ... sigma_{n-1})^n``, the generator of the center."""
    return BraidWord(n, tuple(range(1, n)) * n)
