"""Conjugation orbits of block torsion elements on the pair basis.

``enumerate_orbits`` walks the action; ``closed_form_orbits`` writes the same
table down directly from the block data, without any group arithmetic, in
four families: pairs inside one block (one orbit of length ``k`` per
"winding distance" ``h``), pairs of one block point and one point beyond the
blocks (length ``k`` per outside point), pairs across two blocks
(``gcd(kp, kq)`` orbits of length ``lcm(kp, kq)``), and fixed pairs beyond
the blocks.  Orbits are listed following the action direction, starting at
the lexicographically least pair, and sorted by that pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .quotient import QuotientElement, basis_orbits
from .torsion import BlockSpec, torsion_element

Pair = tuple[int, int]


@dataclass(frozen=True)
class OrbitTable:
    element: QuotientElement
    orbits: tuple[tuple[Pair, ...], ...]

    def to_json(self) -> list[list[str]]:
        return [[f"{i},{j}" for (i, j) in orbit] for orbit in self.orbits]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)


def _canonical(orbits: Sequence[Sequence[Pair]]) -> tuple[tuple[Pair, ...], ...]:
    rotated = []
    for orbit in orbits:
        k = list(orbit).index(min(orbit))
        rotated.append(tuple(orbit[k:]) + tuple(orbit[:k]))
    return tuple(sorted(rotated, key=lambda o: o[0]))


def enumerate_orbits(g: QuotientElement) -> OrbitTable:
    return OrbitTable(g, basis_orbits(g))


def _wrap(x: int, m: int) -> int:
    """Representative of ``x`` modulo ``m`` in ``{1, ..., m}``."""
    return (x - 1) % m + 1


def closed_form_orbits(spec: BlockSpec) -> OrbitTable:
    """Orbit table of ``torsion_element(spec)`` from index formulas alone."""
    n = spec.n
    blocks = spec.blocks
    offsets = spec.offsets()
    span = spec.span()
    orbits: list[list[Pair]] = []

    # pairs within one block: distance class h winds around the block
    for r, k in zip(offsets, blocks):
        for h in range(1, (k - 1) // 2 + 1):
            orbit: list[Pair] = []
            for t in range(1, k + 1):
                if t <= h:
                    orbit.append((r + h - t + 1, r + k - t + 1))
                else:
                    orbit.append((r + k - t + 1, r + k - t + 1 + h))
            orbits.append(orbit)

    # one block point, one point beyond the blocks: the block index decreases
    for r, k in zip(offsets, blocks):
        for j in range(span + 1, n + 1):
            orbit = [(r + 1, j)]
            for t in range(k, 1, -1):
                orbit.append((r + t, j))
            orbits.append(orbit)

    # pairs across two blocks: both coordinates decrease cyclically
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            kp, kq = blocks[a], blocks[b]
            rp, rq = offsets[a], offsets[b]
            length = math.lcm(kp, kq)
            for v in range(1, math.gcd(kp, kq) + 1):
                orbit = [
                    (rp + _wrap(2 - t, kp), rq + _wrap(1 - t + v, kq))
                    for t in range(1, length + 1)
                ]
                orbits.append(orbit)

    # pairs fixed pointwise
    for i in range(span + 1, n + 1):
        for j in range(i + 1, n + 1):
            orbits.append([(i, j)])

    return OrbitTable(torsion_element(spec), _canonical(orbits))


def relabeled_basis(spec: BlockSpec) -> dict[Pair, tuple]:
    """Bijective relabeling of the pair basis by orbit coordinates.

    Labels are ``("a", r, h, t)`` within block ``r``, ``("b", r, j, t)`` for
    block ``r`` against outside point ``j``, ``("c", p, q, v, t)`` across
    blocks, and ``("d", i, j)`` for fixed pairs.  Block numbers are 1-based.
    """
    n = spec.n
    blocks = spec.blocks
    offsets = spec.offsets()
    span = spec.span()
    label: dict[Pair, tuple] = {}

    def put(pair: Pair, tag: tuple) -> None:
        if pair in label:
            raise AssertionError(f"pair {pair} labeled twice")
        label[pair] = tag

    for r1, (r, k) in enumerate(zip(offsets, blocks), start=1):
        for h in range(1, (k - 1) // 2 + 1):
            for t in range(1, k + 1):
                if t <= h:
                    put((r + h - t + 1, r + k - t + 1), ("a", r1, h, t))
                else:
                    put((r + k - t + 1, r + k - t + 1 + h), ("a", r1, h, t))
        for j in range(span + 1, n + 1):
            for t in range(1, k + 1):
                put((r + t, j), ("b", r1, j, t))
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            kp, kq = blocks[a], blocks[b]
            rp, rq = offsets[a], offsets[b]
            length = math.lcm(kp, kq)
            for v in range(1, math.gcd(kp, kq) + 1):
                for t in range(1, length + 1):
                    put(
                        (rp + _wrap(2 - t, kp), rq + _wrap(1 - t + v, kq)),
                        ("c", a + 1, b + 1, v, t),
                    )
    for i in range(span + 1, n + 1):
        for j in range(i + 1, n + 1):
            put((i, j), ("d", i, j))
    if len(label) != n * (n - 1) // 2:
        raise AssertionError("relabeling is not a bijection")
    return label
