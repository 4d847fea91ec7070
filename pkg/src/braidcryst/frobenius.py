"""The order-21 Frobenius subgroup of the seven-strand quotient.

The two seed words give x of order 3 and y of order 7 whose commutation
defect ``x y x^-1 y^-2`` is a fixed nonzero lattice vector, so ``<x, y>`` is
not Frobenius as it stands.  Translating y by a lattice vector N repairs it:
``v = A^N y`` satisfies ``x v x^-1 = v^2`` and ``v^7 = 1`` exactly when N
solves an integer linear system (21 conjugation equations plus one orbit-sum
equation per y-orbit).  The solution set is an affine family of rank 6; all
resulting subgroups ``<x, A^N y>`` form a single conjugacy class, and
``standardize_frobenius`` computes a conjugator from any generating pair
onto the reference pair ``(x, v0)``.

Everything here is specific to n = 7; use ``quotient.embed`` to place the
witness on more strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .braidword import BraidWord, PairVector, pair_index, pairs
from .conjugacy import conjugator_to_standard
from .permutation import Permutation
from .quotient import (
    QuotientElement,
    basis_orbits,
    conjugate,
    element_order,
    inverse,
    mul,
    normalize,
    power,
    pure,
)
from .zlinalg import lattices_equal, solve_integer

N_STRANDS = 7

X_WORD = "2 -1 5 -4"
Y_WORD = "2 3 6 5 4 -3 -2 -1 -3 -2"

BETA = Permutation.from_text(7, "(1,2,3)(4,5,6)")
ALPHA = Permutation.from_text(7, "(1,3,4,2,5,6,7)")
# the two other 7-cycle subgroups normalized by BETA, reached from ALPHA by
# conjugating with the centralizer elements (1,3,2) and (4,6,5)
ALPHA1 = Permutation.from_text(7, "(1,4,3,5,6,7,2)")
ALPHA2 = Permutation.from_text(7, "(1,3,5,2,6,4,7)")
TAU = Permutation.from_text(7, "(1,4,2,5,3,6)")

#: Words commuting with x whose permutations conjugate ALPHA1, ALPHA2 back
#: to ALPHA; index 0 is the no-op branch.
CENTRALIZER_MOVES = ("", "1 -2", "4 -5")


class NotASolution(ValueError):
    """The offset vector does not solve the Frobenius repair system."""


class NotFrobenius(ValueError):
    """The input pair does not satisfy the order-21 Frobenius relations."""


class InconsistentSystem(RuntimeError):
    """The repair system has no integer solution (implementation bug)."""


def build_xy() -> tuple[QuotientElement, QuotientElement]:
    """Normal forms of the two seed words; perms are BETA and ALPHA."""
    x = normalize(BraidWord.from_text(N_STRANDS, X_WORD))
    y = normalize(BraidWord.from_text(N_STRANDS, Y_WORD))
    return x, y


def defect(x: QuotientElement, y: QuotientElement) -> PairVector:
    """Normal-form vector of ``x y x^-1 y^-2``; zero exactly when the
    Frobenius conjugation relation holds."""
    rel = mul(conjugate(y, x), power(y, -2))
    if not rel.is_pure():
        raise ValueError("x y x^-1 y^-2 is not pure: perms do not satisfy the relation")
    return rel.vec


def default_offset() -> PairVector:
    """The reference repair vector N0."""
    return PairVector.from_pairs(
        N_STRANDS, {(3, 5): 1, (1, 6): 1, (2, 7): -1, (5, 7): -1}
    )


def family_member(r: tuple[int, int, int, int, int, int]) -> PairVector:
    """The rank-6 closed-form parametrization of all repair vectors."""
    r1, r2, r3, r4, r5, r6 = (int(v) for v in r)
    return PairVector.from_pairs(
        N_STRANDS,
        {
            (1, 2): -r6 + r4 + r3 - r2 + 1,
            (1, 3): -r6 - r2,
            (1, 4): r6,
            (1, 5): r2,
            (1, 6): r5,
            (1, 7): r6 - r5 - r4 - r3 + r2,
            (2, 3): r1,
            (2, 4): -r4 - r3 + r2 - 1,
            (2, 5): r6 + r1,
            (2, 6): r3,
            (2, 7): -r5 - r4 - r3 - 1,
            (3, 4): r4 + r3 + 1,
            (3, 5): r6 - r4 - r3 + r2 + r1,
            (3, 6): r3 - r2,
            (3, 7): -r5 - r4 - r3 + r2,
            (4, 5): -r6 - r2 - r1,
            (4, 6): -r6 + r5 + r4 + r3 - r2 - r1,
            (4, 7): r6 - r3 + r2,
            (5, 6): -r6 + r3 - r2 - r1,
            (5, 7): r4,
            (6, 7): r5 + r4,
        },
    )


def recover_parameters(N: PairVector) -> tuple[int, int, int, int, int, int]:
    """Invert :func:`family_member`: six coordinates read the parameters off
    directly, and the rest of the vector must agree."""
    if N.n != N_STRANDS:
        raise NotASolution("offset vector must live on 7 strands")
    r = (
        N.coefficient(2, 3),
        N.coefficient(1, 5),
        N.coefficient(2, 6),
        N.coefficient(5, 7),
        N.coefficient(1, 6),
        N.coefficient(1, 4),
    )
    if family_member(r) != N:
        raise NotASolution(f"vector is not in the repair family: {N}")
    return r


@dataclass(frozen=True)
class SolutionFamily:
    """Integer solution set of the repair system: ``particular + Z-span(kernel)``."""

    particular: PairVector
    kernel: tuple[PairVector, ...]

    @property
    def rank(self) -> int:
        return len(self.kernel)

    def member(self, r: tuple[int, int, int, int, int, int]) -> PairVector:
        return family_member(r)

    def parameters(self, N: PairVector) -> tuple[int, int, int, int, int, int]:
        return recover_parameters(N)

    def contains(self, N: PairVector) -> bool:
        try:
            recover_parameters(N)
        except NotASolution:
            return False
        return True


def _system() -> tuple[np.ndarray, list[int]]:
    """24 rows: one conjugation equation per pair, one sum per y-orbit."""
    x, y = build_xy()
    d = defect(x, y)
    all_pairs = pairs(N_STRANDS)
    rows: list[list[int]] = []
    rhs: list[int] = []
    # x (A^N y) x^-1 = (A^N y)^2 reduces to N[beta Q] + D[Q] = N[Q] + N[alpha Q]
    for q in all_pairs:
        row = [0] * len(all_pairs)
        row[pair_index(N_STRANDS, *q)] += 1
        row[pair_index(N_STRANDS, *ALPHA.pair_action(q))] += 1
        row[pair_index(N_STRANDS, *BETA.pair_action(q))] -= 1
        rows.append(row)
        rhs.append(d.coefficient(*q))
    # (A^N y)^7 = 1 reduces to zero N-sum over each y-orbit
    for orbit in basis_orbits(y):
        row = [0] * len(all_pairs)
        for p in orbit:
            row[pair_index(N_STRANDS, *p)] = 1
        rows.append(row)
        rhs.append(0)
    return np.array(rows, dtype=object), rhs


@lru_cache(maxsize=1)
def solve_family() -> SolutionFamily:
    """Solve the repair system and cross-check the closed-form family.

    The kernel has rank 6; the reference vector N0 is a particular solution;
    and the affine lattice of :func:`family_member` equals the solution set.
    """
    M, rhs = _system()
    solved = solve_integer(M, rhs)
    if solved is None:
        raise InconsistentSystem("repair system has no integer solution")
    _, kernel = solved
    if len(kernel) != 6:
        raise InconsistentSystem(f"kernel rank {len(kernel)} != 6")
    n0 = default_offset()
    if any(int(v) != w for v, w in zip(M.dot(np.array(n0.coeffs, dtype=object)), rhs)):
        raise InconsistentSystem("reference vector fails the system")
    base = family_member((0,) * 6)
    if any(int(v) != w for v, w in zip(M.dot(np.array(base.coeffs, dtype=object)), rhs)):
        raise InconsistentSystem("closed-form base point fails the system")
    unit = [
        tuple(int(e == i) for e in range(6))
        for i in range(6)
    ]
    directions = [
        list((family_member(u) - base).coeffs) for u in unit
    ]
    if not lattices_equal([list(k) for k in kernel], directions):
        raise InconsistentSystem("closed-form directions do not span the kernel")
    return SolutionFamily(
        particular=n0,
        kernel=tuple(PairVector(N_STRANDS, tuple(int(v) for v in k)) for k in kernel),
    )


@dataclass(frozen=True)
class FrobeniusWitness:
    """A verified generating pair of an order-21 Frobenius subgroup."""

    x: QuotientElement
    v: QuotientElement
    certificate: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "x": self.x.to_json(),
            "v": self.v.to_json(),
            "certificate": list(self.certificate),
        }


def _relation_record(name: str, left: QuotientElement, right: QuotientElement) -> dict:
    return {
        "relation": name,
        "left": left.to_json(),
        "right": right.to_json(),
        "holds": left == right,
    }


def build_frobenius(N: PairVector | None = None) -> FrobeniusWitness:
    """Witness for the repaired pair ``(x, A^N y)``; N defaults to N0."""
    if N is None:
        N = default_offset()
    if not solve_family().contains(N):
        raise NotASolution(f"offset does not repair the relation: {N}")
    x, y = build_xy()
    v = mul(pure(N), y)
    one = QuotientElement.identity(N_STRANDS)
    certificate = (
        _relation_record("x^3", power(x, 3), one),
        _relation_record("v^7", power(v, 7), one),
        _relation_record("x v x^-1 = v^2", conjugate(v, x), power(v, 2)),
    )
    if not all(rec["holds"] for rec in certificate):
        raise AssertionError("certificate failed for a family member")
    return FrobeniusWitness(x=x, v=v, certificate=certificate)


def subgroup_closure(*generators: QuotientElement) -> tuple[QuotientElement, ...]:
    """All elements generated by the inputs (must be finite to terminate)."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].n
    found = {QuotientElement.identity(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                b = mul(a, g)
                if b not in found:
                    found.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(found, key=lambda e: (e.perm.images, e.vec.coeffs)))


# x-orbits of the pair basis; theta vectors constant on them centralize x
_X_ORBIT_GROUPS = (
    ((1, 2), (1, 3), (2, 3)),
    ((2, 7), (1, 7), (3, 7)),
    ((3, 6), (2, 5), (1, 4)),
    ((3, 5), (2, 4), (1, 6)),
    ((4, 6), (5, 6), (4, 5)),
    ((4, 7), (6, 7), (5, 7)),
    ((1, 5), (3, 4), (2, 6)),
)


def conjugator_between(N: PairVector) -> PairVector:
    """A lattice vector theta with ``A^theta (x, v0) A^-theta = (x, A^N y)``.

    theta is constant on the x-orbits of the pair basis (so it centralizes
    x); the seven constants are chained from the family parameters of N with
    the free one pinned to zero.  Both conjugation identities are verified
    in the engine before returning.
    """
    r1, r2, r3, r4, r5, r6 = recover_parameters(N)
    s4 = 0
    s1 = -r6 + r4 + r3 - r2 + 1
    s6 = s1 + r6 - r3 + r2
    s3 = s6 + r3 - r2
    s7 = s3 + r2
    s2 = s7 - r5 - r4 - r3
    s5 = s2 - r6 + r5 + r4 + r3 - r2 - r1
    values = (s1, s2, s3, s4, s5, s6, s7)
    theta = PairVector.from_pairs(
        N_STRANDS,
        {pair: s for s, group in zip(values, _X_ORBIT_GROUPS) for pair in group},
    )
    x, y = build_xy()
    mover = pure(theta)
    assert conjugate(x, mover) == x
    assert conjugate(mul(pure(default_offset()), y), mover) == mul(pure(N), y)
    return theta


@dataclass(frozen=True)
class StandardizationResult:
    """Conjugation of a Frobenius generating pair onto the reference pair.

    ``conjugate(g3, conjugator) == x`` and
    ``conjugate(g7, conjugator) == v0^power`` with ``power`` coprime to 7,
    so the image subgroup is exactly ``<x, v0>``.
    """

    conjugator: QuotientElement
    chain: tuple[tuple[str, QuotientElement], ...]
    power: int
    offset: PairVector
    parameters: tuple[int, int, int, int, int, int]
    branch: int
    image_x: QuotientElement
    image_y: QuotientElement

    def to_json(self) -> dict:
        return {
            "conjugator": self.conjugator.to_json(),
            "chain": [[name, c.to_json()] for name, c in self.chain],
            "power": self.power,
            "offset": self.offset.to_json(),
            "parameters": list(self.parameters),
            "branch": self.branch,
            "image_x": self.image_x.to_json(),
            "image_y": self.image_y.to_json(),
        }


def _seven_cycle_matcher(p: Permutation) -> Permutation:
    """The lexicographically least permutation ``rho`` with
    ``rho * p * rho^-1 == ALPHA``."""
    (cycle,) = p.cycles()
    target = ALPHA.cycles()[0]
    best: Permutation | None = None
    for s in range(7):
        rotated = cycle[s:] + cycle[:s]
        images = [0] * 7
        for a, b in zip(target, rotated):
            images[a - 1] = b
        candidate = Permutation(tuple(images))
        if best is None or candidate.images < best.images:
            best = candidate
    assert best is not None and (best * p * best.inverse()) == ALPHA
    return best


def standardize_frobenius(
    g3: QuotientElement, g7: QuotientElement
) -> StandardizationResult:
    """A verified conjugator carrying ``<g3, g7>`` onto ``<x, v0>``.

    Requires ``g3^3 = g7^7 = 1`` and ``g3 g7 g3^-1 = g7^2`` on 7 strands.
    The chain: a permutation-level match sending perm(g7) to ALPHA, the
    torsion standardization of the order-3 generator, a centralizer move
    fixing x that returns the 7-cycle to a power of ALPHA, and the lattice
    vector of :func:`conjugator_between`.  A power replacement (recorded,
    not a conjugation) aligns that power to ALPHA itself before the offset
    is read.
    """
    if g3.n != N_STRANDS or g7.n != N_STRANDS:
        raise NotFrobenius("generators must live on 7 strands")
    if element_order(g3) != 3:
        raise NotFrobenius("first generator must have order 3")
    if element_order(g7) != 7:
        raise NotFrobenius("second generator must have order 7")
    if conjugate(g7, g3) != power(g7, 2):
        raise NotFrobenius("conjugation relation g3 g7 g3^-1 = g7^2 fails")

    x, y = build_xy()
    rho = QuotientElement(_seven_cycle_matcher(g7.perm), PairVector.zero(N_STRANDS))
    a3, a7 = conjugate(g3, rho), conjugate(g7, rho)

    lam1 = conjugator_to_standard(a3)
    b3, b7 = conjugate(a3, lam1), conjugate(a7, lam1)
    assert b3 == x

    z = b7.perm
    branch = next(
        i
        for i, root in enumerate((ALPHA, ALPHA1, ALPHA2))
        if any(z == root**j for j in range(1, 7))
    )
    lam2 = inverse(normalize(BraidWord.from_text(N_STRANDS, CENTRALIZER_MOVES[branch])))
    c3, c7 = conjugate(b3, lam2), conjugate(b7, lam2)
    assert c3 == x

    j = next(e for e in range(1, 7) if c7.perm == ALPHA**e)
    v = power(c7, pow(j, -1, 7))
    offset = mul(v, inverse(y)).vec
    params = recover_parameters(offset)

    theta = inverse(pure(conjugator_between(offset)))
    d3, d7 = conjugate(c3, theta), conjugate(c7, theta)
    v0 = mul(pure(default_offset()), y)
    assert d3 == x and d7 == power(v0, j)

    chain = (
        ("cycle_match", rho),
        ("torsion_standardize", lam1),
        ("centralizer_move", lam2),
        ("offset_shift", theta),
    )
    total = rho
    for _, c in chain[1:]:
        total = mul(c, total)
    assert conjugate(g3, total) == d3 and conjugate(g7, total) == d7
    if set(subgroup_closure(d3, d7)) != set(subgroup_closure(x, v0)):
        raise AssertionError("image subgroup does not match the reference")
    return StandardizationResult(
        conjugator=total,
        chain=chain,
        power=j,
        offset=offset,
        parameters=params,
        branch=branch,
        image_x=d3,
        image_y=d7,
    )
