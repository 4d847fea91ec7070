"""Exact integer linear algebra: Hermite and Smith normal forms with
transforms, integer linear solving, and finitely generated abelian group
invariants.

Matrices are numpy arrays with ``dtype=object`` holding python ints, so
entries never overflow.  Row convention throughout: ``hnf`` returns ``(H, U)``
with ``U @ M = H`` and ``U`` unimodular; ``snf`` returns ``(D, U, V)`` with
``U @ M @ V = D`` diagonal and ``d1 | d2 | ...``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def as_int_matrix(rows: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    M = np.array(rows, dtype=object)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size else M.reshape(0, 0)
    if M.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    return np.vectorize(int, otypes=[object])(M) if M.size else M


def parse_matrix(text: str) -> np.ndarray:
    """Rows of space-separated integers, one row per line."""
    rows = [
        [int(tok) for tok in line.split()]
        for line in text.strip().splitlines()
        if line.strip()
    ]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows")
    return as_int_matrix(rows)


def format_matrix(M: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in np.asarray(M))


def identity_matrix(n: int) -> np.ndarray:
    M = np.zeros((n, n), dtype=object)
    for i in range(n):
        M[i, i] = 1
    return M


def hnf(M: Sequence[Sequence[int]] | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ M = H``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``.
    """
    H = as_int_matrix(M).copy()
    m = H.shape[0]
    U = identity_matrix(m)
    row = 0
    for col in range(H.shape[1] if H.size else 0):
        # gcd-eliminate everything below `row` in this column
        pivot = None
        for r in range(row, m):
            if H[r, col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != row:
            H[[row, pivot]] = H[[pivot, row]]
            U[[row, pivot]] = U[[pivot, row]]
        for r in range(row + 1, m):
            while H[r, col] != 0:
                q = H[row, col] // H[r, col]
                if q:
                    H[row] = H[row] - q * H[r]
                    U[row] = U[row] - q * U[r]
                H[[row, r]] = H[[r, row]]
                U[[row, r]] = U[[r, row]]
        if H[row, col] < 0:
            H[row] = -H[row]
            U[row] = -U[row]
        for r in range(row):
            q = H[r, col] // H[row, col]
            if q:
                H[r] = H[r] - q * H[row]
                U[r] = U[r] - q * U[row]
        row += 1
    return H, U


def snf(M: Sequence[Sequence[int]] | np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith normal form ``U @ M @ V = D`` with divisibility along the diagonal."""
    D = as_int_matrix(M).copy()
    m, n = D.shape
    U = identity_matrix(m)
    V = identity_matrix(n)

    def smallest_nonzero(t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i, j] != 0 and (best is None or abs(D[i, j]) < abs(D[best[0], best[1]])):
                    best = (i, j)
        return best

    t = 0
    while True:
        pos = smallest_nonzero(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            D[[t, i]] = D[[i, t]]
            U[[t, i]] = U[[i, t]]
        if j != t:
            D[:, [t, j]] = D[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
        dirty = False
        for r in range(t + 1, m):
            q = D[r, t] // D[t, t]
            if q:
                D[r] = D[r] - q * D[t]
                U[r] = U[r] - q * U[t]
            if D[r, t] != 0:
                dirty = True
        for c in range(t + 1, n):
            q = D[t, c] // D[t, t]
            if q:
                D[:, c] = D[:, c] - q * D[:, t]
                V[:, c] = V[:, c] - q * V[:, t]
            if D[t, c] != 0:
                dirty = True
        if dirty:
            continue
        # pivot divides every remaining entry? if not, fold the offender in
        offender = None
        for r in range(t + 1, m):
            for c in range(t + 1, n):
                if D[r, c] % D[t, t] != 0:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            D[t] = D[t] + D[offender]
            U[t] = U[t] + U[offender]
            continue
        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
        t += 1
    return D, U, V


def diagonal(D: np.ndarray) -> list[int]:
    return [int(D[i, i]) for i in range(min(D.shape))] if D.size else []


def solve_integer(
    M: Sequence[Sequence[int]] | np.ndarray,
    b: Sequence[int] | np.ndarray,
) -> tuple[np.ndarray, list[np.ndarray]] | None:
    """Solve ``M x = b`` over the integers.

    Returns ``(x0, kernel_basis)`` where ``x0`` is one solution and
    ``kernel_basis`` a lattice basis of ``{x : M x = 0}``, or ``None`` when no
    integer solution exists.
    """
    M = as_int_matrix(M)
    m, n = M.shape
    b = np.array([int(x) for x in b], dtype=object)
    if b.shape != (m,):
        raise ValueError("right-hand side length does not match")
    D, U, V = snf(M)
    c = U.dot(b)
    diag = diagonal(D)
    rank = sum(1 for d in diag if d != 0)
    y = np.zeros(n, dtype=object)
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        if d != 0:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
        elif c[i] != 0:
            return None
    x0 = V.dot(y)
    kernel = [V[:, j].copy() for j in range(rank, n)]
    return x0, kernel


def kernel_basis(M: Sequence[Sequence[int]] | np.ndarray) -> list[np.ndarray]:
    M = as_int_matrix(M)
    solved = solve_integer(M, [0] * M.shape[0])
    assert solved is not None
    return solved[1]


def row_lattice_hnf(rows: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by ``rows``."""
    M = as_int_matrix(rows)
    if M.size == 0:
        return M.reshape(0, M.shape[1] if M.ndim == 2 else 0)
    H, _ = hnf(M)
    nonzero = [i for i in range(H.shape[0]) if any(x != 0 for x in H[i])]
    return H[nonzero]


def lattice_contains(rows: Sequence[Sequence[int]] | np.ndarray, v: Sequence[int]) -> bool:
    """Is ``v`` in the row lattice of ``rows``?"""
    M = as_int_matrix(rows)
    if M.size == 0:
        return all(int(x) == 0 for x in v)
    return solve_integer(M.T, v) is not None


def lattices_equal(
    rows_a: Sequence[Sequence[int]] | np.ndarray,
    rows_b: Sequence[Sequence[int]] | np.ndarray,
) -> bool:
    A, B = row_lattice_hnf(rows_a), row_lattice_hnf(rows_b)
    return A.shape == B.shape and bool(np.equal(A, B).all())


def abelianization(
    relations: Sequence[Sequence[int]] | np.ndarray, generators: int
) -> tuple[int, list[int]]:
    """Invariants of the abelian group ``Z^generators / row-span(relations)``.

    Returns ``(free_rank, invariant_factors)`` with the factors > 1 and each
    dividing the next.
    """
    R = as_int_matrix(relations)
    if R.size == 0:
        return generators, []
    if R.shape[1] != generators:
        raise ValueError("relation width does not match generator count")
    D, _, _ = snf(R)
    diag = diagonal(D)
    rank = sum(1 for d in diag if d != 0)
    factors = [d for d in diag if d > 1]
    return generators - rank, factors
