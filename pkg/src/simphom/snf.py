"""Exact Smith normal form over the integers.

Matrices are plain lists of rows of Python ints, so intermediate entries
never overflow.  ``smith_normal_form(A)`` returns unimodular ``U``, ``V``
with ``U @ A @ V == D`` diagonal, ``d_1 | d_2 | ... | d_r`` and zeros past
the rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch

Matrix = list[list[int]]

__all__ = [
    "SmithDecomposition",
    "smith_normal_form",
    "rank",
    "nullity",
    "kernel_basis",
    "solve_integer",
    "identity",
    "matmul",
    "matvec",
]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    """Exact product; ``inner`` gives the shared size when A has no rows or B no columns."""
    n = inner if inner is not None else (len(A[0]) if A else len(B))
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(cols)] for i in range(len(A))]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


@dataclass(frozen=True)
class SmithDecomposition:
    U: Matrix
    D: Matrix
    V: Matrix
    rank: int
    U_inv: Matrix
    shape: tuple[int, int]

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(self.shape))]

    @property
    def invariant_factors(self) -> list[int]:
        """The nonzero diagonal entries d_1 | ... | d_r."""
        return self.diagonal[: self.rank]

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.invariant_factors if d > 1]


def _as_matrix(A) -> tuple[Matrix, int, int]:
    rows = [[int(x) for x in r] for r in A]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows, m, n


def smith_normal_form(A, ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form with the transforms.

    ``ncols`` is only needed for matrices with zero rows, whose column count
    cannot be read off the data.

    Pivots are the smallest nonzero entry (by absolute value) of the
    remaining block.  Row operations are mirrored in U (and, inverted, in
    U_inv), column operations in V.
    """
    D, m, n = _as_matrix(A)
    if m == 0 and ncols is not None:
        n = ncols
    U, U_inv, V = identity(m), identity(m), identity(n)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]
            for row in U_inv:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for M in (D, V):
                for row in M:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q:
            for M in (D, U):
                rs, rd = M[src], M[dst]
                for k in range(len(rd)):
                    rd[k] += q * rs[k]
            for row in U_inv:
                row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        if q:
            for M in (D, V):
                for row in M:
                    row[dst] += q * row[src]

    def smallest(t):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return best
        return best

    r = 0
    for t in range(min(m, n)):
        found = smallest(t)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            d = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // d))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // d))
            # leftover remainders are smaller than |d|; promote the smallest
            rest = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % d),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            for row in U_inv:
                row[t] = -row[t]
        r = t + 1
    return SmithDecomposition(U, D, V, r, U_inv, (m, n))


def rank(A, ncols: int | None = None) -> int:
    return smith_normal_form(A, ncols).rank


def nullity(A, ncols: int | None = None) -> int:
    """Rank of the kernel: column count minus rank."""
    snf = smith_normal_form(A, ncols)
    return snf.shape[1] - snf.rank


def kernel_basis(A, ncols: int | None = None) -> list[list[int]]:
    """Basis of the integer kernel lattice: the trailing columns of V."""
    snf = smith_normal_form(A, ncols)
    n = snf.shape[1]
    return [[snf.V[i][j] for i in range(n)] for j in range(snf.rank, n)]


def solve_integer(A, b: Sequence[int], ncols: int | None = None, snf: SmithDecomposition | None = None):
    """An integer solution of ``A x = b``, or None if there is none.

    With ``y = U b`` the system becomes ``D z = y``; it is solvable iff
    ``d_i | y_i`` for i < rank and ``y_i = 0`` beyond, and then ``x = V z``.
    """
    if snf is None:
        snf = smith_normal_form(A, ncols)
    m, n = snf.shape
    if len(b) != m:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, matrix has {m} rows")
    y = matvec(snf.U, b)
    z = [0] * n
    for i, yi in enumerate(y):
        if i < snf.rank:
            q, rem = divmod(yi, snf.D[i][i])
            if rem:
                return None
            z[i] = q
        elif yi:
            return None
    return matvec(snf.V, z)
