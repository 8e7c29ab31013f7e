"""Boundary operator on chains and its integer matrices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chains import Chain
from .core import OrientedSimplex, Simplex, SimplicialComplex

__all__ = ["BoundaryMatrix", "boundary_simplex", "boundary_chain", "boundary_matrix"]


def boundary_simplex(sigma: OrientedSimplex | Simplex) -> Chain:
    """Alternating sum of facets, sum_i (-1)^i [v_0, ..., v_i omitted, ..., v_p].

    The formula is applied to the sorted ordering and scaled by the
    orientation sign.  A vertex has zero boundary (a chain of dimension -1).
    """
    if isinstance(sigma, Simplex):
        sigma = OrientedSimplex(sigma)
    base = sigma.base
    if base.dim == 0:
        return Chain(-1)
    terms = {face: sigma.sign * (-1) ** i for i, face in enumerate(base.facets())}
    return Chain(base.dim - 1, terms)


def boundary_chain(c: Chain) -> Chain:
    acc: dict[Simplex, int] = {}
    for s, n in c:
        if s.dim == 0:
            break
        for i, face in enumerate(s.facets()):
            acc[face] = acc.get(face, 0) + n * (-1) ** i
    return Chain(c.dim - 1, acc)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the boundary map from p-chains to (p-1)-chains.

    Column j holds the boundary of ``cols[j]`` written in the basis
    ``rows``.  Bases are oriented so that a non-canonical presentation
    (e.g. an edge listed as [2,0]) can be represented.
    """

    p: int
    rows: tuple[OrientedSimplex, ...]
    cols: tuple[OrientedSimplex, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def triplets(self) -> list[tuple[int, int, int]]:
        """Sparse ``(row, col, value)`` view of the nonzero entries."""
        return [(i, j, v) for i, r in enumerate(self.entries) for j, v in enumerate(r) if v]

    def in_bases(
        self,
        rows: Sequence[OrientedSimplex] | None = None,
        cols: Sequence[OrientedSimplex] | None = None,
    ) -> BoundaryMatrix:
        """The same map written in other oriented orderings of the bases.

        Each new basis must list the same simplices as the current one, in
        any order and with any orientations.
        """
        rows = tuple(rows) if rows is not None else self.rows
        cols = tuple(cols) if cols is not None else self.cols
        rperm = _match(self.rows, rows)
        cperm = _match(self.cols, cols)
        entries = tuple(
            tuple(rs * cs * self.entries[ri][cj] for cj, cs in cperm) for ri, rs in rperm
        )
        return BoundaryMatrix(self.p, rows, cols, entries)

    def format_grid(self, names: Sequence[str] | None = None) -> str:
        """Plain-text grid with oriented simplex labels on both axes."""

        def label(s: OrientedSimplex) -> str:
            vs = s.ordering()
            return "[" + ",".join(names[v] if names is not None else str(v) for v in vs) + "]"

        col_labels = [label(c) for c in self.cols]
        row_labels = [label(r) for r in self.rows]
        width = max([len(x) for x in col_labels] + [2])
        lead = max([len(x) for x in row_labels] + [0])
        lines = [" " * lead + " " + " ".join(x.rjust(width) for x in col_labels)]
        for lab, row in zip(row_labels, self.entries):
            lines.append(lab.ljust(lead) + " " + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def _match(old: Sequence[OrientedSimplex], new: Sequence[OrientedSimplex]):
    pos = {s.base: (i, s.sign) for i, s in enumerate(old)}
    if len(new) != len(old) or {s.base for s in new} != set(pos):
        raise ValueError("new basis must consist of the same simplices as the old one")
    return [(pos[s.base][0], pos[s.base][1] * s.sign) for s in new]


def boundary_matrix(K: SimplicialComplex, p: int) -> BoundaryMatrix:
    """Matrix of the p-th boundary map in the canonical bases of K.

    Shapes follow the chain groups: the map out of vertices is 0 x n0 and
    the map out of an absent dimension has zero columns.
    """
    cols = K.simplices(p)
    rows = K.simplices(p - 1)
    mat = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i, face in enumerate(s.facets()):
            mat[K.index(face)][j] = (-1) ** i
    return BoundaryMatrix(
        p,
        tuple(OrientedSimplex(s) for s in rows),
        tuple(OrientedSimplex(s) for s in cols),
        tuple(tuple(r) for r in mat),
    )
