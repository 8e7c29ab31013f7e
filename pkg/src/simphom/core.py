"""Simplices, orientations and face-closed simplicial complexes.

Vertices are non-negative ints.  A :class:`Simplex` always stores its
vertices sorted; an orientation is carried separately as a sign, so an
ordering ``(v_0, ..., v_p)`` is represented by ``canonicalize(ordering)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DuplicateVertex, MalformedPermutation

__all__ = [
    "Simplex",
    "OrientedSimplex",
    "SimplicialComplex",
    "inversions",
    "parity",
    "canonicalize",
    "oriented",
    "complex_from_maximal",
    "p_simplices",
]


@dataclass(frozen=True, order=True)
class Simplex:
    vertices: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(x) for x in self.vertices)
        if not v:
            raise ValueError("a simplex needs at least one vertex")
        if any(x < 0 for x in v):
            raise ValueError(f"vertex labels must be non-negative: {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            if len(set(v)) != len(v):
                raise DuplicateVertex(f"repeated vertex in {v}")
            raise ValueError(f"vertices must be sorted ascending: {v}")
        object.__setattr__(self, "vertices", v)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def facets(self) -> list[Simplex]:
        """Faces of codimension one; the i-th omits vertex i."""
        v = self.vertices
        return [Simplex(v[:i] + v[i + 1:]) for i in range(len(v))] if self.dim > 0 else []

    def faces(self) -> Iterable[Simplex]:
        """Every nonempty face, this simplex included."""
        for k in range(1, len(self.vertices) + 1):
            for sub in combinations(self.vertices, k):
                yield Simplex(sub)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return "Simplex" + repr(list(self.vertices))


@dataclass(frozen=True)
class OrientedSimplex:
    """A simplex together with one of its two orientation classes.

    ``sign=+1`` is the class of the ascending ordering.
    """

    base: Simplex
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def dim(self) -> int:
        return self.base.dim

    def __neg__(self) -> OrientedSimplex:
        return OrientedSimplex(self.base, -self.sign)

    def ordering(self) -> tuple[int, ...]:
        """A vertex ordering in this orientation class.

        The negative class of a simplex with at least two vertices is shown
        with its first two vertices swapped.
        """
        v = self.base.vertices
        if self.sign < 0 and len(v) > 1:
            return (v[1], v[0]) + v[2:]
        return v

    def __repr__(self):
        body = "[" + ",".join(map(str, self.base.vertices)) + "]"
        return body if self.sign > 0 else "-" + body


def inversions(ordering: Sequence[int]) -> int:
    """Number of pairs i < j with ordering[i] > ordering[j]."""
    n = len(ordering)
    return sum(1 for i in range(n) for j in range(i + 1, n) if ordering[i] > ordering[j])


def parity(ordering: Sequence[int]) -> int:
    """Sign of a permutation of ``0..p`` given in list form.

    +1 when the inversion count is even, -1 when it is odd.
    """
    ordering = list(ordering)
    n = len(ordering)
    if n == 0:
        raise MalformedPermutation("empty permutation")
    if sorted(ordering) != list(range(n)):
        raise MalformedPermutation(
            f"{ordering} is not a permutation of 0..{n - 1}"
        )
    return -1 if inversions(ordering) % 2 else 1


def canonicalize(ordering: Sequence[int]) -> tuple[Simplex, int]:
    """Sorted simplex and the sign of the sorting permutation.

    >>> canonicalize((1, 2, 0))
    (Simplex[0, 1, 2], 1)
    >>> canonicalize((1, 0, 2))
    (Simplex[0, 1, 2], -1)
    """
    ordering = tuple(int(v) for v in ordering)
    if not ordering:
        raise ValueError("cannot canonicalize an empty ordering")
    if len(set(ordering)) != len(ordering):
        raise DuplicateVertex(f"repeated vertex in {ordering}")
    sign = -1 if inversions(ordering) % 2 else 1
    return Simplex(tuple(sorted(ordering))), sign


def oriented(*vertices: int) -> OrientedSimplex:
    """Oriented simplex ``[v0, v1, ...]`` in the class of the given ordering."""
    if len(vertices) == 1 and not isinstance(vertices[0], int):
        vertices = tuple(vertices[0])
    base, sign = canonicalize(vertices)
    return OrientedSimplex(base, sign)


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed family of simplices, grouped by dimension.

    Build with :func:`complex_from_maximal` or :meth:`from_simplices`;
    the constructor trusts that ``by_dim`` is already closed and sorted.
    """

    by_dim: tuple[tuple[Simplex, ...], ...] = ()
    _members: frozenset = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        members = frozenset(s for layer in self.by_dim for s in layer)
        object.__setattr__(self, "_members", members)
        index = {s: i for layer in self.by_dim for i, s in enumerate(layer)}
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_simplices(cls, simplices: Iterable[Simplex]) -> SimplicialComplex:
        """Downward closure of an arbitrary collection of simplices."""
        closed: set[Simplex] = set()
        for s in simplices:
            if s not in closed:
                closed.update(s.faces())
        if not closed:
            return cls(())
        top = max(s.dim for s in closed)
        layers = [[] for _ in range(top + 1)]
        for s in closed:
            layers[s.dim].append(s)
        return cls(tuple(tuple(sorted(layer)) for layer in layers))

    @property
    def dim(self) -> int:
        return len(self.by_dim) - 1

    def simplices(self, p: int) -> tuple[Simplex, ...]:
        if 0 <= p < len(self.by_dim):
            return self.by_dim[p]
        return ()

    def count(self, p: int) -> int:
        return len(self.simplices(p))

    def index(self, s: Simplex) -> int:
        """Position of ``s`` in the canonical basis of its dimension."""
        return self._index[s]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s.vertices[0] for s in self.simplices(0))

    def maximal_simplices(self) -> list[Simplex]:
        """Simplices that are not a proper face of another member."""
        covered = {f for layer in self.by_dim[1:] for s in layer for f in s.facets()}
        return [s for s in self if s not in covered]

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self._members <= other._members

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * len(layer) for p, layer in enumerate(self.by_dim))

    def __contains__(self, s) -> bool:
        if isinstance(s, OrientedSimplex):
            s = s.base
        return s in self._members

    def __iter__(self):
        for layer in self.by_dim:
            yield from layer

    def __len__(self):
        return len(self._members)

    def __repr__(self):
        counts = ", ".join(str(len(layer)) for layer in self.by_dim)
        return f"SimplicialComplex(dim={self.dim}, counts=[{counts}])"


def complex_from_maximal(maximal: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Smallest simplicial complex containing every given vertex tuple."""
    simplices = []
    for tup in maximal:
        tup = tuple(tup)
        if not tup:
            raise ValueError("empty simplex in input")
        simplices.append(canonicalize(tup)[0])
    return SimplicialComplex.from_simplices(simplices)


def p_simplices(K: SimplicialComplex, p: int) -> list[Simplex]:
    """Canonical (lexicographic) basis of the p-chains; empty outside 0..dim."""
    return list(K.simplices(p))
