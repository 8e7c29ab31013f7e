"""Integer p-chains: sparse elements of the chain group C_p(K)."""
from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .core import OrientedSimplex, Simplex, canonicalize
from .errors import DimensionMismatch, MissingGenerator

__all__ = [
    "Chain",
    "GeneratorAssignment",
    "chain_add",
    "chain_scale",
    "elementary_chain",
    "evaluate_hom",
]


class Chain:
    """Finite formal sum of oriented p-simplices with integer coefficients.

    Terms are keyed by the canonical (sorted) simplex; the orientation sign
    is folded into the coefficient, so ``-[1,0]`` and ``[0,1]`` are the same
    term.  Zero coefficients are never stored.
    """

    __slots__ = ("_dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[Simplex, int] | None = None):
        clean = {}
        for s, n in (terms or {}).items():
            if not isinstance(s, Simplex):
                raise TypeError(f"chain keys must be Simplex, got {type(s).__name__}")
            if s.dim != dim:
                raise DimensionMismatch(f"{s!r} has dimension {s.dim}, chain has {dim}")
            n = int(n)
            if n:
                clean[s] = n
        self._dim = dim
        self._terms = MappingProxyType(dict(sorted(clean.items())))
        self._hash = None

    @classmethod
    def zero(cls, dim: int) -> Chain:
        return cls(dim)

    @classmethod
    def from_orderings(
        cls, items: Iterable[tuple[int, Sequence[int]]], dim: int | None = None
    ) -> Chain:
        """Build from ``(coefficient, vertex ordering)`` pairs.

        >>> Chain.from_orderings([(1, (2, 0))])
        Chain(1, {[0,2]: -1})
        """
        acc: dict[Simplex, int] = {}
        for coef, ordering in items:
            base, sign = canonicalize(ordering)
            if dim is None:
                dim = base.dim
            elif base.dim != dim:
                raise DimensionMismatch(f"mixed dimensions {dim} and {base.dim}")
            acc[base] = acc.get(base, 0) + sign * int(coef)
        if dim is None:
            raise ValueError("cannot infer the dimension of an empty chain")
        return cls(dim, acc)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> Mapping[Simplex, int]:
        return self._terms

    def coefficient(self, s: Simplex | OrientedSimplex) -> int:
        """Value of the chain on an oriented simplex, c(-s) = -c(s)."""
        if isinstance(s, OrientedSimplex):
            return s.sign * self._terms.get(s.base, 0)
        return self._terms.get(s, 0)

    def support(self) -> list[Simplex]:
        return list(self._terms)

    def to_vector(self, basis: Sequence[Simplex]) -> list[int]:
        """Coordinates in an ordered basis; raises KeyError for simplices outside it."""
        pos = {s: i for i, s in enumerate(basis)}
        vec = [0] * len(basis)
        for s, n in self._terms.items():
            vec[pos[s]] = n
        return vec

    @classmethod
    def from_vector(cls, dim: int, basis: Sequence[Simplex], vec: Sequence[int]) -> Chain:
        if len(vec) != len(basis):
            raise DimensionMismatch(f"vector length {len(vec)} != basis size {len(basis)}")
        return cls(dim, dict(zip(basis, vec)))

    def _check(self, other: Chain):
        if not isinstance(other, Chain):
            return NotImplemented
        if other._dim != self._dim:
            raise DimensionMismatch(f"cannot combine {self._dim}-chain with {other._dim}-chain")
        return None

    def __add__(self, other: Chain) -> Chain:
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for s, n in other._terms.items():
            acc[s] = acc.get(s, 0) + n
        return Chain(self._dim, acc)

    def __neg__(self) -> Chain:
        return Chain(self._dim, {s: -n for s, n in self._terms.items()})

    def __sub__(self, other: Chain) -> Chain:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, n: int) -> Chain:
        if not isinstance(n, int):
            return NotImplemented
        return Chain(self._dim, {s: n * c for s, c in self._terms.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._dim, tuple(self._terms.items())))
        return self._hash

    def format(self, names: Sequence[str] | None = None) -> str:
        """Render in the literal syntax ``3*[0,1] - 2*[1,2]`` ("0" if empty)."""
        if not self._terms:
            return "0"
        parts = []
        for s, n in self._terms.items():
            label = ",".join(names[v] if names is not None else str(v) for v in s.vertices)
            body = f"[{label}]" if abs(n) == 1 else f"{abs(n)}*[{label}]"
            if not parts:
                parts.append(body if n > 0 else "-" + body)
            else:
                parts.append(("+ " if n > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        inner = ", ".join(f"[{','.join(map(str, s.vertices))}]: {n}" for s, n in self._terms.items())
        return f"Chain({self._dim}, {{{inner}}})"


def chain_add(c1: Chain, c2: Chain) -> Chain:
    return c1 + c2


def chain_scale(n: int, c: Chain) -> Chain:
    return n * c


def elementary_chain(sigma: OrientedSimplex) -> Chain:
    """The chain worth 1 on ``sigma`` and -1 on its opposite."""
    return Chain(sigma.dim, {sigma.base: sigma.sign})


class GeneratorAssignment:
    """Integer values on the positively oriented p-simplices.

    The value on a negatively oriented simplex is implicitly the negative.
    """

    def __init__(self, dim: int, values: Mapping[Simplex, int]):
        for s in values:
            if s.dim != dim:
                raise DimensionMismatch(f"{s!r} has dimension {s.dim}, expected {dim}")
        self.dim = dim
        self.values = MappingProxyType({s: int(v) for s, v in values.items()})

    @classmethod
    def from_oriented(cls, values: Mapping[OrientedSimplex, int]) -> GeneratorAssignment:
        """Accept values given on arbitrarily oriented generators."""
        dims = {s.dim for s in values}
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
        dim = dims.pop() if dims else 0
        return cls(dim, {s.base: s.sign * v for s, v in values.items()})

    def __call__(self, sigma: Simplex | OrientedSimplex) -> int:
        sign = 1
        if isinstance(sigma, OrientedSimplex):
            sign, sigma = sigma.sign, sigma.base
        try:
            return sign * self.values[sigma]
        except KeyError:
            raise MissingGenerator(f"no value assigned to {sigma!r}") from None


def evaluate_hom(f: GeneratorAssignment, c: Chain) -> int:
    """Unique homomorphism C_p(K) -> Z extending ``f``, evaluated at ``c``."""
    if c.dim != f.dim and c:
        raise DimensionMismatch(f"assignment is on {f.dim}-simplices, chain has dimension {c.dim}")
    return sum(n * f(s) for s, n in c)
