"""Cycles, boundaries and integral homology groups of a simplicial complex."""
from __future__ import annotations

from dataclasses import dataclass, field

from .boundary import boundary_chain, boundary_matrix
from .chains import Chain
from .core import SimplicialComplex
from .errors import DimensionMismatch, ForeignSimplex
from .snf import SmithDecomposition, smith_normal_form, solve_integer

__all__ = [
    "HomologySummary",
    "is_cycle",
    "is_boundary",
    "bounding_chain",
    "homologous",
    "carried_by",
    "cycle_basis",
    "homology_group",
    "all_homology",
    "betti_numbers",
    "euler_characteristic",
]


@dataclass(frozen=True)
class HomologySummary:
    """H_p = Z^betti + Z_{t_1} + ... + Z_{t_k}.

    ``generators`` (free classes first, then one per torsion factor) is
    filled only on request and is ignored by equality: two complexes can
    have the same homology with different representative cycles.
    """

    p: int
    betti: int
    torsion: tuple[int, ...] = ()
    generators: tuple[Chain, ...] | None = field(default=None, compare=False)

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


def _check_carried(K: SimplicialComplex, c: Chain):
    for s in c.support():
        if s not in K:
            raise ForeignSimplex(f"{s!r} is not a simplex of the complex")


def _snf(K: SimplicialComplex, p: int) -> SmithDecomposition:
    bm = boundary_matrix(K, p)
    return smith_normal_form(bm.entries, ncols=len(bm.cols))


def is_cycle(K: SimplicialComplex, c: Chain) -> bool:
    _check_carried(K, c)
    return not boundary_chain(c)


def bounding_chain(K: SimplicialComplex, c: Chain) -> Chain | None:
    """A (p+1)-chain d of K with boundary c, or None when c is not a boundary."""
    _check_carried(K, c)
    p = c.dim
    cols = K.simplices(p + 1)
    b = c.to_vector(K.simplices(p))
    x = solve_integer(boundary_matrix(K, p + 1).entries, b, ncols=len(cols))
    if x is None:
        return None
    return Chain.from_vector(p + 1, cols, x)


def is_boundary(K: SimplicialComplex, c: Chain) -> bool:
    return bounding_chain(K, c) is not None


def homologous(K: SimplicialComplex, c1: Chain, c2: Chain) -> bool:
    """True iff c1 - c2 bounds in K."""
    if c1.dim != c2.dim:
        raise DimensionMismatch(f"cannot compare a {c1.dim}-chain with a {c2.dim}-chain")
    _check_carried(K, c1)
    _check_carried(K, c2)
    return is_boundary(K, c1 - c2)


def carried_by(c: Chain, L: SimplicialComplex) -> bool:
    return all(s in L for s in c.support())


def cycle_basis(K: SimplicialComplex, p: int) -> list[Chain]:
    """A basis of the cycle group Z_p (integer kernel of the p-th boundary)."""
    basis = K.simplices(p)
    snf = _snf(K, p)
    n = len(basis)
    return [
        Chain.from_vector(p, basis, [snf.V[i][j] for i in range(n)])
        for j in range(snf.rank, n)
    ]


def _generators(K, p, snf_p, bd_next):
    basis = K.simplices(p)
    n = len(basis)
    Z = [[snf_p.V[i][j] for j in range(snf_p.rank, n)] for i in range(n)]
    k = n - snf_p.rank
    if k == 0:
        return ()
    # coordinates of each boundary column in the cycle basis
    cols = []
    for j in range(len(bd_next.cols)):
        x = solve_integer(Z, bd_next.column(j), ncols=k)
        assert x is not None, "boundary outside the cycle lattice"
        cols.append(x)
    X = [[cols[j][i] for j in range(len(cols))] for i in range(k)]
    q = smith_normal_form(X, ncols=len(cols))
    free, tors = [], []
    for i in range(k):
        d = q.D[i][i] if i < q.rank else 0
        if d == 1:
            continue
        coords = [row[i] for row in q.U_inv]
        vec = [sum(Z[a][b] * coords[b] for b in range(k)) for a in range(n)]
        (free if d == 0 else tors).append(Chain.from_vector(p, basis, vec))
    return tuple(free + tors)


def _summary(K, p, snf_p, snf_next, generators):
    n_p = K.count(p)
    betti = n_p - snf_p.rank - snf_next.rank
    gens = None
    if generators:
        gens = _generators(K, p, snf_p, boundary_matrix(K, p + 1))
    return HomologySummary(p, betti, tuple(snf_next.torsion), gens)


def homology_group(K: SimplicialComplex, p: int, generators: bool = False) -> HomologySummary:
    """H_p(K): betti = nullity of the p-th boundary minus rank of the (p+1)-th;
    torsion = invariant factors > 1 of the (p+1)-th boundary matrix."""
    if p < 0 or p > K.dim:
        return HomologySummary(p, 0, (), () if generators else None)
    return _summary(K, p, _snf(K, p), _snf(K, p + 1), generators)


def all_homology(K: SimplicialComplex, generators: bool = False) -> list[HomologySummary]:
    if K.dim < 0:
        return []
    snfs = [_snf(K, p) for p in range(K.dim + 2)]
    return [_summary(K, p, snfs[p], snfs[p + 1], generators) for p in range(K.dim + 1)]


def betti_numbers(K: SimplicialComplex) -> list[int]:
    return [h.betti for h in all_homology(K)]


def euler_characteristic(K: SimplicialComplex, from_betti: bool = False) -> int:
    """Alternating sum of simplex counts, or of Betti numbers if requested."""
    if from_betti:
        return sum((-1) ** p * b for p, b in enumerate(betti_numbers(K)))
    return K.euler_characteristic()
