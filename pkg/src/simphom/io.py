"""Complex documents, builtin fixtures, chain literals and JSON reports.

File format: one maximal simplex per line as whitespace-separated vertex
names; ``#`` starts a comment; blank lines are ignored.  Names map to
integer ids in order of first appearance.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .boundary import BoundaryMatrix, boundary_matrix
from .chains import Chain
from .core import OrientedSimplex, SimplicialComplex, canonicalize, complex_from_maximal
from .errors import DuplicateVertexInSimplex, ParseError, UnknownBuiltin
from .homology import all_homology
from .snf import rank

__all__ = [
    "ComplexDocument",
    "HomologyReport",
    "REPORT_SCHEMA",
    "parse_complex",
    "serialize_complex",
    "builtin",
    "BUILTIN_NAMES",
    "parse_chain",
    "homology_report",
]

_RESERVED = set("[],*+#")


@dataclass(frozen=True)
class ComplexDocument:
    """A complex as written: named vertices and maximal simplices.

    ``bases`` optionally fixes an oriented, ordered presentation of the
    chain groups for some dimensions (vertex-name orderings); builtins use
    it to reproduce textbook edge orders such as ``[a2,a0]``.
    """

    name: str
    maximal_simplices: tuple[tuple[str, ...], ...]
    vertex_names: tuple[str, ...]
    bases: dict = field(default_factory=dict, compare=False)

    def vertex_id(self, name: str) -> int:
        try:
            return self.vertex_names.index(name)
        except ValueError:
            raise ParseError(f"unknown vertex {name!r}") from None

    def to_complex(self) -> SimplicialComplex:
        ids = {v: i for i, v in enumerate(self.vertex_names)}
        return complex_from_maximal([[ids[v] for v in s] for s in self.maximal_simplices])

    def basis(self, p: int) -> tuple[OrientedSimplex, ...] | None:
        """The declared oriented basis of dimension p, if any."""
        if p not in self.bases:
            return None
        out = []
        for ordering in self.bases[p]:
            base, sign = canonicalize([self.vertex_id(v) for v in ordering])
            out.append(OrientedSimplex(base, sign))
        return tuple(out)

    def boundary_matrix(self, p: int, canonical: bool = False) -> BoundaryMatrix:
        """Boundary matrix, in the declared bases unless ``canonical``."""
        bm = boundary_matrix(self.to_complex(), p)
        if canonical:
            return bm
        return bm.in_bases(self.basis(p - 1), self.basis(p))


def _document(name, simplices, bases=None) -> ComplexDocument:
    names: list[str] = []
    seen = set()
    kept = []
    for s in simplices:
        key = frozenset(s)
        if key in seen:
            continue
        seen.add(key)
        kept.append(tuple(s))
        for v in s:
            if v not in names:
                names.append(v)
    return ComplexDocument(name, tuple(kept), tuple(names), dict(bases or {}))


def parse_complex(text: str, name: str = "complex") -> ComplexDocument:
    simplices = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        for tok in tokens:
            bad = _RESERVED & set(tok)
            if bad:
                raise ParseError(f"vertex name {tok!r} contains reserved character(s) {''.join(sorted(bad))}", lineno)
        if len(set(tokens)) != len(tokens):
            raise DuplicateVertexInSimplex(f"repeated vertex in simplex {' '.join(tokens)}", lineno)
        simplices.append(tuple(tokens))
    return _document(name, simplices)


def serialize_complex(doc: ComplexDocument) -> str:
    return "".join(" ".join(s) + "\n" for s in doc.maximal_simplices)


def _ring(names):
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def _v(*idx, prefix="a"):
    return tuple(f"{prefix}{i}" for i in idx)


def _triangle_boundary():
    edges = _ring(_v(0, 1, 2))
    return _document("triangle_boundary", edges, {0: [(v,) for v in _v(0, 1, 2)], 1: edges})


def _filled_triangle():
    return _document("filled_triangle", [_v(0, 1, 2)])


def _square_boundary():
    edges = _ring(_v(0, 1, 2, 3))
    return _document("square_boundary", edges, {0: [(v,) for v in _v(0, 1, 2, 3)], 1: edges})


def _triangulated_square():
    edges = _ring(_v(0, 1, 2, 3)) + [_v(0, 2)]
    return _document(
        "triangulated_square",
        [_v(0, 1, 2), _v(0, 2, 3)],
        {0: [(v,) for v in _v(0, 1, 2, 3)], 1: edges, 2: [_v(0, 1, 2), _v(0, 2, 3)]},
    )


def _tetrahedron_surface():
    return _document("tetrahedron_surface", [_v(0, 1, 2), _v(0, 1, 3), _v(0, 2, 3), _v(1, 2, 3)])


def _solid_tetrahedron():
    return _document("solid_tetrahedron", [_v(0, 1, 2, 3)])


def _two_triangles():
    return _document("two_triangles", _ring(_v(0, 1, 2)) + _ring(_v(0, 1, 2, prefix="b")))


def _hexagon_boundary():
    return _document("hexagon_boundary", _ring(_v(*range(6))))


def _projective_plane():
    # minimal 6-vertex triangulation of RP^2 (antipodal quotient of the icosahedron)
    tris = [(1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
            (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6)]
    return _document("projective_plane", [_v(*(i - 1 for i in t), prefix="v") for t in tris])


def _torus():
    # 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    tris = []
    for i in range(7):
        tris.append(_v(i, (i + 1) % 7, (i + 3) % 7, prefix="v"))
        tris.append(_v(i, (i + 2) % 7, (i + 3) % 7, prefix="v"))
    return _document("torus", tris)


_BUILTINS: dict[str, Callable[[], ComplexDocument]] = {
    "triangle_boundary": _triangle_boundary,
    "filled_triangle": _filled_triangle,
    "square_boundary": _square_boundary,
    "triangulated_square": _triangulated_square,
    "tetrahedron_surface": _tetrahedron_surface,
    "solid_tetrahedron": _solid_tetrahedron,
    "two_triangles": _two_triangles,
    "hexagon_boundary": _hexagon_boundary,
    "projective_plane": _projective_plane,
    "torus": _torus,
}
BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> ComplexDocument:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise UnknownBuiltin(name, BUILTIN_NAMES) from None


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*)?\s*\[([^\]]*)\]\s*")


def parse_chain(
    text: str,
    resolve: Callable[[str], int] | None = None,
    dim: int | None = None,
) -> Chain:
    """Parse ``3*[0,1] - 2*[1,2] + [2,0]`` into a chain.

    ``resolve`` maps a vertex token to an id (default: ``int``).  The
    literal ``0`` is the zero chain and needs ``dim``.
    """
    resolve = resolve or _int_vertex
    stripped = text.strip()
    if stripped == "0":
        if dim is None:
            raise ParseError("the zero chain needs an explicit dimension")
        return Chain(dim)
    items = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse chain at {text[pos:]!r}")
        sign, coef, body = m.groups()
        if sign is None and items:
            raise ParseError(f"missing '+' or '-' before {m.group(0).strip()!r}")
        tokens = [t.strip() for t in body.split(",")]
        if not all(tokens):
            raise ParseError(f"empty vertex in [{body}]")
        n = int(coef) if coef is not None else 1
        items.append(((-n if sign == "-" else n), [resolve(t) for t in tokens]))
        pos = m.end()
    if not items:
        raise ParseError("empty chain literal")
    chain = Chain.from_orderings(items)
    if dim is not None and chain.dim != dim:
        raise ParseError(f"expected a {dim}-chain, got a {chain.dim}-chain")
    return chain


def _int_vertex(tok: str) -> int:
    if not tok.isdigit():
        raise ParseError(f"vertex {tok!r} is not a non-negative integer")
    return int(tok)


def document_resolver(doc: ComplexDocument) -> Callable[[str], int]:
    """Vertex names first; bare integers fall back to ids."""

    def resolve(tok: str) -> int:
        if tok in doc.vertex_names:
            return doc.vertex_names.index(tok)
        if tok.isdigit() and int(tok) < len(doc.vertex_names):
            return int(tok)
        raise ParseError(f"unknown vertex {tok!r}")

    return resolve


@dataclass(frozen=True)
class HomologyReport:
    complex: str
    entries: tuple[dict, ...]
    euler: int

    def to_dict(self, detailed: bool = False) -> dict:
        keys = ("p", "betti", "torsion", "simplex_count", "boundary_rank") if detailed else ("p", "betti", "torsion")
        return {
            "complex": self.complex,
            "groups": [{k: e[k] for k in keys} for e in self.entries],
            "euler": self.euler,
        }

    def format_text(self) -> str:
        lines = [f"complex: {self.complex}"]
        for e in self.entries:
            lines.append(
                f"H_{e['p']} = {_group_str(e['betti'], e['torsion'])}"
                f"   (betti {e['betti']}, torsion {e['torsion']},"
                f" {e['simplex_count']} simplices, rank d_{e['p']} = {e['boundary_rank']})"
            )
        lines.append(f"euler characteristic: {self.euler}")
        return "\n".join(lines)


def _group_str(betti, torsion):
    parts = ([] if not betti else ["Z" if betti == 1 else f"Z^{betti}"]) + [f"Z_{d}" for d in torsion]
    return " + ".join(parts) or "0"


REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["complex", "groups", "euler"],
    "properties": {
        "complex": {"type": "string"},
        "euler": {"type": "integer"},
        "groups": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["p", "betti", "torsion"],
                "properties": {
                    "p": {"type": "integer", "minimum": 0},
                    "betti": {"type": "integer", "minimum": 0},
                    "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
                },
            },
        },
    },
}


def homology_report(doc: ComplexDocument, dims: Sequence[int] | None = None) -> HomologyReport:
    K = doc.to_complex()
    entries = []
    for h in all_homology(K):
        if dims is not None and h.p not in dims:
            continue
        entries.append({
            "p": h.p,
            "betti": h.betti,
            "torsion": list(h.torsion),
            "simplex_count": K.count(h.p),
            "boundary_rank": _rank(K, h.p),
        })
    return HomologyReport(doc.name, tuple(entries), K.euler_characteristic())


def _rank(K, p):
    bm = boundary_matrix(K, p)
    return rank(bm.entries, ncols=len(bm.cols))
