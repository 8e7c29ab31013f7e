"""Integral simplicial homology with exact arithmetic."""
from .boundary import BoundaryMatrix, boundary_chain, boundary_matrix, boundary_simplex
from .chains import Chain, GeneratorAssignment, chain_add, chain_scale, elementary_chain, evaluate_hom
from .core import (
    OrientedSimplex,
    Simplex,
    SimplicialComplex,
    canonicalize,
    complex_from_maximal,
    inversions,
    oriented,
    p_simplices,
    parity,
)
from .errors import (
    DimensionMismatch,
    DuplicateVertex,
    DuplicateVertexInSimplex,
    ForeignSimplex,
    HomologyError,
    MalformedPermutation,
    MissingGenerator,
    ParseError,
    UnknownBuiltin,
)
from .homology import (
    HomologySummary,
    all_homology,
    betti_numbers,
    bounding_chain,
    carried_by,
    cycle_basis,
    euler_characteristic,
    homologous,
    homology_group,
    is_boundary,
    is_cycle,
)
from .io import ComplexDocument, builtin, parse_chain, parse_complex, serialize_complex
from .snf import SmithDecomposition, kernel_basis, nullity, rank, smith_normal_form, solve_integer

__version__ = "0.1.0"
