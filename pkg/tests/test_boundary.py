import pytest
from hypothesis import given

import oracles
from randomgen import maximal_simplices
from simphom import (
    Chain,
    Simplex,
    boundary_chain,
    boundary_matrix,
    boundary_simplex,
    builtin,
    complex_from_maximal,
    oriented,
)
from simphom.snf import matmul


def ch(*pairs):
    return Chain.from_orderings(pairs)


def test_boundary_of_edge():
    assert boundary_simplex(oriented(0, 1)) == ch((1, (1,)), (-1, (0,)))


def test_boundary_of_reversed_edge():
    assert boundary_simplex(oriented(1, 0)) == ch((1, (0,)), (-1, (1,)))


def test_boundary_of_triangle():
    expected = ch((1, (1, 2)), (-1, (0, 2)), (1, (0, 1)))
    assert boundary_simplex(oriented(0, 1, 2)) == expected
    # reversed orientation as written out longhand
    assert boundary_simplex(oriented(0, 2, 1)) == ch((1, (2, 1)), (-1, (0, 1)), (1, (0, 2)))
    assert boundary_simplex(oriented(0, 2, 1)) == -expected


def test_boundary_of_tetrahedron():
    expected = ch((1, (1, 2, 3)), (-1, (0, 2, 3)), (1, (0, 1, 3)), (-1, (0, 1, 2)))
    assert boundary_simplex(oriented(0, 1, 2, 3)) == expected
    assert boundary_simplex(-oriented(0, 1, 2, 3)) == -expected


def test_boundary_of_vertex_is_zero():
    b = boundary_simplex(oriented(4))
    assert not b and b.dim == -1


def test_boundary_chain_examples():
    loop = ch((1, (0, 1)), (1, (1, 2)), (1, (2, 0)))
    assert boundary_chain(loop) == Chain.zero(0)
    s1, s2, s3, s4 = (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)
    surface = ch((1, s1), (-1, s2), (1, s3), (-1, s4))
    assert boundary_chain(surface) == Chain.zero(1)
    assert boundary_chain(Chain.zero(2)) == Chain.zero(1)


def test_double_boundary_of_tetrahedron_cancels():
    b = boundary_simplex(oriented(0, 1, 2, 3))
    # each edge appears in exactly two faces with opposite induced signs
    contributions = {}
    for face, n in b:
        for i, edge in enumerate(face.facets()):
            contributions.setdefault(edge, []).append(n * (-1) ** i)
    assert len(contributions) == 6
    assert all(sorted(v) == [-1, 1] for v in contributions.values())
    assert boundary_chain(b) == Chain.zero(1)


TEXTBOOK_TRIANGLE = [[-1, 0, 1], [1, -1, 0], [0, 1, -1]]
TEXTBOOK_SQUARE = [[-1, 0, 0, 1], [1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]]
TEXTBOOK_TRIANGULATED = [
    [-1, 0, 0, 1, -1],
    [1, -1, 0, 0, 0],
    [0, 1, -1, 0, 1],
    [0, 0, 1, -1, 0],
]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("triangle_boundary", TEXTBOOK_TRIANGLE),
        ("square_boundary", TEXTBOOK_SQUARE),
        ("triangulated_square", TEXTBOOK_TRIANGULATED),
    ],
)
def test_matrices_in_textbook_bases(name, expected):
    assert builtin(name).boundary_matrix(1).to_lists() == expected


def test_triangulated_square_second_boundary():
    # columns e1 + e2 - e5 and e3 + e4 + e5
    bm = builtin("triangulated_square").boundary_matrix(2)
    assert bm.column(0) == [1, 1, 0, 0, -1]
    assert bm.column(1) == [0, 0, 1, 1, 1]


def test_canonical_triangle_matrix():
    K = complex_from_maximal([(0, 1), (1, 2), (2, 0)])
    bm = boundary_matrix(K, 1)
    assert [c.base.vertices for c in bm.cols] == [(0, 1), (0, 2), (1, 2)]
    assert bm.to_lists() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    # re-expressing in the order [0,1], [1,2], [2,0] gives the textbook matrix
    textbook = bm.in_bases(cols=[oriented(0, 1), oriented(1, 2), oriented(2, 0)])
    assert textbook.to_lists() == TEXTBOOK_TRIANGLE
    assert bm.triplets()[0] == (0, 0, -1)


def test_in_bases_rejects_foreign_basis():
    K = complex_from_maximal([(0, 1)])
    with pytest.raises(ValueError):
        boundary_matrix(K, 1).in_bases(cols=[oriented(0, 2)])


def test_edge_shapes():
    K = complex_from_maximal([(0, 1), (1, 2), (2, 0)])
    assert boundary_matrix(K, 0).shape == (0, 3)
    assert boundary_matrix(K, 2).shape == (3, 0)
    assert boundary_matrix(K, 3).shape == (0, 0)


def test_grid_format():
    grid = builtin("triangle_boundary").boundary_matrix(1).format_grid(builtin("triangle_boundary").vertex_names)
    lines = grid.splitlines()
    assert lines[0].split() == ["[a0,a1]", "[a1,a2]", "[a2,a0]"]
    assert lines[1].split() == ["[a0]", "-1", "0", "1"]


@given(maximal_simplices(max_dim=5))
def test_boundary_of_boundary_vanishes(maximal):
    K = complex_from_maximal(maximal)
    for s in K:
        assert not boundary_chain(boundary_simplex(s))
        assert boundary_simplex(-oriented(*s.vertices)) == -boundary_simplex(s)
    for p in range(1, K.dim + 1):
        A = boundary_matrix(K, p - 1)
        B = boundary_matrix(K, p)
        prod = matmul(A.entries, B.entries, inner=len(A.cols))
        assert all(v == 0 for row in prod for v in row)


@given(maximal_simplices())
def test_matrix_columns_and_oracle(maximal):
    K = complex_from_maximal(maximal)
    ref = oracles.closure(maximal)
    for p in range(1, K.dim + 1):
        bm = boundary_matrix(K, p)
        assert bm.to_lists() == oracles.boundary_matrix(ref, p)
        for j in range(bm.shape[1]):
            col = bm.column(j)
            assert sum(1 for v in col if v) == p + 1
            assert set(col) <= {-1, 0, 1}
        # column j is the boundary chain of the j-th simplex
        s = bm.cols[3 % bm.shape[1]].base
        assert Chain.from_vector(p - 1, [r.base for r in bm.rows], bm.column(3 % bm.shape[1])) == boundary_simplex(s)


def test_simplex_argument_accepted():
    assert boundary_simplex(Simplex((0, 1))) == boundary_simplex(oriented(0, 1))
