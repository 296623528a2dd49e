from math import comb

import pytest

from multiaxial.family import Family
from multiaxial.orbit_cells import (
    CellFiltration,
    Shape,
    boundary,
    build_chain_complex,
    enumerate_shapes,
    orbit_space_dimension,
    shape_dimension,
)

C = Family.COMPLEX
H = Family.QUATERNIONIC


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape((), C)
    with pytest.raises(ValueError):
        Shape((1, 2), C)
    with pytest.raises(ValueError):
        Shape((2, 2), C)
    with pytest.raises(ValueError):
        Shape((2, 0), C)


def test_dimension_examples():
    assert shape_dimension(Shape((2, 1), C)) == 3
    assert shape_dimension(Shape((2, 1), H)) == 5
    assert shape_dimension(Shape((3,), H)) == 8
    assert shape_dimension(Shape((1,), C)) == 0
    assert shape_dimension(Shape((1,), H)) == 0


def test_boundary_examples():
    assert boundary(Shape((2, 1), C)) == {Shape((2,), C): 1}
    assert boundary(Shape((3, 2), C)) == {}
    assert boundary(Shape((1,), C)) == {}
    assert boundary(Shape((4, 2, 1), H)) == {Shape((4, 2), H): 1}


def test_enumerate_sphere():
    shapes = enumerate_shapes(C, 1, 2)
    assert [(s.pivots, s.dimension) for s in shapes] == [((1,), 0), ((2,), 2)]


def test_enumerate_two_by_two():
    shapes = enumerate_shapes(C, 2, 2)
    assert [(s.pivots, s.dimension) for s in shapes] == [
        ((1,), 0),
        ((2,), 2),
        ((2, 1), 3),
    ]


def test_enumerate_rank_two_slice():
    shapes = enumerate_shapes(C, 2, 4, CellFiltration.exact(2))
    assert [s.pivots for s in shapes] == [
        (2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3),
    ]
    assert [s.dimension for s in shapes] == [3, 5, 7, 7, 9, 11]


def test_enumeration_order_is_dimension_then_lex():
    shapes = enumerate_shapes(C, 3, 5)
    keys = [(s.dimension, s.pivots) for s in shapes]
    assert keys == sorted(keys)


def test_enumeration_count_and_domain():
    for family in (C, H):
        for n in range(1, 4):
            for k in range(n, 7):
                shapes = enumerate_shapes(family, n, k)
                assert len(shapes) == sum(comb(k, r) for r in range(1, n + 1))
    with pytest.raises(ValueError):
        enumerate_shapes(C, 3, 2)


def test_empty_filtration_band():
    assert enumerate_shapes(C, 2, 4, CellFiltration(3, None)) == []
    with pytest.raises(ValueError):
        CellFiltration(3, 2)


def test_build_two_by_two_complex():
    complex_ = build_chain_complex(C, 2, 2)
    assert complex_.generators(0) == ("(1)",)
    assert complex_.generators(2) == ("(2)",)
    assert complex_.generators(3) == ("(2,1)",)
    assert complex_.boundary_matrix(3) == [[1]]


def test_relative_complex_has_zero_boundaries():
    complex_ = build_chain_complex(C, 2, 4, CellFiltration.exact(2))
    for p in complex_.degrees():
        assert not any(any(row) for row in complex_.boundary_matrix(p))


def test_quaternionic_point():
    complex_ = build_chain_complex(H, 1, 1)
    assert complex_.degrees() == [0]
    assert complex_.generators(0) == ("(1)",)


def test_exactly_one_zero_cell_and_top_dimension():
    for family in (C, H):
        for n in range(1, 4):
            for k in range(n, 7):
                shapes = enumerate_shapes(family, n, k)
                zero_cells = [s for s in shapes if s.dimension == 0]
                assert zero_cells == [Shape((1,), family)]
                top = max(s.dimension for s in shapes)
                assert top == orbit_space_dimension(family, n, k)


def test_full_rank_interior_count():
    for family in (C, H):
        for n in range(1, 4):
            for k in range(n, 7):
                interior = [
                    s
                    for s in enumerate_shapes(
                        family, n, k, CellFiltration.exact(n)
                    )
                    if s.pivots[-1] > 1
                ]
                assert len(interior) == comb(k - 1, n)


def test_full_rank_dimension_parities():
    for n in range(1, 4):
        for k in range(n, 7):
            for s in enumerate_shapes(C, n, k, CellFiltration.exact(n)):
                assert s.dimension % 2 == (n + 1) % 2
            residues = {
                s.dimension % 4
                for s in enumerate_shapes(H, n, k, CellFiltration.exact(n))
            }
            assert len(residues) == 1


def test_orbit_space_dimension_examples():
    assert orbit_space_dimension(C, 2, 4) == 11
    assert orbit_space_dimension(H, 2, 3) == 13
    assert orbit_space_dimension(C, 1, 1) == 0
