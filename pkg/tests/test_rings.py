import numpy as np
import pytest

from fourpoints import linalg as la
from fourpoints import rings
from fourpoints.rings import QUOTIENT as R, Poly, x, y, z


def test_pencil_members():
    assert rings.pencil((0, 1)) == x * x - y * y
    assert rings.pencil((1, 0)) == y * y - z * z
    assert rings.pencil((1, 1)) == x * x - z * z
    assert rings.q0() + rings.qinf() == rings.q1()


def test_singular_members():
    assert rings.singular_members() == {rings.ZERO, rings.ONE, rings.INFINITY}


def test_gram_determinant():
    for t in rings.SINGULAR:
        assert la.det(rings.gram_matrix(t)) == 0
    assert la.det(rings.gram_matrix((2, 1))) == la.residue(-2)


def test_normal_forms():
    assert rings.normal_form(R, y * y) == x * x
    assert rings.normal_form(R, y ** 3 * z ** 2) == x ** 4 * y
    assert rings.normal_form(rings.hypersurface(rings.INFINITY), y * y) == z * z


def test_basis_small_degrees():
    assert rings.basis(R, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert set(rings.basis(R, 2)) == {(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert [rings.dim(R, d) for d in range(8)] == [1, 3, 4, 4, 4, 4, 4, 4]
    assert rings.hilbert_series_dim(7) == 4


def test_mult_matrix():
    assert np.array_equal(rings.mult_matrix(R, rings.ONE_POLY, 2), la.eye(4))
    My = rings.mult_matrix(R, y, 1)
    col = My[:, rings.basis(R, 1).index((0, 1, 0))]
    assert col.tolist() == rings.coordinates(R, x * x, 2).tolist()
    lhs = la.matmul(rings.mult_matrix(R, x, 4), rings.mult_matrix(R, y, 3))
    assert np.array_equal(lhs, rings.mult_matrix(R, x * y, 3))


def test_lines_and_points():
    l1, l2, l3, l4 = rings.lines()
    p1, p2, p3, p4 = rings.points()
    assert p1 == (1, 1, 1)
    assert l1.evaluate(p1) == 0 and l2.evaluate(p1) == 0
    assert l2.evaluate(p3) != 0
    assert l1 * l3 == rings.q0()
    for i, p in enumerate(rings.points(), start=1):
        assert rings.line(i).evaluate(p) == 0
        assert rings.line(i + 1).evaluate(p) == 0


def test_point_parsing_and_labels():
    assert rings.parse_point("inf") == rings.INFINITY
    assert rings.parse_point("4:2") == (2, 1)
    assert rings.parse_point("2") == (2, 1)
    assert rings.point_label((6, 3)) == "2:1"
    assert rings.point_label((0, 5)) == "0"
    with pytest.raises(rings.RingError):
        rings.parse_point("banana")
    with pytest.raises(rings.RingError):
        rings.normalize_point((0, 0))


def test_poly_json_round_trip():
    f = 3 * x * y - z * z + 1
    assert Poly.from_json(f.to_json()) == f
    assert rings.Ring.from_json(rings.hypersurface((2, 1)).to_json()) == rings.hypersurface((2, 1))


def test_coordinates_round_trip():
    f = rings.normal_form(R, x * y * z + 5 * z ** 3)
    v = rings.coordinates(R, f, 3)
    assert rings.from_coordinates(R, v, 3) == f
