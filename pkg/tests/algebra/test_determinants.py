import pytest

from qpower.algebra.determinants import bareiss_det, build_matrix, cofactor_det, hessenberg_det, hessenberg_matrix
from qpower.algebra.ring import SCALARS
from qpower.algebra.scalars import QScalar, qint
from qpower.algebra.xpoly import XPoly, XPolyRing

q = QScalar.q()


def scalar_matrix(rows):
    return [[QScalar.coerce(c) for c in row] for row in rows]


def test_small_determinants_agree():
    matrix = scalar_matrix([[2, 1, 0], [1, 3, 1], [4, 0, 5]])
    for det in (bareiss_det, cofactor_det):
        assert det(matrix, SCALARS) == 2 * 15 - 1 * 1 + 0
    assert bareiss_det([], SCALARS).is_one


def test_bareiss_pivots():
    matrix = scalar_matrix([[0, 1], [1, 0]])
    assert bareiss_det(matrix, SCALARS) == -1
    assert bareiss_det(scalar_matrix([[0, 0], [1, 2]]), SCALARS).is_zero


def test_hessenberg_matches_cofactor():
    matrix = hessenberg_matrix(
        4,
        first_column=lambda i: qint(i),
        band=lambda i, j: q ** (i - j),
        superdiagonal=lambda i: -qint(i),
        zero=QScalar.zero(),
    )
    assert hessenberg_det(matrix, SCALARS) == cofactor_det(matrix, SCALARS)


def test_hessenberg_rejects_full_matrix():
    matrix = build_matrix(3, lambda i, j: QScalar.one())
    with pytest.raises(ValueError):
        hessenberg_det(matrix, SCALARS)


def test_polynomial_entries():
    x = XPoly.variable()
    ring = XPolyRing()
    matrix = [[x, ring.one], [ring.one, x]]
    assert bareiss_det(matrix, ring) == x * x - 1
    assert cofactor_det(matrix, ring) == x * x - 1
