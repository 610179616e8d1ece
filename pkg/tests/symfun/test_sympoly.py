import pytest

from qpower.algebra.ring import NotAUnit
from qpower.algebra.scalars import QScalar, qint
from qpower.symfun.sympoly import SYMMETRIC, SymPoly, render_monomial

q = QScalar.q()
e1, e2, e3 = (SymPoly.generator(k) for k in (1, 2, 3))


def test_generators_and_degree():
    assert SymPoly.generator(0).is_one
    assert (e1 * e2).degree == 3
    assert (e1 * e1 + e2).is_homogeneous(2)
    assert not (e1 + e2).is_homogeneous(2)
    with pytest.raises(ValueError):
        SymPoly.generator(-1)


def test_no_zero_terms_are_kept():
    poly = e1 * qint(2) - e1 * (1 + q)
    assert poly.is_zero
    assert poly == 0
    assert list(SymPoly({(1,): 0, (): 1}).terms) == [()]


def test_render_order_and_signs():
    assert (e1 * e1 - e2 * qint(2)).render() == "e1^2 − [2]·e2"
    assert (e3 + e1 * e2 + e1**3).render() == "e1^3 + e1·e2 + e3"
    assert (e1 * (1 - q)).render() == "(1 − q)·e1"
    assert (-e2 + 1).render() == "−e2 + 1"
    assert SymPoly.zero().render() == "0"
    assert (e1 * e1 - e2 * qint(2)).render_latex() == "e_{1}^{2} - [2]_q e_{2}"


def test_json_round_trip():
    poly = e1**2 * q - e3 / (1 - q) + 5
    assert SymPoly.from_json(poly.to_json()) == poly


def test_first_difference():
    a = e1 * e1 + e2
    assert a.first_difference(a) is None
    assert a.first_difference(e1 * e1 + e2 * 2) == (0, 1)


def test_substitute():
    # e_k -> [k]
    assert (e1 * e2 + e3).substitute(lambda k: qint(k), QScalar.one()) == qint(2) + qint(3)
    assert SymPoly.zero().substitute(lambda k: qint(k), QScalar.one()).is_zero


def test_units():
    assert SYMMETRIC.inverse(SymPoly.constant(q)) == SymPoly.constant(1 / q)
    with pytest.raises(NotAUnit):
        SYMMETRIC.inverse(e1)


def test_render_monomial():
    assert render_monomial((2, 0, 1)) == "e1^2·e3"
    assert render_monomial(()) == "1"
