import pytest

from qpower.algebra.gaussian import GaussianQScalar, NonRealResult
from qpower.algebra.ring import NotAUnit
from qpower.algebra.scalars import QScalar
from qpower.algebra.xpoly import XPoly, XPolyRing

q = QScalar.q()
x = XPoly.variable()


def test_arithmetic_and_degree():
    p = x * x - (1 - q)
    assert p.degree == 2
    assert p.coefficient(0) == q - 1
    assert p.coefficient(5).is_zero
    assert (p - p).is_zero


def test_exact_division():
    p = (x - 1) * (x + q)
    assert p.exact_div(x + q) == x - 1
    with pytest.raises(ArithmeticError):
        p.exact_div(x - 2)


def test_render():
    assert (x * x - (1 - q)).render() == "x^2 − (1 − q)"
    assert (x * 2 + 1).render() == "2*x + 1"
    assert XPoly.variable("a").render() == "a"
    assert XPoly().render() == "0"


def test_mixing_variables_fails():
    with pytest.raises(ValueError):
        x + XPoly.variable("a")


def test_ring_units():
    ring = XPolyRing()
    assert ring.inverse(XPoly.constant(2 * q)) == XPoly.constant(1 / (2 * q))
    with pytest.raises(NotAUnit):
        ring.inverse(x)


def test_gaussian_scalars():
    i = GaussianQScalar.i()
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert GaussianQScalar.one() / (1 + i) == GaussianQScalar(QScalar.constant(1) / 2, QScalar.constant(-1) / 2)
    with pytest.raises(NonRealResult):
        (1 + i).real()


def test_gaussian_polynomial_real_part():
    i = GaussianQScalar.i()
    y = XPoly.variable(field=GaussianQScalar)
    square = (y + i) * (y - i)
    assert square.real() == x * x + 1
    with pytest.raises(NonRealResult):
        (y + i).real()
