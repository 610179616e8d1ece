import pytest

from qpower.algebra.scalars import QScalar
from qpower.algebra.xpoly import XPoly
from qpower.specializations.hermite import (
    RouteDisagreement,
    _agreed,
    extraction_sides,
    hermite_I,
    hermite_I_qexp_form,
    hermite_I_routes,
    hermite_II,
    hermite_II_routes,
    hermite_II_star_sides,
    hermite_limit,
    hermite_moment_cofactor,
    hermite_moment_determinant,
    hermite_product_check,
    mode_duality_sides,
)

q = QScalar.q()
x = XPoly.variable("x")


def test_first_kind_small_degrees():
    assert hermite_I(0) == 1
    assert hermite_I(1) == x
    assert hermite_I(2).render() == "x^2 − (1 − q)"
    assert hermite_I(3) == x**3 - x * (1 - q**3)


def test_second_kind_small_degrees():
    assert hermite_II(1) == x
    assert hermite_II(2) == x * x - (1 - q) / q


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_first_kind_routes_agree(n):
    routes = hermite_I_routes(n)
    reference = routes.pop("recurrence")
    for name, value in routes.items():
        assert value == reference, name


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_second_kind_routes_agree(n):
    routes = hermite_II_routes(n)
    reference = routes.pop("recurrence")
    for name, value in routes.items():
        assert value == reference, name


def test_route_disagreement_is_reported():
    with pytest.raises(RouteDisagreement):
        _agreed({"one": x, "other": x + 1}, "H", 1)
    with pytest.raises(ValueError):
        hermite_I(-1)


def test_moment_determinant():
    assert hermite_moment_determinant() == hermite_I(4)
    assert hermite_moment_cofactor() == hermite_I(4)


def test_q_exponential_forms():
    assert hermite_I_qexp_form(4)
    lhs, rhs = hermite_II_star_sides(4)
    assert lhs == rhs


def test_extraction_and_mode_duality():
    e_mode, closed_e, h_mode, closed_h = extraction_sides(4)
    assert e_mode == closed_e
    assert h_mode == closed_h
    from_e, from_h = mode_duality_sides(4)
    assert from_e == from_h


def test_truncated_products():
    assert hermite_product_check(3, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_classical_limit(n):
    ours, theirs = hermite_limit(n)
    assert ours == theirs
