import pytest

from qpower.algebra.scalars import QScalar
from qpower.algebra.xpoly import XPoly
from qpower.qcalculus.exponentials import e_q_series
from qpower.specializations.qbinomial import (
    closed_form_p,
    defining_series,
    extraction_matches,
    qbinomial_check,
    qbinomial_routes,
    symbol_a,
)

q = QScalar.q()
a = XPoly.variable("a")


def test_symbol_a():
    assert symbol_a() == a
    assert symbol_a(3) == XPoly.constant(3, "a")
    assert symbol_a(a * 2) == a * 2


def test_closed_form():
    assert closed_form_p(1) == (1 - a) * (1 / (1 - q))
    assert closed_form_p(3) == a * a * (1 - a) * (1 / (1 - q))


@pytest.mark.parametrize("value", [None, 0, 2])
def test_three_routes_agree(value):
    assert qbinomial_check(value, t_order=4, q_order=5)


def test_routes_are_labelled():
    routes = qbinomial_routes(3, 4)
    assert set(routes) == {"sum", "composition", "product"}


def test_euler_degeneration():
    # a = 0 gives sum t^n/(q;q)_n = e_q(t/(1-q))
    series = defining_series(4, 0)
    expected = e_q_series(4).scale_arg(1 / (1 - q))
    for n in range(5):
        assert series[n] == XPoly.constant(expected[n], "a")


def test_geometric_degeneration():
    series = defining_series(4, q)
    assert all(c == XPoly.constant(1, "a") for c in series)


def test_extraction_matches_closed_form():
    assert extraction_matches(6) is None
    assert extraction_matches(4, q) is None
