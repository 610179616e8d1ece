from fractions import Fraction
from random import Random

import pytest

from qpower.algebra.ring import SCALARS
from qpower.algebra.scalars import QScalar, qint
from qpower.algebra.series import (
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    Series,
    TruncationMismatch,
    compose_classical,
    exp_series,
    random_series,
)

q = QScalar.q()


def series(coeffs, t_order=None):
    t_order = len(coeffs) - 1 if t_order is None else t_order
    return Series.from_coefficients(SCALARS, [QScalar.coerce(c) for c in coeffs], t_order)


def test_product():
    assert series([1, 1], 2) * series([1, -1], 2) == series([1, 0, -1])
    assert (series([1] * 7) * series([1, -1], 6)) == Series.one(SCALARS, 6)


def test_mixed_truncation_takes_minimum():
    product = series([1, 1], 3) * series([1, 2], 5)
    assert product.t_order == 3
    assert (series([1], 3) + series([1], 5)).t_order == 3


def test_strict_mode():
    with pytest.raises(TruncationMismatch):
        series([1], 3).add(series([1], 5), strict=True)
    with pytest.raises(TruncationMismatch):
        series([1], 3).truncate(4)


def test_invert():
    assert series([1, -1], 5).invert() == series([1] * 6)
    a = series([2, q, 1 - q, 3], 3)
    assert a.invert().invert() == a
    assert a * a.invert() == Series.one(SCALARS, 3)
    with pytest.raises(NonInvertibleConstantTerm):
        series([0, 1], 3).invert()


def test_q_derive():
    cubic = series([0, 0, 0, 1])
    assert cubic.q_derive() == series([0, 0, qint(3)])
    assert cubic.q_derive(2) == series([0, 0, qint(3, 2)])
    # geometric series: D_q sum t^n = sum [n+1] t^n
    assert series([1] * 5).q_derive() == series([qint(n + 1) for n in range(4)])


def test_scale_arg_and_shift():
    assert series([1, 1, 1]).scale_arg(q) == series([1, q, q * q])
    shifted = series([1, 2], 2).shift(2)
    assert shifted.t_order == 4
    assert shifted == series([0, 0, 1, 2, 0])


def test_reduce_mod_q():
    a = Series(SCALARS, [1 / (1 - q), qint(4)])
    reduced = a.reduce_mod_q(2)
    assert reduced.q_order == 2
    assert reduced == series([1 + q, 1 + q])


def test_compose_classical():
    t = Series.variable(SCALARS, 5)
    assert compose_classical(series([1] * 6), t) == series([1] * 6)
    # exp(t) composed with 2t
    doubled = compose_classical(exp_series(4), t.scale_arg(2))
    assert doubled[3] == Fraction(8, 6)
    with pytest.raises(NonzeroConstantTerm):
        compose_classical(exp_series(4), series([1, 1], 4))


def test_first_difference():
    a = series([1, 2, 3])
    assert a.first_difference(series([1, 2, 4])) == 2
    assert a.first_difference(a) is None


def test_render():
    assert series([1, 1], 2).render() == "1 + t + O(t^3)"
    assert series([0, 0, qint(2)]).render() == "(1 + q)·t^2 + O(t^3)"
    assert series([0], 1).render() == "0 + O(t^2)"
    assert series([1, 0, 1]).render_latex() == "1 + t^{2} + O(t^{3})"


def test_random_series_is_seeded():
    a = random_series(Random(7), 5)
    b = random_series(Random(7), 5)
    assert a == b
    assert a.t_order == 5
    assert a[0].is_zero
