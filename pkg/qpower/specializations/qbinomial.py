"""
The q-binomial theorem as a specialization of E(t):

    sum (a;q)_n/(q;q)_n t^n = (at;q)_inf / (t;q)_inf = e_q[sum a^{n-1}(1-a)/(1-q^n) t^n]_q

with [p_n] = (-a)^{n-1}(1-a)/(1-q). Coefficients are polynomials in the
symbol a over Q(q); a concrete a is embedded as a constant.
"""
from typing import Dict, Optional, Union

from ..algebra.scalars import QScalar
from ..algebra.series import Series
from ..algebra.xpoly import XPoly, XPolyRing
from ..qcalculus.exponentials import gessel_exp
from .specialization import Mode, specialize

A_RING = XPolyRing("a")

ParamA = Union[None, int, QScalar, XPoly]


def symbol_a(a: ParamA = None) -> XPoly:
    """The symbolic a when a is None, otherwise a as a constant polynomial in a."""
    if a is None:
        return XPoly.variable("a")
    if isinstance(a, XPoly):
        return a
    return XPoly.constant(a, "a")


def _one_minus_q_power(k: int) -> QScalar:
    return QScalar.one() - QScalar.q_power(k)


def defining_series(t_order: int, a: ParamA = None) -> Series:
    """sum (a;q)_n/(q;q)_n t^n"""
    a = symbol_a(a)
    coeffs = []
    numerator = A_RING.one
    denominator = QScalar.one()
    for n in range(t_order + 1):
        if n > 0:
            numerator = numerator * (A_RING.one - a * QScalar.q_power(n - 1))
            denominator = denominator * _one_minus_q_power(n)
        coeffs.append(numerator * (QScalar.one() / denominator))
    return Series(A_RING, coeffs)


def closed_form_p(n: int, a: ParamA = None) -> XPoly:
    """[p_n] = (-a)^{n-1}(1-a)/(1-q)"""
    a = symbol_a(a)
    return (-a) ** (n - 1) * (A_RING.one - a) * (QScalar.one() / _one_minus_q_power(1))


def composition_series(t_order: int, a: ParamA = None) -> Series:
    """e_q of sum a^{n-1}(1-a)/(1-q^n) t^n."""
    a = symbol_a(a)
    coeffs = [A_RING.zero]
    for n in range(1, t_order + 1):
        coeffs.append(a ** (n - 1) * (A_RING.one - a) * (QScalar.one() / _one_minus_q_power(n)))
    return gessel_exp(Series(A_RING, coeffs))


def product_series(t_order: int, q_order: int, a: ParamA = None) -> Series:
    """prod_{k<M} (1 - a q^k t)/(1 - q^k t), reduced mod q^M."""
    a = symbol_a(a)
    result = Series.one(A_RING, t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        qk = QScalar.q_power(k)
        numerator = Series.from_coefficients(A_RING, [A_RING.one, -(a * qk)], t_order)
        denominator = Series.from_coefficients(A_RING, [A_RING.one, A_RING.one * (-qk)], t_order)
        result = result * numerator.reduce_mod_q(q_order) * denominator.reduce_mod_q(q_order).invert()
    return result


def qbinomial_routes(t_order: int, q_order: int, a: ParamA = None) -> Dict[str, Series]:
    return {
        "sum": defining_series(t_order, a),
        "composition": composition_series(t_order, a),
        "product": product_series(t_order, q_order, a),
    }


def qbinomial_check(a: ParamA = None, t_order: int = 8, q_order: int = 10) -> bool:
    """The sum and composition routes agree exactly, and all three agree mod q^M."""
    routes = qbinomial_routes(t_order, q_order, a)
    if not routes["sum"] == routes["composition"]:
        return False
    reduced = routes["sum"].reduce_mod_q(q_order)
    return reduced == routes["composition"].reduce_mod_q(q_order) and reduced == routes["product"]


def extraction_matches(n_max: int, a: ParamA = None) -> Optional[int]:
    """First n <= n_max whose extracted [p_n] differs from the closed form, or None."""
    spec = specialize(Mode.E, defining_series(n_max, a))
    for n in range(1, n_max + 1):
        if not spec.p(n) == closed_form_p(n, a):
            return n
    return None
