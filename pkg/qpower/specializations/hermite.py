"""
Discrete q-Hermite polynomials of the first and second kind, computed as
specializations of the symmetric functions and cross-checked against their
generating functions, recurrences and the moment determinant.

    sum H_n(x;q)/(q;q)_n t^n = (t^2;q^2)_inf / (xt;q)_inf
    sum H~_n(x;q) q^{binom(n,2)}/(q;q)_n t^n = (-xt;q)_inf / (-t^2;q^2)_inf
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Tuple

from ..algebra.determinants import bareiss_det, build_matrix, cofactor_det, hessenberg_matrix
from ..algebra.gaussian import GaussianQScalar
from ..algebra.scalars import QScalar, qint
from ..algebra.series import Series
from ..algebra.xpoly import XPoly, XPolyRing
from ..qcalculus.exponentials import gessel_exp, invert_gessel_exp, star_exp
from .specialization import Mode, specialize

X_RING = XPolyRing("x")
GAUSSIAN_X_RING = XPolyRing("x", GaussianQScalar)

ONE_MINUS_Q = QScalar.one() - QScalar.q()


def x_power(k: int) -> XPoly:
    return XPoly.variable("x") ** k


def _q_pochhammer_q(n: int, step: int = 1) -> QScalar:
    """(q^step; q^step)_n"""
    result = QScalar.one()
    for k in range(1, n + 1):
        result = result * (QScalar.one() - QScalar.q_power(step * k))
    return result


def hermite_p(n: int) -> XPoly:
    """[p_n] of the first family: x/(1-q) for odd n, 1/(1-q) for even n."""
    base = x_power(1) if n % 2 == 1 else X_RING.one
    return base * (QScalar.one() / ONE_MINUS_Q)


def hermite_ph(n: int) -> XPoly:
    """[p_n^h]: x/(1-q) for n = 1, x^{n-2}(x^2-1)/(1-q) beyond."""
    if n == 1:
        return x_power(1) * (QScalar.one() / ONE_MINUS_Q)
    return x_power(n - 2) * (x_power(2) - 1) * (QScalar.one() / ONE_MINUS_Q)


def hermite_p_gaussian(n: int) -> XPoly:
    """[p_n] of the first family at ix: ix/(1-q) for odd n, 1/(1-q) for even n."""
    inverse = QScalar.one() / ONE_MINUS_Q
    if n % 2 == 1:
        return XPoly([0, GaussianQScalar(QScalar.zero(), inverse)], "x", GaussianQScalar)
    return XPoly([GaussianQScalar(inverse)], "x", GaussianQScalar)


def e_determinant(n: int, powers: Callable[[int], XPoly], ring: XPolyRing = X_RING) -> XPoly:
    """det([p_i] | [p_{i-j+1}] | superdiagonal [i]) = [n]! e_n, by fraction-free elimination."""
    matrix = hessenberg_matrix(
        n, powers, lambda i, j: powers(i - j + 1), lambda i: ring.one * qint(i), ring.zero
    )
    return bareiss_det(matrix, ring)


def h_determinant(n: int, powers: Callable[[int], XPoly], ring: XPolyRing = X_RING) -> XPoly:
    """det([p_i] | q^{j-1}[p_{i-j+1}] | superdiagonal -[i]) = [n]! h_n."""
    matrix = hessenberg_matrix(
        n,
        powers,
        lambda i, j: powers(i - j + 1) * QScalar.q_power(j - 1),
        lambda i: ring.one * (-qint(i)),
        ring.zero,
    )
    return bareiss_det(matrix, ring)


def hermite_I_e_route(n: int) -> XPoly:
    if n == 0:
        return X_RING.one
    return e_determinant(n, hermite_p) * ONE_MINUS_Q ** n


def hermite_I_h_route(n: int) -> XPoly:
    if n == 0:
        return X_RING.one
    return h_determinant(n, hermite_ph) * ONE_MINUS_Q ** n


def hermite_I_series_route(n: int) -> XPoly:
    """(q;q)_n times the t^n coefficient of sum_j (-1)^j q^{j(j-1)} t^{2j}/(q^2;q^2)_j · sum_k x^k t^k/(q;q)_k."""
    acc = X_RING.zero
    for j in range(n // 2 + 1):
        k = n - 2 * j
        scalar = QScalar.q_power(j * (j - 1)) / (_q_pochhammer_q(j, 2) * _q_pochhammer_q(k))
        if j % 2 == 1:
            scalar = -scalar
        acc = acc + x_power(k) * scalar
    return acc * _q_pochhammer_q(n)


@lru_cache(maxsize=None)
def hermite_I_recurrence(n: int) -> XPoly:
    """H_{n+1} = x H_n - q^{n-1}(1-q^n) H_{n-1}."""
    if n == 0:
        return X_RING.one
    if n == 1:
        return x_power(1)
    k = n - 1
    return x_power(1) * hermite_I_recurrence(k) - hermite_I_recurrence(k - 1) * (
        QScalar.q_power(k - 1) * (QScalar.one() - QScalar.q_power(k))
    )


def hermite_I_routes(n: int) -> Dict[str, XPoly]:
    return {
        "e-determinant": hermite_I_e_route(n),
        "h-determinant": hermite_I_h_route(n),
        "series": hermite_I_series_route(n),
        "recurrence": hermite_I_recurrence(n),
    }


def _agreed(routes: Dict[str, XPoly], family: str, n: int) -> XPoly:
    names = list(routes)
    reference = routes[names[0]]
    for name in names[1:]:
        if not routes[name] == reference:
            raise RouteDisagreement(f"{family}_{n}: {names[0]} gives {reference}, {name} gives {routes[name]}")
    return reference


@lru_cache(maxsize=None)
def hermite_I(n: int) -> XPoly:
    """H_n(x;q), only returned once every route agrees."""
    if n < 0:
        raise ValueError(f"H_n needs n >= 0, got {n}")
    value = _agreed(hermite_I_routes(n), "H", n)
    logging.debug(f"H_{n} = {value}")
    return value


def hermite_I_generating_series(t_order: int) -> Series:
    """sum H_n/(q;q)_n t^n"""
    return Series(X_RING, [hermite_I(n) * (QScalar.one() / _q_pochhammer_q(n)) for n in range(t_order + 1)])


def hermite_I_exponent(t_order: int) -> Series:
    """F = sum (-1)^{n-1}[p_n]/[n] t^n = (1-q)^{-1}(xt - t^2/[2] + xt^3/[3] - ...)."""
    coeffs = [X_RING.zero]
    for n in range(1, t_order + 1):
        term = hermite_p(n) * (QScalar.one() / qint(n))
        coeffs.append(term if n % 2 == 1 else -term)
    return Series(X_RING, coeffs)


def hermite_I_qexp_sides(t_order: int) -> Tuple[Series, Series]:
    """G and e_q[F]_q."""
    return hermite_I_generating_series(t_order), gessel_exp(hermite_I_exponent(t_order))


def hermite_I_qexp_form(t_order: int) -> bool:
    G, composed = hermite_I_qexp_sides(t_order)
    return G == composed and invert_gessel_exp(G) == hermite_I_exponent(t_order)


def hermite_small_series(t_order: int) -> Series:
    """(x+t)/((1-q)(1-t^2)) expanded: [p_{n+1}] at t^n."""
    return Series(X_RING, [hermite_p(n + 1) for n in range(t_order + 1)])


def hermite_small_h_series(t_order: int) -> Series:
    """(x-t)/((1-q)(1-xt)) expanded: [p_{n+1}^h] at t^n."""
    return Series(X_RING, [hermite_ph(n + 1) for n in range(t_order + 1)])


def extraction_sides(t_order: int) -> Tuple[List[XPoly], List[XPoly], List[XPoly], List[XPoly]]:
    """Extracted [p_n] and [p_n^h] from G next to their closed forms."""
    G = hermite_I_generating_series(t_order)
    e_mode = specialize(Mode.E, G)
    h_mode = specialize(Mode.H, G)
    closed_e = [hermite_p(n) for n in range(1, t_order + 1)]
    closed_h = [hermite_ph(n) for n in range(1, t_order + 1)]
    return e_mode.extracted_p, closed_e, h_mode.extracted_p, closed_h


def mode_duality_sides(t_order: int) -> Tuple[List[XPoly], List[XPoly]]:
    """The same [p_n] read from G in mode E and from 1/G(-t) in mode H."""
    G = hermite_I_generating_series(t_order)
    return specialize(Mode.E, G).extracted_p, specialize(Mode.H, G.scale_arg(-1).invert()).extracted_p


def hermite_moment_determinant() -> XPoly:
    """The 5x5 moment determinant divided by q^4 (1-q^2)^2; equals H_4."""
    def a(k: int) -> QScalar:
        return QScalar.one() - QScalar.q_power(k)

    zero, one = X_RING.zero, X_RING.one
    rows = [
        [one, zero, one * a(1), zero, one * (a(1) * a(3))],
        [zero, one, zero, one * a(3), zero],
        [one, zero, one * a(3), zero, one * (a(3) * a(5))],
        [zero, one, zero, one * a(5), zero],
        [x_power(0), x_power(1), x_power(2), x_power(3), x_power(4)],
    ]
    scale = QScalar.q_power(4) * a(2) ** 2
    return bareiss_det(rows, X_RING) * (QScalar.one() / scale)


def hermite_moment_cofactor() -> XPoly:
    """Same determinant by cofactor expansion."""
    def a(k: int) -> QScalar:
        return QScalar.one() - QScalar.q_power(k)

    values = [
        [1, 0, a(1), 0, a(1) * a(3)],
        [0, 1, 0, a(3), 0],
        [1, 0, a(3), 0, a(3) * a(5)],
        [0, 1, 0, a(5), 0],
    ]
    matrix = build_matrix(
        5, lambda i, j: x_power(j - 1) if i == 5 else X_RING.one * values[i - 1][j - 1]
    )
    return cofactor_det(matrix, X_RING) * (QScalar.one() / (QScalar.q_power(4) * a(2) ** 2))


@lru_cache(maxsize=None)
def hermite_classical(n: int) -> XPoly:
    """Physicists' Hermite polynomial: H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n == 0:
        return X_RING.one
    if n == 1:
        return x_power(1) * 2
    return x_power(1) * hermite_classical(n - 1) * 2 - hermite_classical(n - 2) * (2 * (n - 1))


def hermite_limit(n: int) -> Tuple[List[Fraction], List[Fraction]]:
    """
    For each j, the coefficient of x^{n-2j} in H_n divided by (1-q^2)^j and
    evaluated at q = 1, next to the coefficient of x^{n-2j} in H_n(x)/2^n.
    """
    H = hermite_I(n)
    classical = hermite_classical(n)
    ours, theirs = [], []
    for j in range(n // 2 + 1):
        c = H.coefficient(n - 2 * j) / (QScalar.one() - QScalar.q_power(2)) ** j
        ours.append(c.eval_at(1))
        theirs.append(classical.coefficient(n - 2 * j).constant_value() / 2**n)
    return ours, theirs


def hermite_II_phi_route(n: int) -> XPoly:
    """(i(q-1))^n q^{-binom(n,2)} det(h-determinant at ix), which must be free of i."""
    if n == 0:
        return X_RING.one
    det = h_determinant(n, hermite_p_gaussian, GAUSSIAN_X_RING)
    factor = GaussianQScalar(QScalar.zero(), QScalar.q() - 1) ** n * QScalar.q_power(-comb(n, 2))
    return (det * factor).real()


def hermite_II_series_route(n: int) -> XPoly:
    """(q;q)_n q^{-binom(n,2)} sum_{k+2j=n} q^{binom(k,2)} x^k/(q;q)_k · (-1)^j/(q^2;q^2)_j."""
    acc = X_RING.zero
    for j in range(n // 2 + 1):
        k = n - 2 * j
        scalar = QScalar.q_power(comb(k, 2)) / (_q_pochhammer_q(k) * _q_pochhammer_q(j, 2))
        if j % 2 == 1:
            scalar = -scalar
        acc = acc + x_power(k) * scalar
    return acc * (_q_pochhammer_q(n) * QScalar.q_power(-comb(n, 2)))


@lru_cache(maxsize=None)
def hermite_II_recurrence(n: int) -> XPoly:
    """H~_{n+1} = x H~_n - q^{-2n+1}(1-q^n) H~_{n-1}."""
    if n == 0:
        return X_RING.one
    if n == 1:
        return x_power(1)
    k = n - 1
    return x_power(1) * hermite_II_recurrence(k) - hermite_II_recurrence(k - 1) * (
        QScalar.q_power(-2 * k + 1) * (QScalar.one() - QScalar.q_power(k))
    )


def hermite_II_routes(n: int) -> Dict[str, XPoly]:
    return {
        "phi-determinant": hermite_II_phi_route(n),
        "series": hermite_II_series_route(n),
        "recurrence": hermite_II_recurrence(n),
    }


@lru_cache(maxsize=None)
def hermite_II(n: int) -> XPoly:
    if n < 0:
        raise ValueError(f"H~_n needs n >= 0, got {n}")
    value = _agreed(hermite_II_routes(n), "H~", n)
    logging.debug(f"H~_{n} = {value}")
    return value


def hermite_II_generating_series(t_order: int) -> Series:
    """sum H~_n q^{binom(n,2)}/(q;q)_n t^n"""
    return Series(
        X_RING,
        [hermite_II(n) * (QScalar.q_power(comb(n, 2)) / _q_pochhammer_q(n)) for n in range(t_order + 1)],
    )


def hermite_II_exponent(t_order: int) -> Series:
    """(1-q)^{-1}(xt/[1] - t^2/[2] - xt^3/[3] + t^4/[4] + ...): signs repeat +, -, -, + ."""
    coeffs = [X_RING.zero]
    for n in range(1, t_order + 1):
        base = x_power(1) if n % 2 == 1 else X_RING.one
        term = base * (QScalar.one() / (ONE_MINUS_Q * qint(n)))
        coeffs.append(term if n % 4 in (0, 1) else -term)
    return Series(X_RING, coeffs)


def hermite_II_star_sides(t_order: int) -> Tuple[Series, Series]:
    return hermite_II_generating_series(t_order), star_exp(hermite_II_exponent(t_order))


def _truncated_product(t_order: int, q_order: int, factor: Callable[[int], List[XPoly]], invert: bool) -> Series:
    result = Series.one(X_RING, t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        s = Series.from_coefficients(X_RING, factor(k), t_order).reduce_mod_q(q_order)
        result = result * (s.invert() if invert else s)
    return result


def hermite_product_sides(t_order: int, q_order: int) -> Dict[str, Tuple[Series, Series]]:
    """Both generating functions against their M-factor products, mod q^M."""
    one = X_RING.one
    first = _truncated_product(
        t_order, q_order, lambda k: [one, X_RING.zero, one * (-QScalar.q_power(2 * k))], invert=False
    ) * _truncated_product(t_order, q_order, lambda k: [one, x_power(1) * (-QScalar.q_power(k))], invert=True)
    second = _truncated_product(
        t_order, q_order, lambda k: [one, x_power(1) * QScalar.q_power(k)], invert=False
    ) * _truncated_product(t_order, q_order, lambda k: [one, X_RING.zero, one * QScalar.q_power(2 * k)], invert=True)
    return {
        "first kind": (hermite_I_generating_series(t_order).reduce_mod_q(q_order), first),
        "second kind": (hermite_II_generating_series(t_order).reduce_mod_q(q_order), second),
    }


def hermite_product_check(t_order: int, q_order: int) -> bool:
    return all(lhs == rhs for lhs, rhs in hermite_product_sides(t_order, q_order).values())


class RouteDisagreement(ArithmeticError):
    pass
