"""
Tree inversion enumerators as a specialization of E(t): E(t) is sent to the
q-deformed exponential sum q^{binom(n,2)} t^n/n!, whose q-power functions are
[p_n] = (1-q)^{n-1} J_{n+1}(q)/n!. Each identity below is returned as a
(lhs, rhs) pair.
"""
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Tuple

from ..algebra.determinants import hessenberg_det, hessenberg_matrix
from ..algebra.ring import SCALARS
from ..algebra.scalars import QScalar, qfact, qint
from ..algebra.series import Series
from ..oracle.trees import MAX_TREE_SIZE, J_poly, J_reciprocal, TooLarge
from ..qcalculus.exponentials import gessel_exp, star_exp
from .specialization import Mode, specialize

Sides = Tuple[object, object]

ONE_MINUS_Q = QScalar.one() - QScalar.q()


def _over_factorial(n: int) -> QScalar:
    return QScalar.constant(Fraction(1, factorial(n)))


def exp_xp_coefficient(n: int) -> QScalar:
    """q^{binom(n,2)}/n!"""
    return QScalar.q_power(comb(n, 2)) * _over_factorial(n)


def exp_xp_series(t_order: int) -> Series:
    return Series(SCALARS, [exp_xp_coefficient(n) for n in range(t_order + 1)])


def tree_p(n: int, jpoly: Callable[[int], QScalar] = J_poly) -> QScalar:
    """(1-q)^{n-1} J_{n+1}/n!"""
    return ONE_MINUS_Q ** (n - 1) * jpoly(n + 1) * _over_factorial(n)


def extraction_sides(n: int) -> Sides:
    spec = specialize(Mode.E, exp_xp_series(n))
    return spec.p(n), tree_p(n)


def shifted_binomial_sides(n: int) -> Sides:
    """[n] q^{binom(n,2)} = sum_k binom(n,k) q^{binom(n-k,2)} (q-1)^{k-1} J_{k+1}."""
    rhs = QScalar.zero()
    for k in range(1, n + 1):
        rhs = rhs + (-ONE_MINUS_Q) ** (k - 1) * QScalar.q_power(comb(n - k, 2)) * comb(n, k) * J_poly(k + 1)
    return qint(n) * QScalar.q_power(comb(n, 2)), rhs


def determinant_from_exponential_sides(n: int) -> Sides:
    """n! det([i] a_i | a_{i-j+1} | 1) = (1-q)^{n-1} J_{n+1}."""
    matrix = hessenberg_matrix(
        n,
        lambda i: exp_xp_coefficient(i) * qint(i),
        lambda i, j: exp_xp_coefficient(i - j + 1),
        lambda i: QScalar.one(),
        QScalar.zero(),
    )
    return hessenberg_det(matrix, SCALARS) * factorial(n), ONE_MINUS_Q ** (n - 1) * J_poly(n + 1)


def determinant_from_trees_sides(n: int) -> Sides:
    """det([p_i] | [p_{i-j+1}] | [i]) = [n]! q^{binom(n,2)}/n!, with the tree [p_k]."""
    matrix = hessenberg_matrix(
        n,
        lambda i: tree_p(i),
        lambda i, j: tree_p(i - j + 1),
        lambda i: qint(i),
        QScalar.zero(),
    )
    return hessenberg_det(matrix, SCALARS), qfact(n) * exp_xp_coefficient(n)


def composition_sides(t_order: int) -> Sides:
    """E_xp(t) = e_q[sum (q-1)^{n-1} J_{n+1}/([n] n!) t^n]_q."""
    coeffs = [QScalar.zero()]
    for n in range(1, t_order + 1):
        coeffs.append((-ONE_MINUS_Q) ** (n - 1) * J_poly(n + 1) * _over_factorial(n) / qint(n))
    return exp_xp_series(t_order), gessel_exp(Series(SCALARS, coeffs))


def product_sides(t_order: int, q_order: int) -> Sides:
    """E_xp(t) = prod_{k<M} (1 + sum (1-q)^n J_{n+1}/n! (-q^k t)^n)^{-1} mod q^M."""
    result = Series.one(SCALARS, t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        coeffs = [QScalar.one()]
        for n in range(1, t_order + 1):
            term = ONE_MINUS_Q ** n * J_poly(n + 1) * _over_factorial(n) * QScalar.q_power(k * n)
            coeffs.append(-term if n % 2 == 1 else term)
        result = result * Series(SCALARS, coeffs, q_order).invert()
    return exp_xp_series(t_order).reduce_mod_q(q_order), result


def reciprocal_integer_sides(n: int) -> Sides:
    """[n] = sum_{k=1..n} binom(n,k) q^{(k+1)(n-k)} (1-q)^{k-1} J̄_{k+1}."""
    rhs = QScalar.zero()
    for k in range(1, n + 1):
        rhs = rhs + ONE_MINUS_Q ** (k - 1) * QScalar.q_power((k + 1) * (n - k)) * comb(n, k) * J_reciprocal(k + 1)
    return qint(n), rhs


def reciprocal_unit_sides(n: int) -> Sides:
    """1 = sum_{k=0..n} binom(n,k) q^{(k+1)(n-k)} (1-q)^k J̄_{k+1}."""
    rhs = QScalar.zero()
    for k in range(n + 1):
        rhs = rhs + ONE_MINUS_Q ** k * QScalar.q_power((k + 1) * (n - k)) * comb(n, k) * J_reciprocal(k + 1)
    return QScalar.one(), rhs


def reciprocal_exponential_sides(t_order: int) -> Sides:
    """sum q^{-binom(n,2)} t^n/n! = E_q[sum q^{-binom(n,2)} (1-q)^{n-1} J̄_{n+1}/([n] n!) t^n]*_q."""
    lhs = Series(SCALARS, [QScalar.q_power(-comb(n, 2)) * _over_factorial(n) for n in range(t_order + 1)])
    coeffs = [QScalar.zero()]
    for n in range(1, t_order + 1):
        coeffs.append(
            QScalar.q_power(-comb(n, 2)) * ONE_MINUS_Q ** (n - 1) * J_reciprocal(n + 1) * _over_factorial(n) / qint(n)
        )
    return lhs, star_exp(Series(SCALARS, coeffs))


def tree_identities(n_max: int, q_order: int = 8) -> Dict[str, bool]:
    """Every identity above for n = 1..n_max; the product form is checked mod q^{q_order}."""
    if n_max > MAX_TREE_SIZE - 1:
        raise TooLarge(f"tree identities need J_{n_max + 1}, enumeration stops at n={MAX_TREE_SIZE}")
    pointwise = {
        "extraction": extraction_sides,
        "shifted_binomial": shifted_binomial_sides,
        "determinant_from_exponential": determinant_from_exponential_sides,
        "determinant_from_trees": determinant_from_trees_sides,
        "reciprocal_integer": reciprocal_integer_sides,
    }
    report = {
        name: all(lhs == rhs for lhs, rhs in map(sides, range(1, n_max + 1)))
        for name, sides in pointwise.items()
    }
    report["reciprocal_unit"] = all(lhs == rhs for lhs, rhs in map(reciprocal_unit_sides, range(n_max + 1)))
    for name, sides in (("composition", composition_sides), ("reciprocal_exponential", reciprocal_exponential_sides)):
        lhs, rhs = sides(n_max)
        report[name] = lhs == rhs
    lhs, rhs = product_sides(min(n_max, 5), q_order)
    report["product"] = lhs == rhs
    logging.debug(f"tree identities to n={n_max}: {report}")
    return report
