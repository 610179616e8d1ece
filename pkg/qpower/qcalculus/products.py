"""
Infinite q-product factorizations of the two q-exponential formulas.

The k-th factor is congruent to 1 modulo ψ^k, so with ψ = q^m (m >= 1) the
first M factors give the whole product modulo q^M. Products are therefore
computed with exactly M factors under dual truncation (t^{N+1}, q^M).
"""
import logging
from typing import Tuple

from ..algebra.scalars import BadBase, QScalar
from ..algebra.series import Series
from ..symfun.qpowers import q_power
from ..symfun.sympoly import SYMMETRIC, SymPoly
from .exponentials import gessel_exp, star_exp


def _check_positive_base(m: int) -> None:
    if m <= 0:
        raise BadBase(f"infinite products need ψ = q^m with m >= 1, got m={m}")


def _product_factor(DF: Series, k: int, m: int, sign: int, q_order: int) -> Series:
    """1 + sign (1-ψ) ψ^k t DF(ψ^k t), reduced mod q^M."""
    psi_k = QScalar.q_power(m * k)
    scale = (QScalar.one() - QScalar.q_power(m)) * psi_k
    if sign < 0:
        scale = -scale
    term = DF.scale_arg(psi_k).shift(1).scalar_mul(scale)
    return (term + DF.ring.one).reduce_mod_q(q_order)


def qproduct_e(F: Series, m: int, q_order: int) -> Series:
    """prod_{k<M} (1 - (1-ψ)ψ^k t D_ψF(ψ^k t))^{-1}, to the t-order of F."""
    _check_positive_base(m)
    F.require_zero_constant()
    DF = F.q_derive(m)
    result = Series.one(F.ring, F.t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        result = result * _product_factor(DF, k, m, -1, q_order).invert()
    logging.debug(f"e-product with {q_order} factors to t^{F.t_order}")
    return result


def qproduct_E(F: Series, m: int, q_order: int) -> Series:
    """prod_{k<M} (1 + (1-ψ)ψ^k t D_ψF(ψ^k t)), to the t-order of F."""
    _check_positive_base(m)
    F.require_zero_constant()
    DF = F.q_derive(m)
    result = Series.one(F.ring, F.t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        result = result * _product_factor(DF, k, m, 1, q_order)
    logging.debug(f"E-product with {q_order} factors to t^{F.t_order}")
    return result


def functional_equation_e(F: Series, m: int = 1) -> Tuple[Series, Series]:
    """G and (1 - (1-ψ) t D_ψF)^{-1} G(ψt) for G = e_q[F]_ψ; exact, no q-truncation."""
    G = gessel_exp(F, m)
    psi = QScalar.q_power(m)
    factor = Series.one(F.ring, F.t_order) - F.q_derive(m).shift(1).scalar_mul(QScalar.one() - psi)
    return G, factor.invert() * G.scale_arg(psi)


def functional_equation_star(F: Series, m: int = 1) -> Tuple[Series, Series]:
    """G* and (1 + (1-ψ) t D_ψF) G*(ψt) for G* = E_q[F]*_ψ."""
    G = star_exp(F, m)
    psi = QScalar.q_power(m)
    factor = Series.one(F.ring, F.t_order) + F.q_derive(m).shift(1).scalar_mul(QScalar.one() - psi)
    return G, factor * G.scale_arg(psi)


def reciprocal_products(F: Series, m: int = 1) -> Tuple[Series, Series]:
    """e_q[-F]·E_q[F]* and E_q[-F]*·e_q[F], both equal to 1."""
    return gessel_exp(-F, m) * star_exp(F, m), star_exp(-F, m) * gessel_exp(F, m)


def verify_reciprocal(F: Series, m: int = 1) -> bool:
    one = Series.one(F.ring, F.t_order)
    first, second = reciprocal_products(F, m)
    return first == one and second == one


def _power_sum_factor(t_order: int, k: int, sign: int, q_order: int) -> Series:
    """1 + (1-q) sum_{n>=1} [p_n] (sign q^k t)^n in Λ, reduced mod q^M."""
    one_minus_q = QScalar.one() - QScalar.q()
    coeffs = [SymPoly.one()]
    for n in range(1, t_order + 1):
        scalar = one_minus_q * QScalar.q_power(k * n)
        if sign < 0 and n % 2 == 1:
            scalar = -scalar
        coeffs.append(q_power(n) * scalar)
    return Series(SYMMETRIC, coeffs, q_order)


def lambda_product_E(t_order: int, q_order: int) -> Series:
    """prod_{k<M} (1 + (1-q) sum [p_n](-q^k t)^n)^{-1}, which is E(t) mod q^M."""
    result = Series.one(SYMMETRIC, t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        result = result * _power_sum_factor(t_order, k, -1, q_order).invert()
    return result


def lambda_product_H(t_order: int, q_order: int) -> Series:
    """prod_{k<M} (1 + (1-q) sum [p_n](q^k t)^n), which is H(t) mod q^M."""
    result = Series.one(SYMMETRIC, t_order).reduce_mod_q(q_order)
    for k in range(q_order):
        result = result * _power_sum_factor(t_order, k, 1, q_order)
    return result
