"""
The q-exponentials e_q, E_q and the two q-exponential formulas.

gessel_exp(F) = e_q[F]_ψ and star_exp(F) = E_q[F]*_ψ are computed from the
recurrences on the divided coefficients γ_n = [n]! G_n, f_n = [n]! F_n:

    γ_{n+1} = sum_{k=0..n} [n k] γ_{n-k} f_{k+1}
    γ*_{n+1} = sum_{k=0..n} [n k] ψ^{n-k} γ*_{n-k} f_{k+1}

Both are triangular in f, which gives the inverses.
"""
from math import comb
from typing import Any, List

from ..algebra.ring import Ring, SCALARS
from ..algebra.scalars import QScalar, check_base, qbinom, qfact
from ..algebra.series import Series
from .powers import divided_coefficients, ordinary_coefficients


def e_q_series(t_order: int, m: int = 1, ring: Ring = SCALARS) -> Series:
    """sum t^n / [n]_ψ!"""
    check_base(m)
    return Series(ring, [ring.from_scalar(QScalar.one() / qfact(n, m)) for n in range(t_order + 1)])


def E_q_series(t_order: int, m: int = 1, ring: Ring = SCALARS) -> Series:
    """sum ψ^{binom(n,2)} t^n / [n]_ψ!"""
    check_base(m)
    return Series(
        ring,
        [ring.from_scalar(QScalar.q_power(m * comb(n, 2)) / qfact(n, m)) for n in range(t_order + 1)],
    )


def _weight(n: int, k: int, m: int, star: bool) -> QScalar:
    w = qbinom(n, k, m)
    return w * QScalar.q_power(m * (n - k)) if star else w


def _exponential(F: Series, m: int, star: bool) -> Series:
    check_base(m)
    F.require_zero_constant()
    ring = F.ring
    f = divided_coefficients(F, m)
    gamma: List[Any] = [ring.one]
    for n in range(F.t_order):
        acc = ring.zero
        for k in range(n + 1):
            if f[k + 1].is_zero:
                continue
            acc = acc + gamma[n - k] * f[k + 1] * _weight(n, k, m, star)
        gamma.append(acc)
    return Series(ring, ordinary_coefficients(gamma, m), F.q_order)


def _logarithm(G: Series, m: int, star: bool) -> Series:
    check_base(m)
    if not G.coeffs[0] == G.ring.one:
        raise BadConstantTerm(f"an exponential has constant term 1, got {G.coeffs[0]}")
    ring = G.ring
    gamma = divided_coefficients(G, m)
    f: List[Any] = [ring.zero]
    for n in range(G.t_order):
        acc = gamma[n + 1]
        for k in range(n):
            if f[k + 1].is_zero:
                continue
            acc = acc - gamma[n - k] * f[k + 1] * _weight(n, k, m, star)
        f.append(acc)
    return Series(ring, ordinary_coefficients(f, m), G.q_order)


def gessel_exp(F: Series, m: int = 1) -> Series:
    """e_q[F]_ψ"""
    return _exponential(F, m, star=False)


def star_exp(F: Series, m: int = 1) -> Series:
    """E_q[F]*_ψ"""
    return _exponential(F, m, star=True)


def invert_gessel_exp(G: Series, m: int = 1) -> Series:
    """The F with F(0) = 0 and e_q[F]_ψ = G."""
    return _logarithm(G, m, star=False)


def invert_star_exp(G: Series, m: int = 1) -> Series:
    """The F with F(0) = 0 and E_q[F]*_ψ = G."""
    return _logarithm(G, m, star=True)


class BadConstantTerm(ValueError):
    pass
