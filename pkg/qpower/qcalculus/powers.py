"""
Gessel q-powers F^{[k]} and the non-inversion q*-powers F^{[k]*}, plus the
two compositions built from them.

Powers are computed in divided normalization: f_{n,k} is [n]! times the
ordinary coefficient of t^n in the k-th power. With f_n = f_{n,1},

    f_{n+1,k} = [k] sum_j [n j] f_{n-j+1} f_{j,k-1}                    (bracket)
    f_{n+1,k} = [k] ψ^{-(k-1)} sum_j [n j] f_{n-j+1} f_{j,k-1} ψ^j     (star)

and f_{n,k} = 0 for n < k in both families.
"""
import logging
from typing import Any, List

from ..algebra.ring import SCALARS
from ..algebra.scalars import QScalar, check_base, qbinom, qfact, qint
from ..algebra.series import Series


def divided_coefficients(F: Series, m: int = 1) -> List[Any]:
    """[n]_ψ! F_n for n = 0 .. N."""
    return [c * qfact(n, m) for n, c in enumerate(F.coeffs)]


def ordinary_coefficients(f: List[Any], m: int = 1) -> List[Any]:
    return [c * (QScalar.one() / qfact(n, m)) for n, c in enumerate(f)]


def power_table(F: Series, k_max: int, m: int = 1, star: bool = False) -> List[List[Any]]:
    """table[k][n] = f_{n,k} for 0 <= k <= k_max, 0 <= n <= N."""
    check_base(m)
    F.require_zero_constant()
    ring = F.ring
    order = F.t_order
    f1 = divided_coefficients(F, m)
    table = [[ring.one] + [ring.zero] * order]
    if k_max >= 1:
        table.append(f1)
    for k in range(2, k_max + 1):
        previous = table[k - 1]
        row = [ring.zero] * (order + 1)
        for n in range(order):
            acc = ring.zero
            for j in range(k - 1, n + 1):
                if previous[j].is_zero or f1[n - j + 1].is_zero:
                    continue
                term = f1[n - j + 1] * previous[j] * qbinom(n, j, m)
                if star:
                    term = term * QScalar.q_power(m * j)
                acc = acc + term
            scale = qint(k, m)
            if star:
                scale = scale * QScalar.q_power(-m * (k - 1))
            row[n + 1] = acc * scale
        table.append(row)
    logging.debug(f"{'star' if star else 'bracket'} power table to k={k_max}, t^{order}, m={m}")
    return table


def q_bracket_power(F: Series, k: int, m: int = 1) -> Series:
    if k < 0:
        raise ValueError(f"q-powers need k >= 0, got {k}")
    row = power_table(F, k, m)[k]
    return Series(F.ring, ordinary_coefficients(row, m), F.q_order)


def q_star_power(F: Series, k: int, m: int = 1) -> Series:
    if k < 0:
        raise ValueError(f"q-powers need k >= 0, got {k}")
    row = power_table(F, k, m, star=True)[k]
    return Series(F.ring, ordinary_coefficients(row, m), F.q_order)


def _compose(G: Series, F: Series, m: int, star: bool) -> Series:
    F.require_zero_constant()
    order = min(G.t_order, F.t_order)
    F = F.truncate(order)
    table = power_table(F, order, m, star)
    ring = F.ring if G.ring == SCALARS else G.ring
    out = []
    for n in range(order + 1):
        acc = ring.zero
        for k in range(n + 1):
            if G.coeffs[k].is_zero or table[k][n].is_zero:
                continue
            acc = acc + table[k][n] * G.coeffs[k]
        out.append(acc * (QScalar.one() / qfact(n, m)))
    return Series(ring, out, F.q_order)


def q_compose(G: Series, F: Series, m: int = 1) -> Series:
    """G[F]_ψ = sum_k G_k F^{[k]}, G given by ordinary coefficients."""
    return _compose(G, F, m, star=False)


def q_star_compose(G: Series, F: Series, m: int = 1) -> Series:
    """G[F]*_ψ = sum_k G_k F^{[k]*}."""
    return _compose(G, F, m, star=True)
