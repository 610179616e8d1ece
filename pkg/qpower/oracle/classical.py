"""
Classical (q = 1) symmetric functions: Newton power sums in the
e-generators and monomial symmetric functions at concrete points.
"""
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from ..algebra.scalars import QScalar
from ..symfun.combinatorics import Partition, partitions_of
from ..symfun.sympoly import SymPoly


@lru_cache(maxsize=None)
def classical_newton_p(n: int) -> SymPoly:
    """p_n = sum_{k=1..n-1} (-1)^{k-1} e_k p_{n-k} + (-1)^{n-1} n e_n."""
    if n < 1:
        raise ValueError(f"p_n needs n >= 1, got {n}")
    acc = SymPoly.generator(n) * n
    if n % 2 == 0:
        acc = -acc
    for k in range(1, n):
        term = SymPoly.generator(k) * classical_newton_p(n - k)
        acc = acc + term if k % 2 == 1 else acc - term
    return acc


def classical_monomial(partition: Partition, xs: Sequence) -> QScalar:
    """m_λ(xs): sum over the distinct exponent vectors that rearrange λ."""
    if partition.length > len(xs):
        return QScalar.zero()
    padded = tuple(partition.parts) + (0,) * (len(xs) - partition.length)
    values = [QScalar.coerce(x) for x in xs]
    acc = QScalar.zero()
    for exponents in set(permutations(padded)):
        term = QScalar.one()
        for x, a in zip(values, exponents):
            term = term * x**a
        acc = acc + term
    return acc


def classical_power_sum(n: int, xs: Sequence) -> QScalar:
    return sum((QScalar.coerce(x) ** n for x in xs), QScalar.zero())


def classical_power_r(n: int, r: int, xs: Sequence) -> QScalar:
    """sum over |λ| = n with l(λ) = r of m_λ(xs)."""
    acc = QScalar.zero()
    for partition in partitions_of(n):
        if partition.length == r:
            acc = acc + classical_monomial(partition, xs)
    return acc
