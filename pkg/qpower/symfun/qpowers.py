"""
q-power functions [p_n^(r)], [p_n], [p_λ] in the e-generators and the
identities tying them to e_n and h_n: Girard-Newton recurrences, Hessenberg
determinants, partition expansions and the generating series P_q, p_q.

Everything takes the base exponent m (ψ = q^m); m = 1 is the plain q case.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from ..algebra.determinants import hessenberg_det, hessenberg_matrix
from ..algebra.scalars import MINUS, QScalar, check_base, qbinom, qfact, qint
from ..algebra.series import Series
from .combinatorics import Partition, epsilon, partitions_of, q_z, q_z_h
from .sympoly import SYMMETRIC, SymPoly

PowerSource = Callable[[int, int], SymPoly]


def e(k: int) -> SymPoly:
    return SymPoly.generator(k)


def psi_power(k: int, m: int) -> QScalar:
    return QScalar.q_power(m * k)


def e_series(t_order: int) -> Series:
    return Series(SYMMETRIC, [e(n) for n in range(t_order + 1)])


@lru_cache(maxsize=None)
def h(n: int) -> SymPoly:
    """h_n from E(-t)H(t) = 1, i.e. h_n = sum_{k=1..n} (-1)^{k-1} e_k h_{n-k}."""
    if n < 0:
        return SymPoly.zero()
    if n == 0:
        return SymPoly.one()
    acc = SymPoly.zero()
    for k in range(1, n + 1):
        term = e(k) * h(n - k)
        acc = acc + term if k % 2 == 1 else acc - term
    return acc


def h_from_e(t_order: int) -> Series:
    """H(t) = (E(-t))^{-1}, computed by series inversion."""
    return e_series(t_order).scale_arg(-1).invert()


def h_series(t_order: int) -> Series:
    return Series(SYMMETRIC, [h(n) for n in range(t_order + 1)])


def _check_indices(n: int, r: int) -> None:
    if r < 0 or n < r:
        raise BadIndices(f"need n >= r >= 0, got n={n}, r={r}")


@lru_cache(maxsize=None)
def q_power_r(n: int, r: int, m: int = 1) -> SymPoly:
    """
    [p_n^(r)] in base q^m by the Hessenberg determinant whose first column is
    [r+i-1 r] e_{r+i-1}, with e_{i-j+1} below the unit superdiagonal.
    """
    check_base(m)
    _check_indices(n, r)
    size = n - r + 1
    matrix = hessenberg_matrix(
        size,
        lambda i: e(r + i - 1) * qbinom(r + i - 1, r, m),
        lambda i, j: e(i - j + 1),
        lambda i: SymPoly.one(),
        SymPoly.zero(),
    )
    return hessenberg_det(matrix, SYMMETRIC)


@lru_cache(maxsize=None)
def q_power_r_series(n: int, r: int, m: int = 1) -> SymPoly:
    """
    [p_n^(r)] from the defining relation
    sum_s [p_{r+s}^(r)] (-t)^s E(t) = D^r E(t) / [r]!, solved coefficient by coefficient.
    """
    check_base(m)
    _check_indices(n, r)
    s_max = n - r
    solved = []
    for s in range(s_max + 1):
        acc = e(r + s) * qbinom(r + s, r, m)
        for i in range(s):
            acc = acc - solved[i] * e(s - i)
        solved.append(acc)
    return solved[s_max] if s_max % 2 == 0 else -solved[s_max]


@lru_cache(maxsize=None)
def q_power(n: int, m: int = 1) -> SymPoly:
    """[p_n] by the triangular Girard-Newton solve."""
    check_base(m)
    if n < 1:
        raise BadIndices(f"[p_n] needs n >= 1, got {n}")
    acc = e(n) * qint(n, m)
    if n % 2 == 0:
        acc = -acc
    for j in range(1, n):
        term = e(j) * q_power(n - j, m)
        acc = acc + term if j % 2 == 1 else acc - term
    logging.debug(f"[p_{n}] (m={m}) has {len(acc.terms)} terms")
    return acc


def q_power_det(n: int, m: int = 1) -> SymPoly:
    """[p_n] as the r = 1 determinant, the independent route to q_power."""
    if n < 1:
        raise BadIndices(f"[p_n] needs n >= 1, got {n}")
    return q_power_r(n, 1, m)


def q_power_partition(partition: Partition, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    powers = powers or q_power
    result = SymPoly.one()
    for part in partition.parts:
        result = result * powers(part, m)
    return result


def girard_e_sides(n: int, m: int = 1, powers: Optional[PowerSource] = None):
    """Both sides of sum_{k=1..n} (-1)^{k-1} e_{n-k} [p_k] = [n] e_n."""
    powers = powers or q_power
    lhs = SymPoly.zero()
    for k in range(1, n + 1):
        term = e(n - k) * powers(k, m)
        lhs = lhs + term if k % 2 == 1 else lhs - term
    return lhs, e(n) * qint(n, m)


def girard_h_sides(n: int, m: int = 1, powers: Optional[PowerSource] = None, weight: Optional[Callable[[int, int], int]] = None):
    """
    Both sides of sum_{k=1..n} h_{n-k} [p_k] ψ^{n-k} = [n] h_n. weight(n, k) picks
    the ψ exponent and is only replaced to probe the checker.
    """
    powers = powers or q_power
    weight = weight or (lambda n_, k_: n_ - k_)
    lhs = SymPoly.zero()
    for k in range(1, n + 1):
        lhs = lhs + h(n - k) * powers(k, m) * psi_power(weight(n, k), m)
    return lhs, h(n) * qint(n, m)


def verify_girard_e(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> bool:
    lhs, rhs = girard_e_sides(n, m, powers)
    return lhs == rhs


def verify_girard_h(n: int, m: int = 1, powers: Optional[PowerSource] = None, weight=None) -> bool:
    lhs, rhs = girard_h_sides(n, m, powers, weight)
    return lhs == rhs


def _require_positive(n: int) -> None:
    if n < 1:
        raise BadIndices(f"determinant size must be >= 1, got {n}")


def e_det_from_p(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    """det([p_i] | [p_{i-j+1}] | superdiagonal [i]) / [n]!, which is e_n."""
    _require_positive(n)
    powers = powers or q_power
    matrix = hessenberg_matrix(
        n,
        lambda i: powers(i, m),
        lambda i, j: powers(i - j + 1, m),
        lambda i: SymPoly.constant(qint(i, m)),
        SymPoly.zero(),
    )
    return hessenberg_det(matrix, SYMMETRIC) / qfact(n, m)


def h_det_from_p(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    """det([p_i] | ψ^{j-1}[p_{i-j+1}] | superdiagonal -[i]) / [n]!, which is h_n."""
    _require_positive(n)
    powers = powers or q_power
    matrix = hessenberg_matrix(
        n,
        lambda i: powers(i, m),
        lambda i, j: powers(i - j + 1, m) * psi_power(j - 1, m),
        lambda i: SymPoly.constant(-qint(i, m)),
        SymPoly.zero(),
    )
    return hessenberg_det(matrix, SYMMETRIC) / qfact(n, m)


def p_det_from_h(n: int, m: int = 1) -> SymPoly:
    """(-1)^{n-1} det([i]h_i | ψ^{i-j+1} h_{i-j+1} | superdiagonal 1), which is [p_n]."""
    _require_positive(n)
    matrix = hessenberg_matrix(
        n,
        lambda i: h(i) * qint(i, m),
        lambda i, j: h(i - j + 1) * psi_power(i - j + 1, m),
        lambda i: SymPoly.one(),
        SymPoly.zero(),
    )
    det = hessenberg_det(matrix, SYMMETRIC)
    return det if n % 2 == 1 else -det


@dataclass(frozen=True)
class PartitionExpansion:
    """e_n (target "e") or h_n (target "h") written as sum_λ c_λ [p_λ]."""
    target: str
    n: int
    m: int
    terms: Tuple[Tuple[Partition, QScalar], ...]

    def value(self, powers: Optional[PowerSource] = None) -> SymPoly:
        acc = SymPoly.zero()
        for partition, coeff in self.terms:
            acc = acc + q_power_partition(partition, self.m, powers) * coeff
        return acc

    def _parts(self, latex: bool):
        for partition, coeff in self.terms:
            negative = coeff.sign_hint() < 0
            magnitude = -coeff if negative else coeff
            if latex:
                body = f"\\frac{{[p_{{{partition.render()}}}]}}{{{(QScalar.one() / magnitude).render_latex()}}}"
            else:
                text = magnitude.render()
                body = f"{f'({text})' if ' ' in text else text}·[p_{{{partition.render()}}}]"
            yield negative, body

    def render(self) -> str:
        out = f"{self.target}{self.n} ="
        for i, (negative, body) in enumerate(self._parts(latex=False)):
            if i == 0:
                out += f" {MINUS}{body}" if negative else f" {body}"
            else:
                out += f" {MINUS} {body}" if negative else f" + {body}"
        return out

    def render_latex(self) -> str:
        out = f"{self.target}_{{{self.n}}} ="
        for i, (negative, body) in enumerate(self._parts(latex=True)):
            if i == 0:
                out += f" -{body}" if negative else f" {body}"
            else:
                out += f" - {body}" if negative else f" + {body}"
        return out

    def to_json(self) -> Dict[str, Any]:
        return {
            "target": self.target,
            "n": self.n,
            "m": self.m,
            "terms": [{"partition": list(p.parts), "coeff": c.to_json()} for p, c in self.terms],
        }


def partition_expansion(n: int, m: int = 1, target: str = "e") -> PartitionExpansion:
    """ε_λ/[z_λ] for e_n, 1/(ψ^{|λ|-l(λ)}[z_λ]_{ψ^{-1}}) for h_n."""
    _require_positive(n)
    if target not in ("e", "h"):
        raise ValueError(f"partition expansions exist for e and h, not {target!r}")
    terms = []
    for partition in partitions_of(n):
        if target == "e":
            terms.append((partition, QScalar.constant(epsilon(partition)) / q_z(partition, m)))
        else:
            terms.append((partition, QScalar.one() / q_z_h(partition, m)))
    return PartitionExpansion(target, n, m, tuple(terms))


def e_expansion(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    """sum over |λ| = n of ε_λ [p_λ] / [z_λ]."""
    return partition_expansion(n, m, "e").value(powers)


def h_expansion(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    """sum over |λ| = n of [p_λ] / (ψ^{|λ|-l(λ)} [z_λ]_{ψ^{-1}})."""
    return partition_expansion(n, m, "h").value(powers)


def _decreasing_chains(n: int):
    """Sequences n-1 >= k_1 > ... > k_r = 0, yielded without the final 0."""
    for size in range(n):
        for chosen in combinations(range(n - 1, 0, -1), size):
            yield chosen


def _chain_term(n: int, chain: Sequence[int], m: int, powers: PowerSource) -> SymPoly:
    ks = list(chain) + [0]
    scalar = qfact(n - 1, m)
    for k in chain:
        scalar = scalar / qint(k, m)
    term = powers(n - ks[0], m)
    for a, b in zip(ks, ks[1:]):
        term = term * powers(a - b, m)
    return term * scalar


def lemma_sum_e(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    """The chain sum with sign (-1)^{n-r}; equals [n]! e_n."""
    _require_positive(n)
    powers = powers or q_power
    acc = SymPoly.zero()
    for chain in _decreasing_chains(n):
        r = len(chain) + 1
        term = _chain_term(n, chain, m, powers)
        acc = acc + term if (n - r) % 2 == 0 else acc - term
    return acc


def lemma_sum_h(n: int, m: int = 1, powers: Optional[PowerSource] = None) -> SymPoly:
    """The chain sum weighted by ψ^{k_1 + ... + k_r}; equals [n]! h_n."""
    _require_positive(n)
    powers = powers or q_power
    acc = SymPoly.zero()
    for chain in _decreasing_chains(n):
        acc = acc + _chain_term(n, chain, m, powers) * psi_power(sum(chain), m)
    return acc


def P_series(t_order: int, m: int = 1) -> Series:
    """P_q(t) = sum_{n>=1} [p_n]/[n] t^n."""
    coeffs = [SymPoly.zero()] + [q_power(n, m) / qint(n, m) for n in range(1, t_order + 1)]
    return Series(SYMMETRIC, coeffs)


def p_small_series(t_order: int, m: int = 1) -> Series:
    """p_q(t) = sum_{n>=0} [p_{n+1}] t^n."""
    return Series(SYMMETRIC, [q_power(n + 1, m) for n in range(t_order + 1)])


def elementary_values(xs: Sequence) -> list:
    """e_0 .. e_len(xs) of concrete values, the coefficients of prod (1 + x t)."""
    values = [QScalar.one()]
    for x in xs:
        x = QScalar.coerce(x)
        values = [a + x * b for a, b in zip(values + [QScalar.zero()], [QScalar.zero()] + values)]
    return values


def eval_finite_variables(s: SymPoly, xs: Sequence) -> QScalar:
    """Substitute e_k by the k-th elementary symmetric polynomial of xs (0 past len(xs))."""
    values = elementary_values(xs)
    return s.substitute(lambda k: values[k] if k < len(values) else QScalar.zero(), QScalar.one())


class BadIndices(ValueError):
    pass
