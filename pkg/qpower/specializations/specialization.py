"""
Reading a concrete series G(t) with G(0) = 1 as the image of E(t) or of H(t)
under an algebra map out of the symmetric functions, and extracting the
images of the q-power functions from it.

Mode E (e_n -> a_n) solves the Girard-Newton recurrence for [p_n]; mode H
(h_n -> a_n) solves its h-analogue for [p_n^h]. Neither needs a division in
the coefficient ring.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, List

from ..algebra.scalars import QScalar, check_base, qint
from ..algebra.series import Series
from ..qcalculus.exponentials import BadConstantTerm


class Mode(str, Enum):
    E = "E"
    H = "H"


@dataclass(frozen=True)
class Specialization:
    mode: Mode
    g: Series
    extracted_p: List[Any]
    m: int = 1

    def p(self, n: int) -> Any:
        """[p_n] (mode E) or [p_n^h] (mode H), n >= 1."""
        if not 1 <= n <= len(self.extracted_p):
            raise IndexError(f"[p_{n}] is beyond the extracted range 1..{len(self.extracted_p)}")
        return self.extracted_p[n - 1]

    def p_series(self) -> Series:
        """sum_{n>=0} [p_{n+1}] t^n, known to t^{N-1}."""
        return Series(self.g.ring, self.extracted_p)

    def relation_sides(self):
        """
        Mode E: p(-t) G(t) and D G(t).
        Mode H: p^h(t) G(ψt) and D G(t).
        """
        dg = self.g.q_derive(self.m)
        if self.mode == Mode.E:
            lhs = self.p_series().scale_arg(-1) * self.g
        else:
            lhs = self.p_series() * self.g.scale_arg(QScalar.q_power(self.m))
        return lhs, dg

    def relation_holds(self) -> bool:
        lhs, rhs = self.relation_sides()
        return lhs == rhs


def _extract_e(a: List[Any], m: int) -> List[Any]:
    p: List[Any] = []
    for n in range(1, len(a)):
        acc = a[n] * qint(n, m)
        if n % 2 == 0:
            acc = -acc
        for j in range(1, n):
            term = a[j] * p[n - j - 1]
            acc = acc + term if j % 2 == 1 else acc - term
        p.append(acc)
    return p


def _extract_h(a: List[Any], m: int) -> List[Any]:
    p: List[Any] = []
    for n in range(1, len(a)):
        acc = a[n] * qint(n, m)
        for k in range(1, n):
            acc = acc - a[n - k] * p[k - 1] * QScalar.q_power(m * (n - k))
        p.append(acc)
    return p


def specialize(mode: Mode, g: Series, m: int = 1) -> Specialization:
    check_base(m)
    mode = Mode(mode)
    if not g.coeffs[0] == g.ring.one:
        raise BadConstantTerm(f"a specialized generating series has constant term 1, got {g.coeffs[0]}")
    a = list(g.coeffs)
    extracted = _extract_e(a, m) if mode == Mode.E else _extract_h(a, m)
    spec = Specialization(mode, g, extracted, m)
    if g.t_order >= 1 and not spec.relation_holds():
        raise ArithmeticError(f"mode {mode.value} extraction does not satisfy its defining relation")
    logging.debug(f"specialized a series of order {g.t_order} in mode {mode.value}")
    return spec
