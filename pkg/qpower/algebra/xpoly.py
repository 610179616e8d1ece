"""
Polynomials in one external variable (x for the Hermite families, a for the
q-binomial theorem) with coefficients in Q(q) or in the Gaussian extension.
"""
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Type, Union

from .gaussian import GaussianQScalar
from .ring import Ring, NotAUnit
from .scalars import MINUS, QScalar

Field = Union[Type[QScalar], Type[GaussianQScalar]]


class XPoly:
    __slots__ = ("coeffs", "var", "field")

    def __init__(self, coeffs: Sequence[Any] = (), var: str = "x", field: Field = QScalar) -> None:
        coeffs = [field.coerce(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.coeffs: Tuple[Any, ...] = tuple(coeffs)
        self.var = var
        self.field = field

    @classmethod
    def constant(cls, value: Any, var: str = "x", field: Field = QScalar) -> "XPoly":
        return cls([value], var, field)

    @classmethod
    def variable(cls, var: str = "x", field: Field = QScalar) -> "XPoly":
        return cls([0, 1], var, field)

    def _like(self, coeffs: Sequence[Any]) -> "XPoly":
        return XPoly(coeffs, self.var, self.field)

    def _lift(self, other: Any) -> Optional["XPoly"]:
        if isinstance(other, XPoly):
            if other.var != self.var:
                raise ValueError(f"cannot mix polynomials in {self.var} and {other.var}")
            if other.field is not self.field:
                field = GaussianQScalar
                return XPoly(other.coeffs, other.var, field)
            return other
        if isinstance(other, (QScalar, GaussianQScalar, int, Fraction)):
            return None
        raise TypeError(type(other).__name__)

    def _widen(self, other: "XPoly") -> "XPoly":
        if other.field is GaussianQScalar and self.field is QScalar:
            return XPoly(self.coeffs, self.var, GaussianQScalar)
        return self

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def __add__(self, other: Any) -> "XPoly":
        try:
            lifted = self._lift(other)
        except TypeError:
            return NotImplemented
        if lifted is None:
            lifted = XPoly([other], self.var, GaussianQScalar if isinstance(other, GaussianQScalar) else self.field)
        me = self._widen(lifted)
        size = max(len(me.coeffs), len(lifted.coeffs))
        return XPoly([me.coefficient(k) + lifted.coefficient(k) for k in range(size)], me.var, me.field)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "XPoly":
        return self + (-other)

    def __rsub__(self, other: Any) -> "XPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "XPoly":
        try:
            lifted = self._lift(other)
        except TypeError:
            return NotImplemented
        if lifted is None:
            field = GaussianQScalar if isinstance(other, GaussianQScalar) else self.field
            return XPoly([c * other for c in self.coeffs], self.var, field)
        me = self._widen(lifted)
        if me.is_zero or lifted.is_zero:
            return XPoly((), me.var, me.field)
        out = [me.field.zero()] * (len(me.coeffs) + len(lifted.coeffs) - 1)
        for i, a in enumerate(me.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(lifted.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out, me.var, me.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "XPoly":
        result = self._like([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: "XPoly") -> Tuple["XPoly", "XPoly"]:
        """Long division over the coefficient field."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        me = self._widen(other)
        other = other._widen(me)
        remainder = list(me.coeffs)
        quotient = [me.field.zero()] * max(len(remainder) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for shift in range(len(quotient) - 1, -1, -1):
            top = remainder[shift + len(other.coeffs) - 1]
            if top.is_zero:
                continue
            factor = top / lead
            quotient[shift] = factor
            for j, b in enumerate(other.coeffs):
                remainder[shift + j] = remainder[shift + j] - factor * b
        return XPoly(quotient, me.var, me.field), XPoly(remainder, me.var, me.field)

    def exact_div(self, other: Any) -> "XPoly":
        if not isinstance(other, XPoly):
            return self._like([c / other for c in self.coeffs])
        quotient, remainder = self.divmod(other)
        if not remainder.is_zero:
            raise ArithmeticError(f"{other.render()} does not divide {self.render()}")
        return quotient

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QScalar, GaussianQScalar, int, Fraction)):
            other = XPoly([other], self.var, self.field)
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.var != other.var or len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "XPoly":
        return self._like([fn(c) for c in self.coeffs])

    def truncate_q(self, order: int) -> "XPoly":
        return self.map_coefficients(lambda c: c.truncate_q(order))

    def eval_q(self, value) -> "XPoly":
        return self.map_coefficients(lambda c: c.eval_q(value))

    def subst_q_power(self, m: int) -> "XPoly":
        return self.map_coefficients(lambda c: c.subst_q_power(m))

    def real(self) -> "XPoly":
        """The same polynomial over Q(q); NonRealResult if any coefficient involves i."""
        if self.field is QScalar:
            return self
        return XPoly([c.real() for c in self.coeffs], self.var, QScalar)

    def render(self) -> str:
        multi = sum(1 for c in self.coeffs if not c.is_zero) > 1
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[k]
            if coeff.is_zero:
                continue
            negative = coeff.sign_hint() < 0
            magnitude = -coeff if negative else coeff
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            text = magnitude.render()
            if not mono:
                body = _paren(text) if (multi or negative) else text
            elif magnitude.is_one:
                body = mono
            else:
                body = f"{_paren(text)}*{mono}"
            terms.append((negative, body))
        return _join(terms)

    def render_latex(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[k]
            if coeff.is_zero:
                continue
            negative = coeff.sign_hint() < 0
            magnitude = -coeff if negative else coeff
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{{{k}}}")
            text = magnitude.render_latex()
            if not mono:
                body = text if len(self.coeffs) == 1 or " " not in text else f"\\left({text}\\right)"
            elif magnitude.is_one:
                body = mono
            else:
                body = f"\\left({text}\\right) {mono}" if " " in text else f"{text} {mono}"
            terms.append((negative, body))
        return _join(terms, minus="-")

    def to_json(self) -> Dict[str, Any]:
        return {"var": self.var, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Dict[str, Any], field: Field = QScalar) -> "XPoly":
        return cls([field.from_json(c) for c in data["coeffs"]], data["var"], field)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"XPoly({self.render()})"


def _paren(text: str) -> str:
    return f"({text})" if (" " in text or text.startswith(MINUS)) else text


def _join(terms: List[Tuple[bool, str]], minus: str = MINUS) -> str:
    if not terms:
        return "0"
    out = ""
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            out = f"{minus}{body}" if negative else body
        else:
            out += f" {minus} {body}" if negative else f" + {body}"
    return out


class XPolyRing(Ring):
    def __init__(self, var: str = "x", field: Field = QScalar) -> None:
        self.var = var
        self.field = field

    @property
    def name(self) -> str:
        return f"{self.field.__name__}[{self.var}]"

    @property
    def zero(self) -> XPoly:
        return XPoly((), self.var, self.field)

    @property
    def one(self) -> XPoly:
        return XPoly([1], self.var, self.field)

    def inverse(self, element: XPoly) -> XPoly:
        if element.is_zero or not element.is_constant:
            raise NotAUnit(f"{element.render()} is not a unit")
        return XPoly([self.field.one() / element.coeffs[0]], self.var, self.field)

    def from_json(self, data: Any) -> XPoly:
        return XPoly.from_json(data, self.field)
