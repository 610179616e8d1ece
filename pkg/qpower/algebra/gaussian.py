from fractions import Fraction
from typing import Any, Dict, Union

from .scalars import QScalar, Rational


class GaussianQScalar:
    """re + im*i over Q(q) with i^2 = -1. Only the second Hermite family needs it."""

    __slots__ = ("re", "im")

    def __init__(self, re: QScalar, im: QScalar = None) -> None:
        self.re = re
        self.im = QScalar.zero() if im is None else im

    @classmethod
    def zero(cls) -> "GaussianQScalar":
        return cls(QScalar.zero())

    @classmethod
    def one(cls) -> "GaussianQScalar":
        return cls(QScalar.one())

    @classmethod
    def i(cls) -> "GaussianQScalar":
        return cls(QScalar.zero(), QScalar.one())

    @staticmethod
    def coerce(value: Union["GaussianQScalar", QScalar, Rational]) -> "GaussianQScalar":
        if isinstance(value, GaussianQScalar):
            return value
        return GaussianQScalar(QScalar.coerce(value))

    @property
    def is_zero(self) -> bool:
        return self.re.is_zero and self.im.is_zero

    @property
    def is_real(self) -> bool:
        return self.im.is_zero

    def real(self) -> QScalar:
        if not self.im.is_zero:
            raise NonRealResult(f"{self.render()} has a nonzero imaginary part")
        return self.re

    def conjugate(self) -> "GaussianQScalar":
        return GaussianQScalar(self.re, -self.im)

    def __add__(self, other: Any) -> "GaussianQScalar":
        try:
            other = GaussianQScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianQScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianQScalar":
        return GaussianQScalar(-self.re, -self.im)

    def __sub__(self, other: Any) -> "GaussianQScalar":
        try:
            other = GaussianQScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianQScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Any) -> "GaussianQScalar":
        return GaussianQScalar.coerce(other) - self

    def __mul__(self, other: Any) -> "GaussianQScalar":
        if isinstance(other, (QScalar, int, Fraction)):
            return GaussianQScalar(self.re * other, self.im * other)
        if not isinstance(other, GaussianQScalar):
            return NotImplemented
        return GaussianQScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianQScalar":
        if isinstance(other, (QScalar, int, Fraction)):
            return GaussianQScalar(self.re / other, self.im / other)
        if not isinstance(other, GaussianQScalar):
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if norm.is_zero:
            raise ZeroDivisionError("division by the zero Gaussian scalar")
        product = self * other.conjugate()
        return GaussianQScalar(product.re / norm, product.im / norm)

    def exact_div(self, other: Any) -> "GaussianQScalar":
        return self / other

    def __pow__(self, k: int) -> "GaussianQScalar":
        if k < 0:
            return GaussianQScalar.one() / self**(-k)
        result = GaussianQScalar.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QScalar, int, Fraction)):
            other = GaussianQScalar.coerce(other)
        if not isinstance(other, GaussianQScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def sign_hint(self) -> int:
        return self.re.sign_hint() if not self.re.is_zero else self.im.sign_hint()

    def as_qint(self):
        return self.re.as_qint() if self.im.is_zero else None

    @property
    def is_one(self) -> bool:
        return self.re.is_one and self.im.is_zero

    @property
    def is_constant(self) -> bool:
        return self.re.is_constant and self.im.is_constant

    def truncate_q(self, order: int) -> "GaussianQScalar":
        return GaussianQScalar(self.re.truncate_q(order), self.im.truncate_q(order))

    def subst_q_power(self, m: int) -> "GaussianQScalar":
        return GaussianQScalar(self.re.subst_q_power(m), self.im.subst_q_power(m))

    def eval_q(self, value: Rational) -> "GaussianQScalar":
        return GaussianQScalar(self.re.eval_q(value), self.im.eval_q(value))

    def render(self) -> str:
        if self.im.is_zero:
            return self.re.render()
        im = f"({self.im.render()})*i"
        if self.re.is_zero:
            return im
        return f"{self.re.render()} + {im}"

    def render_latex(self) -> str:
        if self.im.is_zero:
            return self.re.render_latex()
        im = f"\\left({self.im.render_latex()}\\right) i"
        if self.re.is_zero:
            return im
        return f"{self.re.render_latex()} + {im}"

    def to_json(self) -> Dict[str, Any]:
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "GaussianQScalar":
        return cls(QScalar.from_json(data["re"]), QScalar.from_json(data["im"]))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"GaussianQScalar({self.render()})"


class NonRealResult(ArithmeticError):
    pass
