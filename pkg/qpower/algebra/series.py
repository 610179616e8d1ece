"""
Truncated formal power series in t over a pluggable coefficient ring.

A series of t_order N knows c_0 .. c_N; everything beyond t^N is unknown,
not zero, so equality only looks at the shared order. With q_order M set,
every coefficient is additionally reduced modulo q^M.
"""
from fractions import Fraction
from math import factorial
from random import Random
from typing import Any, Callable, Iterator, Optional, Sequence, Union

from .ring import NotAUnit, Ring, SCALARS
from .scalars import QScalar, qint

Scalar = Union[QScalar, int]


class Series:
    __slots__ = ("ring", "coeffs", "q_order")

    def __init__(self, ring: Ring, coeffs: Sequence[Any], q_order: Optional[int] = None) -> None:
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        if q_order is not None:
            coeffs = [c.truncate_q(q_order) for c in coeffs]
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.q_order = q_order

    @classmethod
    def from_coefficients(cls, ring: Ring, coeffs: Sequence[Any], t_order: int) -> "Series":
        """Pad (or cut) the given coefficients to exactly t_order + 1 entries."""
        coeffs = list(coeffs[: t_order + 1])
        coeffs += [ring.zero] * (t_order + 1 - len(coeffs))
        return cls(ring, coeffs)

    @classmethod
    def constant(cls, ring: Ring, value: Any, t_order: int) -> "Series":
        return cls.from_coefficients(ring, [value], t_order)

    @classmethod
    def one(cls, ring: Ring, t_order: int) -> "Series":
        return cls.constant(ring, ring.one, t_order)

    @classmethod
    def variable(cls, ring: Ring, t_order: int) -> "Series":
        return cls.from_coefficients(ring, [ring.zero, ring.one], t_order)

    @property
    def t_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Any:
        if n > self.t_order:
            raise IndexError(f"t^{n} is beyond the truncation order {self.t_order}")
        return self.coeffs[n]

    def __iter__(self) -> Iterator[Any]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _shared(self, other: "Series", strict: bool = False):
        if self.ring != other.ring:
            raise TypeError(f"incompatible coefficient rings {self.ring} and {other.ring}")
        if strict and self.t_order != other.t_order:
            raise TruncationMismatch(f"t-orders {self.t_order} and {other.t_order} differ")
        order = min(self.t_order, other.t_order)
        if self.q_order is None:
            q_order = other.q_order
        elif other.q_order is None:
            q_order = self.q_order
        else:
            q_order = min(self.q_order, other.q_order)
        return order, q_order

    def truncate(self, t_order: int) -> "Series":
        if t_order > self.t_order:
            raise TruncationMismatch(f"cannot extend a series known to t^{self.t_order} up to t^{t_order}")
        return Series(self.ring, self.coeffs[: t_order + 1], self.q_order)

    def add(self, other: "Series", strict: bool = False) -> "Series":
        order, q_order = self._shared(other, strict)
        return Series(self.ring, [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)], q_order)

    def mul(self, other: "Series", strict: bool = False) -> "Series":
        order, q_order = self._shared(other, strict)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order + 1):
            acc = self.ring.zero
            for k in range(n + 1):
                if a[k].is_zero or b[n - k].is_zero:
                    continue
                acc = acc + a[k] * b[n - k]
            out.append(acc)
        return Series(self.ring, out, q_order)

    def scalar_mul(self, scalar: Any) -> "Series":
        return Series(self.ring, [c * scalar for c in self.coeffs], self.q_order)

    def __add__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return self.add(other)
        return Series(self.ring, [self.coeffs[0] + other, *self.coeffs[1:]], self.q_order)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.ring, [-c for c in self.coeffs], self.q_order)

    def __sub__(self, other: Any) -> "Series":
        return self + (-other)

    def __rsub__(self, other: Any) -> "Series":
        return (-self) + other

    def __mul__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            return self.mul(other)
        return self.scalar_mul(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.invert() ** (-k)
        result = Series.one(self.ring, self.t_order)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def first_difference(self, other: "Series") -> Optional[int]:
        """Lowest power of t where the two series differ within their shared order."""
        if self.ring != other.ring:
            raise TypeError(f"incompatible coefficient rings {self.ring} and {other.ring}")
        for n in range(min(self.t_order, other.t_order) + 1):
            if not self.coeffs[n] == other.coeffs[n]:
                return n
        return None

    def invert(self) -> "Series":
        try:
            b0 = self.ring.inverse(self.coeffs[0])
        except NotAUnit as e:
            raise NonInvertibleConstantTerm(str(e)) from e
        out = [b0]
        for n in range(1, self.t_order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                if self.coeffs[k].is_zero:
                    continue
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(acc * b0))
        return Series(self.ring, out, self.q_order)

    def q_derive(self, m: int = 1) -> "Series":
        """D_{q^m}: the coefficient of t^n becomes [n+1]_{q^m} c_{n+1}."""
        if self.t_order == 0:
            raise TruncationMismatch("the derivative of a constant-order series has no known terms")
        return Series(
            self.ring,
            [self.coeffs[n + 1] * qint(n + 1, m) for n in range(self.t_order)],
            self.q_order,
        )

    def scale_arg(self, alpha: Scalar) -> "Series":
        """a(t) -> a(alpha t)."""
        alpha = QScalar.coerce(alpha)
        out, power = [], QScalar.one()
        for c in self.coeffs:
            out.append(c * power)
            power = power * alpha
        return Series(self.ring, out, self.q_order)

    def shift(self, k: int = 1) -> "Series":
        """Multiply by t^k; the known order grows by k."""
        return Series(self.ring, [self.ring.zero] * k + list(self.coeffs), self.q_order)

    def reduce_mod_q(self, order: int) -> "Series":
        return Series(self.ring, self.coeffs, order if self.q_order is None else min(order, self.q_order))

    def map(self, fn: Callable[[Any], Any], ring: Optional[Ring] = None) -> "Series":
        return Series(ring or self.ring, [fn(c) for c in self.coeffs], self.q_order)

    def eval_q(self, value) -> "Series":
        return self.map(lambda c: c.eval_q(value))

    def subst_q_power(self, m: int) -> "Series":
        return self.map(lambda c: c.subst_q_power(m))

    def require_zero_constant(self) -> None:
        if not self.coeffs[0].is_zero:
            raise NonzeroConstantTerm(f"series has constant term {self.coeffs[0]}")

    def render(self, var: str = "t") -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            text = c.render()
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
            if not mono:
                parts.append(text)
            elif c.is_one:
                parts.append(mono)
            else:
                parts.append(f"({text})·{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({var}^{self.t_order + 1})"

    def render_latex(self, var: str = "t") -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            mono = "" if n == 0 else (var if n == 1 else f"{var}^{{{n}}}")
            if not mono:
                parts.append(c.render_latex())
            elif c.is_one:
                parts.append(mono)
            else:
                parts.append(f"\\left({c.render_latex()}\\right) {mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({var}^{{{self.t_order + 1}}})"

    def to_json(self) -> dict:
        return {
            "t_order": self.t_order,
            "q_order": self.q_order,
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, ring: Ring, data: dict) -> "Series":
        return cls(ring, [ring.from_json(c) for c in data["coeffs"]], data.get("q_order"))

    def __repr__(self) -> str:
        return f"Series[{self.ring.name}]({self.render()})"


def invert(a: Series) -> Series:
    return a.invert()


def q_derive(a: Series, m: int = 1) -> Series:
    return a.q_derive(m)


def scale_arg(a: Series, alpha: Scalar) -> Series:
    return a.scale_arg(alpha)


def reduce_mod_q(a: Series, order: int) -> Series:
    return a.reduce_mod_q(order)


def compose_classical(g: Series, f: Series) -> Series:
    """g(f(t)) by Horner's rule, to the smaller of the two orders."""
    f.require_zero_constant()
    order = min(g.t_order, f.t_order)
    f = f.truncate(order)
    result = Series.constant(f.ring, g.coeffs[order], order)
    for k in range(order - 1, -1, -1):
        result = result * f + g.coeffs[k]
    return result


def exp_series(t_order: int, ring: Ring = SCALARS) -> Series:
    """Classical exp(t) = sum t^n / n!."""
    return Series(ring, [ring.from_scalar(QScalar.constant(Fraction(1, factorial(n)))) for n in range(t_order + 1)])


def random_series(rng: Random, t_order: int, degree: int = 2, ring: Ring = SCALARS) -> Series:
    """Zero constant term, coefficients small integer polynomials in q of degree <= degree."""
    coeffs = [ring.zero]
    for _ in range(t_order):
        poly = QScalar.from_coefficients([rng.randint(-3, 3) for _ in range(degree + 1)])
        coeffs.append(ring.from_scalar(poly))
    return Series(ring, coeffs)


class TruncationMismatch(ValueError):
    pass


class NonInvertibleConstantTerm(ArithmeticError):
    pass


class NonzeroConstantTerm(ValueError):
    pass
