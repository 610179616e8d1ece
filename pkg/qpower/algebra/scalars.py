"""
Exact rational functions of the indeterminate q over the rationals.

Every coefficient that shows up in the library (q-integers, q-binomials,
q-Pochhammer symbols, 1/(1-q), q^{-k}, ...) is a QScalar. Values are kept
in canonical form: numerator and denominator are coprime and the
denominator is monic, so structural equality is mathematical equality.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

QRing, _q = ring("q", QQ)

Rational = Union[int, Fraction]
Coefficient = Union[int, Fraction, "QScalar"]

MINUS = "−"


def _to_qq(value: Rational):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def _dense(poly: PolyElement) -> List[Fraction]:
    if not poly:
        return []
    coeffs = [Fraction(0)] * (poly.degree() + 1)
    for (exp,), coeff in poly.items():
        coeffs[exp] = _to_fraction(coeff)
    return coeffs


def _from_dense(coeffs: Sequence[Rational]) -> PolyElement:
    return QRing.from_dict({(exp,): _to_qq(c) for exp, c in enumerate(coeffs) if c})


def _canonical(num: PolyElement, den: PolyElement):
    if not den:
        raise ZeroDivisionError("QScalar with a zero denominator")
    if not num:
        return QRing.zero, QRing.one
    if den.is_ground:
        return num.quo_ground(den.LC), QRing.one
    num, den = num.cancel(den)
    lc = den.LC
    if lc != QQ.one:
        num, den = num.quo_ground(lc), den.quo_ground(lc)
    return num, den


def _poly_text(coeffs: Sequence[Fraction]) -> str:
    terms = []
    for exp, coeff in enumerate(coeffs):
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        mono = "" if exp == 0 else ("q" if exp == 1 else f"q^{exp}")
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        terms.append((coeff < 0, body))
    return _join_terms(terms)


def _poly_latex(coeffs: Sequence[Fraction]) -> str:
    terms = []
    for exp, coeff in enumerate(coeffs):
        if coeff == 0:
            continue
        magnitude = abs(coeff)
        mono = "" if exp == 0 else ("q" if exp == 1 else f"q^{{{exp}}}")
        if magnitude.denominator == 1:
            number = str(magnitude.numerator)
        else:
            number = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
        if not mono:
            body = number
        elif magnitude == 1:
            body = mono
        else:
            body = f"{number} {mono}"
        terms.append((coeff < 0, body))
    return _join_terms(terms, minus="-")


def _join_terms(terms, minus: str = MINUS) -> str:
    if not terms:
        return "0"
    out = ""
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            out = f"{minus}{body}" if negative else body
        else:
            out += f" {minus} {body}" if negative else f" + {body}"
    return out


class QScalar:
    """Element of Q(q), stored as a canonical fraction of sympy ring elements."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: PolyElement, den: Optional[PolyElement] = None) -> None:
        if den is None:
            den = QRing.one
        self._num, self._den = _canonical(num, den)

    @classmethod
    def _make(cls, num: PolyElement, den: PolyElement) -> "QScalar":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def constant(cls, value: Rational) -> "QScalar":
        return cls._make(QRing.ground_new(_to_qq(value)), QRing.one)

    @classmethod
    def zero(cls) -> "QScalar":
        return cls._make(QRing.zero, QRing.one)

    @classmethod
    def one(cls) -> "QScalar":
        return cls._make(QRing.one, QRing.one)

    @classmethod
    def q(cls) -> "QScalar":
        return cls._make(_q, QRing.one)

    @classmethod
    def q_power(cls, k: int) -> "QScalar":
        if k >= 0:
            return cls._make(_q**k, QRing.one)
        return cls._make(QRing.one, _q**(-k))

    @classmethod
    def from_coefficients(cls, num: Sequence[Rational], den: Sequence[Rational] = (1,)) -> "QScalar":
        return cls(_from_dense(num), _from_dense(den))

    @staticmethod
    def coerce(value: Coefficient) -> "QScalar":
        if isinstance(value, QScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return QScalar.constant(value)
        raise TypeError(f"Cannot use {type(value).__name__} as a QScalar")

    @property
    def numerator(self) -> PolyElement:
        return self._num

    @property
    def denominator(self) -> PolyElement:
        return self._den

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_one(self) -> bool:
        return self._num.is_one and self._den.is_one

    @property
    def is_polynomial(self) -> bool:
        return self._den.is_one

    @property
    def is_constant(self) -> bool:
        return self._den.is_one and self._num.is_ground

    def numerator_coefficients(self) -> List[Fraction]:
        return _dense(self._num)

    def denominator_coefficients(self) -> List[Fraction]:
        return _dense(self._den)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return _to_fraction(self._num.LC) if self._num else Fraction(0)

    def lowest_degree(self) -> Optional[int]:
        """Lowest power of q in the numerator (None for zero)."""
        if not self._num:
            return None
        return min(exp for (exp,), _ in self._num.items())

    def valuation(self) -> Optional[int]:
        """Order of vanishing at q = 0, negative for a pole there (None for zero)."""
        if not self._num:
            return None
        return self.lowest_degree() - min(exp for (exp,), _ in self._den.items())

    def sign_hint(self) -> int:
        """Sign of the lowest-order numerator coefficient; drives term signs when rendering."""
        low = self.lowest_degree()
        if low is None:
            return 1
        return -1 if self._num[(low,)] < 0 else 1

    def as_qint(self) -> Optional[int]:
        """k when this is exactly [k]_q = 1 + q + ... + q^{k-1} with k >= 2."""
        if not self._den.is_one or not self._num:
            return None
        coeffs = self.numerator_coefficients()
        if len(coeffs) >= 2 and all(c == 1 for c in coeffs):
            return len(coeffs)
        return None

    def __add__(self, other: Coefficient) -> "QScalar":
        try:
            other = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den.is_one and other._den.is_one:
            return QScalar._make(self._num + other._num, QRing.one)
        if self._den == other._den:
            return QScalar(self._num + other._num, self._den)
        return QScalar(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar._make(-self._num, self._den)

    def __sub__(self, other: Coefficient) -> "QScalar":
        try:
            other = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> "QScalar":
        return QScalar.coerce(other) - self

    def __mul__(self, other: Coefficient) -> "QScalar":
        try:
            other = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den.is_one and other._den.is_one:
            return QScalar._make(self._num * other._num, QRing.one)
        return QScalar(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Coefficient) -> "QScalar":
        try:
            other = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero QScalar")
        return QScalar(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other: Coefficient) -> "QScalar":
        return QScalar.coerce(other) / self

    def exact_div(self, other: Coefficient) -> "QScalar":
        return self / other

    def __pow__(self, k: int) -> "QScalar":
        if k < 0:
            return QScalar.one() / self**(-k)
        return QScalar._make(self._num**k, self._den**k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QScalar.constant(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((tuple(sorted(self._num.items())), tuple(sorted(self._den.items()))))

    def subst_q_power(self, m: int) -> "QScalar":
        """Replace q by q^m (m nonzero) and re-canonicalize."""
        if m == 0:
            raise BadBase("base exponent must be nonzero")
        if self.is_zero:
            return self
        if m > 0:
            num = QRing.from_dict({(e * m,): c for (e,), c in self._num.items()})
            den = QRing.from_dict({(e * m,): c for (e,), c in self._den.items()})
            return QScalar(num, den)
        # q -> q^{-|m|}: multiply both sides by q^{|m| D}
        top = max(self._num.degree(), self._den.degree())
        k = -m
        num = QRing.from_dict({((top - e) * k,): c for (e,), c in self._num.items()})
        den = QRing.from_dict({((top - e) * k,): c for (e,), c in self._den.items()})
        return QScalar(num, den)

    def eval_at(self, value: Rational) -> Fraction:
        value = Fraction(value)
        den = sum((c * value**e for e, c in enumerate(self.denominator_coefficients())), Fraction(0))
        if den == 0:
            raise PoleAtPoint(f"denominator of {self} vanishes at q={value}")
        num = sum((c * value**e for e, c in enumerate(self.numerator_coefficients())), Fraction(0))
        return num / den

    def eval_q(self, value: Rational) -> "QScalar":
        return QScalar.constant(self.eval_at(value))

    def truncate_q(self, order: int) -> "QScalar":
        """Power-series expansion in q, reduced modulo q^order."""
        if self._den.is_one:
            return QScalar._make(QRing.from_dict({(e,): c for (e,), c in self._num.items() if e < order}), QRing.one)
        den = self.denominator_coefficients()
        if den[0] == 0:
            raise NotPolynomialInQ(f"{self} has a pole at q=0")
        inverse = [Fraction(0)] * order
        for k in range(order):
            acc = Fraction(1) if k == 0 else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * inverse[k - j]
            inverse[k] = acc / den[0]
        num = self.numerator_coefficients()
        series = [Fraction(0)] * order
        for i, a in enumerate(num[:order]):
            if a:
                for j in range(order - i):
                    series[i + j] += a * inverse[j]
        return QScalar._make(_from_dense(series), QRing.one)

    def render(self) -> str:
        num = _poly_text(self.numerator_coefficients())
        if self._den.is_one:
            return num
        den = _poly_text(self.denominator_coefficients())
        return f"{_wrap(num)}/{_wrap(den)}"

    def render_latex(self) -> str:
        num = _poly_latex(self.numerator_coefficients())
        if self._den.is_one:
            return num
        return f"\\frac{{{num}}}{{{_poly_latex(self.denominator_coefficients())}}}"

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {
            "num": [[c.numerator, c.denominator] for c in self.numerator_coefficients()],
            "den": [[c.numerator, c.denominator] for c in self.denominator_coefficients()],
        }

    @classmethod
    def from_json(cls, data: Dict[str, List[List[int]]]) -> "QScalar":
        return cls.from_coefficients(
            [Fraction(p, r) for p, r in data["num"]],
            [Fraction(p, r) for p, r in data["den"]],
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QScalar({self.render()})"


def _wrap(text: str) -> str:
    return f"({text})" if (" " in text or text.startswith(MINUS)) else text


def check_base(m: int) -> int:
    if m == 0:
        raise BadBase("base exponent m must be a nonzero integer")
    return m


@lru_cache(maxsize=None)
def qint(n: int, m: int = 1) -> QScalar:
    """[n] in base q^m, from the closed form (1 - q^{mn}) / (1 - q^m)."""
    check_base(m)
    if n < 0:
        raise ValueError(f"qint needs n >= 0, got {n}")
    if n == 0:
        return QScalar.zero()
    one = QScalar.one()
    return (one - QScalar.q_power(m * n)) / (one - QScalar.q_power(m))


@lru_cache(maxsize=None)
def qfact(n: int, m: int = 1) -> QScalar:
    if n < 0:
        raise ValueError(f"qfact needs n >= 0, got {n}")
    if n == 0:
        return QScalar.one()
    return qfact(n - 1, m) * qint(n, m)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int, m: int = 1) -> QScalar:
    if k < 0 or n < 0 or k > n:
        return QScalar.zero()
    value = qfact(n, m) / (qfact(k, m) * qfact(n - k, m))
    # a Laurent polynomial in q^m: the denominator is at most a power of q
    assert len(value.denominator) == 1, f"q-binomial [{n} {k}] did not reduce"
    return value


def qpochhammer(a: Coefficient, n: int) -> QScalar:
    """(a; q)_n = (1 - a)(1 - qa)...(1 - q^{n-1}a)."""
    if n < 0:
        raise ValueError(f"qpochhammer needs n >= 0, got {n}")
    a = QScalar.coerce(a)
    result = QScalar.one()
    for k in range(n):
        result = result * (1 - a * QScalar.q_power(k))
    return result


def subst_q_power(s: QScalar, m: int) -> QScalar:
    return s.subst_q_power(m)


def eval_at(s: QScalar, value: Rational) -> Fraction:
    return s.eval_at(value)


class PoleAtPoint(ArithmeticError):
    pass


class NotPolynomialInQ(ArithmeticError):
    pass


class BadBase(ValueError):
    pass
