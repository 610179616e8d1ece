"""
Elements of the symmetric-function algebra, written on the free generators
e_1, e_2, ... with Q(q) coefficients.

A monomial e_1^{a_1} e_2^{a_2} ... is the exponent tuple (a_1, a_2, ...) with
trailing zeros stripped, so the empty tuple is the unit. Terms are kept in a
SortedDict ordered by graded degree (deg e_i = i) and then by exponent tuple,
both descending, which is also the rendering order.
"""
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, Tuple, Union

from sortedcontainers import SortedDict

from ..algebra.ring import NotAUnit, Ring
from ..algebra.scalars import MINUS, QScalar

Monomial = Tuple[int, ...]
Scalar = Union[QScalar, int, Fraction]


def _strip(mono: Iterable[int]) -> Monomial:
    mono = list(mono)
    while mono and mono[-1] == 0:
        mono.pop()
    return tuple(mono)


def mono_degree(mono: Monomial) -> int:
    return sum((i + 1) * a for i, a in enumerate(mono))


def _mono_key(mono: Monomial):
    return (-mono_degree(mono), tuple(-a for a in mono))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


def _mono_text(mono: Monomial, sep: str = "·") -> str:
    factors = []
    for i, a in enumerate(mono):
        if a == 0:
            continue
        factors.append(f"e{i + 1}" if a == 1 else f"e{i + 1}^{a}")
    return sep.join(factors)


def _mono_latex(mono: Monomial) -> str:
    factors = []
    for i, a in enumerate(mono):
        if a == 0:
            continue
        factors.append(f"e_{{{i + 1}}}" if a == 1 else f"e_{{{i + 1}}}^{{{a}}}")
    return " ".join(factors)


class SymPoly:
    """Polynomial in e_1, e_2, ... ; no zero coefficients are ever stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], Scalar] = None) -> None:
        collected: Dict[Monomial, QScalar] = {}
        for mono, coeff in (terms or {}).items():
            mono = _strip(mono)
            if any(a < 0 for a in mono):
                raise ValueError(f"negative exponent in monomial {mono}")
            coeff = QScalar.coerce(coeff)
            collected[mono] = collected[mono] + coeff if mono in collected else coeff
        self._terms = SortedDict(_mono_key, {m: c for m, c in collected.items() if not c.is_zero})

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, QScalar]) -> "SymPoly":
        obj = cls.__new__(cls)
        obj._terms = SortedDict(_mono_key, {m: c for m, c in terms.items() if not c.is_zero})
        return obj

    @classmethod
    def zero(cls) -> "SymPoly":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "SymPoly":
        return cls._from_clean({(): QScalar.one()})

    @classmethod
    def constant(cls, value: Scalar) -> "SymPoly":
        return cls._from_clean({(): QScalar.coerce(value)})

    @classmethod
    def generator(cls, k: int) -> "SymPoly":
        """e_k; e_0 is the unit and e_k = 0 has no meaning for k < 0."""
        if k < 0:
            raise ValueError(f"no generator e_{k}")
        if k == 0:
            return cls.one()
        return cls._from_clean({(0,) * (k - 1) + (1,): QScalar.one()})

    @property
    def terms(self) -> Mapping[Monomial, QScalar]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, QScalar]]:
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    @property
    def is_one(self) -> bool:
        return self.is_constant and not self.is_zero and self._terms[()].is_one

    def constant_term(self) -> QScalar:
        return self._terms.get((), QScalar.zero())

    def coefficient(self, mono: Iterable[int]) -> QScalar:
        return self._terms.get(_strip(mono), QScalar.zero())

    @property
    def degree(self) -> int:
        """Top graded degree; 0 for constants and for zero."""
        if not self._terms:
            return 0
        return mono_degree(self._terms.keys()[0])

    def is_homogeneous(self, degree: int) -> bool:
        return all(mono_degree(m) == degree for m in self._terms)

    def __add__(self, other: Any) -> "SymPoly":
        if isinstance(other, (QScalar, int, Fraction)):
            other = SymPoly.constant(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out[mono] + coeff if mono in out else coeff
        return SymPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "SymPoly":
        if isinstance(other, (QScalar, int, Fraction, SymPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> "SymPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "SymPoly":
        if isinstance(other, (QScalar, int, Fraction)):
            if not isinstance(other, QScalar):
                other = QScalar.constant(other)
            return SymPoly._from_clean({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        out: Dict[Monomial, QScalar] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                value = ca * cb
                out[mono] = out[mono] + value if mono in out else value
        return SymPoly._from_clean(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "SymPoly":
        if not isinstance(other, (QScalar, int, Fraction)):
            return NotImplemented
        return self * (QScalar.one() / other)

    def exact_div(self, other: Scalar) -> "SymPoly":
        return self / other

    def __pow__(self, k: int) -> "SymPoly":
        if k < 0:
            raise ValueError("negative powers are not elements of the algebra")
        result, base = SymPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QScalar, int, Fraction)):
            other = SymPoly.constant(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def map_coefficients(self, fn: Callable[[QScalar], QScalar]) -> "SymPoly":
        return SymPoly._from_clean({m: fn(c) for m, c in self._terms.items()})

    def eval_q(self, value) -> "SymPoly":
        return self.map_coefficients(lambda c: c.eval_q(value))

    def truncate_q(self, order: int) -> "SymPoly":
        return self.map_coefficients(lambda c: c.truncate_q(order))

    def subst_q_power(self, m: int) -> "SymPoly":
        return self.map_coefficients(lambda c: c.subst_q_power(m))

    def substitute(self, image: Callable[[int], Any], one: Any) -> Any:
        """
        Apply the algebra map e_k -> image(k). The images may live in any
        commutative ring that accepts multiplication by a QScalar.
        """
        cache: Dict[int, Any] = {}
        total = None
        for mono, coeff in self._terms.items():
            value = one
            for i, a in enumerate(mono):
                if a == 0:
                    continue
                if i + 1 not in cache:
                    cache[i + 1] = image(i + 1)
                value = value * cache[i + 1] ** a
            term = value * coeff
            total = term if total is None else total + term
        return one * QScalar.zero() if total is None else total

    def first_difference(self, other: "SymPoly"):
        """The first monomial (in rendering order) whose coefficients differ, or None."""
        monos = sorted(set(self._terms) | set(other._terms), key=_mono_key)
        for mono in monos:
            if not self.coefficient(mono) == other.coefficient(mono):
                return mono
        return None

    def render(self) -> str:
        if not self._terms:
            return "0"
        terms = []
        for mono, coeff in self._terms.items():
            negative = coeff.sign_hint() < 0
            magnitude = -coeff if negative else coeff
            mono_text = _mono_text(mono)
            if not mono_text:
                body = magnitude.render()
                if " " in body:
                    body = f"({body})"
            elif magnitude.is_one:
                body = mono_text
            else:
                body = f"{_scalar_text(magnitude)}·{mono_text}"
            terms.append((negative, body))
        return _join(terms, MINUS)

    def render_latex(self) -> str:
        if not self._terms:
            return "0"
        terms = []
        for mono, coeff in self._terms.items():
            negative = coeff.sign_hint() < 0
            magnitude = -coeff if negative else coeff
            mono_text = _mono_latex(mono)
            k = magnitude.as_qint()
            if k is not None:
                scalar = f"[{k}]_q"
            elif magnitude.is_constant:
                scalar = magnitude.render_latex()
            else:
                scalar = f"\\left({magnitude.render_latex()}\\right)"
            if not mono_text:
                body = scalar
            elif magnitude.is_one:
                body = mono_text
            else:
                body = f"{scalar} {mono_text}"
            terms.append((negative, body))
        return _join(terms, "-")

    def to_json(self) -> Dict[str, Any]:
        return {
            "terms": [
                {"mono": {str(i + 1): a for i, a in enumerate(mono) if a}, "coeff": coeff.to_json()}
                for mono, coeff in self._terms.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "SymPoly":
        terms: Dict[Monomial, QScalar] = {}
        for term in data["terms"]:
            size = max((int(k) for k in term["mono"]), default=0)
            mono = [0] * size
            for k, a in term["mono"].items():
                mono[int(k) - 1] = a
            terms[_strip(mono)] = QScalar.from_json(term["coeff"])
        return cls(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymPoly({self.render()})"


def _scalar_text(s: QScalar) -> str:
    k = s.as_qint()
    if k is not None:
        return f"[{k}]"
    text = s.render()
    return f"({text})" if " " in text else text


def _join(terms, minus: str) -> str:
    out = ""
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            out = f"{minus}{body}" if negative else body
        else:
            out += f" {minus} {body}" if negative else f" + {body}"
    return out


def render_monomial(mono: Monomial) -> str:
    return _mono_text(mono) or "1"


class SymPolyRing(Ring):

    @property
    def name(self) -> str:
        return "Λ"

    @property
    def zero(self) -> SymPoly:
        return SymPoly.zero()

    @property
    def one(self) -> SymPoly:
        return SymPoly.one()

    def inverse(self, element: SymPoly) -> SymPoly:
        if element.is_zero or not element.is_constant:
            raise NotAUnit(f"{element.render()} is not a unit of Λ")
        return SymPoly.constant(QScalar.one() / element.constant_term())

    def from_json(self, data: Any) -> SymPoly:
        return SymPoly.from_json(data)


SYMMETRIC = SymPolyRing()
