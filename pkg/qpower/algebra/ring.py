"""
Coefficient rings for truncated series.

A ring descriptor knows its zero and one and which elements are units.
Elements themselves carry the arithmetic (+, -, *, multiplication by a
QScalar) and the q-maps (truncate_q, eval_q, subst_q_power).
"""
from abc import ABC, abstractmethod
from typing import Any

from .gaussian import GaussianQScalar
from .scalars import QScalar


class Ring(ABC):

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def zero(self) -> Any:
        pass

    @property
    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def inverse(self, element: Any) -> Any:
        """Inverse of a unit; raises NotAUnit otherwise."""

    @abstractmethod
    def from_json(self, data: Any) -> Any:
        pass

    def from_scalar(self, scalar: QScalar) -> Any:
        return self.one * scalar

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"


class QScalarRing(Ring):

    @property
    def name(self) -> str:
        return "Q(q)"

    @property
    def zero(self) -> QScalar:
        return QScalar.zero()

    @property
    def one(self) -> QScalar:
        return QScalar.one()

    def inverse(self, element: QScalar) -> QScalar:
        if element.is_zero:
            raise NotAUnit("zero has no inverse in Q(q)")
        return QScalar.one() / element

    def from_json(self, data: Any) -> QScalar:
        return QScalar.from_json(data)


class GaussianRing(Ring):

    @property
    def name(self) -> str:
        return "Q(i)(q)"

    @property
    def zero(self) -> GaussianQScalar:
        return GaussianQScalar.zero()

    @property
    def one(self) -> GaussianQScalar:
        return GaussianQScalar.one()

    def inverse(self, element: GaussianQScalar) -> GaussianQScalar:
        if element.is_zero:
            raise NotAUnit("zero has no inverse")
        return GaussianQScalar.one() / element

    def from_json(self, data: Any) -> GaussianQScalar:
        return GaussianQScalar.from_json(data)


SCALARS = QScalarRing()
GAUSSIAN_SCALARS = GaussianRing()


class NotAUnit(ArithmeticError):
    pass
