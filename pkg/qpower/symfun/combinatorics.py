"""
Integer partitions, compositions and the (q-)centralizer orders z_λ.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, List, Tuple

from ..algebra.scalars import QScalar, check_base, qint


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """'3,1,1' -> (3,1,1); the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(sorted((int(p) for p in text.split(",")), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def conjugate(self) -> "Partition":
        width = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(width)))

    def render(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)


def _partitions(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    return tuple(Partition(p) for p in _partitions(n, n))


def z_classical(partition: Partition) -> int:
    return prod(i**m * factorial(m) for i, m in partition.multiplicities().items())


def epsilon(partition: Partition) -> int:
    return -1 if (partition.size - partition.length) % 2 else 1


def conjugate(partition: Partition) -> Partition:
    return partition.conjugate()


def n_stat(partition: Partition) -> int:
    return sum(i * p for i, p in enumerate(partition.parts))


def n_stat_comp(composition: Composition) -> int:
    return sum(i * u for i, u in enumerate(composition.parts))


def n_stat_from_conjugate(partition: Partition) -> int:
    return sum(comb(c, 2) for c in partition.conjugate().parts)


def distinct_permutations(partition: Partition) -> List[Composition]:
    """Every rearrangement of the parts exactly once, built value by value."""
    counts = sorted(partition.multiplicities().items(), reverse=True)
    out: List[Composition] = []

    def extend(prefix: List[int], remaining: int) -> None:
        if remaining == 0:
            out.append(Composition(tuple(prefix)))
            return
        for idx, (value, count) in enumerate(counts):
            if count == 0:
                continue
            counts[idx] = (value, count - 1)
            prefix.append(value)
            extend(prefix, remaining - 1)
            prefix.pop()
            counts[idx] = (value, count)

    extend([], partition.length)
    return out


@lru_cache(maxsize=None)
def q_z(partition: Partition, m: int = 1) -> QScalar:
    """
    [z_λ] in base q^m: the reciprocal of the sum over distinct rearrangements u
    of 1 / ([n][n - u_1][n - u_1 - u_2] ... [u_r]).
    """
    check_base(m)
    if partition.length == 0:
        raise EmptyPartition("[z_λ] is not defined for the empty partition")
    n = partition.size
    total = QScalar.zero()
    for u in distinct_permutations(partition):
        denominator = QScalar.one()
        remaining = n
        for part in u.parts:
            denominator = denominator * qint(remaining, m)
            remaining -= part
        total = total + QScalar.one() / denominator
    return QScalar.one() / total


@lru_cache(maxsize=None)
def q_z_h(partition: Partition, m: int = 1) -> QScalar:
    """ψ^{|λ| - l(λ)} [z_λ]_{ψ^{-1}} with ψ = q^m, the centralizer order of the h-expansion."""
    check_base(m)
    if partition.length == 0:
        raise EmptyPartition("[z_λ] is not defined for the empty partition")
    return QScalar.q_power(m * (partition.size - partition.length)) * q_z(partition, -m)


class EmptyPartition(ValueError):
    pass
