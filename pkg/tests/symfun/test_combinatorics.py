import random

import pytest

from qpower.algebra.scalars import QScalar, qint
from qpower.symfun.combinatorics import (
    EmptyPartition,
    Partition,
    distinct_permutations,
    epsilon,
    n_stat,
    n_stat_from_conjugate,
    partitions_of,
    q_z,
    q_z_h,
    z_classical,
)

q = QScalar.q()


def test_partitions_in_reverse_lexicographic_order():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(6)) == 11
    assert partitions_of(0) == (Partition(()),)


def test_parse_and_render():
    assert Partition.parse("1,3,1").parts == (3, 1, 1)
    assert Partition.parse(" ").parts == ()
    assert Partition((3, 1, 1)).render() == "3,1,1"
    with pytest.raises(ValueError):
        Partition.parse("2,0")
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_conjugate():
    assert Partition((4, 2)).conjugate().parts == (2, 2, 1, 1)
    assert Partition((3, 1, 1)).conjugate().parts == (3, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_n_statistic_from_conjugate(n):
    for partition in partitions_of(n):
        assert n_stat(partition) == n_stat_from_conjugate(partition)


def test_distinct_permutations():
    perms = distinct_permutations(Partition((2, 1, 1)))
    assert sorted(c.parts for c in perms) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(distinct_permutations(Partition((1, 1, 1)))) == 1
    assert len(distinct_permutations(Partition((3, 2, 1)))) == 6


def test_z_and_epsilon():
    assert z_classical(Partition((2, 1, 1))) == 4
    assert z_classical(Partition((1, 1, 1))) == 6
    assert epsilon(Partition((2,))) == -1
    assert epsilon(Partition((1, 1))) == 1


def test_q_z_small_values():
    assert q_z(Partition((1,))) == 1
    assert q_z(Partition((2,))) == qint(2)
    assert q_z(Partition((2, 1))) == qint(3) * qint(2) / (qint(2) + 1)
    # the h-side order of (1,1) carries 1/q
    assert q_z_h(Partition((1, 1))) == (1 + q) / q


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("m", [1, 2, -1])
def test_q_z_reduces_to_z(n, m):
    for partition in partitions_of(n):
        assert q_z(partition, m).eval_at(1) == z_classical(partition)
        assert q_z_h(partition, m).eval_at(1) == z_classical(partition)


def test_q_z_does_not_depend_on_summation_order():
    partition = Partition((3, 2, 1, 1))
    terms = distinct_permutations(partition)
    random.Random(3).shuffle(terms)
    total = QScalar.zero()
    for u in terms:
        denominator, remaining = QScalar.one(), partition.size
        for part in u.parts:
            denominator = denominator * qint(remaining)
            remaining -= part
        total = total + QScalar.one() / denominator
    assert QScalar.one() / total == q_z(partition)


def test_empty_partition():
    with pytest.raises(EmptyPartition):
        q_z(Partition(()))
    with pytest.raises(EmptyPartition):
        q_z_h(Partition(()))
