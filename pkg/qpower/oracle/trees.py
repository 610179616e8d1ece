"""
Labelled trees on {1..n} rooted at 1 and their inversion enumerator
J_n(q) = sum_T q^{inv(T)}, by exhaustive Prüfer decoding.
"""
import logging
import threading
from itertools import product
from math import comb
from typing import Dict, Iterator

import networkx as nx

from ..algebra.scalars import QScalar
from .cache import OracleCache

MAX_TREE_SIZE = 8

_enumerated: Dict[int, QScalar] = {}
_enumeration_lock = threading.Lock()


def _check_size(n: int) -> None:
    if n < 1:
        raise ValueError(f"a tree needs at least one vertex, got n={n}")
    if n > MAX_TREE_SIZE:
        raise TooLarge(f"tree enumeration is limited to n <= {MAX_TREE_SIZE}, got n={n}")


def labelled_trees(n: int) -> Iterator[nx.Graph]:
    """Every tree on the vertex set {1..n}, each exactly once."""
    _check_size(n)
    if n == 1:
        tree = nx.Graph()
        tree.add_node(1)
        yield tree
        return
    if n == 2:
        yield nx.Graph([(1, 2)])
        return
    for sequence in product(range(n), repeat=n - 2):
        tree = nx.from_prufer_sequence(list(sequence))
        yield nx.relabel_nodes(tree, {v: v + 1 for v in tree.nodes})


def parents(tree: nx.Graph) -> Dict[int, int]:
    """Parent of every vertex other than the root 1."""
    return dict(nx.bfs_predecessors(tree, 1))


def tree_inversions(tree: nx.Graph) -> int:
    """Pairs i > j > 1 with i on the path from the root 1 to j."""
    parent = parents(tree)
    count = 0
    for j in tree.nodes:
        v = parent.get(j)
        while v is not None:
            if v > j:
                count += 1
            v = parent.get(v)
    return count


def J_poly(n: int) -> QScalar:
    """Memoised per process; the on-disk cache is consulted before enumerating."""
    _check_size(n)
    with _enumeration_lock:
        if n in _enumerated:
            return _enumerated[n]
        poly = OracleCache.get_blocking("J", n)
        if poly is None:
            poly = _enumerate_J(n)
            OracleCache.put_blocking("J", n, poly)
        _enumerated[n] = poly
        return poly


def _enumerate_J(n: int) -> QScalar:
    counts = [0] * (comb(n - 1, 2) + 1)
    total = 0
    for tree in labelled_trees(n):
        counts[tree_inversions(tree)] += 1
        total += 1
    expected = n ** (n - 2) if n >= 2 else 1
    assert total == expected, f"enumerated {total} trees on {n} vertices, expected {expected}"
    logging.info(f"J_{n} enumerated over {total} trees")
    return QScalar.from_coefficients(counts)


def reciprocal(poly: QScalar, n: int) -> QScalar:
    """q^{binom(n-1,2)} P(1/q)"""
    return poly.subst_q_power(-1) * QScalar.q_power(comb(n - 1, 2))


def J_reciprocal(n: int) -> QScalar:
    return reciprocal(J_poly(n), n)


class TooLarge(ValueError):
    pass
