import json

import networkx as nx
import pytest

from qpower.algebra.scalars import QScalar
from qpower.oracle.cache import OracleCache
from qpower.oracle.trees import (
    J_poly,
    J_reciprocal,
    TooLarge,
    labelled_trees,
    parents,
    tree_inversions,
)


@pytest.fixture
def cache_dir(tmp_path):
    OracleCache.set_cache_dir(str(tmp_path))
    yield tmp_path
    OracleCache.set_cache_dir(None)


def poly(*coeffs):
    return QScalar.from_coefficients(list(coeffs))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
def test_cayley_counts(n, count):
    trees = list(labelled_trees(n))
    assert len(trees) == count
    assert all(nx.is_tree(t) and set(t.nodes) == set(range(1, n + 1)) for t in trees)


def test_tree_inversions():
    path = nx.Graph([(1, 3), (3, 2)])
    assert parents(path) == {3: 1, 2: 3}
    assert tree_inversions(path) == 1
    assert tree_inversions(nx.Graph([(1, 2), (2, 3)])) == 0
    # 4 above 3 above 2
    assert tree_inversions(nx.Graph([(1, 4), (4, 3), (3, 2)])) == 3


def test_small_enumerators():
    assert J_poly(1) == 1
    assert J_poly(2) == 1
    assert J_poly(3) == poly(2, 1)
    assert J_poly(4) == poly(6, 6, 3, 1)
    assert J_reciprocal(4) == poly(1, 3, 6, 6)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumerator_totals(n):
    assert J_poly(n).eval_at(1) == (n ** (n - 2) if n >= 2 else 1)


def test_size_limits():
    with pytest.raises(TooLarge):
        J_poly(9)
    with pytest.raises(ValueError):
        list(labelled_trees(0))


def test_cache_round_trip(cache_dir):
    OracleCache.put_blocking("J", 5, J_poly(5))
    path = cache_dir / "J_5.json"
    data = json.loads(path.read_text())
    assert data["kind"] == "J" and data["n"] == 5
    assert OracleCache.get_blocking("J", 5) == J_poly(5)
    assert OracleCache.get_blocking("J", 6) is None


def test_cache_ignores_bad_files(cache_dir):
    (cache_dir / "J_3.json").write_text("not json")
    assert OracleCache.get_blocking("J", 3) is None
    (cache_dir / "J_4.json").write_text(json.dumps({"kind": "J", "n": 5, "poly": {}}))
    assert OracleCache.get_blocking("J", 4) is None


def test_cache_disabled():
    OracleCache.set_cache_dir(None)
    OracleCache.put_blocking("J", 3, poly(2, 1))
    assert OracleCache.get_blocking("J", 3) is None
