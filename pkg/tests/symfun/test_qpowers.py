import pytest

from qpower.algebra.scalars import QScalar, qfact, qint
from qpower.symfun.combinatorics import Partition
from qpower.symfun.qpowers import (
    BadIndices,
    P_series,
    e,
    e_det_from_p,
    e_expansion,
    eval_finite_variables,
    h,
    h_det_from_p,
    h_expansion,
    h_from_e,
    h_series,
    lemma_sum_e,
    lemma_sum_h,
    p_det_from_h,
    p_small_series,
    partition_expansion,
    q_power,
    q_power_det,
    q_power_partition,
    q_power_r,
    q_power_r_series,
    verify_girard_e,
    verify_girard_h,
)

BASES = [1, -1, 2]


def test_first_q_powers():
    assert q_power(1) == e(1)
    assert q_power(2).render() == "e1^2 − [2]·e2"
    assert q_power(2, 2) == e(1) * e(1) - e(2) * qint(2, 2)


def test_classical_limit_is_newton():
    e1, e2, e3 = e(1), e(2), e(3)
    assert q_power(3).eval_q(1) == e1**3 - e1 * e2 * 3 + e3 * 3


def test_h_from_series_inversion():
    assert h(2) == e(1) * e(1) - e(2)
    assert h_from_e(5) == h_series(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("m", BASES)
def test_girard_identities(n, m):
    assert verify_girard_e(n, m)
    assert verify_girard_h(n, m)


def test_girard_detects_wrong_weight():
    assert not verify_girard_h(3, 1, weight=lambda n, k: k)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("m", BASES)
def test_determinant_routes(n, m):
    assert q_power_det(n, m) == q_power(n, m)
    assert e_det_from_p(n, m) == e(n)
    assert h_det_from_p(n, m) == h(n)
    assert p_det_from_h(n, m) == q_power(n, m)


@pytest.mark.parametrize("n,r", [(1, 0), (3, 1), (4, 2), (5, 3), (4, 4)])
def test_q_power_r_routes(n, r):
    assert q_power_r(n, r) == q_power_r_series(n, r)
    assert q_power_r(n, r, -1) == q_power_r_series(n, r, -1)


def test_q_power_r_edges():
    assert q_power_r(3, 3) == e(3)
    assert q_power_r(4, 1) == q_power(4)
    with pytest.raises(BadIndices):
        q_power_r(2, 3)
    with pytest.raises(BadIndices):
        q_power(0)


def test_q_power_r_at_q_one_counts_monomials():
    # p^(2)_3 at q = 1 is m_{2,1}: on x = (1, 2, 3) that is sum_{i != j} x_i^2 x_j = 48
    assert eval_finite_variables(q_power_r(3, 2).eval_q(1), [1, 2, 3]) == 48


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, -1])
def test_partition_expansions(n, m):
    assert e_expansion(n, m) == e(n)
    assert h_expansion(n, m) == h(n)
    assert lemma_sum_e(n, m) == e(n) * qfact(n, m)
    assert lemma_sum_h(n, m) == h(n) * qfact(n, m)


def test_partition_expansion_object():
    expansion = partition_expansion(2)
    assert [p.parts for p, _ in expansion.terms] == [(2,), (1, 1)]
    assert expansion.terms[0][1] == -1 / qint(2)
    text = expansion.render()
    assert text.startswith("e2 = −")
    assert "[p_{1,1}]" in text
    data = expansion.to_json()
    assert data["target"] == "e" and data["n"] == 2
    assert data["terms"][1]["partition"] == [1, 1]
    with pytest.raises(ValueError):
        partition_expansion(2, target="p")
    with pytest.raises(BadIndices):
        partition_expansion(0)


def test_injected_power_source_breaks_expansion():
    def perturbed(n, m):
        value = q_power(n, m)
        return value + e(n) if n == 2 else value

    assert e_expansion(2, 1, perturbed) != e(2)
    assert q_power_partition(Partition((2, 1)), 1, perturbed) == (q_power(2) + e(2)) * e(1)


def test_finite_variables():
    # p_2 of (1, 2, 3) at q = 1
    assert eval_finite_variables(q_power(2).eval_q(1), [1, 2, 3]) == 14
    # e_4 vanishes in three variables
    assert eval_finite_variables(e(4), [1, 2, 3]).is_zero


def test_generating_series():
    P = P_series(3)
    assert P[0].is_zero
    assert P[2] == q_power(2) / qint(2)
    p = p_small_series(3)
    assert p[0] == e(1)
    assert p[3] == q_power(4)
    assert QScalar.one() * P[1] == e(1)
