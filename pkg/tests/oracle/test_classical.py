import pytest

from qpower.oracle.classical import classical_monomial, classical_newton_p, classical_power_r, classical_power_sum
from qpower.symfun.combinatorics import Partition
from qpower.symfun.qpowers import eval_finite_variables, q_power, q_power_r

XS = [1, 2, 3, -1]


def test_newton_power_sums():
    assert classical_newton_p(1).render() == "e1"
    assert classical_newton_p(2).render() == "e1^2 − 2·e2"
    with pytest.raises(ValueError):
        classical_newton_p(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_q_powers_reduce_to_newton(n):
    assert q_power(n).eval_q(1) == classical_newton_p(n)
    assert eval_finite_variables(classical_newton_p(n), XS) == classical_power_sum(n, XS)


def test_monomials():
    assert classical_monomial(Partition((2, 1)), [1, 2, 3]) == 48
    assert classical_monomial(Partition((1, 1, 1)), [1, 2]) == 0
    assert classical_monomial(Partition((1,)), XS) == 5


@pytest.mark.parametrize("n,r", [(2, 1), (3, 2), (4, 2), (4, 3), (5, 2)])
def test_power_r_at_q_one(n, r):
    assert eval_finite_variables(q_power_r(n, r).eval_q(1), XS) == classical_power_r(n, r, XS)
