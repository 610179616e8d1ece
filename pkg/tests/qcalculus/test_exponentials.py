from random import Random

import pytest

from qpower.algebra.ring import SCALARS
from qpower.algebra.series import Series, random_series
from qpower.qcalculus.exponentials import (
    BadConstantTerm,
    E_q_series,
    e_q_series,
    gessel_exp,
    invert_gessel_exp,
    invert_star_exp,
    star_exp,
)
from qpower.symfun.qpowers import P_series, e_series, h_series

N = 5


def test_exponentials_of_t():
    t = Series.variable(SCALARS, N)
    assert gessel_exp(t) == e_q_series(N)
    assert star_exp(t) == E_q_series(N)
    assert gessel_exp(t, 2) == e_q_series(N, 2)


@pytest.mark.parametrize("m", [1, -1, 2])
def test_q_exponentials_are_reciprocal(m):
    product = e_q_series(N, m) * E_q_series(N, m).scale_arg(-1)
    assert product == Series.one(SCALARS, N)


@pytest.mark.parametrize("m", [1, 2])
def test_base_link_of_q_exponentials(m):
    assert E_q_series(N, m) == e_q_series(N, -m)


def test_elementary_series_from_power_series():
    N = 4
    assert gessel_exp(-P_series(N).scale_arg(-1)) == e_series(N)
    assert star_exp(P_series(N)) == h_series(N)


def test_logarithms_recover_power_series():
    N = 4
    assert invert_star_exp(h_series(N)) == P_series(N)
    assert invert_gessel_exp(e_series(N)) == -P_series(N).scale_arg(-1)


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("m", [1, -2])
def test_round_trips(seed, m):
    F = random_series(Random(seed), N)
    assert invert_gessel_exp(gessel_exp(F, m), m) == F
    assert invert_star_exp(star_exp(F, m), m) == F


def test_logarithm_needs_unit_constant_term():
    with pytest.raises(BadConstantTerm):
        invert_gessel_exp(Series.constant(SCALARS, SCALARS.one * 2, 3))
    with pytest.raises(BadConstantTerm):
        invert_star_exp(Series.variable(SCALARS, 3))
