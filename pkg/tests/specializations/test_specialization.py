import pytest

from qpower.algebra.ring import SCALARS
from qpower.algebra.scalars import QScalar
from qpower.algebra.series import Series
from qpower.qcalculus.exponentials import BadConstantTerm, E_q_series, e_q_series
from qpower.specializations.specialization import Mode, specialize

N = 5


def test_e_mode_of_the_q_exponential():
    spec = specialize(Mode.E, e_q_series(N))
    assert spec.p(1) == 1
    assert all(spec.p(n).is_zero for n in range(2, N + 1))
    assert spec.relation_holds()


def test_h_mode_of_the_star_exponential():
    spec = specialize("H", E_q_series(N))
    assert spec.mode == Mode.H
    assert spec.p(1) == 1
    assert all(spec.p(n).is_zero for n in range(2, N + 1))


def test_geometric_series_in_base_two():
    # 1/(1-t) read as E(t): e_n -> 1
    g = Series(SCALARS, [QScalar.one()] * (N + 1))
    spec = specialize(Mode.E, g, 2)
    assert spec.m == 2
    assert spec.relation_holds()
    assert spec.p_series().t_order == N - 1


def test_bad_input():
    with pytest.raises(BadConstantTerm):
        specialize(Mode.E, Series.constant(SCALARS, QScalar.constant(2), 3))
    with pytest.raises(ValueError):
        specialize("X", e_q_series(3))
    spec = specialize(Mode.E, e_q_series(3))
    with pytest.raises(IndexError):
        spec.p(0)
    with pytest.raises(IndexError):
        spec.p(4)
