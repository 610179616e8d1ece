from fractions import Fraction

from qpower.algebra.ring import SCALARS
from qpower.algebra.scalars import QScalar
from qpower.algebra.series import Series
from qpower.handlers.utils import Identity, SuiteClass, identity, locate_difference, run_identity
from qpower.models import RunConfig
from qpower.symfun.qpowers import e

q = QScalar.q()


class OrderedSuite(SuiteClass):

    @property
    def name(self) -> str:
        return "ordered"

    @identity("second")
    def second(self):
        yield {"n": 1}, 1, 1

    @identity("first")
    def first(self):
        yield {"n": 1}, 1, 1


class OverridingSuite(OrderedSuite):

    @identity("extra", randomized=True)
    def extra(self):
        yield {"n": 1}, 1, 1

    @identity("second, overridden")
    def second(self):
        yield {"n": 2}, 2, 2


def test_identities_keep_declaration_order():
    suite = OrderedSuite(RunConfig())
    assert [i.name for i in suite.identities] == ["second", "first"]
    assert all(i.suite == "ordered" for i in suite.identities)


def test_override_keeps_its_slot():
    suite = OverridingSuite(RunConfig())
    assert [i.name for i in suite.identities] == ["second, overridden", "first", "extra"]
    assert suite.identities[2].randomized


def test_rng_depends_on_seed_and_salt():
    a = OrderedSuite(RunConfig(seed=1)).rng("x").random()
    assert a == OrderedSuite(RunConfig(seed=1)).rng("x").random()
    assert a != OrderedSuite(RunConfig(seed=2)).rng("x").random()
    assert a != OrderedSuite(RunConfig(seed=1)).rng("y").random()


def test_locate_difference_in_a_scalar():
    assert locate_difference(q + 1, 1 + q) is None
    difference = locate_difference(1 + q, 1 + q + q**3)
    assert difference.q_power == 3
    assert difference.address() == "(t^-, q^3, -)"


def test_locate_difference_in_a_series():
    expected = Series(SCALARS, [QScalar.one(), q, q])
    actual = Series(SCALARS, [QScalar.one(), q, q + q**2])
    difference = locate_difference(expected, actual)
    assert (difference.t_power, difference.q_power) == (2, 2)
    assert difference.expected == "q"


def test_locate_difference_in_a_symmetric_function():
    difference = locate_difference(e(1) * e(1) + e(2), e(1) * e(1) + e(2) * (1 + q))
    assert difference.monomial == "e2"
    assert difference.q_power == 1


def test_locate_difference_falls_back_to_equality():
    assert locate_difference(Fraction(1, 2), Fraction(1, 2)) is None
    difference = locate_difference(3, 4)
    assert (difference.expected, difference.actual) == ("3", "4")


def test_run_identity_stops_at_first_failure():
    def cases():
        yield {"n": 1}, 1, 1
        yield {"n": 2}, 2, 3
        yield {"n": 3}, 3, 4

    result = run_identity(Identity("s", "broken", cases))
    assert not result.passed
    assert result.checked == 2
    assert result.params == {"n": 2}
    assert result.difference.expected == "2"


def test_run_identity_reports_arithmetic_errors():
    def cases():
        yield {"n": 1}, 1, 1
        raise ZeroDivisionError("boom")

    result = run_identity(Identity("s", "raises", cases))
    assert not result.passed
    assert result.checked == 1
    assert result.error == "ZeroDivisionError: boom"


def test_run_identity_passes():
    result = run_identity(Identity("s", "fine", lambda: iter([({}, 1, 1), ({}, 2, 2)])))
    assert result.passed
    assert result.checked == 2
    assert result.difference is None
