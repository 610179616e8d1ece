import pytest

from qpower.handlers.utils import run_identity
from qpower.handlers.verify_handler import SUITES
from qpower.models import RunConfig
from qpower.symfun.qpowers import e, q_power

SMALL = dict(max_n=3, t_order=3, q_order=4, random_trials=1)


def _run(suite, config, powers=None):
    return [run_identity(i) for i in suite(config, powers).identities]


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_small_orders(name):
    suite = SUITES[name]
    results = _run(suite, RunConfig(**SMALL))
    assert results
    for result in results:
        assert result.passed, (result.name, result.difference, result.error)
        assert result.checked > 0


@pytest.mark.parametrize("name", ["girard", "determinants", "partition-expansions", "link"])
@pytest.mark.parametrize("m", [-1, 2])
def test_base_dependent_suites_in_other_bases(name, m):
    for result in _run(SUITES[name], RunConfig(base_m=m, **SMALL)):
        assert result.passed, (result.name, result.difference, result.error)


def test_suite_names_match_registry():
    for name, suite in SUITES.items():
        assert suite(RunConfig()).name == name


def test_perturbed_power_is_caught_by_girard():
    def perturbed(n, m):
        value = q_power(n, m)
        return value + e(n) if n == 2 else value

    results = {r.name: r for r in _run(SUITES["girard"], RunConfig(**SMALL), perturbed)}
    failed = results["Girard-Newton e-recurrence"]
    assert not failed.passed
    assert failed.params["n"] == 2
    assert failed.difference is not None


def test_randomized_identities_are_reproducible():
    config = RunConfig(seed=11, **SMALL)
    first = [r.dict() for r in _run(SUITES["products"], config)]
    second = [r.dict() for r in _run(SUITES["products"], config)]
    assert first == second
