import logging
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from random import Random
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from ..algebra.gaussian import GaussianQScalar
from ..algebra.scalars import QScalar
from ..algebra.series import Series
from ..algebra.xpoly import XPoly
from ..models.report import Difference, IdentityResult
from ..models.run_config import RunConfig
from ..symfun.qpowers import PowerSource, q_power
from ..symfun.sympoly import SymPoly, render_monomial

# one checked instance: parameters, expected side, computed side
Case = Tuple[Dict[str, Any], Any, Any]


@dataclass(frozen=True)
class Identity:
    suite: str
    name: str
    check: Callable[[], Iterator[Case]]
    randomized: bool = False


class SuiteMeta(ABCMeta):
    def __call__(cls, *args: Any, **kwds: Any) -> Any:
        inst = ABCMeta.__call__(cls, *args, **kwds)
        SuiteMeta.__bootstrap_identities(inst)
        return inst

    def __bootstrap_identities(self: Any):
        # class-body order, base classes first; an override keeps its slot
        found: Dict[str, dict] = {}
        for klass in reversed(type(self).__mro__):
            for name, obj in vars(klass).items():
                if callable(obj) and hasattr(obj, "__identity_details__"):
                    found[name] = getattr(obj, "__identity_details__")
        self._identities = [
            Identity(self.name, details["name"], getattr(self, name), details["randomized"])
            for name, details in found.items()
        ]


class SuiteClass(metaclass=SuiteMeta):

    def __init__(self, config: RunConfig, powers: Optional[PowerSource] = None) -> None:
        self.config = config
        self.powers: PowerSource = powers or q_power

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    def identities(self) -> List[Identity]:
        return list(self._identities)

    def rng(self, salt: str) -> Random:
        """A generator per identity, so results do not depend on scheduling."""
        return Random(f"{self.config.seed}:{self.name}:{salt}")


def identity(name: str, randomized: bool = False):
    def decorator(func: Callable):
        setattr(func, "__identity_details__", {
            "name": name,
            "randomized": randomized,
        })
        return func
    return decorator


def _text(value: Any) -> str:
    render = getattr(value, "render", None)
    return render() if callable(render) else str(value)


def _locate(expected: Any, actual: Any) -> Optional[Tuple[Dict[str, Any], Any, Any]]:
    if isinstance(expected, Series) and isinstance(actual, Series):
        n = expected.first_difference(actual)
        if n is None:
            return None
        address, exp, act = _locate(expected[n], actual[n]) or ({}, expected[n], actual[n])
        return {**address, "t_power": n}, exp, act
    if isinstance(expected, SymPoly) and isinstance(actual, SymPoly):
        mono = expected.first_difference(actual)
        if mono is None:
            return None
        address, exp, act = _locate(expected.coefficient(mono), actual.coefficient(mono))
        return {**address, "monomial": render_monomial(mono)}, exp, act
    if isinstance(expected, XPoly) and isinstance(actual, XPoly):
        for k in range(max(expected.degree, actual.degree) + 1):
            found = _locate(expected.coefficient(k), actual.coefficient(k))
            if found is not None:
                address, exp, act = found
                return {**address, "monomial": f"{expected.var}^{k}"}, exp, act
        return None
    if isinstance(expected, GaussianQScalar) and isinstance(actual, GaussianQScalar):
        return _locate(expected.re, actual.re) or _locate(expected.im, actual.im)
    if isinstance(expected, QScalar) and isinstance(actual, QScalar):
        difference = expected - actual
        if difference.is_zero:
            return None
        return {"q_power": difference.valuation()}, expected, actual
    if expected == actual:
        return None
    return {}, expected, actual


def locate_difference(expected: Any, actual: Any) -> Optional[Difference]:
    """None when both sides agree, else the address of their first disagreement."""
    found = _locate(expected, actual)
    if found is None:
        return None
    address, exp, act = found
    return Difference(**address, expected=_text(exp), actual=_text(act))


def run_identity(identity: Identity) -> IdentityResult:
    """Checks every case in order and stops at the first mismatch."""
    checked = 0
    try:
        for params, expected, actual in identity.check():
            checked += 1
            difference = locate_difference(expected, actual)
            if difference is not None:
                logging.info(f"{identity.suite}/{identity.name} failed at {params} {difference.address()}")
                return IdentityResult(
                    suite=identity.suite,
                    name=identity.name,
                    passed=False,
                    checked=checked,
                    params=params,
                    difference=difference,
                )
    except ArithmeticError as e:
        logging.info(f"{identity.suite}/{identity.name} raised {type(e).__name__}: {e}")
        return IdentityResult(
            suite=identity.suite,
            name=identity.name,
            passed=False,
            checked=checked,
            error=f"{type(e).__name__}: {e}",
        )
    logging.debug(f"{identity.suite}/{identity.name} passed {checked} cases")
    return IdentityResult(suite=identity.suite, name=identity.name, passed=True, checked=checked)
