from typing import Any, Dict, List, Optional

from .base_model import BaseModel
from .run_config import RunConfig


class Difference(BaseModel):
    """Where two sides first disagree: the power of t, the q-adic order of
    the differing coefficient and the monomial (e-basis or x) it sits on."""
    t_power: Optional[int] = None
    q_power: Optional[int] = None
    monomial: Optional[str] = None
    expected: str
    actual: str

    def address(self) -> str:
        parts = [
            f"t^{self.t_power}" if self.t_power is not None else "t^-",
            f"q^{self.q_power}" if self.q_power is not None else "q^-",
            self.monomial if self.monomial is not None else "-",
        ]
        return "(" + ", ".join(parts) + ")"


class IdentityResult(BaseModel):
    suite: str
    name: str
    passed: bool
    checked: int = 0
    params: Dict[str, Any] = {}
    difference: Optional[Difference] = None
    error: Optional[str] = None


class SuiteReport(BaseModel):
    suite: str
    results: List[IdentityResult] = []

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


class VerificationReport(BaseModel):
    settings: RunConfig
    suites: List[SuiteReport] = []

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def failures(self) -> List[IdentityResult]:
        return [r for s in self.suites for r in s.results if not r.passed]
