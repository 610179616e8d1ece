import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..oracle.trees import MAX_TREE_SIZE, J_poly
from ..specializations.hermite import hermite_I, hermite_II
from ..symfun.qpowers import q_power


@dataclass(frozen=True)
class Family:
    title: str
    symbol: str
    start: int
    value: Callable[[int], Any]
    limit: Optional[int] = None


class TableHandler:

    def __init__(self, base_m: int = 1) -> None:
        self._families: Dict[str, Family] = {
            "hermite1": Family("H_n(x;q)", "H_n(x;q)", 0, hermite_I),
            "hermite2": Family("H~_n(x;q)", "\\tilde{H}_n(x;q)", 0, hermite_II),
            "jtree": Family("J_n(q)", "J_n(q)", 1, J_poly, MAX_TREE_SIZE),
            "p": Family("[p_n]", "[p_n]", 1, lambda n: q_power(n, base_m)),
        }

    def family(self, name: str) -> Family:
        if name not in self._families:
            raise UnknownFamily(f"Unknown family {name!r}, expected one of {', '.join(self._families)}")
        return self._families[name]

    def rows(self, name: str, start: Optional[int], stop: int) -> List[Tuple[int, Any]]:
        family = self.family(name)
        start = family.start if start is None else start
        if start < family.start:
            raise BadRange(f"{name} starts at n={family.start}, got --from {start}")
        if stop < start:
            raise BadRange(f"empty range {start}..{stop}")
        if family.limit is not None and stop > family.limit:
            raise BadRange(f"{name} is enumerated up to n={family.limit}, got --to {stop}")
        logging.debug(f"Tabulating {name} for n={start}..{stop}")
        return [(n, family.value(n)) for n in range(start, stop + 1)]


class UnknownFamily(ValueError):
    pass


class BadRange(ValueError):
    pass
