import logging
from typing import Any, Callable, Dict, Optional

from ..oracle.trees import J_poly
from ..specializations.hermite import hermite_I, hermite_II
from ..symfun.combinatorics import Partition, q_z
from ..symfun.qpowers import P_series, partition_expansion, q_power, q_power_r


class ComputeRequest:

    def __init__(
        self,
        n: Optional[int] = None,
        r: Optional[int] = None,
        partition: Optional[str] = None,
        base_m: int = 1,
        t_order: int = 8,
    ) -> None:
        self.n = n
        self.r = r
        self.partition = partition
        self.base_m = base_m
        self.t_order = t_order

    def require(self, field: str, obj: str) -> Any:
        value = getattr(self, field)
        if value is None:
            raise MissingParameter(f"compute {obj} needs --{field.replace('_', '-')}")
        return value


class ComputeHandler:
    """Maps each `compute` object to the library call that produces it."""

    def __init__(self) -> None:
        self._objects: Dict[str, Callable[[ComputeRequest], Any]] = {
            "p": lambda req: q_power(req.require("n", "p"), req.base_m),
            "pr": lambda req: q_power_r(req.require("n", "pr"), req.require("r", "pr"), req.base_m),
            "zq": lambda req: q_z(Partition.parse(req.require("partition", "zq")), req.base_m),
            "e-expansion": lambda req: partition_expansion(req.require("n", "e-expansion"), req.base_m, "e"),
            "h-expansion": lambda req: partition_expansion(req.require("n", "h-expansion"), req.base_m, "h"),
            "hermite1": lambda req: hermite_I(req.require("n", "hermite1")),
            "hermite2": lambda req: hermite_II(req.require("n", "hermite2")),
            "jtree": lambda req: J_poly(req.require("n", "jtree")),
            "pseries": lambda req: P_series(req.t_order, req.base_m),
        }

    @property
    def objects(self):
        return list(self._objects)

    def compute(self, obj: str, request: ComputeRequest) -> Any:
        if obj not in self._objects:
            raise UnknownObject(f"Unknown object {obj!r}, expected one of {', '.join(self._objects)}")
        logging.debug(f"Computing {obj} with n={request.n}, r={request.r}, m={request.base_m}")
        return self._objects[obj](request)


class MissingParameter(ValueError):
    pass


class UnknownObject(ValueError):
    pass
