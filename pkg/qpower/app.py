import asyncio
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, TextIO, Type

import aiofiles
from loguru import logger

from .handlers.compute_handler import ComputeHandler, ComputeRequest
from .handlers.rendering import render_report, render_table, render_value
from .handlers.table_handler import TableHandler
from .handlers.utils import SuiteClass, run_identity
from .handlers.verify_handler import SUITES
from .models.report import SuiteReport, VerificationReport
from .models.run_config import RunConfig
from .oracle.cache import OracleCache
from .symfun.qpowers import PowerSource

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CRASH = 3


class InterceptHandler(logging.Handler):
    """Hands standard-library log records to loguru, keeping the caller's location."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # skip the logging module's own frames
        frame, depth = logging.currentframe(), 2
        while frame is not None and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def setup_logging(log_level: str, json_logs: bool):
    logging.root.handlers = [InterceptHandler()]
    logging.root.setLevel(log_level.upper())

    for name in logging.root.manager.loggerDict.keys():
        logging.getLogger(name).handlers = []
        logging.getLogger(name).propagate = True

    # stdout carries results only
    logger.configure(handlers=[{"sink": sys.stderr, "serialize": json_logs, "level": log_level.upper()}])


class App:

    def __init__(
        self,
        config: RunConfig,
        suites: Optional[Dict[str, Type[SuiteClass]]] = None,
        powers: Optional[PowerSource] = None,
        stdout: Optional[TextIO] = None,
        workers: Optional[int] = None,
    ) -> None:
        self._config = config
        self._suites = suites or SUITES
        self._powers = powers
        self._stdout = stdout
        self._executor = ThreadPoolExecutor(workers)
        self._compute_handler = ComputeHandler()
        self._table_handler = TableHandler(config.base_m)
        OracleCache.set_cache_dir(config.cache_dir)

    @property
    def config(self) -> RunConfig:
        return self._config

    def _select(self, suite: str) -> List[str]:
        if suite == "all":
            return list(self._suites)
        if suite not in self._suites:
            raise UnknownSuite(f"Unknown suite {suite!r}, expected one of {', '.join(self._suites)} or all")
        return [suite]

    async def verify(self, suite: str) -> int:
        instances = [self._suites[name](self._config, self._powers) for name in self._select(suite)]
        identities = [identity for instance in instances for identity in instance.identities]
        logging.info(f"Running {len(identities)} identities from {len(instances)} suites, seed {self._config.seed}")
        loop = asyncio.get_running_loop()
        # gather keeps submission order, whatever order the threads finish in
        results = await asyncio.gather(
            *[loop.run_in_executor(self._executor, run_identity, identity) for identity in identities]
        )
        report = VerificationReport(
            settings=self._config,
            suites=[
                SuiteReport(suite=instance.name, results=[r for r in results if r.suite == instance.name])
                for instance in instances
            ],
        )
        await self.emit(render_report(report, self._config.output_format))
        if not report.passed:
            logging.warning(f"{len(report.failures)} identities failed")
            return EXIT_FAILED
        return EXIT_OK

    async def compute(self, obj: str, request: ComputeRequest) -> int:
        loop = asyncio.get_running_loop()
        value = await loop.run_in_executor(self._executor, self._compute_handler.compute, obj, request)
        await self.emit(render_value(value, self._config.output_format))
        return EXIT_OK

    async def table(self, family: str, start: Optional[int] = None, stop: Optional[int] = None) -> int:
        stop = self._config.max_n if stop is None else stop
        loop = asyncio.get_running_loop()
        rows = await loop.run_in_executor(self._executor, self._table_handler.rows, family, start, stop)
        details = self._table_handler.family(family)
        await self.emit(render_table(details.title, details.symbol, rows, self._config.output_format))
        return EXIT_OK

    async def emit(self, text: str):
        if self._config.out:
            async with aiofiles.open(self._config.out, 'w', encoding='utf-8') as f:
                await f.write(text)
            logging.info(f"Wrote output to {self._config.out}")
            return
        stream = self._stdout or sys.stdout
        stream.write(text)
        stream.flush()

    def cleanup(self):
        self._executor.shutdown(wait=True)


class UnknownSuite(ValueError):
    pass
