import asyncio
import logging
import sys
from typing import List, Literal, Optional, Tuple

import pydantic_argparse
from pydantic import BaseModel, Field

from ._version import __version__
from .app import EXIT_CRASH, EXIT_USAGE, App, setup_logging
from .handlers.compute_handler import ComputeRequest
from .models.run_config import RunConfig

Format = Literal['text', 'json', 'latex']


class ComputeOptions(BaseModel):
    n: Optional[int] = Field(description="Index n")
    r: Optional[int] = Field(description="Exponent r of [p_n^(r)]")
    partition: Optional[str] = Field(description="Partition as comma-separated parts, e.g. 3,1,1")
    base_m: Optional[int] = Field(description="Base exponent m of psi = q^m")
    t_order: Optional[int] = Field(description="Truncation order in t (pseries)")
    format: Optional[Format] = Field(description="Output format")
    out: Optional[str] = Field(description="Write the output to this file instead of stdout")


class ComputeCommand(BaseModel):
    p: Optional[ComputeOptions] = Field(description="[p_n] in the e-basis")
    pr: Optional[ComputeOptions] = Field(description="[p_n^(r)] in the e-basis")
    zq: Optional[ComputeOptions] = Field(description="[z_lambda]_q of a partition")
    e_expansion: Optional[ComputeOptions] = Field(alias="e-expansion", description="e_n over the [p_lambda]")
    h_expansion: Optional[ComputeOptions] = Field(alias="h-expansion", description="h_n over the [p_lambda]")
    hermite1: Optional[ComputeOptions] = Field(description="Discrete q-Hermite I polynomial H_n(x;q)")
    hermite2: Optional[ComputeOptions] = Field(description="Discrete q-Hermite II polynomial")
    jtree: Optional[ComputeOptions] = Field(description="Tree inversion enumerator J_n(q)")
    pseries: Optional[ComputeOptions] = Field(description="P_q(t) = sum [p_n] t^n / [n]")


class VerifyOptions(BaseModel):
    max_n: Optional[int] = Field(description="Largest n an identity is checked for")
    t_order: Optional[int] = Field(description="Truncation order N in t")
    q_order: Optional[int] = Field(description="Truncation order M in q")
    base_m: Optional[int] = Field(description="Base exponent m of psi = q^m")
    seed: Optional[int] = Field(description="Seed of the randomized checks")
    format: Optional[Format] = Field(description="Report format")
    out: Optional[str] = Field(description="Write the report to this file instead of stdout")
    cache_dir: Optional[str] = Field(description="Directory of the tree enumerator cache")


class VerifyCommand(BaseModel):
    girard: Optional[VerifyOptions] = Field(description="Girard-Newton q-identities")
    determinants: Optional[VerifyOptions] = Field(description="Determinant dualities")
    partition_expansions: Optional[VerifyOptions] = Field(
        alias="partition-expansions", description="Partition expansions of e_n and h_n"
    )
    exp_formulas: Optional[VerifyOptions] = Field(alias="exp-formulas", description="q-exponential formulas")
    link: Optional[VerifyOptions] = Field(description="Base change link between the compositions")
    products: Optional[VerifyOptions] = Field(description="Infinite q-products")
    qbinomial: Optional[VerifyOptions] = Field(description="q-binomial theorem")
    trees: Optional[VerifyOptions] = Field(description="Tree inversion enumerators")
    hermite: Optional[VerifyOptions] = Field(description="Discrete q-Hermite polynomials")
    all_: Optional[VerifyOptions] = Field(alias="all", description="Every suite")


class TableOptions(BaseModel):
    from_: Optional[int] = Field(alias="from", description="First n (default: the family's first index)")
    to: Optional[int] = Field(description="Last n (default: max-n from the config)")
    base_m: Optional[int] = Field(description="Base exponent m of psi = q^m")
    format: Optional[Format] = Field(description="Output format")
    out: Optional[str] = Field(description="Write the table to this file instead of stdout")
    cache_dir: Optional[str] = Field(description="Directory of the tree enumerator cache")


class TableCommand(BaseModel):
    hermite1: Optional[TableOptions] = Field(description="H_n(x;q)")
    hermite2: Optional[TableOptions] = Field(description="Discrete q-Hermite II polynomials")
    jtree: Optional[TableOptions] = Field(description="J_n(q)")
    p: Optional[TableOptions] = Field(description="[p_n] in the e-basis")


class Arguments(BaseModel):
    compute: Optional[ComputeCommand] = Field(description="Compute one object")
    verify: Optional[VerifyCommand] = Field(description="Run verification suites")
    table: Optional[TableCommand] = Field(description="Tabulate a polynomial family")

    config_file: Optional[str] = Field(alias="config", description="YAML file with run defaults")
    log_level: str = Field(default="WARNING", description="Log level")
    json_logs: bool = Field(default=False, description="Serialize log records as JSON")


def selected(command: BaseModel) -> Tuple[str, BaseModel]:
    """The (alias, options) of the one subcommand that was given."""
    for name, field in command.__fields__.items():
        options = getattr(command, name)
        if options is not None:
            return field.alias, options
    raise ValueError(f"{type(command).__name__} needs a subcommand")


async def dispatch(args: Arguments) -> int:
    if args.compute is not None:
        obj, opts = selected(args.compute)
        config = RunConfig.load(
            args.config_file, base_m=opts.base_m, t_order=opts.t_order, output_format=opts.format, out=opts.out
        )
        request = ComputeRequest(opts.n, opts.r, opts.partition, config.base_m, config.t_order)
        app = App(config)
        try:
            return await app.compute(obj, request)
        finally:
            app.cleanup()

    if args.verify is not None:
        suite, opts = selected(args.verify)
        config = RunConfig.load(
            args.config_file,
            max_n=opts.max_n,
            t_order=opts.t_order,
            q_order=opts.q_order,
            base_m=opts.base_m,
            seed=opts.seed,
            output_format=opts.format,
            out=opts.out,
            cache_dir=opts.cache_dir,
        )
        app = App(config)
        try:
            return await app.verify(suite)
        finally:
            app.cleanup()

    if args.table is not None:
        family, opts = selected(args.table)
        config = RunConfig.load(
            args.config_file, base_m=opts.base_m, output_format=opts.format, out=opts.out, cache_dir=opts.cache_dir
        )
        app = App(config)
        try:
            return await app.table(family, opts.from_, opts.to)
        finally:
            app.cleanup()

    raise ValueError("expected one of the commands compute, verify or table")


async def main(argv: Optional[List[str]] = None) -> int:
    parser = pydantic_argparse.ArgumentParser(
        model=Arguments,
        prog="qpower",
        description="Exact q-power symmetric functions and their identities",
        version=__version__
    )
    args = parser.parse_typed_args(argv)
    setup_logging(args.log_level, args.json_logs)

    try:
        return await dispatch(args)
    except (ValueError, ArithmeticError) as e:
        # pydantic's ValidationError is a ValueError
        logging.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except Exception as e:
        logging.error("qpower crashed", exc_info=e)
        return EXIT_CRASH


def run():
    sys.exit(asyncio.run(main()))


if __name__ == '__main__':
    run()
