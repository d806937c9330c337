"""Command-line entry point: ``matroid-frontier solve|gen|bench|oracle``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import ValidationError

from agents.benchmark_agent import scaling_exponent
from agents.instance_agent import generator_params
from agents.planner import Planner
from agents.solver_agent import SolverName
from core.errors import InputError, MatroidFrontierError, VerificationError
from core.models import Settings

logger = logging.getLogger(__name__)

SOLVER_CHOICES = [name.value for name in SolverName]
FAMILY_CHOICES = ["graphic", "uniform", "partition"]


def parse_seed_range(text: str) -> range:
    """``"3"`` or an inclusive ``"a..b"`` range."""

    start, sep, stop = text.partition("..")
    try:
        first = int(start)
        last = int(stop) if sep else first
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"Bad seed range {text!r}.") from error
    if last < first:
        raise argparse.ArgumentTypeError(f"Empty seed range {text!r}.")
    return range(first, last + 1)


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"Expected integers, got {text!r}.") from error


def parse_solver_list(text: str) -> list[SolverName]:
    names = [item.strip() for item in text.split(",") if item.strip()]
    unknown = [name for name in names if name not in SOLVER_CHOICES]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"Unknown solver(s) {unknown}; choose from {', '.join(SOLVER_CHOICES)}."
        )
    return [SolverName(name) for name in names]


def _add_generator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    parser.add_argument(
        "--edge-probability", type=float, default=0.6, help="Graphic edge probability."
    )
    parser.add_argument(
        "--rank", type=int, default=None, help="Uniform/partition rank."
    )
    parser.add_argument("--blocks", type=int, default=3, help="Partition block count.")
    parser.add_argument("--cost-low", type=int, default=-5)
    parser.add_argument("--cost-high", type=int, default=9)


class FrontierArgumentParser(argparse.ArgumentParser):
    """Usage errors exit like other input errors, not with the resource-cap code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(InputError.exit_code, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = FrontierArgumentParser(
        prog="matroid-frontier",
        description="Extreme supported frontiers of bi-objective matroid bases.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG."
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    solve = verbs.add_parser("solve", help="Run one solver on an instance file.")
    solve.add_argument("file", type=Path)
    solve.add_argument("--solver", choices=SOLVER_CHOICES, default="tailored")
    solve.add_argument("--verify", action="store_true", help="Cross-check the oracle.")
    solve.add_argument("--timing", action="store_true", help="Record wall time.")
    solve.add_argument("--out", type=Path, default=None)

    gen = verbs.add_parser("gen", help="Generate a seeded random instance.")
    _add_generator_options(gen)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--n", type=int, default=6, help="Graphic vertex count.")
    gen.add_argument("--m", type=int, default=8, help="Uniform/partition size.")
    gen.add_argument("--out", type=Path, default=None)

    bench = verbs.add_parser("bench", help="Benchmark solvers over a family.")
    _add_generator_options(bench)
    bench.add_argument("--sizes", type=parse_int_list, required=True)
    bench.add_argument("--seeds", type=parse_seed_range, default=range(1, 6))
    bench.add_argument(
        "--solvers",
        type=parse_solver_list,
        default=[SolverName.TAILORED, SolverName.DICHOTOMIC],
    )
    bench.add_argument("--csv", type=Path, default=None)

    oracle = verbs.add_parser("oracle", help="Brute-force summary of an instance.")
    oracle.add_argument("file", type=Path)
    oracle.add_argument("--out", type=Path, default=None)
    return parser


def configure_logging(settings: Settings, verbosity: int) -> None:
    level: int | str = settings.log_level.upper()
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _generator_size(args: argparse.Namespace) -> dict[str, object]:
    size: dict[str, object] = {
        "edge_probability": args.edge_probability,
        "block_count": args.blocks,
        "cost_low": args.cost_low,
        "cost_high": args.cost_high,
    }
    if args.rank is not None:
        size["rank"] = args.rank
    return size


def run(args: argparse.Namespace, settings: Settings) -> int:
    planner = Planner(settings)
    if args.verb == "solve":
        report, _ = planner.solve(
            args.file, args.solver, verify=args.verify, timing=args.timing, out=args.out
        )
        if args.out is None:
            sys.stdout.write(report.to_json())
        if report.violations:
            raise VerificationError(report.violations)
        return 0
    if args.verb == "gen":
        size = _generator_size(args)
        if args.family == "graphic":
            size["vertex_count"] = args.n
        else:
            size["ground_size"] = args.m
            size.setdefault("rank", args.m // 2)
        _, path = planner.generate(
            generator_params(args.seed, args.family, **size), args.out
        )
        print(path)
        return 0
    if args.verb == "bench":
        table, path = planner.bench(
            args.family,
            args.sizes,
            args.seeds,
            args.solvers,
            csv=args.csv,
            **_generator_size(args),
        )
        for solver in args.solvers:
            try:
                logger.info(
                    "%s: independence-test scaling exponent %.3f",
                    solver.value,
                    scaling_exponent(table, solver),
                )
            except ValueError as error:
                logger.debug("No scaling fit: %s", error)
        print(path)
        return 0
    oracle_report, _ = planner.oracle(args.file, args.out)
    if args.out is None:
        sys.stdout.write(oracle_report.to_json())
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and return the process exit code."""

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as request:
        return int(request.code or 0)
    try:
        settings = Settings()
    except ValidationError as error:
        print(f"error: invalid settings: {error}", file=sys.stderr)
        return InputError.exit_code
    configure_logging(settings, args.verbose)
    try:
        return run(args, settings)
    except MatroidFrontierError as error:
        print(f"error: {error}", file=sys.stderr)
        return error.exit_code
    except FileNotFoundError as error:
        print(f"error: {error}", file=sys.stderr)
        return InputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
