#!/usr/bin/env python3
"""
Command-line entry point.

Usage:
    mhdforms verify-identities [--config mhdforms.toml] [--seed 7]
    mhdforms simulate --preset small-taylor-green --grid 32 --mesh-nodes 128
    mhdforms decay --n 3 --out results/
    mhdforms scaling-check --horizon 0.5

Exit codes: 0 success, 1 identity failure, 2 solver convergence failure,
64 configuration or usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import NoReturn, Optional, Sequence

from mhdforms import __version__
from mhdforms.cli.commands import (
    COMMANDS,
    EXIT_CONFIG_ERROR,
    EXIT_SOLVER_FAILURE,
)
from mhdforms.cli.reporting import RunManifest
from mhdforms.config import ConfigError, load_config
from mhdforms.exceptions import (
    DimensionMismatchError,
    ExponentRelationError,
    GradeError,
    GridMismatchError,
    HorizonUnderflowError,
    IndexRangeError,
    MeshError,
    NegativeTimeError,
    NonContractionError,
    NumericalConsistencyError,
    SolverConvergenceError,
    UnitNormError,
)
from mhdforms.observability import LOG_FORMATS, bind_run_context, configure_logging, get_logger

logger = get_logger(__name__)

# Raised by bad configuration or input files; all map to exit 64.
INPUT_ERRORS = (
    ConfigError,
    DimensionMismatchError,
    ExponentRelationError,
    FileNotFoundError,
    GradeError,
    GridMismatchError,
    IndexRangeError,
    MeshError,
    NegativeTimeError,
    UnitNormError,
)

# flag destination -> dotted config key
FLAG_KEYS: dict[str, str] = {
    "seed": "solver.seed",
    "out": "output_dir",
    "n": "solver.dimension",
    "grid": "solver.grid_points",
    "period": "solver.period",
    "horizon": "solver.horizon",
    "mesh_nodes": "solver.mesh_nodes",
    "grading": "solver.grading",
    "tol": "solver.tolerance",
    "max_iter": "solver.max_iterations",
    "preset": "preset",
    "log_level": "logging.level",
    "log_format": "logging.format",
}


class UsageError(ConfigError):
    """Command-line usage error."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _seed(value: str) -> int:
    seed = int(value)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {value}")
    return seed


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="TOML or YAML config file")
    common.add_argument("--seed", type=_seed, default=None, help="Master random seed")
    common.add_argument("--out", type=str, default=None, help="Output directory")
    common.add_argument("--n", type=int, default=None, help="Torus dimension")
    common.add_argument("--grid", type=int, default=None, help="Grid points per axis (power of two)")
    common.add_argument("--period", type=float, default=None, help="Torus period L")
    common.add_argument("--horizon", type=float, default=None, help="Time horizon T")
    common.add_argument("--mesh-nodes", dest="mesh_nodes", type=int, default=None, help="Time mesh intervals M")
    common.add_argument("--grading", type=float, default=None, help="Mesh grading exponent")
    common.add_argument("--tol", type=float, default=None, help="Picard tolerance")
    common.add_argument("--max-iter", dest="max_iter", type=int, default=None, help="Picard iteration cap")
    common.add_argument("--preset", type=str, default=None, help="Initial-data preset name")
    common.add_argument("--log-level", dest="log_level", type=str, default=None, help="Log level")
    common.add_argument("--log-format", dest="log_format", choices=LOG_FORMATS, default=None)

    parser = _Parser(prog="mhdforms", description="Exterior-calculus MHD on the periodic torus.")
    parser.add_argument("--version", action="version", version=f"mhdforms {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("verify-identities", parents=[common], help="Run the exact and spectral identity suites")
    sub.add_parser("simulate", parents=[common], help="Horizon search and Picard solve")
    sub.add_parser("decay", parents=[common], help="Semigroup decay ratio curves")
    sub.add_parser("scaling-check", parents=[common], help="Scaling covariance defects")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _overrides(args: argparse.Namespace) -> dict[str, object]:
    return {key: getattr(args, dest) for dest, key in FLAG_KEYS.items()}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
        config = load_config(args.config, _overrides(args))
        configure_logging(
            level=config.logging.level,
            format=config.logging.format,
            log_file=config.logging.file,
        )
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    command = COMMANDS[args.command]
    with bind_run_context(command=args.command) as run_id:
        manifest = RunManifest.start(
            args.command, config.model_dump(mode="json"), config.solver.seed, run_id=run_id
        )
        logger.info("command_started", output_dir=str(config.output_dir), config_hash=manifest.config_hash)
        try:
            code = command(config, manifest)
        except INPUT_ERRORS as exc:
            logger.error("configuration_error", error=str(exc))
            print(f"configuration error: {exc}", file=sys.stderr)
            code = EXIT_CONFIG_ERROR
        except NonContractionError as exc:
            logger.error("non_contraction", error=str(exc), distances=exc.distances)
            print(f"solver did not contract: {exc}", file=sys.stderr)
            code = EXIT_SOLVER_FAILURE
        except HorizonUnderflowError as exc:
            logger.error("horizon_underflow", error=str(exc), horizons=exc.horizons[-3:])
            print(f"horizon search failed: {exc}", file=sys.stderr)
            code = EXIT_SOLVER_FAILURE
        except NumericalConsistencyError as exc:
            logger.error("numerical_inconsistency", quantity=exc.quantity, defect=exc.defect)
            print(f"numerical consistency check failed: {exc}", file=sys.stderr)
            code = EXIT_SOLVER_FAILURE
        except SolverConvergenceError as exc:
            logger.error("solver_failure", error=str(exc))
            print(f"solver failure: {exc}", file=sys.stderr)
            code = EXIT_SOLVER_FAILURE
        manifest.finish(code, config.output_dir)
        logger.info("command_finished", exit_code=code)
    return code


if __name__ == "__main__":
    sys.exit(main())
