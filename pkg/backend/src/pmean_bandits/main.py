#!/usr/bin/env python3
"""
Command-line entry point for the p-mean bandit simulator.

Subcommands:
- run:   one (family, algorithm) experiment over a list of p values
- table: the full family x algorithm x p grid
- check: schedule and assumption diagnostics for a seeded instance

Experiment parameters come from flags only. PMB_THREADS caps the number of
replication worker processes; output is identical for any value.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TextIO

from .bounds import explicit_nash_bound, explicit_positive_bound, table1_bound
from .distributions import FamilyTag, InstanceFamily, gen_instance, min_mean
from .harness.config import (
    DEFAULT_P_GRID,
    DEFAULT_REPLICATIONS,
    Algorithm,
    ExperimentConfig,
    default_horizon,
)
from .harness.execution import run_experiment
from .harness.seeding import instance_stream
from .harness.table import TableSeeds, reproduce_table
from .output import rows_from_report, write_rows
from .regret import Estimator
from .schedule import (
    ScheduleInput,
    check_exploration_period,
    check_min_reward,
    check_remark_bound,
    exploration_period,
    side_condition,
)
from .utils.exceptions import ConfigurationError, PMeanBanditError
from .utils.logging_config import get_logger, set_console_level

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

ALGORITHM_FLAGS = {"eucb": Algorithm.EUCB, "ucb1": Algorithm.UCB1, "ncb": Algorithm.NCB}


def p_list(text: str) -> tuple[float, ...]:
    """Parse a comma separated list of p values, each at most 1."""
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("at least one p value is required")
    for p in values:
        if not p <= 1.0:
            raise argparse.ArgumentTypeError(f"p={p} is out of range (p <= 1)")
    return values


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def arm_count(text: str) -> int:
    value = positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"at least 2 arms are required: {value}")
    return value


def seed(text: str) -> int:
    try:
        if text.strip().lower().startswith("0x"):
            value = int(text, 16)
        else:
            value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer seed: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"seeds are non-negative: {value}")
    return value


@contextmanager
def open_output(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


def _horizon(args: argparse.Namespace, tag: FamilyTag) -> int:
    return args.T if args.T is not None else default_horizon(tag)


def cmd_run(args: argparse.Namespace) -> int:
    """Run one experiment and write one row per p."""
    tag = FamilyTag(args.family)
    config = ExperimentConfig.create(
        family=InstanceFamily(tag=tag, k=args.k),
        algorithm=ALGORITHM_FLAGS[args.alg],
        T=_horizon(args, tag),
        R=args.R,
        p_grid=args.p,
        base_seed=args.seed,
        instance_seed=args.instance_seed,
        estimator=Estimator(args.estimator),
        explore_period=args.explore_period,
    )
    report = run_experiment(config)
    with open_output(args.out) as stream:
        write_rows(rows_from_report(report), stream, args.format)
    logger.info(f"Wrote {len(report.estimates)} rows to {args.out}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    """Run the full grid and write it in table order."""
    horizons = None
    if args.T is not None:
        horizons = {tag: args.T for tag in FamilyTag}
    result = reproduce_table(
        p_grid=args.p,
        seeds=TableSeeds(instance_seed=args.instance_seed, base_seed=args.seed),
        R=args.R,
        estimator=Estimator(args.estimator),
        k=args.k,
        horizons=horizons,
    )
    with open_output(args.out) as stream:
        write_rows(result.rows, stream, args.format)
    logger.info(f"Wrote {len(result.rows)} rows to {args.out}")
    return EXIT_OK


def check_report(family: InstanceFamily, T: int, instance_seed: int, p_grid) -> dict:
    """Diagnostics for the seeded instance at each p, as plain JSON data."""
    if T < 2:
        raise ConfigurationError(
            message=f"T={T} must be at least 2",
            error_code="CONFIG_INVALID",
            context={"field": "T", "value": str(T)},
        )
    instance = gen_instance(family, instance_stream(instance_seed))
    k = instance.k
    min_reward = check_min_reward(instance, T)
    per_p = []
    for p in p_grid:
        period = exploration_period(ScheduleInput(p=p, T=T, k=k))
        per_p.append(
            {
                "p": p + 0.0,
                "explore_period": period.model_dump(),
                "explore_period_check": check_exploration_period(
                    period.rounds, T, k
                ).model_dump(),
                "remark": check_remark_bound(instance, T, period.rounds).model_dump(),
                "side_condition": side_condition(p, T, k),
                "table1_bound": table1_bound(p, k, T).model_dump(),
                "explicit_positive_bound": (
                    explicit_positive_bound(p, k, T) if p > 0 else None
                ),
            }
        )
    return {
        "family": family.tag.value,
        "k": k,
        "T": T,
        "instance_seed": instance_seed,
        "mu_star": instance.mu_star,
        "min_mean": min_mean(instance),
        "min_reward": min_reward.model_dump(),
        "explicit_nash_bound": explicit_nash_bound(k, T),
        "checks": per_p,
    }


def cmd_check(args: argparse.Namespace) -> int:
    """Print diagnostics; failed checks do not change the exit code."""
    tag = FamilyTag(args.family)
    report = check_report(
        InstanceFamily(tag=tag, k=args.k),
        _horizon(args, tag),
        args.instance_seed,
        args.p,
    )
    with open_output(args.out) as stream:
        stream.write(json.dumps(report, indent=2))
        stream.write("\n")
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, *, family: bool = True) -> None:
    if family:
        parser.add_argument(
            "--family",
            choices=[tag.value for tag in FamilyTag],
            default=FamilyTag.BERNOULLI.value,
            help="Instance family (default: bernoulli)",
        )
    parser.add_argument(
        "--k", type=arm_count, default=50, help="Number of arms (default: 50)"
    )
    parser.add_argument(
        "--T",
        type=positive_int,
        default=None,
        help="Horizon (default: 100000 for bernoulli, 20000 otherwise)",
    )
    parser.add_argument(
        "--p",
        type=p_list,
        default=DEFAULT_P_GRID,
        help="Comma separated p values, each <= 1 (default: 1,0.5,0,-0.5,-1,-2)",
    )
    parser.add_argument(
        "--instance-seed",
        type=seed,
        default=0,
        help="Seed of the instance generator (default: 0)",
    )
    parser.add_argument(
        "--out", default="-", help="Output path, '-' for stdout (default: -)"
    )


def _add_experiment(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--R",
        type=positive_int,
        default=DEFAULT_REPLICATIONS,
        help=f"Replications (default: {DEFAULT_REPLICATIONS})",
    )
    parser.add_argument(
        "--seed", type=seed, default=0, help="Base seed of the replication streams"
    )
    parser.add_argument(
        "--estimator",
        choices=[e.value for e in Estimator],
        default=Estimator.PER_RUN_REALIZED_REWARD.value,
        help="Regret estimator (default: per-run-realized-reward)",
    )
    parser.add_argument(
        "--format", choices=["csv", "json"], default="csv", help="Output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmean-bandits",
        description="p-mean regret experiments for stochastic multi-armed bandits",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  pmean-bandits run --family triangular --alg eucb --R 5 --p 1,-1
  pmean-bandits run --alg ucb1 --T 20000 --format json --out r.json
  pmean-bandits table --R 2 --out table.csv
  pmean-bandits check --k 50 --T 20000 --p 0
  PMB_THREADS=1 pmean-bandits table      # serial replications
        """,
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Console logging level (default: PMB_LOG_LEVEL or INFO)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Run one experiment")
    _add_common(run)
    _add_experiment(run)
    run.add_argument(
        "--alg", choices=sorted(ALGORITHM_FLAGS), default="eucb", help="Algorithm"
    )
    run.add_argument(
        "--explore-period",
        type=positive_int,
        default=None,
        help="Fixed exploration period instead of the per-p schedule",
    )
    run.set_defaults(handler=cmd_run)

    table = sub.add_parser("table", help="Run the full family x algorithm x p grid")
    _add_common(table, family=False)
    _add_experiment(table)
    table.set_defaults(handler=cmd_table)

    check = sub.add_parser("check", help="Print schedule and assumption diagnostics")
    _add_common(check)
    check.set_defaults(handler=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse flags, dispatch and map failures to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        set_console_level(args.log_level)

    try:
        return args.handler(args)
    except ConfigurationError as e:
        logger.error(e.message)
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except PMeanBanditError as e:
        logger.error(f"{e.__class__.__name__}: {e.message}")
        print(f"error: {e.message}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as e:
        logger.error(f"Unexpected failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
