"""Replicated experiment execution and aggregation.

Replications run in a process pool capped by the PMB_THREADS setting. Each
replication owns the stream derived from (base_seed, r) and results are
collected in r order, so reports do not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

from ..algorithms import ncb_index, run_explore_then_ucb, run_ncb, run_ucb1
from ..core import BanditInstance, RunTrace
from ..distributions import gen_instance
from ..regret import (
    Estimator,
    RegretEstimate,
    RegretParams,
    RegretReport,
    cross_run_means,
    is_degenerate,
    p_mean_regret_cross_run,
    p_mean_regret_per_run,
    per_run_inputs,
    summarize,
)
from ..schedule import (
    check_exploration_period,
    check_min_reward,
    check_remark_bound,
    side_condition,
)
from ..utils.config import load_settings
from ..utils.logging_config import get_logger
from .config import Algorithm, ExperimentConfig, ResolvedPeriod, resolve_period
from .seeding import STREAM_SCHEME_VERSION, instance_stream, replication_stream

logger = get_logger(__name__)


class ReplicationJob(NamedTuple):
    instance: BanditInstance
    algorithm: Algorithm
    T: int
    explore_period: int
    base_seed: int
    r: int


def run_replication(job: ReplicationJob) -> RunTrace:
    """Play replication job.r on its own stream."""
    rng = replication_stream(job.base_seed, job.r)
    match job.algorithm:
        case Algorithm.EUCB:
            trace = run_explore_then_ucb(job.instance, job.T, job.explore_period, rng)
        case Algorithm.UCB1:
            trace = run_ucb1(job.instance, job.T, rng)
        case Algorithm.NCB:
            trace = run_ncb(job.instance, job.T, job.explore_period, ncb_index, rng)
    trace.metadata.update(
        stream_scheme_version=STREAM_SCHEME_VERSION,
        base_seed=job.base_seed,
        replication=job.r,
    )
    return trace


def run_replications(
    instance: BanditInstance,
    algorithm: Algorithm,
    T: int,
    explore_period: int,
    base_seed: int,
    R: int,
    workers: int | None = None,
) -> list[RunTrace]:
    """Traces of replications 0..R-1, in replication order."""
    if workers is None:
        workers = load_settings().threads
    jobs = [
        ReplicationJob(instance, algorithm, T, explore_period, base_seed, r)
        for r in range(R)
    ]
    if workers <= 1 or R == 1:
        return [run_replication(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, R)) as pool:
        return list(pool.map(run_replication, jobs))


def _estimate(
    config: ExperimentConfig,
    instance: BanditInstance,
    traces: list[RunTrace],
    p: float,
    period: ResolvedPeriod,
) -> RegretEstimate:
    T, k = config.T, instance.k
    if config.estimator is Estimator.CROSS_RUN_MEAN_INSIDE:
        mean = p_mean_regret_cross_run(traces, instance, p)
        std = None
        degenerate_runs = int(is_degenerate(cross_run_means(traces), p))
    else:
        params = RegretParams(p=p, estimator=config.estimator)
        values = [p_mean_regret_per_run(trace, instance, params) for trace in traces]
        mean, std = summarize(values)
        degenerate_runs = sum(
            is_degenerate(per_run_inputs(trace, config.estimator), p)
            for trace in traces
        )

    min_reward = check_min_reward(instance, T)
    explore = check_exploration_period(period.rounds, T, k)
    remark = check_remark_bound(instance, T, period.rounds)
    if period.clamped:
        logger.warning(
            f"{config.algorithm.value} p={p}: exploration period "
            f"{period.raw:.1f} clamped to {period.rounds} (T={T})"
        )
    failed = [
        name
        for name, check in (
            ("min_reward", min_reward),
            ("explore_period", explore),
            ("remark", remark),
        )
        if not check.passed
    ]
    if failed:
        logger.warning(
            f"{config.algorithm.value} p={p}: assumption checks failed: "
            f"{', '.join(failed)}"
        )
    return RegretEstimate(
        p=p,
        explore_period=period.rounds,
        explore_period_raw=period.raw,
        clamped=period.clamped,
        min_reward_ok=min_reward.passed,
        explore_period_ok=explore.passed,
        remark_ok=remark.passed,
        side_condition_ok=side_condition(p, T, k),
        mean=mean,
        std=std,
        std_defined=std is not None,
        replications=len(traces),
        degenerate_runs=degenerate_runs,
        degenerate=degenerate_runs > 0,
    )


def run_experiment(
    config: ExperimentConfig, workers: int | None = None
) -> RegretReport:
    """Run config.R replications on the seeded instance and aggregate per p."""
    instance = gen_instance(config.family, instance_stream(config.instance_seed))
    logger.info(
        f"Experiment {config.algorithm.value} on {config.family.tag.value} "
        f"(k={instance.k}, T={config.T}, R={config.R}, "
        f"estimator={config.estimator.value}), mu_star={instance.mu_star:.4f}"
    )

    # p values that resolve to the same exploration period share traces
    periods = {p: resolve_period(config, p) for p in config.p_grid}
    traces_by_period: dict[int, list[RunTrace]] = {}
    for p in config.p_grid:
        rounds = periods[p].rounds
        if rounds not in traces_by_period:
            logger.debug(f"Running {config.R} replications with T~={rounds}")
            traces_by_period[rounds] = run_replications(
                instance,
                config.algorithm,
                config.T,
                rounds,
                config.base_seed,
                config.R,
                workers,
            )

    estimates = [
        _estimate(config, instance, traces_by_period[periods[p].rounds], p, periods[p])
        for p in config.p_grid
    ]
    logger.info(f"Experiment {config.algorithm.value} finished")
    return RegretReport(
        family=config.family.tag.value,
        algorithm=config.algorithm.value,
        estimator=config.estimator,
        T=config.T,
        k=instance.k,
        R=config.R,
        mu_star=instance.mu_star,
        instance_seed=config.instance_seed,
        base_seed=config.base_seed,
        stream_scheme_version=STREAM_SCHEME_VERSION,
        estimates=estimates,
    )
