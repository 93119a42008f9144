"""Generalized-mean welfare and p-mean regret estimators.

For p != 0 (and p != 1) the power mean is evaluated in the log domain around
the largest exponent: with a_i = p ln v_i and m = max a_i,

    ln M = (m + log1p(mean(expm1(a_i - m)))) / p

which never overflows for large |p| and stays accurate as p -> 0. Inputs
containing zeros at p <= 0 return 0, the limit of the generalized mean.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .core import BanditInstance, RunTrace
from .utils.exceptions import EstimatorArityError, parameter_out_of_domain


class Estimator(str, Enum):
    PER_RUN_TRUE_MEAN = "per-run-true-mean"
    PER_RUN_REALIZED_REWARD = "per-run-realized-reward"
    CROSS_RUN_MEAN_INSIDE = "cross-run-mean-inside"


PER_RUN_ESTIMATORS = (Estimator.PER_RUN_TRUE_MEAN, Estimator.PER_RUN_REALIZED_REWARD)

# Below this |p| the power mean equals the geometric mean to double precision
NEAR_ZERO_P = 1e-100


class RegretParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: float = Field(..., le=1.0, description="0 means geometric (Nash)")
    estimator: Estimator = Estimator.PER_RUN_TRUE_MEAN


class RegretEstimate(BaseModel):
    """Aggregated regret for one p value, with schedule diagnostics."""

    p: float
    explore_period: int
    explore_period_raw: float | None = None
    clamped: bool = False
    min_reward_ok: bool
    explore_period_ok: bool
    remark_ok: bool
    side_condition_ok: bool | None = None
    mean: float
    std: float | None = None
    std_defined: bool
    replications: int = Field(..., ge=1)
    degenerate_runs: int = 0
    degenerate: bool = False


class RegretReport(BaseModel):
    """All p estimates of one experiment."""

    family: str
    algorithm: str
    estimator: Estimator
    T: int
    k: int
    R: int = Field(..., ge=1)
    mu_star: float
    instance_seed: int
    base_seed: int
    stream_scheme_version: int
    estimates: list[RegretEstimate]


def _as_values(values: Sequence[float] | np.ndarray) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64).ravel()
    if v.size == 0:
        raise parameter_out_of_domain("values", [], "p-mean of an empty list")
    if np.isnan(v).any() or (v < 0).any():
        raise parameter_out_of_domain("values", "...", "all values must be >= 0")
    return v


def is_degenerate(values: Sequence[float] | np.ndarray, p: float) -> bool:
    """True when the zero-limit convention decides the p-mean."""
    return p <= 0 and bool((np.asarray(values) == 0).any())


def p_mean(values: Sequence[float] | np.ndarray, p: float) -> float:
    """Generalized (power) mean of non-negative values."""
    if math.isnan(p):
        raise parameter_out_of_domain("p", p, "p must be a number")
    v = _as_values(values)
    n = v.size
    if p < NEAR_ZERO_P and (v == 0).any():
        return 0.0
    if p == 1:
        return math.fsum(v.tolist()) / n
    if abs(p) < NEAR_ZERO_P:
        return math.exp(math.fsum(np.log(v).tolist()) / n)

    positive = v[v > 0]
    if positive.size == 0:
        return 0.0
    a = p * np.log(positive)
    m = float(a.max())
    # zeros (p > 0 only) contribute exp(-inf) = 0, i.e. expm1 = -1 each
    shifted = math.fsum(np.expm1(a - m).tolist()) - (n - positive.size)
    log_mean = (m + math.log1p(shifted / n)) / p
    return math.exp(log_mean)


def per_run_inputs(trace: RunTrace, estimator: Estimator) -> np.ndarray:
    """Per-round values x_t the per-run estimators average."""
    if estimator is Estimator.PER_RUN_TRUE_MEAN:
        return trace.true_means
    if estimator is Estimator.PER_RUN_REALIZED_REWARD:
        return trace.rewards
    raise EstimatorArityError(
        message="cross-run estimator needs several traces; use p_mean_regret_cross_run",
        error_code="ESTIMATOR_ARITY",
        context={"estimator": estimator.value},
    )


def _check_instance(trace: RunTrace, instance: BanditInstance) -> None:
    if trace.k != instance.k:
        raise EstimatorArityError(
            message=f"Trace has {trace.k} arms but the instance has {instance.k}",
            error_code="ESTIMATOR_ARITY",
            context={"trace_k": trace.k, "instance_k": instance.k},
        )


def p_mean_regret_per_run(
    trace: RunTrace, instance: BanditInstance, params: RegretParams
) -> float:
    """mu_star minus the p-mean of one run's pulled means or realized rewards."""
    _check_instance(trace, instance)
    values = per_run_inputs(trace, params.estimator)
    return instance.mu_star - p_mean(values, params.p)


def cross_run_means(traces: Sequence[RunTrace]) -> np.ndarray:
    """Per-round average of the pulled true means across replications."""
    if len(traces) < 2:
        raise EstimatorArityError(
            message="cross-run estimator needs at least 2 traces",
            error_code="ESTIMATOR_ARITY",
            context={"traces": len(traces)},
        )
    horizons = {trace.horizon for trace in traces}
    if len(horizons) != 1:
        raise EstimatorArityError(
            message="all traces must share one horizon",
            error_code="ESTIMATOR_ARITY",
            context={"horizons": sorted(horizons)},
        )
    return np.stack([trace.true_means for trace in traces]).mean(axis=0)


def p_mean_regret_cross_run(
    traces: Sequence[RunTrace], instance: BanditInstance, p: float
) -> float:
    """mu_star minus the p-mean of the round-wise expected pulled mean."""
    if p > 1:
        raise parameter_out_of_domain("p", p, "p must be <= 1")
    for trace in traces:
        _check_instance(trace, instance)
    return instance.mu_star - p_mean(cross_run_means(traces), p)


def p_mean_regret(
    runs: RunTrace | Sequence[RunTrace],
    instance: BanditInstance,
    params: RegretParams,
) -> float:
    """Dispatch to the per-run or cross-run estimator named in params."""
    if params.estimator is Estimator.CROSS_RUN_MEAN_INSIDE:
        traces = [runs] if isinstance(runs, RunTrace) else list(runs)
        return p_mean_regret_cross_run(traces, instance, params.p)
    if not isinstance(runs, RunTrace):
        raise EstimatorArityError(
            message="per-run estimators take a single trace",
            error_code="ESTIMATOR_ARITY",
            context={"estimator": params.estimator.value},
        )
    return p_mean_regret_per_run(runs, instance, params)


def nash_regret(
    runs: RunTrace | Sequence[RunTrace],
    instance: BanditInstance,
    estimator: Estimator | None = None,
) -> float:
    """p = 0 alias: cross-run for a list of traces, per-run for a single one."""
    if estimator is None:
        estimator = (
            Estimator.PER_RUN_TRUE_MEAN
            if isinstance(runs, RunTrace)
            else Estimator.CROSS_RUN_MEAN_INSIDE
        )
    return p_mean_regret(runs, instance, RegretParams(p=0.0, estimator=estimator))


def summarize(values: Sequence[float]) -> tuple[float, float | None]:
    """Mean and sample standard deviation (None when undefined)."""
    arr = np.asarray(values, dtype=np.float64)
    mean = float(arr.mean())
    if arr.size < 2:
        return mean, None
    return mean, float(arr.std(ddof=1))
