"""Exploration periods per p and the diagnostic assumption checks.

All logarithms are natural. Checks never gate an experiment; they report a
pass flag together with the margin against their threshold.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from .core import BanditInstance
from .distributions import min_mean


class ScheduleInput(BaseModel):
    """Regret parameter p (0 is the Nash case), horizon and arm count."""

    model_config = ConfigDict(frozen=True)

    p: float = Field(..., le=1.0)
    T: int = Field(..., ge=2)
    k: int = Field(..., ge=2)


class ExplorationPeriod(BaseModel):
    model_config = ConfigDict(frozen=True)

    raw: float = Field(..., description="Exact formula value")
    rounds: int = Field(..., description="min(ceil(raw), T)")
    clamped: bool = Field(..., description="ceil(raw) exceeded T")
    branch: str


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    margin: float
    threshold: float


def _branch(p: float) -> str:
    if p > 0:
        return "positive"
    if p == 0:
        return "nash"
    return "negative"


def exploration_period(schedule: ScheduleInput) -> ExplorationPeriod:
    """Phase I length for the given p; clamped to T when the formula exceeds it."""
    p, T, k = schedule.p, schedule.T, schedule.k
    log_t, log_k = math.log(T), math.log(k)
    branch = _branch(p)
    if branch == "positive":
        raw = 16.0 * math.sqrt(T * k**p * log_t / log_k)
    elif branch == "nash":
        raw = 16.0 * math.sqrt(T * k * log_t / log_k)
    else:
        raw = 16.0 * math.sqrt(T * log_t / k ** abs(p))
    ceiled = math.ceil(raw)
    return ExplorationPeriod(
        raw=raw, rounds=min(ceiled, T), clamped=ceiled > T, branch=branch
    )


def min_reward_threshold(T: int, k: int) -> float:
    return 32.0 * math.sqrt(k * math.log(T) * math.sqrt(math.log(k)) / T**0.25)


def check_min_reward(instance: BanditInstance, T: int) -> CheckResult:
    """Every arm mean is at least 32 sqrt(k ln T sqrt(ln k) / T^(1/4))."""
    threshold = min_reward_threshold(T, instance.k)
    margin = min_mean(instance) - threshold
    return CheckResult(passed=margin >= 0, margin=margin, threshold=threshold)


def check_exploration_period(explore_period: int, T: int, k: int) -> CheckResult:
    """T~ >= 8 k ln(T k) + 16 sqrt(sqrt(T) / ln k)."""
    threshold = 8.0 * k * math.log(T * k) + 16.0 * math.sqrt(
        math.sqrt(T) / math.log(k)
    )
    margin = explore_period - threshold
    return CheckResult(passed=margin >= 0, margin=margin, threshold=threshold)


def check_remark_bound(
    instance: BanditInstance, T: int, explore_period: int
) -> CheckResult:
    """Every arm mean is at least 128 sqrt(k ln T / T~)."""
    if explore_period <= 0:
        threshold = math.inf
    else:
        threshold = 128.0 * math.sqrt(instance.k * math.log(T) / explore_period)
    margin = min_mean(instance) - threshold
    return CheckResult(passed=margin >= 0, margin=margin, threshold=threshold)


def side_condition(p: float, T: int, k: int) -> bool | None:
    """|p| <= ln T / (2 ln k) for p < -1; None where it does not apply."""
    if p >= -1:
        return None
    return abs(p) <= math.log(T) / (2.0 * math.log(k))
