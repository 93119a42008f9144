"""Experiment configuration and per-p exploration-period resolution."""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from ..distributions import DEFAULT_HORIZONS, FamilyTag, InstanceFamily
from ..regret import Estimator
from ..schedule import ScheduleInput, exploration_period
from ..utils.exceptions import invalid_config
from .seeding import MASK64

DEFAULT_P_GRID = (1.0, 0.5, 0.0, -0.5, -1.0, -2.0)
DEFAULT_REPLICATIONS = 30
# Smallest exploration period the runners accept
MIN_EXPLORE_PERIOD = 2


class Algorithm(str, Enum):
    EUCB = "EUCB"
    UCB1 = "UCB1"
    NCB = "NCB"


class ExperimentConfig(BaseModel):
    """One (instance family, algorithm) experiment over a grid of p values."""

    model_config = ConfigDict(frozen=True)

    family: InstanceFamily
    algorithm: Algorithm
    T: int = Field(..., ge=2, description="Horizon")
    R: int = Field(default=DEFAULT_REPLICATIONS, ge=1, description="Replications")
    p_grid: tuple[float, ...] = Field(default=DEFAULT_P_GRID, min_length=1)
    base_seed: int = Field(default=0, ge=0, le=MASK64)
    instance_seed: int = Field(default=0, ge=0, le=MASK64)
    estimator: Estimator = Estimator.PER_RUN_REALIZED_REWARD
    explore_period: int | None = Field(
        default=None, ge=2, description="Override of the per-p exploration period"
    )

    @field_validator("p_grid")
    @classmethod
    def check_p_grid(cls, v):
        for p in v:
            if not p <= 1.0:
                raise ValueError(f"p={p} exceeds 1")
        # normalise -0.0 so output renders "0"
        return tuple(p + 0.0 for p in v)

    @model_validator(mode="after")
    def check_horizon(self):
        if self.T < self.family.k:
            raise ValueError(f"T={self.T} is shorter than k={self.family.k}")
        if self.explore_period is not None and self.explore_period > self.T:
            raise ValueError("explore_period exceeds T")
        if self.estimator is Estimator.CROSS_RUN_MEAN_INSIDE and self.R < 2:
            raise ValueError("cross-run estimator needs R >= 2")
        return self

    @classmethod
    def create(cls, **data: Any) -> ExperimentConfig:
        """Validate, raising ConfigurationError instead of ValidationError."""
        try:
            return cls(**data)
        except ValidationError as e:
            err = e.errors()[0]
            field = ".".join(str(part) for part in err.get("loc", ())) or "config"
            raise invalid_config(field, err.get("input"), err["msg"]) from e


def default_horizon(tag: FamilyTag) -> int:
    return DEFAULT_HORIZONS[tag]


class ResolvedPeriod(BaseModel):
    model_config = ConfigDict(frozen=True)

    rounds: int
    raw: float | None = None
    clamped: bool = False


def resolve_period(config: ExperimentConfig, p: float) -> ResolvedPeriod:
    """Exploration prefix the algorithm uses when evaluated at p."""
    k = config.family.k
    if config.algorithm is Algorithm.UCB1:
        return ResolvedPeriod(rounds=k)
    if config.explore_period is not None:
        return ResolvedPeriod(rounds=config.explore_period)
    # NCB always runs with the Nash-row period
    schedule_p = p if config.algorithm is Algorithm.EUCB else 0.0
    period = exploration_period(ScheduleInput(p=schedule_p, T=config.T, k=k))
    if period.rounds < MIN_EXPLORE_PERIOD:
        # very negative p drives the formula below one round
        return ResolvedPeriod(rounds=MIN_EXPLORE_PERIOD, raw=period.raw, clamped=True)
    return ResolvedPeriod(rounds=period.rounds, raw=period.raw, clamped=period.clamped)
