"""Domain models: reward laws, bandit instances and run traces.

Arm laws and instances are frozen pydantic models so they can be shared by
every replication worker. Run traces hold numpy arrays and are frozen
dataclasses produced by exactly one run.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Annotated, Any, Literal, NamedTuple

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    TypeAdapter,
    ValidationError,
    model_validator,
)
from scipy import special

from ..utils.exceptions import parameter_out_of_domain


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    loc = ".".join(str(part) for part in err.get("loc", ()))
    return f"{loc}: {err.get('msg', 'invalid value')}" if loc else err["msg"]


class _Arm(BaseModel):
    model_config = ConfigDict(frozen=True)


class Bernoulli(_Arm):
    """Reward 1 with probability rho, else 0."""

    kind: Literal["bernoulli"] = "bernoulli"
    rho: float = Field(..., ge=0.0, le=1.0, description="Success probability")

    @property
    def mean(self) -> float:
        return self.rho

    @property
    def std(self) -> float:
        return math.sqrt(self.rho * (1.0 - self.rho))

    def quantile(self, u: float) -> float:
        return 1.0 if u < self.rho else 0.0


class Triangular(_Arm):
    """Triangular law on (0, 1) with mode gamma."""

    kind: Literal["triangular"] = "triangular"
    gamma: float = Field(..., gt=0.0, lt=1.0, description="Mode")

    @property
    def mean(self) -> float:
        return (1.0 + self.gamma) / 3.0

    @property
    def std(self) -> float:
        g = self.gamma
        return math.sqrt((1.0 - g + g * g) / 18.0)

    def quantile(self, u: float) -> float:
        g = self.gamma
        if u < g:
            return math.sqrt(u * g)
        return 1.0 - math.sqrt((1.0 - u) * (1.0 - g))


class Beta(_Arm):
    """Beta(alpha, beta) law on [0, 1]."""

    kind: Literal["beta"] = "beta"
    alpha: float = Field(..., gt=0.0, description="First shape parameter")
    beta: float = Field(..., gt=0.0, description="Second shape parameter")

    @property
    def mean(self) -> float:
        return self.alpha / (self.alpha + self.beta)

    @property
    def std(self) -> float:
        a, b = self.alpha, self.beta
        return math.sqrt(a * b / ((a + b) ** 2 * (a + b + 1.0)))

    def quantile(self, u: float) -> float:
        # Exact inverse of the regularized incomplete beta function
        return float(special.betaincinv(self.alpha, self.beta, u))


class UniformInterval(_Arm):
    """Uniform law on [lower, upper]."""

    kind: Literal["uniform"] = "uniform"
    lower: float = Field(..., ge=0.0, le=1.0, description="Lower end")
    upper: float = Field(..., ge=0.0, le=1.0, description="Upper end")

    @model_validator(mode="after")
    def check_order(self):
        if not self.lower < self.upper:
            raise ValueError("lower must be strictly less than upper")
        return self

    @property
    def mean(self) -> float:
        return (self.lower + self.upper) / 2.0

    @property
    def std(self) -> float:
        return (self.upper - self.lower) / math.sqrt(12.0)

    def quantile(self, u: float) -> float:
        return self.lower + u * (self.upper - self.lower)


ArmDistribution = Annotated[
    Bernoulli | Triangular | Beta | UniformInterval, Field(discriminator="kind")
]

_ARM_ADAPTER: TypeAdapter[ArmDistribution] = TypeAdapter(ArmDistribution)


def make_arm(kind: str, **params: float) -> ArmDistribution:
    """Build an arm law by variant tag, raising ParameterDomainError on bad input."""
    try:
        return _ARM_ADAPTER.validate_python({"kind": kind, **params})
    except ValidationError as e:
        raise parameter_out_of_domain(kind, params, _first_error(e)) from e


class BanditInstance(BaseModel):
    """An ordered collection of k >= 2 arms."""

    model_config = ConfigDict(frozen=True)

    arms: tuple[ArmDistribution, ...] = Field(..., min_length=2)

    @classmethod
    def from_arms(cls, arms: Iterable[ArmDistribution]) -> BanditInstance:
        try:
            return cls(arms=tuple(arms))
        except ValidationError as e:
            raise parameter_out_of_domain("arms", "...", _first_error(e)) from e

    @classmethod
    def from_means(cls, means: Sequence[float]) -> BanditInstance:
        """Bernoulli instance with the given success probabilities."""
        try:
            return cls(arms=tuple(Bernoulli(rho=m) for m in means))
        except ValidationError as e:
            raise parameter_out_of_domain("means", list(means), _first_error(e)) from e

    @property
    def k(self) -> int:
        return len(self.arms)

    @property
    def means(self) -> tuple[float, ...]:
        return tuple(arm.mean for arm in self.arms)

    @property
    def mu_star(self) -> float:
        return max(self.means)

    @property
    def i_star(self) -> int:
        means = self.means
        return means.index(max(means))


class ExplorationKind(str, Enum):
    """How the exploration prefix chose arms."""

    UNIFORM = "uniform"
    ROUND_ROBIN = "round_robin"


class Phase(str, Enum):
    EXPLORATION = "exploration"
    INDEX = "index"


class TraceRound(NamedTuple):
    t: int
    arm: int
    reward: float
    true_mean: float
    phase: Phase


@dataclass(frozen=True)
class RunTrace:
    """Per-round record of one policy run; rounds are 1-based in the API."""

    horizon: int
    explore_period: int
    exploration: ExplorationKind
    arms: np.ndarray
    rewards: np.ndarray
    true_means: np.ndarray
    selected_by_index: np.ndarray
    final_counts: np.ndarray
    algorithm: str = ""
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        n = self.horizon
        for name in ("arms", "rewards", "true_means", "selected_by_index"):
            if len(getattr(self, name)) != n:
                raise parameter_out_of_domain(
                    name, len(getattr(self, name)), f"length must equal T={n}"
                )
        if not 0 <= self.explore_period <= n:
            raise parameter_out_of_domain(
                "explore_period", self.explore_period, "must lie in [0, T]"
            )
        if int(self.final_counts.sum()) != n:
            raise parameter_out_of_domain(
                "final_counts", int(self.final_counts.sum()), f"must sum to T={n}"
            )
        if not np.array_equal(self.recount(), self.final_counts):
            raise parameter_out_of_domain(
                "final_counts", self.final_counts.tolist(), "disagree with rounds"
            )

    @property
    def k(self) -> int:
        return len(self.final_counts)

    def recount(self) -> np.ndarray:
        """Per-arm pull totals recomputed from the round log."""
        return np.bincount(self.arms, minlength=len(self.final_counts))

    def phase_of(self, t: int) -> Phase:
        """Phase of 1-based round t."""
        return Phase.EXPLORATION if t <= self.explore_period else Phase.INDEX

    @property
    def rounds(self) -> list[TraceRound]:
        return [
            TraceRound(
                t=i + 1,
                arm=int(self.arms[i]),
                reward=float(self.rewards[i]),
                true_mean=float(self.true_means[i]),
                phase=self.phase_of(i + 1),
            )
            for i in range(self.horizon)
        ]
