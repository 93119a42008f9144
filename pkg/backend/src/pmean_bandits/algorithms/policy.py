"""Index-policy state, confidence indices, and the select/update steps.

An index function maps (empirical mean, pull count, horizon) to a score. It
depends on nothing else, so after each pull only the pulled arm's score needs
recomputing; unpulled arms carry a +inf sentinel.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from ..core import ExplorationKind
from ..utils.exceptions import (
    HorizonExhaustedError,
    UndefinedIndexError,
    parameter_out_of_domain,
    reward_out_of_domain,
)

IndexFn = Callable[[float, int, float], float]

UCB_BONUS = 4.0
NCB_BONUS = 4.0


def _check_index_args(n: int, T: float) -> None:
    if n < 1:
        raise UndefinedIndexError(
            message="Confidence index is undefined for an arm with zero pulls",
            error_code="UNDEFINED_INDEX",
            context={"n": n},
        )
    if T < 2:
        raise parameter_out_of_domain("T", T, "horizon must be at least 2")


def ucb_index(emp_mean: float, n: int, T: float) -> float:
    """emp_mean + 4 * sqrt(ln T / n)."""
    _check_index_args(n, T)
    return emp_mean + UCB_BONUS * math.sqrt(math.log(T) / n)


def ncb_index(emp_mean: float, n: int, T: float) -> float:
    """Nash confidence bound: the bonus scales with sqrt(emp_mean)."""
    _check_index_args(n, T)
    return emp_mean + NCB_BONUS * math.sqrt(max(emp_mean, 0.0) * math.log(T) / n)


def greedy_index(emp_mean: float, n: int, T: float) -> float:
    """Empirical mean alone."""
    _check_index_args(n, T)
    return emp_mean


@dataclass
class PolicyState:
    """Mutable per-replication state of an explore-then-index policy."""

    k: int
    horizon: int
    explore_period: int
    index_fn: IndexFn = ucb_index
    exploration: ExplorationKind = ExplorationKind.UNIFORM
    t: int = 0
    counts: np.ndarray = field(init=False)
    reward_sums: np.ndarray = field(init=False)
    _index: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.k < 2:
            raise parameter_out_of_domain("k", self.k, "need at least 2 arms")
        if not 0 <= self.explore_period <= self.horizon:
            raise parameter_out_of_domain(
                "explore_period", self.explore_period, "must lie in [0, T]"
            )
        self.counts = np.zeros(self.k, dtype=np.int64)
        self.reward_sums = np.zeros(self.k, dtype=np.float64)
        self._index = np.full(self.k, np.inf)

    @property
    def in_exploration(self) -> bool:
        return self.t < self.explore_period

    @property
    def emp_means(self) -> np.ndarray:
        """reward_sums / counts, NaN for unpulled arms."""
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(
                self.counts > 0, self.reward_sums / np.maximum(self.counts, 1), np.nan
            )

    def indices(self) -> np.ndarray:
        """Current index of every arm (+inf for unpulled arms)."""
        return self._index.copy()


def select_arm(state: PolicyState, rng: np.random.Generator) -> int:
    """Arm for round state.t + 1; does not mutate state.

    Uniform exploration consumes one standard uniform from rng; round robin and
    index selection consume nothing.
    """
    if state.t >= state.horizon:
        raise HorizonExhaustedError(
            message=f"Policy already played all T={state.horizon} rounds",
            error_code="HORIZON_EXHAUSTED",
            context={"t": state.t, "horizon": state.horizon},
        )
    if state.in_exploration:
        if state.exploration is ExplorationKind.ROUND_ROBIN:
            return state.t % state.k
        return min(int(rng.random() * state.k), state.k - 1)
    # np.argmax returns the first maximiser, i.e. the smallest index
    return int(np.argmax(state._index))


def update(state: PolicyState, arm: int, reward: float) -> PolicyState:
    """Record one pull in place and return the same state."""
    if not 0.0 <= reward <= 1.0:
        raise reward_out_of_domain(reward)
    if not 0 <= arm < state.k:
        raise parameter_out_of_domain("arm", arm, f"must lie in [0, {state.k})")
    state.counts[arm] += 1
    state.reward_sums[arm] += reward
    state.t += 1
    n = int(state.counts[arm])
    state._index[arm] = state.index_fn(
        float(state.reward_sums[arm]) / n, n, state.horizon
    )
    return state
