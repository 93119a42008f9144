"""Round-by-round drivers: Explore-Then-UCB, UCB1 and the NCB baseline."""

from __future__ import annotations

import numpy as np

from ..core import BanditInstance, ExplorationKind, RunTrace, sample_reward
from ..core.sampling import UNIFORMS_PER_REWARD
from ..schedule import ScheduleInput, exploration_period
from ..utils.exceptions import horizon_too_short, parameter_out_of_domain
from ..utils.logging_config import get_logger
from .policy import IndexFn, PolicyState, ncb_index, select_arm, ucb_index, update

logger = get_logger(__name__)


def _play(
    instance: BanditInstance,
    T: int,
    explore_period: int,
    index_fn: IndexFn,
    exploration: ExplorationKind,
    rng: np.random.Generator,
    algorithm: str,
) -> RunTrace:
    state = PolicyState(
        k=instance.k,
        horizon=T,
        explore_period=explore_period,
        index_fn=index_fn,
        exploration=exploration,
    )
    laws = instance.arms
    means = np.asarray(instance.means)
    arms = np.empty(T, dtype=np.int64)
    rewards = np.empty(T, dtype=np.float64)
    by_index = np.empty(T, dtype=bool)

    for i in range(T):
        by_index[i] = not state.in_exploration
        arm = select_arm(state, rng)
        reward = sample_reward(laws[arm], rng)
        update(state, arm, reward)
        arms[i] = arm
        rewards[i] = reward

    logger.debug(
        f"{algorithm}: T={T}, explore_period={explore_period}, "
        f"counts={state.counts.tolist()}"
    )
    return RunTrace(
        horizon=T,
        explore_period=explore_period,
        exploration=exploration,
        arms=arms,
        rewards=rewards,
        true_means=means[arms],
        selected_by_index=by_index,
        final_counts=state.counts.copy(),
        algorithm=algorithm,
        metadata={
            "uniforms_per_reward": UNIFORMS_PER_REWARD,
            "index_fn": getattr(index_fn, "__name__", repr(index_fn)),
        },
    )


def _check_explore_period(T: int, explore_period: int) -> None:
    if explore_period < 2:
        raise parameter_out_of_domain(
            "explore_period", explore_period, "exploration period must be at least 2"
        )
    if T < explore_period:
        raise horizon_too_short(T, explore_period, "exploration period exceeds T")


def run_explore_then_ucb(
    instance: BanditInstance, T: int, explore_period: int, rng: np.random.Generator
) -> RunTrace:
    """Uniform exploration for explore_period rounds, then argmax UCB index."""
    return run_ncb(instance, T, explore_period, ucb_index, rng, algorithm="EUCB")


def run_ucb1(instance: BanditInstance, T: int, rng: np.random.Generator) -> RunTrace:
    """One round-robin pass over the arms, then argmax UCB index."""
    if T < instance.k:
        raise horizon_too_short(T, instance.k, "UCB1 needs one pull per arm")
    return _play(
        instance, T, instance.k, ucb_index, ExplorationKind.ROUND_ROBIN, rng, "UCB1"
    )


def run_ncb(
    instance: BanditInstance,
    T: int,
    explore_period: int,
    index_fn: IndexFn,
    rng: np.random.Generator,
    *,
    algorithm: str = "NCB",
) -> RunTrace:
    """Explore-then-index with a caller-supplied index function."""
    _check_explore_period(T, explore_period)
    return _play(
        instance,
        T,
        explore_period,
        index_fn,
        ExplorationKind.UNIFORM,
        rng,
        algorithm,
    )


def ncb_explore_period(T: int, k: int) -> int:
    """NCB shares the Nash-row exploration period."""
    return exploration_period(ScheduleInput(p=0.0, T=T, k=k)).rounds


def run_ncb_preset(
    instance: BanditInstance, T: int, rng: np.random.Generator
) -> RunTrace:
    """NCB with its own index and the Nash-row exploration period."""
    return run_ncb(instance, T, ncb_explore_period(T, instance.k), ncb_index, rng)
