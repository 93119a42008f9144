"""Index policies driven round by round against a bandit instance."""

from .policy import (
    NCB_BONUS,
    UCB_BONUS,
    IndexFn,
    PolicyState,
    greedy_index,
    ncb_index,
    select_arm,
    ucb_index,
    update,
)
from .replay import phase_violations, replay_mismatches
from .runners import (
    ncb_explore_period,
    run_explore_then_ucb,
    run_ncb,
    run_ncb_preset,
    run_ucb1,
)

__all__ = [
    "NCB_BONUS",
    "UCB_BONUS",
    "IndexFn",
    "PolicyState",
    "greedy_index",
    "ncb_explore_period",
    "ncb_index",
    "phase_violations",
    "replay_mismatches",
    "run_explore_then_ucb",
    "run_ncb",
    "run_ncb_preset",
    "run_ucb1",
    "select_arm",
    "ucb_index",
    "update",
]
