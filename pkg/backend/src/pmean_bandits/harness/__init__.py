"""Seeded, replicated experiment execution.

The table module is imported directly (``pmean_bandits.harness.table``) since
it depends on the output rows.
"""

from .config import (
    DEFAULT_P_GRID,
    DEFAULT_REPLICATIONS,
    MIN_EXPLORE_PERIOD,
    Algorithm,
    ExperimentConfig,
    ResolvedPeriod,
    default_horizon,
    resolve_period,
)
from .execution import ReplicationJob, run_experiment, run_replication, run_replications
from .good_events import GoodEventRates, good_event_rate, good_events
from .seeding import (
    STREAM_SCHEME_VERSION,
    instance_stream,
    replication_seed,
    replication_stream,
)

__all__ = [
    "DEFAULT_P_GRID",
    "DEFAULT_REPLICATIONS",
    "MIN_EXPLORE_PERIOD",
    "STREAM_SCHEME_VERSION",
    "Algorithm",
    "ExperimentConfig",
    "GoodEventRates",
    "ReplicationJob",
    "ResolvedPeriod",
    "default_horizon",
    "good_event_rate",
    "good_events",
    "instance_stream",
    "replication_seed",
    "replication_stream",
    "resolve_period",
    "run_experiment",
    "run_replication",
    "run_replications",
]
