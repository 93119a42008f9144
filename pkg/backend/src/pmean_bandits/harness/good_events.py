"""Monitors for the good events behind the high-probability analysis.

G1: every arm gets at least T~/(2k) pulls during uniform exploration.
G2: at every realized sample count s >= ceil(T~/(2k)), each arm's empirical
mean is within 2 sqrt(ln T / s) of its true mean.
"""

from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..core import BanditInstance, RunTrace
from ..utils.exceptions import invalid_config
from .config import Algorithm
from .execution import run_replications


class GoodEventRates(BaseModel):
    model_config = ConfigDict(frozen=True)

    g1_rate: float
    g2_rate: float
    g_rate: float
    replications: int


def good_events(trace: RunTrace, instance: BanditInstance) -> tuple[bool, bool]:
    """(G1 held, G2 held) for one trace, against the instance's true means."""
    k = instance.k
    explore = trace.explore_period
    phase_one = np.bincount(trace.arms[:explore], minlength=k)
    g1 = bool((phase_one >= explore / (2 * k)).all())

    s_min = max(1, math.ceil(explore / (2 * k)))
    log_t = math.log(trace.horizon)
    g2 = True
    for arm, mu in enumerate(instance.means):
        rewards = trace.rewards[trace.arms == arm]
        if rewards.size < s_min:
            continue
        s = np.arange(1, rewards.size + 1)
        emp = np.cumsum(rewards) / s
        tail = slice(s_min - 1, None)
        if (np.abs(mu - emp[tail]) > 2.0 * np.sqrt(log_t / s[tail])).any():
            g2 = False
            break
    return g1, g2


def good_event_rate(
    instance: BanditInstance,
    algorithm: Algorithm,
    T: int,
    explore_period: int,
    R: int,
    base_seed: int = 0,
    workers: int | None = None,
) -> GoodEventRates:
    """Fractions of R replications in which G1, G2 and both held."""
    if algorithm is Algorithm.UCB1:
        raise invalid_config(
            "algorithm", algorithm.value, "good events need a uniform exploration phase"
        )
    traces = run_replications(
        instance, algorithm, T, explore_period, base_seed, R, workers
    )
    flags = [good_events(trace, instance) for trace in traces]
    g1 = sum(a for a, _ in flags)
    g2 = sum(b for _, b in flags)
    both = sum(a and b for a, b in flags)
    return GoodEventRates(
        g1_rate=g1 / R, g2_rate=g2 / R, g_rate=both / R, replications=R
    )
