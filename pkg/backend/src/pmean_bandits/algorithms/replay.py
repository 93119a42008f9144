"""Replay oracle: recompute every index-phase choice from the trace prefix."""

from __future__ import annotations

import math

from ..core import RunTrace
from .policy import IndexFn, ucb_index


def replay_mismatches(trace: RunTrace, index_fn: IndexFn = ucb_index) -> list[int]:
    """1-based rounds after the exploration prefix whose logged arm differs
    from the smallest-index argmax of indices rebuilt from earlier rounds."""
    k = trace.k
    counts = [0] * k
    sums = [0.0] * k
    mismatches = []
    for i in range(trace.horizon):
        arm = int(trace.arms[i])
        if i >= trace.explore_period:
            best_arm, best = 0, -math.inf
            for j in range(k):
                score = (
                    math.inf
                    if counts[j] == 0
                    else index_fn(sums[j] / counts[j], counts[j], trace.horizon)
                )
                if score > best:
                    best_arm, best = j, score
            if best_arm != arm:
                mismatches.append(i + 1)
        counts[arm] += 1
        sums[arm] += float(trace.rewards[i])
    return mismatches


def phase_violations(trace: RunTrace) -> list[int]:
    """1-based rounds whose selection rule disagrees with their phase."""
    return [
        i + 1
        for i in range(trace.horizon)
        if bool(trace.selected_by_index[i]) != (i >= trace.explore_period)
    ]
