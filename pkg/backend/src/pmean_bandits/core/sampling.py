"""Closed-form means and seeded reward draws.

Every reward draw consumes exactly one standard uniform from the stream and
maps it through the arm's inverse CDF, for all four variants.
"""

import numpy as np

from .models import ArmDistribution, BanditInstance

UNIFORMS_PER_REWARD = 1


def mean_of(dist: ArmDistribution) -> float:
    """Closed-form expectation of an arm law."""
    return dist.mean


def sample_reward(dist: ArmDistribution, rng: np.random.Generator) -> float:
    """One i.i.d. reward in [0, 1]; consumes UNIFORMS_PER_REWARD uniforms."""
    return dist.quantile(float(rng.random()))


def optimal_mean(instance: BanditInstance) -> tuple[float, int]:
    """(mu_star, i_star) with ties broken to the smallest index."""
    return instance.mu_star, instance.i_star
