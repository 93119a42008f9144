"""Domain types shared by every other module."""

from .models import (
    ArmDistribution,
    BanditInstance,
    Bernoulli,
    Beta,
    ExplorationKind,
    Phase,
    RunTrace,
    TraceRound,
    Triangular,
    UniformInterval,
    make_arm,
)
from .sampling import UNIFORMS_PER_REWARD, mean_of, optimal_mean, sample_reward

__all__ = [
    "UNIFORMS_PER_REWARD",
    "ArmDistribution",
    "BanditInstance",
    "Bernoulli",
    "Beta",
    "ExplorationKind",
    "Phase",
    "RunTrace",
    "TraceRound",
    "Triangular",
    "UniformInterval",
    "make_arm",
    "mean_of",
    "optimal_mean",
    "sample_reward",
]
