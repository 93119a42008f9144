"""Seeded generators for the four synthetic instance families.

Parameters are drawn arm by arm in index order, one standard uniform per
parameter (Beta: alpha then beta; Uniform: lower then upper), so the instance
is a pure function of the generator state.
"""

from __future__ import annotations

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .core import BanditInstance, Bernoulli, Beta, Triangular, UniformInterval

PARAM_LOW = 0.005
PARAM_HIGH = 0.995
BERNOULLI_HIGH = 1.0
UNIFORM_MIN_WIDTH = 0.001


class FamilyTag(str, Enum):
    BERNOULLI = "bernoulli"
    TRIANGULAR = "triangular"
    BETA = "beta"
    UNIFORM = "uniform"


# Default horizon per family
DEFAULT_HORIZONS = {
    FamilyTag.BERNOULLI: 100_000,
    FamilyTag.TRIANGULAR: 20_000,
    FamilyTag.BETA: 20_000,
    FamilyTag.UNIFORM: 20_000,
}


class InstanceFamily(BaseModel):
    """A synthetic family and its arm count."""

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    tag: FamilyTag
    k: int = Field(default=50, ge=2, description="Arm count")


def _draw(rng: np.random.Generator, lo: float, hi: float) -> float:
    # u in [0, 1) keeps the upper end open
    return float(rng.random()) * (hi - lo) + lo


def gen_instance(family: InstanceFamily, rng: np.random.Generator) -> BanditInstance:
    """Draw a k-arm instance of the family from rng."""
    arms = []
    for _ in range(family.k):
        match family.tag:
            case FamilyTag.BERNOULLI:
                arms.append(Bernoulli(rho=_draw(rng, PARAM_LOW, BERNOULLI_HIGH)))
            case FamilyTag.TRIANGULAR:
                arms.append(Triangular(gamma=_draw(rng, PARAM_LOW, PARAM_HIGH)))
            case FamilyTag.BETA:
                alpha = _draw(rng, PARAM_LOW, PARAM_HIGH)
                beta = _draw(rng, PARAM_LOW, PARAM_HIGH)
                arms.append(Beta(alpha=alpha, beta=beta))
            case FamilyTag.UNIFORM:
                lower = _draw(rng, PARAM_LOW, PARAM_HIGH)
                upper = _draw(rng, lower + UNIFORM_MIN_WIDTH, 1.0)
                arms.append(UniformInterval(lower=lower, upper=upper))
    return BanditInstance.from_arms(arms)


def min_mean(instance: BanditInstance) -> float:
    """Smallest true arm mean."""
    return min(instance.means)
