"""Theoretical regret-bound expressions, evaluated as diagnostics only."""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from .utils.exceptions import parameter_out_of_domain


class BoundResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    branch: str = Field(..., description="positive | nash | negative | very-negative")
    dominant_term: float = Field(..., ge=0.0, description="Rate with constants dropped")
    with_log_factors: float = Field(..., ge=0.0)
    explicit_nash_bound: float | None = Field(default=None, ge=0.0)
    below_validity_floor: bool = False


def table1_branch(p: float) -> str:
    if p > 0:
        return "positive"
    if p == 0:
        return "nash"
    if p >= -1:
        return "negative"
    return "very-negative"


def table1_bound(p: float, k: int, T: int) -> BoundResult:
    """Dominant rate of the regret bound for p, pre-log and with log factors."""
    branch = table1_branch(p)
    if branch in ("positive", "nash"):
        dominant = math.sqrt(k / T)
    elif branch == "negative":
        dominant = k**0.75 * T**-0.25
    else:
        dominant = math.sqrt(k) * T ** (-1.0 / (4.0 * abs(p)))

    if branch == "positive":
        floor = p < 4.0 / math.sqrt(k * T)
    elif branch in ("negative", "very-negative"):
        floor = abs(p) < 4.0 / (k * T) ** 0.75
    else:
        floor = False

    return BoundResult(
        branch=branch,
        dominant_term=dominant,
        with_log_factors=dominant * math.sqrt(math.log(k) * math.log(T)),
        explicit_nash_bound=explicit_nash_bound(k, T) if branch == "nash" else None,
        below_validity_floor=floor,
    )


def explicit_nash_bound(k: int, T: int) -> float:
    """32 sqrt(k ln k ln T / T) + 4 / T."""
    return 32.0 * math.sqrt(k * math.log(k) * math.log(T) / T) + 4.0 / T


def explicit_positive_bound(p: float, k: int, T: int) -> float:
    """Closed-form bound for p in (0, 1] with the positive-p exploration period."""
    if not 0 < p <= 1:
        raise parameter_out_of_domain("p", p, "defined for p in (0, 1]")
    log_t, log_k = math.log(T), math.log(k)
    explore = 16.0 * (k**p - 1.0) * math.sqrt(T * k**p * log_t)
    explore /= p * k**p * T * math.sqrt(log_k)
    return explore + 6.0 * math.sqrt(k * log_t / T) + 4.0 / (p * T)
