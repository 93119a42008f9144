"""Custom exceptions for the p-mean bandit simulator."""

from typing import Any


class PMeanBanditError(Exception):
    """Base exception for all simulator errors."""

    def __init__(
        self,
        message: str,
        error_code: str | None = None,
        context: dict[str, Any] | None = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.context = context or {}

    def to_dict(self) -> dict[str, Any]:
        """Convert exception to dictionary format."""
        return {
            "error": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "context": self.context,
        }


class ParameterDomainError(PMeanBanditError, ValueError):
    """Raised when a parameter lies outside its mathematical domain."""

    pass


class RewardDomainError(ParameterDomainError):
    """Raised when an observed reward is outside [0, 1]."""

    pass


class UndefinedIndexError(PMeanBanditError):
    """Raised when a confidence index is requested for an unpulled arm."""

    pass


class HorizonError(PMeanBanditError):
    """Base exception for horizon-related errors."""

    pass


class HorizonExhaustedError(HorizonError):
    """Raised when a policy is asked to act after its final round."""

    pass


class HorizonTooShortError(HorizonError):
    """Raised when the horizon cannot hold the algorithm's mandatory prefix."""

    pass


class EstimatorArityError(PMeanBanditError):
    """Raised when a regret estimator receives the wrong kind or number of runs."""

    pass


class ConfigurationError(PMeanBanditError, ValueError):
    """Raised when settings or an experiment configuration are invalid."""

    pass


# Convenience functions for creating common exceptions


def parameter_out_of_domain(
    field: str, value: Any, reason: str
) -> ParameterDomainError:
    """Create a ParameterDomainError with consistent formatting."""
    return ParameterDomainError(
        message=f"Parameter '{field}' out of domain: {reason}",
        error_code="PARAMETER_DOMAIN",
        context={"field": field, "value": str(value), "reason": reason},
    )


def reward_out_of_domain(reward: float) -> RewardDomainError:
    """Create a RewardDomainError with consistent formatting."""
    return RewardDomainError(
        message=f"Reward {reward!r} is outside [0, 1]",
        error_code="REWARD_DOMAIN",
        context={"reward": str(reward)},
    )


def horizon_too_short(horizon: int, minimum: int, reason: str) -> HorizonTooShortError:
    """Create a HorizonTooShortError with consistent formatting."""
    return HorizonTooShortError(
        message=f"Horizon T={horizon} is shorter than the required {minimum}: {reason}",
        error_code="HORIZON_TOO_SHORT",
        context={"horizon": horizon, "minimum": minimum},
    )


def invalid_config(field: str, value: Any, reason: str) -> ConfigurationError:
    """Create a ConfigurationError with consistent formatting."""
    return ConfigurationError(
        message=f"Invalid configuration for '{field}': {reason}",
        error_code="CONFIG_INVALID",
        context={"field": field, "value": str(value), "reason": reason},
    )
