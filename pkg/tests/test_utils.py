"""Tests for settings, logging and the exception hierarchy."""

import logging

import pytest

from pmean_bandits.utils import (
    get_logger,
    load_settings,
    logging_config,
    set_console_level,
)
from pmean_bandits.utils.exceptions import (
    ConfigurationError,
    HorizonError,
    HorizonTooShortError,
    ParameterDomainError,
    PMeanBanditError,
    RewardDomainError,
    horizon_too_short,
    invalid_config,
    reward_out_of_domain,
)


class TestSettings:
    def test_reads_environment(self, monkeypatch):
        monkeypatch.setenv("PMB_THREADS", "4")
        monkeypatch.setenv("PMB_LOG_LEVEL", "debug")
        settings = load_settings()
        assert settings.threads == 4
        assert settings.log_level == "DEBUG"

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("PMB_THREADS", raising=False)
        monkeypatch.delenv("PMB_LOG_LEVEL", raising=False)
        monkeypatch.delenv("PMB_LOG_DIR", raising=False)
        settings = load_settings()
        assert settings.threads >= 1
        assert settings.log_level == "INFO"
        assert settings.log_dir is None

    @pytest.mark.parametrize("value", ["0", "-2", "many"])
    def test_bad_thread_count(self, monkeypatch, value):
        monkeypatch.setenv("PMB_THREADS", value)
        with pytest.raises(ConfigurationError) as excinfo:
            load_settings()
        assert excinfo.value.context["field"] == "PMB_THREADS"

    def test_bad_log_level(self, monkeypatch):
        monkeypatch.setenv("PMB_LOG_LEVEL", "LOUD")
        with pytest.raises(ConfigurationError):
            load_settings()


class TestLogging:
    def test_component_loggers(self):
        harness = get_logger("pmean_bandits.harness.execution")
        assert harness.name == "pmean_bandits.harness"
        assert get_logger("pmean_bandits.harness.table") is harness
        assert get_logger("pmean_bandits.main").name == "pmean_bandits.cli"
        assert get_logger("pmean_bandits.regret").name == "pmean_bandits.default"

    def test_console_level_override(self):
        logger = get_logger("pmean_bandits.algorithms.runners")
        set_console_level("ERROR")
        try:
            console = [
                h for h in logger.handlers if isinstance(h, logging.StreamHandler)
            ][0]
            assert console.level == logging.ERROR
        finally:
            set_console_level("INFO")

    def test_invalid_settings_fall_back_to_defaults(self, monkeypatch):
        monkeypatch.setenv("PMB_THREADS", "abc")
        monkeypatch.setattr(logging_config, "_loggers", {})
        existing = logging.getLogger("pmean_bandits.default")
        handlers = list(existing.handlers)
        try:
            logger = get_logger("pmean_bandits.regret")
            console = [
                h for h in logger.handlers if isinstance(h, logging.StreamHandler)
            ][-1]
            assert console.level == logging.INFO
        finally:
            existing.handlers = handlers


class TestExceptions:
    def test_hierarchy(self):
        assert issubclass(RewardDomainError, ParameterDomainError)
        assert issubclass(ParameterDomainError, ValueError)
        assert issubclass(HorizonTooShortError, HorizonError)
        assert issubclass(ConfigurationError, PMeanBanditError)

    def test_to_dict(self):
        err = invalid_config("R", 0, "must be positive")
        assert err.to_dict() == {
            "error": "ConfigurationError",
            "message": "Invalid configuration for 'R': must be positive",
            "error_code": "CONFIG_INVALID",
            "context": {"field": "R", "value": "0", "reason": "must be positive"},
        }

    def test_helpers_set_codes(self):
        assert reward_out_of_domain(1.5).error_code == "REWARD_DOMAIN"
        err = horizon_too_short(5, 10, "UCB1 needs one pull per arm")
        assert err.context == {"horizon": 5, "minimum": 10}
