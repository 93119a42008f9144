"""Runtime settings for the simulator, read from the environment."""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from .exceptions import invalid_config

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class Settings(BaseModel):
    """Process-wide settings; experiment parameters never come from here."""

    threads: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        ge=1,
        description="Maximum number of replication workers",
    )
    log_level: str = Field(default="INFO", description="Console logging level")
    log_dir: str | None = Field(
        default=None, description="Directory for rotating log files (disabled if unset)"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        """Accept any casing for the level name."""
        if isinstance(v, str):
            v = v.strip().upper()
            if v not in LOG_LEVELS:
                raise ValueError(f"must be one of {', '.join(LOG_LEVELS)}")
        return v


def load_settings() -> Settings:
    """Load settings from environment variables and an optional .env file."""
    load_dotenv(override=False)

    config_data = {}

    # Map environment variables to settings fields
    env_mapping = {
        "PMB_THREADS": "threads",
        "PMB_LOG_LEVEL": "log_level",
        "PMB_LOG_DIR": "log_dir",
    }

    for env_var, field_name in env_mapping.items():
        value = os.getenv(env_var)
        if value is None or value.strip() == "":
            continue
        if field_name == "threads":
            try:
                threads = int(value)
            except ValueError:
                raise invalid_config(env_var, value, "must be a positive integer")
            if threads < 1:
                raise invalid_config(env_var, value, "must be a positive integer")
            config_data[field_name] = threads
        else:
            config_data[field_name] = value

    try:
        return Settings(**config_data)
    except ValidationError as e:
        raise invalid_config("settings", config_data, str(e)) from e
