"""
Configuration management using Pydantic Settings.
"""

from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide settings; only the environment is consulted, never a file."""

    model_config = SettingsConfigDict(env_prefix="MINORLAB_", case_sensitive=False, extra="ignore")

    app_name: str = "minorlab"
    app_version: str = "1.0.0"

    # Parallelism for corpus search (MINORLAB_JOBS)
    jobs: int = Field(default=1, ge=1)

    # Logging
    log_level: str = "WARNING"
    log_json: bool = True
    log_file: Optional[Path] = None

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """
        Normalize and validate the log level name.

        Args:
            v (str): Level name.

        Returns:
            str: Upper-cased level name.

        Raises:
            ValueError: If the level is unknown.
        """
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings: Application settings.
    """
    return Settings()
