"""
Settings management for starcat.

Holds the process-wide configuration (logging, law-suite parallelism,
generator retry budget) in a context variable so that overrides made in
one context never leak into another.
"""

import logging
from contextvars import ContextVar
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseModel):
    """Validated runtime configuration."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    log_level: LogLevel = "WARNING"
    workers: int = Field(default=1, ge=1)
    max_retries: int = Field(default=64, ge=1)
    verify_results: bool = True


# Context variable for the settings in effect
_current_settings: ContextVar[Optional[Settings]] = ContextVar(
    "starcat_settings", default=None
)

# Global settings installed by configure()
_settings: Optional[Settings] = None


def configure(install_logging: bool = False, **overrides: Any) -> Settings:
    """
    Configure starcat for this process.

    This should be called once at application startup; the CLI does so
    before dispatching a subcommand.

    Args:
        install_logging: Whether to install a root logging handler at the
            configured level (default: False)
        **overrides: Field values for Settings

    Returns:
        The installed Settings

    Raises:
        pydantic.ValidationError: If an override is invalid

    Example:
        ```python
        from starcat.settings import configure

        configure(workers=4, log_level="INFO", install_logging=True)
        ```
    """
    global _settings

    _settings = Settings(**overrides)
    _current_settings.set(None)

    if install_logging:
        logging.basicConfig(
            level=_settings.log_level,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
    logging.getLogger("starcat").setLevel(_settings.log_level)

    return _settings


def get_settings() -> Settings:
    """
    Get the settings in effect for the current context.

    Falls back to the configured global settings, then to defaults.
    """
    settings = _current_settings.get()
    if settings is not None:
        return settings
    if _settings is not None:
        return _settings
    return Settings()


def set_settings(settings: Settings) -> None:
    """
    Manually set the settings for this context.

    Useful for testing or when you want explicit control.
    """
    _current_settings.set(settings)


def reset_settings() -> None:
    """Drop both the context override and the global configuration."""
    global _settings

    _settings = None
    _current_settings.set(None)


class SettingsContext:
    """
    Context manager for temporary setting overrides.

    Example:
        ```python
        from starcat.settings import SettingsContext

        with SettingsContext(workers=1, max_retries=8):
            report = run_laws(cfg)
        ```
    """

    def __init__(self, **overrides: Any):
        """
        Initialize settings context.

        Args:
            **overrides: Field values replacing the current settings
        """
        self.overrides = overrides
        self.settings: Optional[Settings] = None
        self.previous_settings: Optional[Settings] = None

    def __enter__(self) -> Settings:
        """Enter the context and install the overridden settings."""
        self.previous_settings = _current_settings.get()
        self.settings = get_settings().model_copy(update=self.overrides)
        # model_copy skips validation
        self.settings = Settings.model_validate(self.settings.model_dump())
        _current_settings.set(self.settings)
        return self.settings

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        """Exit the context and restore the previous settings."""
        _current_settings.set(self.previous_settings)
