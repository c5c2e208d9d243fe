import logging

import pytest
from pydantic import ValidationError

from starcat.settings import (
    Settings,
    SettingsContext,
    configure,
    get_settings,
    reset_settings,
    set_settings,
)


class TestSettings:
    """Test settings management."""

    def test_defaults(self):
        """Test the settings in effect before any configuration."""
        settings = get_settings()
        assert settings == Settings()
        assert settings.workers == 1
        assert settings.verify_results

    def test_configure(self):
        """Test that configure installs global settings."""
        configure(workers=3, log_level="DEBUG")
        assert get_settings().workers == 3
        assert logging.getLogger("starcat").level == logging.DEBUG

    def test_invalid_override_raises_error(self):
        """Test that bad values are rejected."""
        with pytest.raises(ValidationError):
            configure(workers=0)
        with pytest.raises(ValidationError):
            configure(log_level="LOUD")

    def test_unknown_setting_raises_error(self):
        """Test that unknown keys are rejected."""
        with pytest.raises(ValidationError):
            configure(worker=2)

    def test_set_settings_overrides_global(self):
        """Test that a context override wins over configure()."""
        configure(max_retries=10)
        set_settings(Settings(max_retries=5))
        assert get_settings().max_retries == 5
        reset_settings()
        assert get_settings().max_retries == 64


class TestSettingsContext:
    """Test temporary overrides."""

    def test_context_restores_previous_settings(self):
        """Test that leaving the context restores the outer settings."""
        configure(max_retries=10)
        with SettingsContext(max_retries=3, verify_results=False) as inner:
            assert inner.max_retries == 3
            assert get_settings() is inner
        assert get_settings().max_retries == 10
        assert get_settings().verify_results

    def test_contexts_nest(self):
        """Test that nested contexts build on the enclosing one."""
        with SettingsContext(workers=2):
            with SettingsContext(max_retries=7) as inner:
                assert (inner.workers, inner.max_retries) == (2, 7)
            assert get_settings().max_retries == 64
        assert get_settings().workers == 1

    def test_context_validates_overrides(self):
        """Test that overrides go through validation."""
        with pytest.raises(ValidationError):
            with SettingsContext(max_retries=0):
                pass
