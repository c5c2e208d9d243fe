import pytest
from hypothesis import HealthCheck, settings

from starcat.settings import reset_settings

settings.register_profile(
    "starcat",
    max_examples=20,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=200, deadline=None)
settings.load_profile("starcat")


@pytest.fixture(autouse=True)
def clean_settings():
    """Start and finish every test with default settings."""
    reset_settings()
    yield
    reset_settings()
