import os

import hypothesis
import pytest

from coisotropic import get_preset
from env_loader import Settings

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=100, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))

PRESET_NAMES = ("rplus", "s1", "special")


@pytest.fixture
def rplus():
    return get_preset("rplus")


@pytest.fixture
def s1():
    return get_preset("s1")


@pytest.fixture
def special():
    return get_preset("special")


@pytest.fixture(params=PRESET_NAMES)
def preset(request):
    return get_preset(request.param)


@pytest.fixture
def small_settings():
    """Settings small enough for suites to run inside the unit tests."""
    return Settings(preset="s1", degree_cap=2, max_n=2, samples=2, seed=0, workers=1)


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """No test reads a developer's slq.conf, .env or SLQ_CONFIG."""
    monkeypatch.delenv("SLQ_CONFIG", raising=False)
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    monkeypatch.chdir(tmp_path)
