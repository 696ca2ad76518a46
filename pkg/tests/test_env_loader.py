import pytest

from env_loader import ConfigError, Settings, load_environment_variables, load_settings


def test_defaults():
    assert load_settings() == Settings()


def test_default_sample_count_covers_the_acceptance_runs():
    assert Settings().samples >= 100


def test_config_file(tmp_path):
    config = tmp_path / "slq.conf"
    config.write_text("# local run\npreset = S1\nmax_n = 3\nworkers = 2\nlog_level = debug\n", encoding="utf-8")
    settings = load_settings()
    assert (settings.preset, settings.max_n, settings.workers, settings.log_level) == ("s1", 3, 2, "DEBUG")


def test_environment_path_and_overrides(tmp_path, monkeypatch):
    config = tmp_path / "other.conf"
    config.write_text("preset = custom\nmu = 3/2\nnu = 1\nsamples = 5\n", encoding="utf-8")
    monkeypatch.setenv("SLQ_CONFIG", str(config))
    settings = load_settings(samples=7, seed=None)
    assert (settings.preset, settings.mu, settings.nu, settings.samples, settings.seed) == ("custom", "3/2", "1", 7, 0)


def test_unknown_file_key_is_ignored(tmp_path):
    (tmp_path / "slq.conf").write_text("colour = blue\nseed = 4\n", encoding="utf-8")
    assert load_settings().seed == 4


def test_log_level_from_environment(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "info")
    assert load_settings().log_level == "INFO"
    assert load_settings(log_level="ERROR").log_level == "ERROR"


@pytest.mark.parametrize(
    "overrides",
    [
        {"preset": "custom"},
        {"preset": "custom", "mu": "1"},
        {"mu": "one half"},
        {"max_n": "many"},
        {"samples": -1},
        {"workers": 0},
        {"log_level": "LOUD"},
        {"colour": "blue"},
    ],
)
def test_invalid_settings(overrides):
    with pytest.raises(ConfigError):
        load_settings(**overrides)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_settings(tmp_path / "missing.conf")


def test_dotenv_file(tmp_path, monkeypatch):
    # registers LOG_LEVEL with monkeypatch so the value loaded from .env is undone
    monkeypatch.setenv("LOG_LEVEL", "placeholder")
    monkeypatch.delenv("LOG_LEVEL")
    (tmp_path / ".env").write_text("LOG_LEVEL=error\n", encoding="utf-8")
    load_environment_variables()
    assert load_settings().log_level == "ERROR"
