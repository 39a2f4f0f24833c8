from fractions import Fraction

import pytest

from src.config import Settings, load_settings
from src.utils.logging import write_artifact
from src.utils.parallel import map_tasks


@pytest.fixture
def fresh_settings():
    load_settings.cache_clear()
    yield
    load_settings.cache_clear()


def test_defaults():
    settings = Settings()
    assert settings.log_level == "WARNING"
    assert settings.score_bound == 1_000_000
    assert settings.copeland_alpha == Fraction(1, 2)
    assert settings.jobs == 1


def test_environment_overrides(monkeypatch, fresh_settings):
    monkeypatch.setenv("SHIFT_BRIBERY_NODE_LIMIT", "17")
    monkeypatch.setenv("SHIFT_BRIBERY_COPELAND_ALPHA", "1/3")
    monkeypatch.setenv("SHIFT_BRIBERY_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.node_limit == 17
    assert settings.copeland_alpha == Fraction(1, 3)
    assert settings.log_level == "DEBUG"


def test_invalid_environment(monkeypatch, fresh_settings):
    monkeypatch.setenv("SHIFT_BRIBERY_JOBS", "0")
    with pytest.raises(ValueError):
        load_settings()


def test_write_artifact(tmp_path):
    path, name = write_artifact("x\n", "a.elect", str(tmp_path))
    assert name == "a.elect"
    path, name = write_artifact("y\n", "a.elect", str(tmp_path), overwrite=False)
    assert name == "a_1.elect"
    assert (tmp_path / "a.elect").read_text() == "x\n"
    assert (tmp_path / "a_1.elect").read_text() == "y\n"


def _square(x):
    return x * x


def test_map_tasks_keeps_order():
    assert map_tasks(_square, range(5)) == [0, 1, 4, 9, 16]
    assert map_tasks(_square, range(5), jobs=2) == [0, 1, 4, 9, 16]
