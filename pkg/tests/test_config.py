"""Tests for the pydantic settings layer."""

import pytest
from pydantic import ValidationError

from src.utils.config import Settings, get_settings, load_settings, use_settings


def test_defaults(monkeypatch):
    for name in ("GKM_MAX_DEGREE", "GKM_LOG_LEVEL", "GKM_OUTPUT_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings(_env_file=None)
    assert settings.max_degree is None
    assert settings.max_face_dim is None
    assert settings.rank_method == "FF"
    assert settings.output_format == "json"
    assert settings.log_level == "WARNING"
    assert (settings.fixtures_dir / "octahedron.json").is_file()


def test_environment_prefix(monkeypatch):
    monkeypatch.setenv("GKM_MAX_DEGREE", "8")
    monkeypatch.setenv("GKM_LOG_LEVEL", "debug")
    monkeypatch.setenv("GKM_OUTPUT_FORMAT", "TEXT")
    settings = load_settings()
    assert settings.max_degree == 8
    assert settings.log_level == "DEBUG"
    assert settings.output_format == "text"


@pytest.mark.parametrize(
    "field,value",
    [
        ("log_level", "LOUD"),
        ("rank_method", "magic"),
        ("output_format", "xml"),
        ("max_degree", -2),
        ("max_face_dim", -1),
    ],
)
def test_invalid_values_rejected(field, value):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: value})


def test_use_settings_installs_process_settings():
    previous = get_settings()
    custom = Settings(_env_file=None, dense_threshold=0.5)
    try:
        use_settings(custom)
        assert get_settings() is custom
    finally:
        use_settings(previous)
