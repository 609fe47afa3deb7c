"""Configuration management using Pydantic Settings."""

from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix ``GKM_``)."""

    model_config = SettingsConfigDict(
        env_prefix="GKM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Algebra settings
    max_degree: Optional[int] = Field(
        default=None,
        description="Maximal cohomological degree for per-degree checks (default 2n+4)",
    )
    max_face_dim: Optional[int] = Field(
        default=None,
        description="Maximal face dimension to enumerate (default j-1)",
    )

    # Exact linear algebra
    rank_method: str = Field(
        default="FF",
        description="sympy rref_den method used for exact ranks (FF = fraction-free)",
    )
    dense_threshold: float = Field(
        default=0.05,
        description="Matrix density above which exact ranks use dense matrices",
    )
    homology_oracle_limit: int = Field(
        default=200,
        description="Simplex count under which the dense rational oracle is affordable",
    )

    # Output settings
    output_format: str = Field(default="json", description="Report format: json or text")
    fixtures_dir: Path = Field(
        default=Path(__file__).resolve().parents[2] / "fixtures",
        description="Directory holding the bundled JSON fixtures",
    )

    # Development settings
    log_level: str = Field(default="WARNING", description="Logging level")
    debug: bool = Field(default=False, description="Enable debug mode")

    @field_validator("max_degree", "max_face_dim")
    def validate_nonnegative(cls, v):
        """Reject negative degree and dimension limits."""
        if v is not None and v < 0:
            raise ValueError("Limits must be nonnegative")
        return v

    @field_validator("rank_method")
    def validate_rank_method(cls, v):
        """Validate the sympy elimination method name."""
        valid_methods = ["FF", "CD", "GJ", "auto"]
        if v not in valid_methods:
            raise ValueError(f"Invalid rank method. Must be one of: {valid_methods}")
        return v

    @field_validator("output_format")
    def validate_output_format(cls, v):
        """Validate output format."""
        if v.lower() not in ("json", "text"):
            raise ValueError("Invalid output format. Must be json or text")
        return v.lower()

    @field_validator("log_level")
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level. Must be one of: {valid_levels}")
        return v.upper()


_settings: Optional[Settings] = None


def load_settings() -> Settings:
    """Load and validate settings from environment."""
    return Settings()


def get_settings() -> Settings:
    """Return the process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def use_settings(settings: Settings) -> None:
    """Install ``settings`` as the process-wide settings."""
    global _settings
    _settings = settings
