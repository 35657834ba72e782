"""Application configuration management."""

from typing import Any

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables (prefix ``SRING_``)."""

    model_config = SettingsConfigDict(
        env_prefix="SRING_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application settings
    app_name: str = Field(default="Schur Ring Engine")
    app_version: str = Field(default="1.0.0")
    debug: bool = Field(default=False)

    # Search and enumeration caps
    cap_group_order: int = Field(default=4096, gt=0)
    cap_isomorphism_order: int = Field(default=1024, gt=0)
    cap_cayley_order: int = Field(default=512, gt=0)
    cap_convolution_order: int = Field(default=2**16, gt=0)
    cap_lattice_automorphisms: int = Field(default=64, gt=0)
    cap_downsets: int = Field(default=2**20, gt=0)
    # Materialized lattices keep quadratic order, meet and join tables
    cap_lattice_elements: int = Field(default=2048, gt=0)
    cap_realize_order: int = Field(default=24, gt=0)
    cap_blocks: int = Field(default=40, gt=0)
    cap_exhaustive_order: int = Field(default=10, gt=0)
    cap_cyclic_enumeration: int = Field(default=36, gt=0)
    cap_boolean_rank: int = Field(default=20, gt=0)
    cap_symbolic_dimension: int = Field(default=4096, gt=0)

    # Concrete instantiation of symbolic results runs up to this group order
    concrete_crosscheck_order: int = Field(default=2**16, gt=0)
    # Constructions re-verify product closure elementwise up to this order
    verify_max_order: int = Field(default=4096, gt=0)

    # Worker processes for suite-style commands
    jobs: int = Field(default=1, gt=0)

    # Logging settings
    log_level: str = Field(default="WARNING")
    log_format: str = Field(default="console")  # json or console


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get application settings."""
    return settings


def override_settings(**overrides: Any) -> Settings:
    """
    Replace selected settings for the rest of the process.

    ``None`` values are ignored so CLI flags can be passed through unfiltered.

    Args:
        **overrides: Field names and their new values

    Returns:
        The updated global settings instance
    """
    global settings
    values = {key: value for key, value in overrides.items() if value is not None}
    if values:
        settings = settings.model_copy(update=values)
    return settings


def reset_settings() -> Settings:
    """Reload settings from the environment, dropping every override."""
    global settings
    settings = Settings()
    return settings
