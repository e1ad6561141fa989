from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings, read from BURLING_* environment variables or a .env file"""

    model_config = SettingsConfigDict(
        env_prefix="BURLING_", env_file=".env", extra="ignore"
    )

    # Node limits for the exhaustive searches
    search_budget: int = 10_000_000
    chromatic_budget: int = 10_000_000

    # Construction
    max_level: int = 5
    verify_max_level: int = 3

    # Sampled constraint checks
    sample_size: int = 1000
    sample_seed: int = 0

    violation_cap: int = 32
    canvas_size: int = 1000
    log_level: str = "INFO"


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
