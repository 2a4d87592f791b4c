"""
Configuration – log-normal means testing (CAT + LRT).
"""
import logging
import os
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s – %(message)s"


class Settings(BaseSettings):
    # ── CAT ───────────────────────────────────────────────────
    default_replicates: int = 5000
    min_replicates: int = 100
    alpha: float = 0.05

    # ── Restricted MLE ────────────────────────────────────────
    restricted_tol: float = 1e-10
    restricted_max_iter: int = 200
    max_bracket_widenings: int = 60

    # ── LRT ───────────────────────────────────────────────────
    lambda_slack: float = 1e-8  # negative Λ within this is clamped to 0

    # ── Simulation studies ────────────────────────────────────
    study_reps: int = 2000
    study_replicates: int = 1000
    max_failure_fraction: float = 0.01

    # ── Runtime ───────────────────────────────────────────────
    threads: int = 0  # 0 = os.cpu_count()
    log_level: str = "INFO"

    # ── API ───────────────────────────────────────────────────
    host: str = "0.0.0.0"
    port: int = 8000
    max_upload_size_mb: int = 20
    allowed_origins: list[str] = ["*"]

    model_config = SettingsConfigDict(
        env_prefix="LNCAT_",
        env_file=".env",
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    return Settings()


def resolve_threads(threads: int | None) -> int:
    """Map a thread request (None = configured, 0 = auto) to a worker count."""
    if threads is None:
        threads = get_settings().threads
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def configure_logging(level: str | None = None) -> None:
    logging.basicConfig(
        level=(level or get_settings().log_level).upper(),
        format=LOG_FORMAT,
    )
