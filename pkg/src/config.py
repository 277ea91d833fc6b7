# lcx — Local connectivity and cycle extendability engine
# SPDX-License-Identifier: MIT

"""Application configuration using Pydantic Settings."""

import os
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

OutputFormat = Literal["text", "json", "csv"]


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix ``LCX_``)."""

    model_config = SettingsConfigDict(
        env_prefix="LCX_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Sweeps
    jobs: int = Field(default=0, ge=0)  # 0 = one worker per core
    chunk_size: int = Field(default=64, ge=1)
    progress: bool = True

    # Output
    output_format: OutputFormat = "text"
    log_level: str = "WARNING"

    # Enumeration cache (graph6 files), disabled when empty
    cache_dir: str = ""

    # Algorithm limits
    spectrum_max_order: int = Field(default=16, ge=3, le=24)
    machinery_max_order: int = Field(default=7, ge=3, le=10)

    # Sweep profile (YAML)
    config_path: str = "lcx.yaml"

    def get_jobs(self) -> int:
        """Resolve the worker count."""
        if self.jobs:
            return self.jobs
        return os.cpu_count() or 1

    def get_cache_dir(self) -> Path | None:
        """Cache directory, created on demand."""
        if not self.cache_dir:
            return None
        path = Path(self.cache_dir).expanduser()
        path.mkdir(parents=True, exist_ok=True)
        return path


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
