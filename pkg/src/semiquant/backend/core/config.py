from functools import lru_cache
from typing import List, Optional
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings
from semiquant.backend.core.logger import get_logger
from semiquant.backend.core.constants import (
    SEMIQUANT_LOGGER,
    SEMIQUANT_LOGS_DIR,
    SEMIQUANT_LOG_FILE,
    SEMIQUANT_CONSOLE_OUTPUT,
    LOCAL_DEV_PORT,
    DEFAULT_SEED,
    DEFAULT_K_GRID,
    DEFAULT_DTAU,
    DEFAULT_N_STEPS,
    DEFAULT_N_BURNIN,
    DEFAULT_N_BATCHES,
)

logger = get_logger(SEMIQUANT_LOGGER)


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # ============================================================
    # Logging Settings
    # ============================================================
    log_dir: Optional[str] = Field(
        default=SEMIQUANT_LOGS_DIR,
        description="Directory for the rotating JSON log file. Empty disables file logging.",
        alias="SEMIQUANT_LOG_DIR"
    )
    log_file: str = Field(
        default=SEMIQUANT_LOG_FILE,
        description="Log file name inside the log directory.",
        alias="SEMIQUANT_LOG_FILE"
    )
    log_console: bool = Field(
        default=SEMIQUANT_CONSOLE_OUTPUT,
        description="Mirror logs to stderr.",
        alias="SEMIQUANT_LOG_CONSOLE"
    )
    log_json: bool = Field(
        default=True,
        description="Emit logs as one JSON object per line.",
        alias="SEMIQUANT_LOG_JSON"
    )
    log_level: Optional[str] = Field(
        default=None,
        description="Explicit log level; overrides the APP_ENVIRONMENT default.",
        alias="SEMIQUANT_LOG_LEVEL"
    )
    app_environment: str = Field(
        default="dev",
        description="Deployment environment; prod lowers the default log level to ERROR.",
        alias="APP_ENVIRONMENT"
    )

    # ============================================================
    # Sampling Settings
    # ============================================================
    seed: int = Field(
        default=DEFAULT_SEED,
        description="Default seed for every randomized scan and simulation.",
        alias="SEMIQUANT_SEED"
    )

    # ============================================================
    # Langevin Simulation Settings
    # ============================================================
    k_grid: List[float] = Field(
        default_factory=lambda: list(DEFAULT_K_GRID),
        description="Default k^2 grid for field simulations.",
        alias="SEMIQUANT_K_GRID"
    )
    dtau: float = Field(
        default=DEFAULT_DTAU,
        gt=0,
        description="Default Langevin time step.",
        alias="SEMIQUANT_DTAU"
    )
    n_steps: int = Field(
        default=DEFAULT_N_STEPS,
        gt=0,
        description="Default number of Langevin steps.",
        alias="SEMIQUANT_N_STEPS"
    )
    n_burnin: int = Field(
        default=DEFAULT_N_BURNIN,
        ge=0,
        description="Default number of discarded burn-in steps.",
        alias="SEMIQUANT_N_BURNIN"
    )
    n_batches: int = Field(
        default=DEFAULT_N_BATCHES,
        ge=2,
        description="Number of batches for batch-means standard errors.",
        alias="SEMIQUANT_N_BATCHES"
    )
    workers: int = Field(
        default=1,
        ge=1,
        description="Process pool size for per-mode simulation.",
        alias="SEMIQUANT_WORKERS"
    )

    # ============================================================
    # HTTP Settings
    # ============================================================
    port: int = Field(
        default=LOCAL_DEV_PORT,
        description="Port for `semiquant serve`.",
        alias="SEMIQUANT_PORT"
    )

    model_config = {
        "env_file": ".env",
        "case_sensitive": False,
        "populate_by_name": True,
        "extra": "ignore",
    }

    @property
    def resolved_log_level(self) -> str:
        """DEBUG outside prod, ERROR in prod; SEMIQUANT_LOG_LEVEL wins over both."""
        if self.log_level:
            return self.log_level.upper()
        return "ERROR" if self.app_environment.strip().lower() == "prod" else "DEBUG"

    @field_validator("k_grid")
    @classmethod
    def _non_negative_grid(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("k_grid must not be empty")
        if any(v < 0 for v in value):
            raise ValueError("k_grid values must be >= 0")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get cached settings instance."""
    try:
        settings = Settings()
        logger.info("✅ Loaded settings")
        return settings
    except Exception as e:
        logger.error(f"❌ Failed to load settings: {e}")
        raise
