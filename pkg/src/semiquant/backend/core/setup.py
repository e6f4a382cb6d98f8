from pathlib import Path
from typing import Optional
from logging import Logger
from dotenv import load_dotenv
from semiquant.backend.core.logger import configure_logging, get_logger
from semiquant.backend.core.config import get_settings
from semiquant.backend.core.constants import (
    SEMIQUANT_MAX_FILE_SIZE,
    SEMIQUANT_BACKUP_COUNT,
    SEMIQUANT_LOGGER,
)

_SETUP_COMPLETED = False


def setup() -> Optional[Logger]:
    """Load .env, configure logging from settings. Safe to call repeatedly."""
    global _SETUP_COMPLETED
    if _SETUP_COMPLETED:
        return get_logger(SEMIQUANT_LOGGER)
    _SETUP_COMPLETED = True

    load_dotenv(Path.cwd() / ".env")

    settings = get_settings()
    log_file = Path(settings.log_dir) / settings.log_file if settings.log_dir else None

    logger = configure_logging(
        log_file=log_file,
        max_file_size=SEMIQUANT_MAX_FILE_SIZE,
        backup_count=SEMIQUANT_BACKUP_COUNT,
        console_output=settings.log_console,
        json_output=settings.log_json,
        logger_name=SEMIQUANT_LOGGER,
        level=settings.resolved_log_level,
    )
    logger.info("✅ Setup completed successfully")
    return logger
