from semiquant.backend.core.setup import setup
from semiquant.backend.core.logger import get_logger
from semiquant.backend.core.constants import SEMIQUANT_LOGGER
from semiquant.backend.services.app_startup.app_startup_service import create_app
from semiquant.cli import main
import uvicorn
import sys

logger = get_logger(SEMIQUANT_LOGGER)


def run_cli():
    """Console-script entry point."""
    sys.exit(main())


def run_app():
    """Run the FastAPI application for production."""
    return create_app()


def run_app_locally():
    """Run the FastAPI application locally."""
    setup()
    from semiquant.backend.core.config import get_settings

    port = get_settings().port
    try:
        logger.info(f"🔄 Starting Uvicorn server on localhost:{port}")
        uvicorn.run(
            "semiquant.backend.services.app_startup.app_startup_service:create_app",
            host="0.0.0.0",
            port=port,
            reload=True,
            factory=True,
        )
    except Exception:
        sys.exit(1)


if __name__ == "__main__":
    run_cli()
