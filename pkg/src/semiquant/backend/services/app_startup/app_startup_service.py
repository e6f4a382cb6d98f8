from fastapi import FastAPI, HTTPException
from fastapi.exceptions import RequestValidationError
from typing import AsyncGenerator
from contextlib import asynccontextmanager
from fastapi.responses import ORJSONResponse
from semiquant.backend.core.setup import setup
from semiquant.backend.core.constants import SEMIQUANT_LOGGER, TOOL_VERSION
from semiquant.backend.core.logger import get_logger
from semiquant.backend.middleware.middleware import CorrelationIdMiddleware
from semiquant.backend.routers import health, verify
from semiquant.backend.exceptions.errors import SemiquantError
from semiquant.backend.exceptions.api_exceptions import (
    validation_exception_handler,
    domain_exception_handler,
    http_exception_handler,
    general_exception_handler,
)

logger = get_logger(SEMIQUANT_LOGGER)


def _setup_exception_handlers(app: FastAPI) -> None:
    """Setup exception handlers for the FastAPI application."""
    app.add_exception_handler(RequestValidationError, validation_exception_handler)
    app.add_exception_handler(SemiquantError, domain_exception_handler)
    app.add_exception_handler(HTTPException, http_exception_handler)
    app.add_exception_handler(Exception, general_exception_handler)


def _setup_middleware(app: FastAPI) -> None:
    """Setup middleware for the FastAPI application."""
    app.add_middleware(CorrelationIdMiddleware)


def _setup_routers(app: FastAPI) -> None:
    """Setup routers for the FastAPI application."""
    app.include_router(health.router)
    app.include_router(verify.router)


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncGenerator[None, None]:
    """Lifespan context manager for FastAPI startup and shutdown."""
    from semiquant.backend.core.config import get_settings

    logger.info("🚀 Application startup...")
    settings = get_settings()
    logger.info(
        "✅ Application startup completed",
        extra={"component": "app", "event": "startup", "seed": settings.seed, "workers": settings.workers},
    )
    yield
    logger.info("🛑 Application shutdown...")


def create_app() -> FastAPI:
    """Create and configure the FastAPI application."""
    setup()
    try:
        app = FastAPI(
            title="semiquant",
            description="Exact and numerical verifiers for hybrid quantum-classical dynamics",
            version=TOOL_VERSION,
            lifespan=lifespan,
            default_response_class=ORJSONResponse,
        )

        _setup_exception_handlers(app)
        _setup_middleware(app)
        _setup_routers(app)

        logger.info("✅ FastAPI app configured successfully")
        return app

    except Exception as e:
        logger.exception(f"❌ Error during FastAPI app setup: {e}")
        raise
