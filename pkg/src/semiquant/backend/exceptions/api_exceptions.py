from fastapi import Request, HTTPException, status
from fastapi.responses import ORJSONResponse
from fastapi.exceptions import RequestValidationError
from semiquant.backend.core.logger import get_logger
from semiquant.backend.core.constants import SEMIQUANT_LOGGER, EXIT_BAD_INPUT
from semiquant.backend.exceptions.errors import SemiquantError

logger = get_logger(SEMIQUANT_LOGGER)


async def validation_exception_handler(request: Request, exc: RequestValidationError) -> ORJSONResponse:
    """
    Handle FastAPI/Pydantic validation errors (422 Unprocessable Content).
    """
    errors = exc.errors()
    error_details = ", ".join([f"{err['loc']}: {err['msg']}" for err in errors])

    logger.error(
        f"❌ Validation error in {request.url.path}: {error_details}",
        exc_info=False,
    )

    return ORJSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content={
            "detail": [
                {"loc": list(err.get("loc", ())), "msg": err.get("msg"), "type": err.get("type")}
                for err in errors
            ],
            "message": "Validation error: Please check your request parameters",
        },
    )


async def domain_exception_handler(request: Request, exc: SemiquantError) -> ORJSONResponse:
    """
    Bad-input domain errors become 400 with their position/parameter details;
    anything else raised by the engine is a 500.
    """
    if exc.exit_code == EXIT_BAD_INPUT:
        logger.warning(
            f"⚠️ Rejected input in {request.url.path}: {exc}",
            extra={"component": "api", "event": "bad_input", **exc.details},
        )
        return ORJSONResponse(
            status_code=status.HTTP_400_BAD_REQUEST,
            content={"detail": exc.to_dict(), "message": "Invalid input"},
        )

    logger.error(
        f"❌ Engine failure in {request.url.path}: {type(exc).__name__}: {exc}",
        exc_info=True,
    )
    return ORJSONResponse(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        content={"detail": exc.to_dict(), "message": "Internal server error"},
    )


async def http_exception_handler(request: Request, exc: HTTPException) -> ORJSONResponse:
    """
    Handle HTTP exceptions raised but not caught by route handlers.
    """
    if exc.status_code != status.HTTP_422_UNPROCESSABLE_ENTITY:
        logger.error(
            f"❌ HTTP {exc.status_code} error in {request.url.path}: {exc.detail}",
            exc_info=False,
        )
    return ORJSONResponse(
        status_code=exc.status_code,
        content={
            "detail": exc.detail,
            "message": f"HTTP {exc.status_code} error",
        },
    )


async def general_exception_handler(request: Request, exc: Exception) -> ORJSONResponse:
    """
    Catch-all for exceptions that weren't caught by other handlers.
    """
    logger.error(
        f"❌ Unhandled exception in {request.url.path}: {type(exc).__name__}: {str(exc)}",
        exc_info=True,
    )

    return ORJSONResponse(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        content={
            "detail": "An unexpected error occurred.",
            "message": "Internal server error",
        },
    )
