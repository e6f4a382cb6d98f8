import time
import uuid

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware
from starlette.responses import Response

from semiquant.backend.core.constants import SEMIQUANT_LOGGER
from semiquant.backend.core.logger import CorrelationCtx, get_logger

logger = get_logger(SEMIQUANT_LOGGER)


class CorrelationIdMiddleware(BaseHTTPMiddleware):
    """Runs each request under the inbound Request-ID (or a fresh run id) and reports its duration."""

    async def dispatch(self, request: Request, call_next):
        cid = request.headers.get("Request-ID") or uuid.uuid4().hex
        route = f"{request.method} {request.url.path}"
        started = time.perf_counter()

        with CorrelationCtx.use(cid):
            try:
                response: Response = await call_next(request)
            except Exception as e:
                logger.error(
                    f"❌ Request {route} failed: {e}",
                    extra={"component": "middleware", "event": "request_error", "path": request.url.path},
                )
                raise
            elapsed_ms = (time.perf_counter() - started) * 1000.0
            logger.info(
                f"📨 {route} -> {response.status_code} in {elapsed_ms:.1f} ms",
                extra={
                    "component": "middleware",
                    "event": "request_done",
                    "path": request.url.path,
                    "status": response.status_code,
                    "elapsed_ms": round(elapsed_ms, 3),
                },
            )

        response.headers["Request-ID"] = cid
        response.headers["Server-Timing"] = f"app;dur={elapsed_ms:.3f}"
        return response
