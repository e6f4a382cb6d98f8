from fastapi import APIRouter
from semiquant.backend.core.constants import TOOL_VERSION
from semiquant.backend.schemas.api_schemas import HealthResponse


router = APIRouter(
    prefix="/health",
    tags=["health"],
)


@router.get("", response_model=HealthResponse)
async def health_check():
    """Basic health check endpoint."""
    return HealthResponse(status="ok", version=TOOL_VERSION)
