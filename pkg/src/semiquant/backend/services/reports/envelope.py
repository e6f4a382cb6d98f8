from typing import Any, Dict, Optional

from semiquant.backend.schemas.reports import ReportEnvelope


def build_envelope(
    command: str,
    parameters: Dict[str, Any],
    payload,
    wall_time_s: Optional[float] = None,
) -> ReportEnvelope:
    """Wrap a payload; parameters with value None are dropped so reports stay minimal."""
    return ReportEnvelope(
        command=command,
        parameters={k: v for k, v in parameters.items() if v is not None},
        payload=payload,
        wall_time_s=wall_time_s,
    )
