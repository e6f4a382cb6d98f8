"""Command-line surface: `semiquant <command> ...`."""
from __future__ import annotations

import sys
import time
import uuid
from typing import Optional, Sequence

from semiquant.backend.core.constants import EXIT_INTERNAL, EXIT_OK, SEMIQUANT_LOGGER
from semiquant.backend.core.logger import CorrelationCtx, get_logger
from semiquant.backend.core.setup import setup
from semiquant.backend.engine.exprio.serialization import report_schema, write_report
from semiquant.backend.exceptions.errors import SemiquantError
from semiquant.cli.commands import cmd_bracket, cmd_field, cmd_nogo, cmd_planewave
from semiquant.cli.parser import build_parser

logger = get_logger(SEMIQUANT_LOGGER)

HANDLERS = {
    "bracket": cmd_bracket,
    "nogo": cmd_nogo,
    "field": cmd_field,
    "planewave-check": cmd_planewave,
}


def _schema(out: Optional[str]) -> int:
    raw = report_schema()
    if out:
        with open(out, "wb") as fh:
            fh.write(raw)
    else:
        sys.stdout.write(raw.decode("utf-8"))
    return EXIT_OK


def _serve(host: str, port: Optional[int]) -> int:
    import uvicorn
    from semiquant.backend.core.config import get_settings

    port = port or get_settings().port
    logger.info(f"🔄 Starting Uvicorn server on {host}:{port}")
    uvicorn.run(
        "semiquant.backend.services.app_startup.app_startup_service:create_app",
        host=host,
        port=port,
        factory=True,
    )
    return EXIT_OK


def _dispatch(args) -> int:
    if args.command == "schema":
        return _schema(args.out)
    if args.command == "serve":
        return _serve(args.host, args.port)

    started = time.perf_counter()
    code, envelope = HANDLERS[args.command](args)
    if envelope is not None and args.json_out:
        if args.timing:
            envelope = envelope.model_copy(update={"wall_time_s": time.perf_counter() - started})
        write_report(envelope, args.json_out)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup()
    run_id = uuid.uuid4().hex
    with CorrelationCtx.use(run_id):
        logger.info(
            f"▶️ semiquant {args.command}",
            extra={"component": "cli", "event": "command_start", "command": args.command},
        )
        try:
            return _dispatch(args)
        except SemiquantError as e:
            sys.stderr.write(f"error: {e}\n")
            logger.error(
                f"❌ {type(e).__name__}: {e}",
                extra={"component": "cli", "event": "command_error", **e.details},
            )
            return e.exit_code
        except Exception as e:
            sys.stderr.write(f"internal error: {type(e).__name__}: {e}\n")
            logger.exception(f"❌ Unhandled error in {args.command}")
            return EXIT_INTERNAL


__all__ = ["build_parser", "main"]
