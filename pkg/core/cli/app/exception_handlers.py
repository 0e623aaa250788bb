import logging
import traceback
import uuid

import click
import orjson
from pydantic import ValidationError

from apps.settings import settings
from core.exception.core import AbstractException

logger = logging.getLogger(__name__)

IO_ERROR_EXIT_CODE = 4
VALIDATION_EXIT_CODE = 2
INTERNAL_ERROR_EXIT_CODE = 1


def _report(ctx: click.Context, payload: dict) -> None:
    obj = ctx.find_root().obj or {}
    if obj.get("json"):
        click.echo(orjson.dumps(payload).decode(), err=True)
    else:
        click.echo(f"error: {payload['message']}", err=True)


def abstract_exception_handler(ctx: click.Context, exc: AbstractException) -> int:
    logger.debug("%s exit=%d", exc, exc.exit_code)
    _report(ctx, exc.to_json())
    return exc.exit_code


def os_error_handler(ctx: click.Context, exc: OSError) -> int:
    message = f"{exc.filename}: {exc.strerror}" if exc.filename else str(exc)
    _report(ctx, {"message": message, "error_code": "IO_ERROR"})
    return IO_ERROR_EXIT_CODE


def validation_exception_handler(ctx: click.Context, exc: ValidationError) -> int:
    errors = [
        f"{'.'.join(str(part) for part in error.get('loc', ()))}: {error.get('msg')}"
        for error in exc.errors()
    ]
    _report(
        ctx,
        {
            "message": "invalid arguments: " + "; ".join(errors),
            "error_code": "VALIDATION_ERROR",
            "errors": errors,
        },
    )
    return VALIDATION_EXIT_CODE


def exception_handler(ctx: click.Context, exc: Exception) -> int:
    track_id = str(uuid.uuid4())
    logger.error("unhandled error [%s]: %s", track_id, exc)
    if settings.DEBUG:
        traceback.print_exception(exc)
    _report(
        ctx,
        {
            "message": f"internal error ({exc.__class__.__name__}), track id {track_id}",
            "error_code": "INTERNAL_ERROR",
        },
    )
    return INTERNAL_ERROR_EXIT_CODE
