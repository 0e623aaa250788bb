import logging
import time
from typing import Any, Callable

import click

logger = logging.getLogger(__name__)

CallNext = Callable[[click.Context], Any]


class BaseMiddleware:
    """Wraps the application's dispatch: `dispatch(ctx, call_next)`."""

    def __init__(self, app: CallNext):
        self.app = app

    def __call__(self, ctx: click.Context) -> Any:
        return self.dispatch(ctx, self.app)

    def dispatch(self, ctx: click.Context, call_next: CallNext) -> Any:
        return call_next(ctx)


class ProcessingTimeMiddleware(BaseMiddleware):
    def dispatch(self, ctx: click.Context, call_next: CallNext) -> Any:
        start_time = time.perf_counter()
        try:
            return call_next(ctx)
        finally:
            processing_time = (time.perf_counter() - start_time) * 1000
            logger.info(
                "%s processing_time_ms=%s",
                ctx.invoked_subcommand or ctx.info_name,
                round(processing_time, 2),
            )
