import logging
from typing import Any, Callable

import click
from pydantic import ValidationError

from apps.settings import settings
from core.cli.app.exception_handlers import (
    abstract_exception_handler,
    exception_handler,
    os_error_handler,
    validation_exception_handler,
)
from core.cli.loaders.command import autoload_commands
from core.cli.middlewares.process_time_middleware import ProcessingTimeMiddleware
from core.exception.core import AbstractException

__version__ = "1.0.0"

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
HANDLER_NAME = "bitplane-steg"

ExceptionHandler = Callable[[click.Context, Any], int]


class App(click.Group):
    """
    Application command group.

    Exceptions escaping a subcommand are routed to the most specific handler
    registered with `add_exception_handler`, whose return value becomes the
    process exit code. Middlewares wrap the dispatch of every invocation.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.exception_handlers: dict[type[BaseException], ExceptionHandler] = {}
        self.user_middleware: list[type] = []

    def add_exception_handler(
        self, exc_class: type[BaseException], handler: ExceptionHandler
    ) -> None:
        self.exception_handlers[exc_class] = handler

    def add_middleware(self, middleware_class: type) -> None:
        self.user_middleware.append(middleware_class)

    def _lookup_handler(self, exc: BaseException) -> ExceptionHandler | None:
        for cls in type(exc).__mro__:
            if cls in self.exception_handlers:
                return self.exception_handlers[cls]
        return None

    def invoke(self, ctx: click.Context) -> Any:
        call_next = super().invoke
        # first added middleware is the outermost
        for middleware_class in reversed(self.user_middleware):
            call_next = middleware_class(call_next)
        try:
            return call_next(ctx)
        except (click.exceptions.Exit, click.exceptions.Abort, click.ClickException):
            raise
        except Exception as exc:
            handler = self._lookup_handler(exc)
            if handler is None:
                raise
            ctx.exit(handler(ctx, exc))


def configure_logging(level: str | int) -> None:
    root = logging.getLogger()
    for handler in list(root.handlers):
        if handler.get_name() == HANDLER_NAME:
            root.removeHandler(handler)

    formatter = logging.Formatter(LOG_FORMAT)
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if settings.LOG_FILE:
        handlers.append(logging.FileHandler(settings.LOG_FILE))
    for handler in handlers:
        handler.set_name(HANDLER_NAME)
        handler.setFormatter(formatter)
        root.addHandler(handler)
    root.setLevel(level)


def create_app() -> App:
    configure_logging(settings.log_level)

    @click.group(
        cls=App,
        name=settings.NAME,
        help="Hide byte payloads in the two least-significant bits of image pixels.",
    )
    @click.option("--json", "json_output", is_flag=True, help="Print results as JSON.")
    @click.option("--verbose", "-v", is_flag=True, help="Log debug output to stderr.")
    @click.version_option(__version__, prog_name=settings.NAME)
    @click.pass_context
    def app(ctx: click.Context, json_output: bool, verbose: bool):
        ctx.ensure_object(dict)
        ctx.obj["json"] = json_output
        if verbose:
            logging.getLogger().setLevel(logging.DEBUG)

    for name, command in autoload_commands("apps").commands.items():
        app.add_command(command, name)

    app.add_middleware(ProcessingTimeMiddleware)

    app.add_exception_handler(AbstractException, abstract_exception_handler)
    app.add_exception_handler(OSError, os_error_handler)
    app.add_exception_handler(ValidationError, validation_exception_handler)
    app.add_exception_handler(Exception, exception_handler)

    return app
