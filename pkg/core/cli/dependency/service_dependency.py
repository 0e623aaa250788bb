import functools
import re
from typing import Any, Callable, Dict, Type, TypeVar

import click

T = TypeVar("T", bound="AbstractService")
F = TypeVar("F", bound=Callable[..., Any])


class AbstractService:
    """
    Base class for services, built once per command invocation.

    Subclasses declare their constructor dependencies in the `DEPENDENCIES`
    class attribute. Each entry maps a constructor argument name to a resolver
    that receives the active click context, e.g.

        DEPENDENCIES = {"executor": get_executor}

    where `get_executor(ctx)` reads `--backend` / `--seed` from `ctx.params`.
    """

    DEPENDENCIES: Dict[str, Callable[[click.Context], Any]] = {}

    def __init__(self, **kwargs: Any):
        for key, value in kwargs.items():
            setattr(self, key, value)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def close(self) -> None:
        """Release resources acquired by dependencies."""

    @classmethod
    def resolve(cls: Type[T], ctx: click.Context) -> T:
        current_class_deps = getattr(cls, "DEPENDENCIES", {})
        return cls(**{name: resolver(ctx) for name, resolver in current_class_deps.items()})

    @classmethod
    def get_dependency(cls, name: str | None = None) -> Callable[[F], F]:
        """
        Returns a decorator injecting a resolved instance of this service.

        The instance is passed to the command callback as keyword argument
        `name` (default: the class name in snake case, e.g. `stego_service`)
        and closed when the callback returns.
        """
        param = name or re.sub(r"(?<!^)(?=[A-Z])", "_", cls.__name__).lower()

        def decorator(f: F) -> F:
            @functools.wraps(f)
            def wrapper(*args: Any, **kwargs: Any) -> Any:
                ctx = click.get_current_context()
                with cls.resolve(ctx) as service:
                    kwargs[param] = service
                    return f(*args, **kwargs)

            return wrapper  # type: ignore[return-value]

        return decorator
