import math
from typing import Any

import click
import orjson
from pydantic import BaseModel

DEFAULT_PRECISION = 4


def _precision(model: BaseModel, name: str) -> int:
    field = type(model).model_fields.get(name)
    extra = field.json_schema_extra if field is not None else None
    if isinstance(extra, dict):
        return int(extra.get("precision", DEFAULT_PRECISION))
    return DEFAULT_PRECISION


class KeyValueResponse:
    """
    Renders a response model as machine-parsable `key: value` lines.

    Floats are printed with at least four decimals, infinities as `inf`;
    fields left at None are omitted.
    """

    def __init__(self, content: BaseModel):
        self.content = content

    def render(self) -> str:
        lines = []
        for key, value in self.content.model_dump().items():
            if value is None:
                continue
            if isinstance(value, float):
                value = (
                    "inf"
                    if math.isinf(value)
                    else f"{value:.{_precision(self.content, key)}f}"
                )
            lines.append(f"{key}: {value}")
        return "\n".join(lines)

    def echo(self) -> None:
        click.echo(self.render())


class ORJSONResponse(KeyValueResponse):
    def render(self) -> str:
        def clean(obj: Any) -> Any:
            if isinstance(obj, BaseModel):
                return clean(obj.model_dump())
            elif isinstance(obj, dict):
                return {k: clean(v) for k, v in obj.items() if v is not None}
            elif isinstance(obj, (list, tuple)):
                return [clean(i) for i in obj]
            elif isinstance(obj, float) and math.isinf(obj):
                return "inf"
            else:
                return obj

        return orjson.dumps(clean(self.content)).decode()


def render_response(content: BaseModel, as_json: bool = False) -> None:
    (ORJSONResponse if as_json else KeyValueResponse)(content).echo()
