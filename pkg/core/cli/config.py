from enum import Enum
from pathlib import Path
from typing import Annotated

import click
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.exception.request import InvalidRequestException
from core.imaging.schemas import Channel, Image, ImagePlane
from core.kernel.schemas import Backend

PLANE_CHOICES = ["r", "g", "b", "red", "green", "blue"]
BACKEND_CHOICES = ["seq", "par", "shuf", "sequential", "parallel", "shuffled"]


class Subcommand(str, Enum):
    EMBED = "embed"
    EXTRACT = "extract"
    CAPACITY = "capacity"
    PSNR = "psnr"


REQUIRED_PATHS = {
    Subcommand.EMBED: ("cover", "payload", "out"),
    Subcommand.EXTRACT: ("stego", "out"),
    Subcommand.CAPACITY: ("cover",),
    Subcommand.PSNR: ("reference", "test"),
}


class CliConfig(BaseModel):
    """
    Validated arguments of one command invocation.

    `plane` stays None unless --plane was given, so grayscale inputs can tell
    an explicit channel request from the default.
    """

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    cover: Path | None = None
    stego: Path | None = None
    reference: Path | None = None
    test: Path | None = None
    payload: Path | None = None
    out: Path | None = None
    plane: Channel | None = None
    backend: Backend | None = None
    seed: int | None = None
    raw: bool = False
    length: Annotated[int, Field(ge=0)] | None = None

    @field_validator("plane", mode="before")
    @classmethod
    def parse_plane(cls, value):
        return Channel.parse(value) if isinstance(value, str) else value

    @field_validator("backend", mode="before")
    @classmethod
    def parse_backend(cls, value):
        return Backend.parse(value) if isinstance(value, str) else value

    @model_validator(mode="after")
    def check_required_paths(self):
        missing = [name for name in REQUIRED_PATHS[self.subcommand] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.subcommand.value} requires {', '.join(missing)}")
        return self

    def select_plane(self, image: Image, default: Channel = Channel.RED) -> Channel:
        """
        Channel to operate on. Grayscale images have a single plane; asking
        for anything but the default channel there is an error.
        """
        if isinstance(image, ImagePlane):
            if self.plane is not None and self.plane is not default:
                raise InvalidRequestException(
                    f"--plane {self.plane.value} given for a grayscale image",
                    plane=self.plane.value,
                )
            return default
        return self.plane or default


plane_option = click.option(
    "--plane",
    type=click.Choice(PLANE_CHOICES, case_sensitive=False),
    default=None,
    help="Colour plane carrying the payload (default: red).",
)
backend_option = click.option(
    "--backend",
    type=click.Choice(BACKEND_CHOICES, case_sensitive=False),
    default=None,
    help="Kernel execution backend (default: APP_DEFAULT_BACKEND).",
)
seed_option = click.option(
    "--seed", type=int, default=None, help="Seed of the shuffled backend."
)
