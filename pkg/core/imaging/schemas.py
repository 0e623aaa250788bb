from enum import Enum

import numpy as np
from pydantic import field_validator, model_validator

from core.arrays import ArrayModel, as_uint8_array


class Channel(str, Enum):
    RED = "red"
    GREEN = "green"
    BLUE = "blue"

    @classmethod
    def parse(cls, value: "str | Channel") -> "Channel":
        if isinstance(value, Channel):
            return value
        aliases = {"r": cls.RED, "g": cls.GREEN, "b": cls.BLUE}
        key = value.strip().lower()
        return aliases.get(key) or cls(key)


class ImagePlane(ArrayModel):
    """
    One 8-bit channel, stored row-major as a (height, width) array.

    Row r of the raster is `samples[r]`; `samples.ravel()` is the flat
    raster-order sequence.
    """

    samples: np.ndarray

    @field_validator("samples")
    @classmethod
    def ensure_grid(cls, value: np.ndarray) -> np.ndarray:
        if value.ndim != 2:
            raise ValueError(f"a plane is a 2-D sample grid, got {value.ndim} dims")
        return value

    @classmethod
    def from_raster(cls, width: int, height: int, samples) -> "ImagePlane":
        array = as_uint8_array(samples)
        if array.size != width * height:
            raise ValueError(
                f"{array.size} samples do not fill a {width}x{height} plane"
            )
        return cls(samples=array.reshape(height, width))

    @classmethod
    def zeros(cls, width: int, height: int) -> "ImagePlane":
        return cls(samples=np.zeros((height, width), dtype=np.uint8))

    @property
    def width(self) -> int:
        return int(self.samples.shape[1])

    @property
    def height(self) -> int:
        return int(self.samples.shape[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.width, self.height


class RgbImage(ArrayModel):
    """A 24-bit image as three planes of identical dimensions."""

    red: ImagePlane
    green: ImagePlane
    blue: ImagePlane

    @model_validator(mode="after")
    def check_dimensions(self):
        if not (self.red.shape == self.green.shape == self.blue.shape):
            raise ValueError(
                "planes differ in size: "
                f"red {self.red.shape}, green {self.green.shape}, blue {self.blue.shape}"
            )
        return self

    @classmethod
    def from_interleaved(cls, width: int, height: int, raster) -> "RgbImage":
        pixels = as_uint8_array(raster).reshape(height, width, 3)
        return cls(
            red=ImagePlane(samples=pixels[:, :, 0]),
            green=ImagePlane(samples=pixels[:, :, 1]),
            blue=ImagePlane(samples=pixels[:, :, 2]),
        )

    def interleaved(self) -> np.ndarray:
        return np.stack(
            [self.red.samples, self.green.samples, self.blue.samples], axis=-1
        )

    @property
    def planes(self) -> tuple[ImagePlane, ImagePlane, ImagePlane]:
        return self.red, self.green, self.blue

    @property
    def width(self) -> int:
        return self.red.width

    @property
    def height(self) -> int:
        return self.red.height

    @property
    def shape(self) -> tuple[int, int]:
        return self.red.shape


Image = ImagePlane | RgbImage
