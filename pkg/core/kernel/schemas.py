from enum import Enum
from typing import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.arrays import ArrayModel

BLOCK_COUNT = 4
THREAD_CAP = 32


class Backend(str, Enum):
    SEQUENTIAL = "sequential"
    PARALLEL = "parallel"
    SHUFFLED = "shuffled"

    @classmethod
    def parse(cls, value: "str | Backend") -> "Backend":
        if isinstance(value, Backend):
            return value
        aliases = {"seq": cls.SEQUENTIAL, "par": cls.PARALLEL, "shuf": cls.SHUFFLED}
        key = value.strip().lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


class MaskTable(BaseModel):
    """Per-block data masks, shift amounts and the pixel clear mask."""

    model_config = ConfigDict(frozen=True)

    data_mask: tuple[int, int, int, int] = (0x03, 0x0C, 0x30, 0xC0)
    shift_bits: tuple[int, int, int, int] = (0, 2, 4, 6)
    pixel_clear_mask: int = 0xFC

    @model_validator(mode="after")
    def check_partition(self):
        combined = 0
        for block_id, (mask, shift) in enumerate(zip(self.data_mask, self.shift_bits)):
            if shift != 2 * block_id or mask != 0x03 << shift:
                raise ValueError(f"mask/shift mismatch at block {block_id}")
            if combined & mask:
                raise ValueError("data masks overlap")
            combined |= mask
        if combined != 0xFF:
            raise ValueError("data masks do not cover a full byte")
        if self.pixel_clear_mask != 0xFF ^ self.data_mask[0]:
            raise ValueError("pixel clear mask must keep the upper 6 bits")
        return self


MASK_TABLE = MaskTable()


class KernelIndex(BaseModel):
    model_config = ConfigDict(frozen=True)

    block_id: Annotated[int, Field(ge=0, lt=BLOCK_COUNT)]
    thread_id: Annotated[int, Field(ge=0)]


class LaunchConfig(BaseModel):
    """Grid geometry: `num_blocks` blocks of `threads_per_block` threads."""

    model_config = ConfigDict(frozen=True)

    num_blocks: Annotated[int, Field(ge=1, le=BLOCK_COUNT)] = BLOCK_COUNT
    threads_per_block: Annotated[int, Field(ge=1)]

    @classmethod
    def for_stream(
        cls,
        length: int,
        thread_cap: int = THREAD_CAP,
        num_blocks: int = BLOCK_COUNT,
    ) -> "LaunchConfig":
        """n = min(thread_cap, length); a single thread for empty streams."""
        return cls(
            num_blocks=num_blocks,
            threads_per_block=min(thread_cap, length) if length >= 1 else 1,
        )

    def work_items(self, thread_id: int, work_extent: int) -> np.ndarray:
        # grid-stride: thread j covers j, j+n, j+2n, ... < work_extent
        return np.arange(thread_id, work_extent, self.threads_per_block)


class PixelRow(ArrayModel):
    """One raster row of 8-bit samples."""

    pixels: np.ndarray

    @field_validator("pixels")
    @classmethod
    def ensure_flat(cls, value: np.ndarray) -> np.ndarray:
        if value.ndim != 1:
            raise ValueError("a pixel row must be one-dimensional")
        return value

    @property
    def width(self) -> int:
        return int(self.pixels.shape[0])


class PayloadChunk(ArrayModel):
    """The bytes embedded into (or extracted from) one row."""

    data: np.ndarray

    @field_validator("data")
    @classmethod
    def ensure_flat(cls, value: np.ndarray) -> np.ndarray:
        if value.ndim != 1:
            raise ValueError("a payload chunk must be one-dimensional")
        return value

    @property
    def chunk_len(self) -> int:
        return int(self.data.shape[0])

    def to_bytes(self) -> bytes:
        return self.data.tobytes()
