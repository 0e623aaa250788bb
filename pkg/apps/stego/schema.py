import struct
from typing import Annotated, ClassVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.exception.stego import CorruptHeaderException, NotAStegoImageException
from core.kernel.schemas import BLOCK_COUNT


class StegoHeader(BaseModel):
    """
    8-byte prefix of every self-describing stream: magic "STG1" followed by
    the payload length as a big-endian uint32.
    """

    model_config = ConfigDict(frozen=True)

    FORMAT: ClassVar[str] = ">4sI"
    SIZE: ClassVar[int] = struct.calcsize(FORMAT)
    MAGIC: ClassVar[bytes] = b"STG1"

    magic: bytes = MAGIC
    payload_len: Annotated[int, Field(ge=0, le=0xFFFFFFFF)]

    def to_bytes(self) -> bytes:
        return struct.pack(self.FORMAT, self.magic, self.payload_len)

    @classmethod
    def from_bytes(cls, data: bytes) -> "StegoHeader":
        if len(data) != cls.SIZE:
            raise CorruptHeaderException(
                f"header must be {cls.SIZE} bytes, got {len(data)}"
            )
        magic, payload_len = struct.unpack(cls.FORMAT, data)
        if magic != cls.MAGIC:
            raise NotAStegoImageException(
                f"not a stego image (magic {magic.hex()} != {cls.MAGIC.hex()})",
                magic=magic.hex(),
            )
        return cls(magic=magic, payload_len=payload_len)


class RowPlanEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    row_index: Annotated[int, Field(ge=0)]
    payload_offset: Annotated[int, Field(ge=0)]
    chunk_len: Annotated[int, Field(ge=0)]


class RowPlan(BaseModel):
    """Assignment of consecutive stream slices to raster rows."""

    model_config = ConfigDict(frozen=True)

    width: Annotated[int, Field(ge=0)]
    entries: list[RowPlanEntry] = []

    @model_validator(mode="after")
    def check_entries(self):
        per_row = self.width // BLOCK_COUNT
        offset = 0
        for entry in self.entries:
            if entry.chunk_len > per_row:
                raise ValueError(
                    f"row {entry.row_index} assigned {entry.chunk_len} bytes, holds {per_row}"
                )
            if entry.payload_offset != offset:
                raise ValueError(f"row {entry.row_index} breaks offset contiguity")
            offset += entry.chunk_len
        return self

    @property
    def stream_len(self) -> int:
        return sum(entry.chunk_len for entry in self.entries)

    def pixel_positions(self) -> np.ndarray:
        """
        Flat pixel indices per stream byte, shape (stream_len, 4); column k
        is the pixel holding bits [2k, 2k+1] of the byte.
        """
        positions = np.empty((self.stream_len, BLOCK_COUNT), dtype=np.int64)
        for entry in self.entries:
            j = np.arange(entry.chunk_len)
            for block_id in range(BLOCK_COUNT):
                positions[entry.payload_offset + j, block_id] = (
                    entry.row_index * self.width + block_id * entry.chunk_len + j
                )
        return positions


class EmbedResponse(BaseModel):
    payload_bytes: int
    embedded_bytes: int
    capacity_total: int
    capacity_used_pct: float
    plane: str
    mse: float = Field(json_schema_extra={"precision": 6})
    psnr_db: float
    psnr_plane_db: float


class ExtractResponse(BaseModel):
    payload_bytes: int
    plane: str


class CapacityResponse(BaseModel):
    width: int
    height: int
    capacity_total: int
    capacity_usable: int
