from typing import TypeVar

import numpy as np

from core.exception.capacity import CapacityExceededException
from core.exception.kernel import KernelContractException
from core.kernel.schemas import BLOCK_COUNT, MASK_TABLE, PayloadChunk, PixelRow

# Cell functions accept python ints as well as uint8 arrays (elementwise).
Cell = TypeVar("Cell", int, np.ndarray)


def check_block_id(block_id: int) -> None:
    if isinstance(block_id, bool) or not isinstance(block_id, (int, np.integer)):
        raise KernelContractException(f"block id must be an integer, got {block_id!r}")
    if not 0 <= block_id < BLOCK_COUNT:
        raise KernelContractException(
            f"block id {block_id} outside [0, {BLOCK_COUNT - 1}]", block_id=int(block_id)
        )


def check_byte(value: Cell, name: str) -> None:
    if isinstance(value, np.ndarray):
        if value.dtype == np.uint8 or value.size == 0:
            return
        low, high = int(value.min()), int(value.max())
    elif isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise KernelContractException(f"{name} must be an integer, got {value!r}")
    else:
        low = high = int(value)
    if low < 0 or high > 0xFF:
        raise KernelContractException(
            f"{name} outside [0, 255]", **{name: high if high > 0xFF else low}
        )


def check_capacity(width: int, length: int) -> None:
    """A row of `width` pixels holds floor(width / 4) bytes."""
    available = width // BLOCK_COUNT
    if length > available:
        raise CapacityExceededException(
            f"row of {width} pixels holds {available} bytes, {length} required",
            required=length,
            available=available,
        )


def embed_cell(pixel: Cell, data_byte: Cell, block_id: int) -> Cell:
    """
    Write the 2-bit slice `block_id` of `data_byte` into the two LSBs of `pixel`.
    """
    check_block_id(block_id)
    check_byte(pixel, "pixel")
    check_byte(data_byte, "data_byte")
    shift = MASK_TABLE.shift_bits[block_id]
    data = (data_byte & MASK_TABLE.data_mask[block_id]) >> shift
    return (pixel & MASK_TABLE.pixel_clear_mask) | data


def extract_cell(pixel: Cell, block_id: int) -> Cell:
    """Lift the two LSBs of `pixel` back to slice `block_id` of a byte."""
    check_block_id(block_id)
    check_byte(pixel, "pixel")
    return (pixel & MASK_TABLE.data_mask[0]) << MASK_TABLE.shift_bits[block_id]


def embed_rows(rows: np.ndarray, chunks: np.ndarray) -> np.ndarray:
    """
    Reference embedding for a batch of equal-width rows, one chunk per row.

    Args:
        rows: uint8 array of shape (count, width)
        chunks: uint8 array of shape (count, L)

    Returns:
        A new array; pixel L*i + j of each row carries slice i of chunk byte j.
    """
    length = chunks.shape[1]
    check_capacity(rows.shape[1], length)
    out = rows.copy()
    for block_id in range(BLOCK_COUNT):
        segment = slice(length * block_id, length * (block_id + 1))
        out[:, segment] = embed_cell(rows[:, segment], chunks, block_id)
    return out


def extract_rows(rows: np.ndarray, count: int) -> np.ndarray:
    check_capacity(rows.shape[1], count)
    out = np.zeros((rows.shape[0], count), dtype=np.uint8)
    for block_id in range(BLOCK_COUNT):
        segment = slice(count * block_id, count * (block_id + 1))
        out |= extract_cell(rows[:, segment], block_id)
    return out


def embed_row(row: PixelRow, chunk: PayloadChunk) -> PixelRow:
    out = embed_rows(row.pixels[np.newaxis, :], chunk.data[np.newaxis, :])
    return PixelRow(pixels=out[0])


def extract_row(row: PixelRow, count: int) -> PayloadChunk:
    if count < 0:
        raise KernelContractException(f"cannot extract {count} bytes")
    out = extract_rows(row.pixels[np.newaxis, :], count)
    return PayloadChunk(data=out[0])
