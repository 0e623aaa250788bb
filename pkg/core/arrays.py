from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationInfo, field_validator


def as_uint8_array(value: Any) -> np.ndarray:
    """
    Convert bytes-like objects, integer sequences and arrays to a read-only
    uint8 array.

    Raises:
        ValueError: if a value is not an integer in [0, 255]
    """
    if isinstance(value, (bytes, bytearray, memoryview)):
        array = np.frombuffer(bytes(value), dtype=np.uint8).copy()
    else:
        array = np.asarray(value)
        if array.dtype != np.uint8:
            if array.size and not (
                np.issubdtype(array.dtype, np.integer) or array.dtype == np.bool_
            ):
                raise ValueError(f"expected 8-bit integers, got dtype {array.dtype}")
            if array.size and (array.min() < 0 or array.max() > 255):
                raise ValueError("sample values must lie in [0, 255]")
            array = array.astype(np.uint8)
        else:
            array = array.copy()
    array.flags.writeable = False
    return array


class ArrayModel(BaseModel):
    """
    Base model for records holding numpy sample buffers.

    Every `np.ndarray` field is normalised to a read-only uint8 array, so
    instances can be shared between kernel instances and threads without
    copying.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("*", mode="before")
    @classmethod
    def ensure_uint8_arrays(cls, value: Any, info: ValidationInfo) -> Any:
        field = cls.model_fields.get(info.field_name)
        if field is None or field.annotation is not np.ndarray:
            return value
        return as_uint8_array(value)

    def __eq__(self, other: object) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        for name in type(self).model_fields:
            mine, theirs = getattr(self, name), getattr(other, name)
            if isinstance(mine, np.ndarray):
                if not np.array_equal(mine, theirs):
                    return False
            elif mine != theirs:
                return False
        return True
