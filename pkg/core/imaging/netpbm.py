import logging
from pathlib import Path

import numpy as np

from core.exception.image import (
    CorruptImageException,
    FileAccessException,
    UnsupportedDepthException,
    UnsupportedFormatException,
)
from core.imaging.schemas import Image, ImagePlane, RgbImage

logger = logging.getLogger(__name__)

CHANNELS = {b"P5": 1, b"P6": 3}
MAXVAL = 255
WHITESPACE = b" \t\n\r\v\f"


def _is_space(data: bytes, pos: int) -> bool:
    return data[pos] in WHITESPACE


def read_header(data: bytes) -> tuple[bytes, int, int, int]:
    """
    Parse a binary PGM/PPM header.

    Comments run from '#' to the end of the line and may appear anywhere
    between header fields.

    Returns:
        (magic, width, height, raster offset)
    """
    magic = data[:2]
    if magic not in CHANNELS:
        raise UnsupportedFormatException(
            f"unsupported image format {magic!r}; only binary P5/P6 are accepted"
        )
    if len(data) < 3 or not (_is_space(data, 2) or data[2:3] == b"#"):
        raise CorruptImageException("missing separator after the magic number")

    pos, fields = 2, []
    while len(fields) < 3:
        if pos >= len(data):
            raise CorruptImageException("truncated header")
        if _is_space(data, pos):
            pos += 1
        elif data[pos:pos + 1] == b"#":
            end = data.find(b"\n", pos)
            if end < 0:
                raise CorruptImageException("unterminated header comment")
            pos = end + 1
        else:
            start = pos
            while pos < len(data) and not _is_space(data, pos) and data[pos:pos + 1] != b"#":
                pos += 1
            token = data[start:pos]
            if not token.isdigit():
                raise CorruptImageException(f"invalid header field {token!r}")
            fields.append(int(token))

    width, height, maxval = fields
    if maxval != MAXVAL:
        raise UnsupportedDepthException(
            f"maxval {maxval} not supported; only 8-bit (255) samples are accepted"
        )
    # a single whitespace byte separates maxval from the raster
    if pos >= len(data) or not _is_space(data, pos):
        raise CorruptImageException("missing separator before the raster")
    return magic, width, height, pos + 1


def decode(data: bytes) -> Image:
    magic, width, height, offset = read_header(data)
    expected = width * height * CHANNELS[magic]
    available = len(data) - offset
    if available < expected:
        raise CorruptImageException(
            f"truncated raster: expected {expected} bytes, found {available}"
        )
    if available > expected:
        logger.debug("ignoring %d trailing bytes after raster", available - expected)

    raster = np.frombuffer(data, dtype=np.uint8, count=expected, offset=offset)
    if magic == b"P5":
        return ImagePlane.from_raster(width, height, raster)
    return RgbImage.from_interleaved(width, height, raster)


def encode(image: Image) -> bytes:
    if isinstance(image, ImagePlane):
        magic, raster = b"P5", image.samples
    else:
        magic, raster = b"P6", image.interleaved()
    header = b"%s\n%d %d\n%d\n" % (magic, image.width, image.height, MAXVAL)
    return header + np.ascontiguousarray(raster).tobytes()


def read_image(path: str | Path) -> Image:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise FileAccessException(f"cannot read image {path}: {e.strerror or e}")
    return decode(data)


def write_image(path: str | Path, image: Image) -> None:
    try:
        Path(path).write_bytes(encode(image))
    except OSError as e:
        raise FileAccessException(f"cannot write image {path}: {e.strerror or e}")
