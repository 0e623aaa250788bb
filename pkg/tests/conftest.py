"""
Shared fixtures for the bit-plane steganography test suite.

Run with: pytest tests/ -v
"""

import numpy as np
import pytest
from faker import Faker

from core.imaging import ImagePlane, RgbImage

# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture
def rng():
    """Seeded numpy generator so every run sees the same random data"""
    return np.random.default_rng(20240917)


@pytest.fixture
def fake():
    """Seeded Faker instance for payload text"""
    faker = Faker()
    faker.seed_instance(1234)
    return faker


@pytest.fixture
def make_plane(rng):
    """Factory for random grayscale planes"""

    def factory(width: int, height: int) -> ImagePlane:
        return ImagePlane(
            samples=rng.integers(0, 256, size=(height, width), dtype=np.uint8)
        )

    return factory


@pytest.fixture
def make_rgb(make_plane):
    """Factory for random 24-bit images"""

    def factory(width: int, height: int) -> RgbImage:
        return RgbImage(
            red=make_plane(width, height),
            green=make_plane(width, height),
            blue=make_plane(width, height),
        )

    return factory


@pytest.fixture
def make_payload(rng):
    """Factory for random payload bytes"""

    def factory(length: int) -> bytes:
        return rng.integers(0, 256, size=length, dtype=np.uint8).tobytes()

    return factory
