import math

import numpy as np

from apps.metrics.schema import PEAK, QualityReport
from core.cli.dependency.service_dependency import AbstractService
from core.exception.image import ShapeMismatchException
from core.imaging.schemas import Image, ImagePlane, RgbImage


def _stack(image: Image) -> np.ndarray:
    if isinstance(image, ImagePlane):
        return image.samples[np.newaxis]
    return np.stack([plane.samples for plane in image.planes])


def _describe(image: Image) -> str:
    kind = "plane" if isinstance(image, ImagePlane) else "RGB image"
    return f"{image.width}x{image.height} {kind}"


class MetricsService(AbstractService):
    """Distortion measures between a reference image and a test image."""

    def check_comparable(self, reference: Image, test: Image) -> None:
        if type(reference) is not type(test) or reference.shape != test.shape:
            raise ShapeMismatchException(
                f"cannot compare {_describe(reference)} with {_describe(test)}"
            )

    def squared_error(self, reference: Image, test: Image) -> tuple[int, int]:
        """
        Returns:
            (sum of squared sample differences, number of samples compared)
        """
        self.check_comparable(reference, test)
        diff = _stack(reference).astype(np.int64) - _stack(test).astype(np.int64)
        return int(np.sum(diff * diff)), int(diff.size)

    def mse(self, reference: Image, test: Image) -> float:
        total, count = self.squared_error(reference, test)
        return total / count if count else 0.0

    def psnr(self, reference: Image, test: Image) -> QualityReport:
        total, count = self.squared_error(reference, test)
        mse = total / count if count else 0.0
        psnr_db = math.inf if mse == 0 else 10 * math.log10(PEAK**2 / mse)
        return QualityReport(mse=mse, psnr_db=psnr_db, samples_compared=count)

    def psnr_per_plane(self, reference: RgbImage, test: RgbImage) -> dict[str, QualityReport]:
        if reference.shape != test.shape:
            raise ShapeMismatchException(
                f"cannot compare {_describe(reference)} with {_describe(test)}"
            )
        return {
            name: self.psnr(getattr(reference, name), getattr(test, name))
            for name in ("red", "green", "blue")
        }


def mse(reference: Image, test: Image) -> float:
    return MetricsService().mse(reference, test)


def psnr(reference: Image, test: Image) -> QualityReport:
    return MetricsService().psnr(reference, test)
