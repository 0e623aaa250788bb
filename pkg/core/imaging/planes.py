from core.exception.image import ShapeMismatchException
from core.imaging.schemas import Channel, ImagePlane, RgbImage


def split_plane(image: RgbImage, which: Channel | str) -> ImagePlane:
    return getattr(image, Channel.parse(which).value)


def merge_plane(image: RgbImage, which: Channel | str, plane: ImagePlane) -> RgbImage:
    """Return a copy of `image` with channel `which` replaced by `plane`."""
    if plane.shape != image.shape:
        raise ShapeMismatchException(
            f"plane is {plane.width}x{plane.height}, "
            f"image is {image.width}x{image.height}"
        )
    return image.model_copy(update={Channel.parse(which).value: plane})
