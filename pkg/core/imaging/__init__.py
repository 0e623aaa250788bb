from .netpbm import decode, encode, read_image, write_image
from .planes import merge_plane, split_plane
from .schemas import Channel, Image, ImagePlane, RgbImage
