from .capacity import *
from .core import *
from .image import *
from .kernel import *
from .request import *
from .stego import *
