from .bitplane import embed_cell, embed_row, extract_cell, extract_row
from .harness import KernelExecutor, launch, run_embed, run_extract
from .schemas import (
    BLOCK_COUNT,
    MASK_TABLE,
    Backend,
    KernelIndex,
    LaunchConfig,
    MaskTable,
    PayloadChunk,
    PixelRow,
)
