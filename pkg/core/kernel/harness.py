import logging
import random
from concurrent.futures import Future, ThreadPoolExecutor, wait
from typing import Callable

import numpy as np

from core.exception.core import AbstractException
from core.exception.kernel import KernelContractException, KernelLaunchException
from core.kernel.bitplane import check_capacity, embed_cell, extract_cell
from core.kernel.schemas import (
    BLOCK_COUNT,
    THREAD_CAP,
    Backend,
    KernelIndex,
    LaunchConfig,
    PayloadChunk,
    PixelRow,
)

logger = logging.getLogger(__name__)

# kernel(index, work_item) -> None
ScalarKernel = Callable[[KernelIndex, int], None]
# kernel(index, work_items) -> None; work_items is the thread's grid-stride range
TiledKernel = Callable[[KernelIndex, np.ndarray], None]


class KernelExecutor:
    """
    Runs kernels over a (block, thread) index space on a chosen backend.

    sequential: instances in (block, thread) order on the calling thread.
    parallel:   one task per instance on a thread pool; launch returns after
                every instance completed.
    shuffled:   instances, and the work items inside each instance, in a
                seeded random order on the calling thread.

    Use as a context manager so the parallel backend's pool is shut down:

        with KernelExecutor(Backend.PARALLEL) as executor:
            stego = executor.run_embed(row, chunk)
    """

    def __init__(
        self,
        backend: Backend | str = Backend.SEQUENTIAL,
        seed: int = 0,
        max_workers: int | None = None,
        thread_cap: int = THREAD_CAP,
    ):
        self.backend = Backend.parse(backend)
        self.seed = seed
        self.thread_cap = thread_cap
        self._max_workers = max_workers
        self._random = random.Random(seed)
        self._pool: ThreadPoolExecutor | None = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(wait=True)
            self._pool = None

    def _get_pool(self) -> ThreadPoolExecutor:
        if self._pool is None:
            self._pool = ThreadPoolExecutor(
                max_workers=self._max_workers, thread_name_prefix="kernel"
            )
        return self._pool

    def launch_tiled(
        self, config: LaunchConfig, work_extent: int, kernel: TiledKernel
    ) -> None:
        """
        Invoke `kernel` once per (block, thread) with that thread's work items.

        Every (block, work item) pair is covered exactly once. Kernels must keep
        their write sets disjoint across instances.
        """
        if work_extent < 0:
            raise KernelContractException(f"negative work extent {work_extent}")
        if work_extent == 0:
            return

        instances = [
            (
                KernelIndex(block_id=block_id, thread_id=thread_id),
                config.work_items(thread_id, work_extent),
            )
            for block_id in range(config.num_blocks)
            for thread_id in range(min(config.threads_per_block, work_extent))
        ]
        logger.debug(
            "launch %s: %d blocks x %d threads over %d items",
            self.backend.value,
            config.num_blocks,
            config.threads_per_block,
            work_extent,
        )

        if self.backend is Backend.PARALLEL:
            self._run_parallel(kernel, instances)
            return

        if self.backend is Backend.SHUFFLED:
            self._random.shuffle(instances)
            instances = [
                (index, items[self._permutation(len(items))])
                for index, items in instances
            ]
        for index, items in instances:
            try:
                kernel(index, items)
            except Exception as exc:
                raise self._launch_error(index, exc) from exc

    def launch(self, config: LaunchConfig, work_extent: int, kernel: ScalarKernel) -> None:
        """Invoke `kernel(index, work_item)` once per (block, work item) pair."""

        def tiled(index: KernelIndex, work_items: np.ndarray) -> None:
            for work_item in work_items:
                kernel(index, int(work_item))

        self.launch_tiled(config, work_extent, tiled)

    def _permutation(self, size: int) -> np.ndarray:
        return np.array(self._random.sample(range(size), size), dtype=np.intp)

    def _run_parallel(
        self,
        kernel: TiledKernel,
        instances: list[tuple[KernelIndex, np.ndarray]],
    ) -> None:
        pool = self._get_pool()
        futures: list[tuple[KernelIndex, Future]] = [
            (index, pool.submit(kernel, index, items)) for index, items in instances
        ]
        # barrier: nothing is reported before every instance has finished
        wait([future for _, future in futures])
        for index, future in futures:
            exc = future.exception()
            if exc is not None:
                raise self._launch_error(index, exc) from exc

    @staticmethod
    def _launch_error(index: KernelIndex, exc: Exception) -> AbstractException:
        if isinstance(exc, AbstractException):
            return exc
        return KernelLaunchException(
            f"kernel failed at block {index.block_id}, thread {index.thread_id}: {exc}",
            block_id=index.block_id,
            thread_id=index.thread_id,
        )

    def run_embed_rows(self, rows: np.ndarray, chunks: np.ndarray) -> np.ndarray:
        """
        Embed chunk r into row r for a batch of equal-width rows in one launch.

        Instance (i, j) reads pixels L*i + j from the input buffer and writes the
        same positions of a separate output buffer.
        """
        chunks = np.asarray(chunks, dtype=np.uint8)
        length = chunks.shape[1]
        check_capacity(rows.shape[1], length)
        source = np.asarray(rows, dtype=np.uint8)
        result = source.copy()

        def kernel(index: KernelIndex, work_items: np.ndarray) -> None:
            columns = length * index.block_id + work_items
            result[:, columns] = embed_cell(
                source[:, columns], chunks[:, work_items], index.block_id
            )

        config = LaunchConfig.for_stream(length, thread_cap=self.thread_cap)
        self.launch_tiled(config, length, kernel)
        return result

    def run_extract_rows(self, rows: np.ndarray, count: int) -> np.ndarray:
        """
        Extract `count` bytes from each row of a batch.

        One unit of work per byte index j gathers the four pixels L*i + j and
        composes the byte, so no two instances write the same output cell.
        """
        if count < 0:
            raise KernelContractException(f"cannot extract {count} bytes")
        check_capacity(rows.shape[1], count)
        source = np.asarray(rows, dtype=np.uint8)
        result = np.zeros((source.shape[0], count), dtype=np.uint8)

        def kernel(index: KernelIndex, work_items: np.ndarray) -> None:
            composed = np.zeros((source.shape[0], work_items.shape[0]), dtype=np.uint8)
            for block_id in range(BLOCK_COUNT):
                composed |= extract_cell(source[:, count * block_id + work_items], block_id)
            result[:, work_items] = composed

        config = LaunchConfig.for_stream(count, thread_cap=self.thread_cap, num_blocks=1)
        self.launch_tiled(config, count, kernel)
        return result

    def run_embed(self, row: PixelRow, chunk: PayloadChunk) -> PixelRow:
        out = self.run_embed_rows(row.pixels[np.newaxis, :], chunk.data[np.newaxis, :])
        return PixelRow(pixels=out[0])

    def run_extract(self, row: PixelRow, count: int) -> PayloadChunk:
        out = self.run_extract_rows(row.pixels[np.newaxis, :], count)
        return PayloadChunk(data=out[0])


def launch(
    config: LaunchConfig,
    work_extent: int,
    kernel: ScalarKernel,
    backend: Backend | str = Backend.SEQUENTIAL,
    seed: int = 0,
) -> None:
    with KernelExecutor(backend, seed=seed) as executor:
        executor.launch(config, work_extent, kernel)


def run_embed(
    backend: Backend | str, row: PixelRow, chunk: PayloadChunk, seed: int = 0
) -> PixelRow:
    with KernelExecutor(backend, seed=seed) as executor:
        return executor.run_embed(row, chunk)


def run_extract(
    backend: Backend | str, row: PixelRow, count: int, seed: int = 0
) -> PayloadChunk:
    with KernelExecutor(backend, seed=seed) as executor:
        return executor.run_extract(row, count)
