import itertools
import logging

import click
import numpy as np

from apps.settings import settings
from apps.stego.schema import RowPlan, RowPlanEntry, StegoHeader
from core.cli.dependency.service_dependency import AbstractService
from core.exception.capacity import CapacityExceededException
from core.exception.stego import CorruptHeaderException, NotAStegoImageException
from core.imaging.schemas import ImagePlane
from core.kernel.harness import KernelExecutor
from core.kernel.schemas import BLOCK_COUNT, Backend

logger = logging.getLogger(__name__)


def get_executor(ctx: click.Context) -> KernelExecutor:
    backend = ctx.params.get("backend") or settings.DEFAULT_BACKEND
    seed = ctx.params.get("seed")
    return KernelExecutor(
        backend,
        seed=settings.SHUFFLE_SEED if seed is None else seed,
        max_workers=settings.MAX_WORKERS,
        thread_cap=settings.THREAD_CAP,
    )


class StegoService(AbstractService):
    """Whole-plane embedding and extraction over per-row kernel launches."""

    DEPENDENCIES = {"executor": get_executor}

    def __init__(self, executor: KernelExecutor, **kwargs):
        super().__init__(**kwargs)
        self.executor = executor

    def close(self) -> None:
        self.executor.close()

    @staticmethod
    def capacity(width: int, height: int) -> int:
        return height * (width // BLOCK_COUNT)

    @staticmethod
    def plan_rows(width: int, height: int, stream_len: int) -> RowPlan:
        """
        Greedy raster-order plan: each row takes min(remaining, floor(width/4))
        bytes until the stream is exhausted.
        """
        available = StegoService.capacity(width, height)
        if stream_len > available:
            raise CapacityExceededException(
                f"stream of {stream_len} bytes exceeds capacity of {available} bytes",
                required=stream_len,
                available=available,
            )
        per_row = width // BLOCK_COUNT
        entries, offset = [], 0
        for row_index in range(height):
            if offset >= stream_len:
                break
            chunk_len = min(stream_len - offset, per_row)
            entries.append(
                RowPlanEntry(row_index=row_index, payload_offset=offset, chunk_len=chunk_len)
            )
            offset += chunk_len
        return RowPlan(width=width, entries=entries)

    def _groups(self, plan: RowPlan):
        # consecutive rows sharing a chunk length go into a single launch
        for chunk_len, group in itertools.groupby(plan.entries, key=lambda e: e.chunk_len):
            group = list(group)
            rows = np.array([entry.row_index for entry in group], dtype=np.intp)
            yield chunk_len, rows, group[0].payload_offset

    def embed_stream(self, plane: ImagePlane, stream: bytes) -> ImagePlane:
        """Embed a raw byte stream (no header) following `plan_rows`."""
        plan = self.plan_rows(plane.width, plane.height, len(stream))
        data = np.frombuffer(stream, dtype=np.uint8)
        samples = plane.samples.copy()
        for chunk_len, rows, offset in self._groups(plan):
            chunks = data[offset:offset + chunk_len * len(rows)].reshape(len(rows), chunk_len)
            samples[rows] = self.executor.run_embed_rows(plane.samples[rows], chunks)
        logger.info(
            "embedded %d bytes into %d rows (%s backend)",
            len(stream),
            len(plan.entries),
            self.executor.backend.value,
        )
        return ImagePlane(samples=samples)

    def extract_stream(self, plane: ImagePlane, length: int) -> bytes:
        """Read `length` bytes back using the same plan geometry as embedding."""
        plan = self.plan_rows(plane.width, plane.height, length)
        out = np.empty(length, dtype=np.uint8)
        for chunk_len, rows, offset in self._groups(plan):
            chunks = self.executor.run_extract_rows(plane.samples[rows], chunk_len)
            out[offset:offset + chunk_len * len(rows)] = chunks.ravel()
        return out.tobytes()

    def embed_image(self, plane: ImagePlane, payload: bytes) -> ImagePlane:
        header = StegoHeader(payload_len=len(payload))
        required = StegoHeader.SIZE + len(payload)
        available = self.capacity(plane.width, plane.height)
        if required > available:
            raise CapacityExceededException(
                f"needs {required} bytes ({StegoHeader.SIZE} header + {len(payload)} payload), "
                f"plane holds {available} bytes",
                required=required,
                available=available,
                header=StegoHeader.SIZE,
            )
        return self.embed_stream(plane, header.to_bytes() + payload)

    def locate_header(self, plane: ImagePlane) -> tuple[StegoHeader, RowPlan]:
        """
        Read the header back from the rows it was written to.

        Rows before the one holding the last header byte are always full, so
        only that row's chunk length is unknown. Each candidate length is
        gathered and the first whose header agrees with it is accepted.
        Returns the header and the plan of the rows it spans.
        """
        available = self.capacity(plane.width, plane.height)
        if available < StegoHeader.SIZE:
            raise NotAStegoImageException(
                f"plane holds {available} bytes, too few for a {StegoHeader.SIZE}-byte header"
            )
        per_row = plane.width // BLOCK_COUNT
        full_rows = (StegoHeader.SIZE - 1) // per_row
        offset = full_rows * per_row
        need = StegoHeader.SIZE - offset
        prefix = b""
        if full_rows:
            prefix = self.executor.run_extract_rows(plane.samples[:full_rows], per_row).tobytes()

        row = plane.samples[full_rows:full_rows + 1]
        rejected, claimed = None, None
        for chunk_len in range(per_row, need - 1, -1):
            tail = self.executor.run_extract_rows(row, chunk_len)[0, :need].tobytes()
            try:
                header = StegoHeader.from_bytes(prefix + tail)
            except NotAStegoImageException as exc:
                rejected = exc
                continue
            if min(per_row, StegoHeader.SIZE + header.payload_len - offset) != chunk_len:
                claimed = header
                continue
            entries = [
                RowPlanEntry(row_index=index, payload_offset=index * per_row, chunk_len=per_row)
                for index in range(full_rows)
            ]
            entries.append(
                RowPlanEntry(row_index=full_rows, payload_offset=offset, chunk_len=chunk_len)
            )
            return header, RowPlan(width=plane.width, entries=entries)

        if claimed is not None:
            raise CorruptHeaderException(
                f"header claims {claimed.payload_len} payload bytes, "
                "which does not match the rows it was read from",
                payload_len=claimed.payload_len,
            )
        raise rejected

    def extract_image(self, plane: ImagePlane) -> bytes:
        header, _ = self.locate_header(plane)
        available = self.capacity(plane.width, plane.height)
        if header.payload_len > available - StegoHeader.SIZE:
            raise CorruptHeaderException(
                f"header claims {header.payload_len} payload bytes, "
                f"plane holds at most {available - StegoHeader.SIZE}",
                payload_len=header.payload_len,
            )
        stream = self.extract_stream(plane, StegoHeader.SIZE + header.payload_len)
        return stream[StegoHeader.SIZE:]


def embed_image(
    plane: ImagePlane, payload: bytes, backend: Backend | str = Backend.SEQUENTIAL
) -> ImagePlane:
    with StegoService(executor=KernelExecutor(backend)) as service:
        return service.embed_image(plane, payload)


def extract_image(plane: ImagePlane, backend: Backend | str = Backend.SEQUENTIAL) -> bytes:
    with StegoService(executor=KernelExecutor(backend)) as service:
        return service.extract_image(plane)


capacity = StegoService.capacity
plan_rows = StegoService.plan_rows
