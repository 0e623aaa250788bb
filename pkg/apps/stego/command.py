from pathlib import Path

import click

from apps.metrics.service import MetricsService
from apps.settings import settings
from apps.stego.schema import (
    CapacityResponse,
    EmbedResponse,
    ExtractResponse,
    StegoHeader,
)
from apps.stego.service import StegoService
from core.cli.config import (
    CliConfig,
    Subcommand,
    backend_option,
    plane_option,
    seed_option,
)
from core.cli.response import render_response
from core.imaging import ImagePlane, merge_plane, read_image, split_plane, write_image

command = click.Group(name="stego")

StegoServiceDependency = StegoService.get_dependency()
MetricsServiceDependency = MetricsService.get_dependency()

file_path = click.Path(dir_okay=False, path_type=Path)


def _as_json(ctx: click.Context) -> bool:
    return bool((ctx.find_root().obj or {}).get("json"))


@command.command("embed")
@click.option("--cover", type=file_path, required=True, help="Cover image (PGM/PPM).")
@click.option("--payload", type=file_path, required=True, help="File to hide.")
@click.option("--out", type=file_path, required=True, help="Stego image to write.")
@plane_option
@backend_option
@seed_option
@click.option("--raw", is_flag=True, help="Embed without the length header.")
@StegoServiceDependency
@MetricsServiceDependency
@click.pass_context
def embed(
    ctx,
    cover,
    payload,
    out,
    plane,
    backend,
    seed,
    raw,
    stego_service: StegoService,
    metrics_service: MetricsService,
):
    """Hide a payload file in the cover image."""
    config = CliConfig(
        subcommand=Subcommand.EMBED,
        cover=cover,
        payload=payload,
        out=out,
        plane=plane,
        backend=backend,
        seed=seed,
        raw=raw,
    )
    image = read_image(config.cover)
    channel = config.select_plane(image, default=settings.DEFAULT_PLANE)
    cover_plane = image if isinstance(image, ImagePlane) else split_plane(image, channel)
    data = config.payload.read_bytes()

    if config.raw:
        stego_plane = stego_service.embed_stream(cover_plane, data)
        embedded = len(data)
    else:
        stego_plane = stego_service.embed_image(cover_plane, data)
        embedded = StegoHeader.SIZE + len(data)

    stego = (
        stego_plane
        if isinstance(image, ImagePlane)
        else merge_plane(image, channel, stego_plane)
    )
    write_image(config.out, stego)

    report = metrics_service.psnr(image, stego)
    capacity_total = stego_service.capacity(cover_plane.width, cover_plane.height)
    render_response(
        EmbedResponse(
            payload_bytes=len(data),
            embedded_bytes=embedded,
            capacity_total=capacity_total,
            capacity_used_pct=100 * embedded / capacity_total if capacity_total else 0.0,
            plane=channel.value,
            mse=report.mse,
            psnr_db=report.psnr_db,
            psnr_plane_db=metrics_service.psnr(cover_plane, stego_plane).psnr_db,
        ),
        as_json=_as_json(ctx),
    )


@command.command("extract")
@click.option("--stego", type=file_path, required=True, help="Stego image (PGM/PPM).")
@click.option("--out", type=file_path, required=True, help="Where to write the payload.")
@plane_option
@backend_option
@seed_option
@click.option(
    "--length",
    type=click.IntRange(min=0),
    default=None,
    help="Read this many bytes without a length header.",
)
@StegoServiceDependency
@click.pass_context
def extract(ctx, stego, out, plane, backend, seed, length, stego_service: StegoService):
    """Recover a hidden payload from a stego image."""
    config = CliConfig(
        subcommand=Subcommand.EXTRACT,
        stego=stego,
        out=out,
        plane=plane,
        backend=backend,
        seed=seed,
        length=length,
    )
    image = read_image(config.stego)
    channel = config.select_plane(image, default=settings.DEFAULT_PLANE)
    stego_plane = image if isinstance(image, ImagePlane) else split_plane(image, channel)

    if config.length is not None:
        payload = stego_service.extract_stream(stego_plane, config.length)
    else:
        payload = stego_service.extract_image(stego_plane)
    config.out.write_bytes(payload)

    render_response(
        ExtractResponse(payload_bytes=len(payload), plane=channel.value),
        as_json=_as_json(ctx),
    )


@command.command("capacity")
@click.option("--cover", type=file_path, required=True, help="Cover image (PGM/PPM).")
@click.pass_context
def capacity(ctx, cover):
    """Report how many bytes a cover image can carry."""
    config = CliConfig(subcommand=Subcommand.CAPACITY, cover=cover)
    image = read_image(config.cover)
    total = StegoService.capacity(image.width, image.height)
    render_response(
        CapacityResponse(
            width=image.width,
            height=image.height,
            capacity_total=total,
            capacity_usable=max(0, total - StegoHeader.SIZE),
        ),
        as_json=_as_json(ctx),
    )
