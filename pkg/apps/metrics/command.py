from pathlib import Path

import click

from apps.metrics.schema import PsnrResponse
from apps.metrics.service import MetricsService
from apps.settings import settings
from core.cli.config import CliConfig, Subcommand, plane_option
from core.cli.response import render_response
from core.imaging import RgbImage, read_image, split_plane

command = click.Group(name="metrics")

MetricsServiceDependency = MetricsService.get_dependency()

file_path = click.Path(dir_okay=False, path_type=Path)


@command.command("psnr")
@click.option("--ref", "reference", type=file_path, required=True, help="Reference image.")
@click.option("--test", "test", type=file_path, required=True, help="Image to compare.")
@plane_option
@MetricsServiceDependency
@click.pass_context
def psnr(ctx, reference, test, plane, metrics_service: MetricsService):
    """Print MSE and PSNR of TEST against REF."""
    config = CliConfig(
        subcommand=Subcommand.PSNR, reference=reference, test=test, plane=plane
    )
    ref_image = read_image(config.reference)
    test_image = read_image(config.test)
    metrics_service.check_comparable(ref_image, test_image)

    per_plane = {}
    if config.plane is not None:
        channel = config.select_plane(ref_image, default=settings.DEFAULT_PLANE)
        if isinstance(ref_image, RgbImage):
            ref_image = split_plane(ref_image, channel)
        if isinstance(test_image, RgbImage):
            test_image = split_plane(test_image, channel)
    elif isinstance(ref_image, RgbImage) and isinstance(test_image, RgbImage):
        per_plane = {
            f"psnr_{name}_db": report.psnr_db
            for name, report in metrics_service.psnr_per_plane(ref_image, test_image).items()
        }

    report = metrics_service.psnr(ref_image, test_image)
    render_response(
        PsnrResponse(
            samples_compared=report.samples_compared,
            mse=report.mse,
            psnr_db=report.psnr_db,
            **per_plane,
        ),
        as_json=bool((ctx.find_root().obj or {}).get("json")),
    )
