"""
End-to-end tests of the command line through click's test runner.

Run with: pytest tests/test_cli.py -v
"""

import math

import orjson
import pytest
from click.testing import CliRunner

from apps.metrics.service import MetricsService
from core.cli.app import __version__, create_app
from core.imaging import ImagePlane, read_image, write_image

pytestmark = pytest.mark.integration

# ============================================================================
# FIXTURES
# ============================================================================


@pytest.fixture(scope="module")
def app():
    return create_app()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(app, runner):
    """Run the CLI with string arguments"""

    def call(*args):
        return runner.invoke(app, [str(arg) for arg in args])

    return call


@pytest.fixture
def gray_cover(tmp_path, make_plane):
    path = tmp_path / "cover.pgm"
    write_image(path, make_plane(1024, 768))
    return path


@pytest.fixture
def rgb_cover(tmp_path, make_rgb):
    path = tmp_path / "cover.ppm"
    write_image(path, make_rgb(64, 48))
    return path


@pytest.fixture
def payload_file(tmp_path, make_payload):
    path = tmp_path / "payload.bin"
    path.write_bytes(make_payload(56))
    return path


def parse(output: str) -> dict:
    """Parse `key: value` lines"""
    return dict(line.split(": ", 1) for line in output.strip().splitlines())


# ============================================================================
# EMBED / EXTRACT TESTS
# ============================================================================


class TestEmbedCommand:
    """Test the embed subcommand"""

    def test_embed_reports(self, invoke, gray_cover, payload_file, tmp_path):
        out = tmp_path / "stego.pgm"
        result = invoke("embed", "--cover", gray_cover, "--payload", payload_file, "--out", out)

        assert result.exit_code == 0, result.output
        report = parse(result.stdout)
        assert report["payload_bytes"] == "56"
        assert report["embedded_bytes"] == "64"
        assert report["capacity_total"] == "196608"
        assert float(report["psnr_db"]) >= 10 * math.log10(255**2 / 9)
        assert len(report["psnr_db"].split(".")[1]) >= 4
        assert read_image(out).shape == (1024, 768)

    def test_metrics_service_is_injected(
        self, invoke, mocker, gray_cover, payload_file, tmp_path
    ):
        resolve = mocker.spy(MetricsService, "resolve")
        result = invoke(
            "embed", "--cover", gray_cover, "--payload", payload_file, "--out", tmp_path / "o.pgm"
        )
        assert result.exit_code == 0, result.output
        resolve.assert_called_once()

    def test_rgb_embed_keeps_format(self, invoke, rgb_cover, payload_file, tmp_path):
        out = tmp_path / "stego.ppm"
        result = invoke(
            "embed", "--cover", rgb_cover, "--payload", payload_file, "--out", out,
            "--plane", "g",
        )

        assert result.exit_code == 0, result.output
        report = parse(result.stdout)
        assert report["plane"] == "green"
        # error confined to one plane of three
        assert float(report["psnr_db"]) == pytest.approx(
            float(report["psnr_plane_db"]) + 10 * math.log10(3), abs=1e-3
        )
        stego, cover = read_image(out), read_image(rgb_cover)
        assert stego.red == cover.red
        assert stego.blue == cover.blue

    def test_cover_too_narrow(self, invoke, tmp_path, payload_file):
        cover = tmp_path / "narrow.pgm"
        write_image(cover, ImagePlane.zeros(3, 100))
        result = invoke("embed", "--cover", cover, "--payload", payload_file, "--out", tmp_path / "o.pgm")
        assert result.exit_code == 2
        assert "error:" in result.stderr

    def test_missing_payload_file(self, invoke, gray_cover, tmp_path):
        result = invoke(
            "embed", "--cover", gray_cover, "--payload", tmp_path / "missing.bin",
            "--out", tmp_path / "o.pgm",
        )
        assert result.exit_code == 4

    def test_missing_cover_file(self, invoke, payload_file, tmp_path):
        result = invoke(
            "embed", "--cover", tmp_path / "missing.pgm", "--payload", payload_file,
            "--out", tmp_path / "o.pgm",
        )
        assert result.exit_code == 4

    def test_undecodable_cover(self, invoke, payload_file, tmp_path):
        cover = tmp_path / "cover.pgm"
        cover.write_bytes(b"P3\n1 1\n255\n0 0 0\n")
        result = invoke("embed", "--cover", cover, "--payload", payload_file, "--out", tmp_path / "o.pgm")
        assert result.exit_code == 3

    def test_plane_on_grayscale(self, invoke, gray_cover, payload_file, tmp_path):
        result = invoke(
            "embed", "--cover", gray_cover, "--payload", payload_file,
            "--out", tmp_path / "o.pgm", "--plane", "b",
        )
        assert result.exit_code == 2

    def test_missing_option_is_usage_error(self, invoke, gray_cover):
        assert invoke("embed", "--cover", gray_cover).exit_code == 2

    def test_backend_does_not_change_output(self, invoke, gray_cover, payload_file, tmp_path):
        outputs = []
        for backend, seed in [("seq", 0), ("par", 0), ("shuf", 1), ("shuf", 2)]:
            out = tmp_path / f"stego-{backend}-{seed}.pgm"
            result = invoke(
                "embed", "--cover", gray_cover, "--payload", payload_file, "--out", out,
                "--backend", backend, "--seed", seed,
            )
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert len(set(outputs)) == 1


class TestExtractCommand:
    """Test the extract subcommand"""

    def test_round_trip(self, invoke, rgb_cover, payload_file, tmp_path):
        stego = tmp_path / "stego.ppm"
        recovered = tmp_path / "recovered.bin"
        invoke("embed", "--cover", rgb_cover, "--payload", payload_file, "--out", stego, "--plane", "blue")
        result = invoke("extract", "--stego", stego, "--out", recovered, "--plane", "b")

        assert result.exit_code == 0, result.output
        assert recovered.read_bytes() == payload_file.read_bytes()
        assert parse(result.stdout)["payload_bytes"] == "56"

    def test_pristine_image(self, invoke, tmp_path):
        cover = tmp_path / "blank.pgm"
        write_image(cover, ImagePlane.zeros(64, 8))
        result = invoke("extract", "--stego", cover, "--out", tmp_path / "p.bin")
        assert result.exit_code == 5

    def test_wrong_plane(self, invoke, rgb_cover, payload_file, tmp_path):
        stego = tmp_path / "stego.ppm"
        invoke("embed", "--cover", rgb_cover, "--payload", payload_file, "--out", stego)
        result = invoke("extract", "--stego", stego, "--out", tmp_path / "p.bin", "--plane", "g")
        assert result.exit_code == 5

    def test_raw_embed_and_fixed_length_extract(self, invoke, rgb_cover, payload_file, tmp_path):
        stego = tmp_path / "raw.ppm"
        recovered = tmp_path / "raw.bin"
        result = invoke("embed", "--cover", rgb_cover, "--payload", payload_file, "--out", stego, "--raw")
        assert parse(result.stdout)["embedded_bytes"] == "56"

        result = invoke("extract", "--stego", stego, "--out", recovered, "--length", 56)
        assert result.exit_code == 0, result.output
        assert recovered.read_bytes() == payload_file.read_bytes()

    def test_length_over_capacity(self, invoke, rgb_cover, tmp_path):
        result = invoke("extract", "--stego", rgb_cover, "--out", tmp_path / "p.bin", "--length", 10**6)
        assert result.exit_code == 2


# ============================================================================
# CAPACITY / PSNR TESTS
# ============================================================================


class TestCapacityCommand:
    """Test the capacity subcommand"""

    @pytest.mark.parametrize(
        "width, height, total, usable",
        [(1024, 1, 256, 248), (4, 2, 2, 0), (512, 512, 65536, 65528)],
    )
    def test_capacity(self, invoke, tmp_path, width, height, total, usable):
        cover = tmp_path / "cover.pgm"
        write_image(cover, ImagePlane.zeros(width, height))
        result = invoke("capacity", "--cover", cover)

        assert result.exit_code == 0, result.output
        report = parse(result.stdout)
        assert report["capacity_total"] == str(total)
        assert report["capacity_usable"] == str(usable)


class TestPsnrCommand:
    """Test the psnr subcommand"""

    def test_identical_files(self, invoke, gray_cover):
        result = invoke("psnr", "--ref", gray_cover, "--test", gray_cover)
        assert result.exit_code == 0, result.output
        assert parse(result.stdout)["psnr_db"] == "inf"

    def test_cover_against_stego(self, invoke, rgb_cover, payload_file, tmp_path):
        stego = tmp_path / "stego.ppm"
        invoke("embed", "--cover", rgb_cover, "--payload", payload_file, "--out", stego)
        result = invoke("psnr", "--ref", rgb_cover, "--test", stego)

        assert result.exit_code == 0, result.output
        report = parse(result.stdout)
        assert float(report["psnr_db"]) >= 10 * math.log10(255**2 / 9)
        assert report["psnr_green_db"] == "inf"
        assert report["psnr_blue_db"] == "inf"

    def test_single_plane(self, invoke, rgb_cover):
        result = invoke("psnr", "--ref", rgb_cover, "--test", rgb_cover, "--plane", "r")
        report = parse(result.stdout)
        assert report["samples_compared"] == str(64 * 48)
        assert "psnr_red_db" not in report

    def test_dimension_mismatch(self, invoke, tmp_path):
        a, b = tmp_path / "a.pgm", tmp_path / "b.pgm"
        write_image(a, ImagePlane.zeros(4, 4))
        write_image(b, ImagePlane.zeros(4, 5))
        assert invoke("psnr", "--ref", a, "--test", b).exit_code == 6

    @pytest.mark.parametrize("ref_name, test_name", [("a.ppm", "b.pgm"), ("a.pgm", "b.ppm")])
    def test_kind_mismatch_with_plane(
        self, invoke, tmp_path, make_rgb, make_plane, ref_name, test_name
    ):
        """Test an RGB image against a grayscale one of the same size"""
        images = {".ppm": make_rgb(4, 4), ".pgm": make_plane(4, 4)}
        ref, test = tmp_path / ref_name, tmp_path / test_name
        write_image(ref, images[ref.suffix])
        write_image(test, images[test.suffix])
        assert invoke("psnr", "--ref", ref, "--test", test, "--plane", "r").exit_code == 6
        assert invoke("psnr", "--ref", ref, "--test", test).exit_code == 6


# ============================================================================
# GLOBAL OPTION TESTS
# ============================================================================


class TestGlobalOptions:
    """Test --json and --version"""

    def test_json_output(self, invoke, tmp_path):
        cover = tmp_path / "cover.pgm"
        write_image(cover, ImagePlane.zeros(1024, 1))
        result = invoke("--json", "capacity", "--cover", cover)
        assert orjson.loads(result.stdout) == {
            "width": 1024,
            "height": 1,
            "capacity_total": 256,
            "capacity_usable": 248,
        }

    def test_json_errors(self, invoke, tmp_path):
        cover = tmp_path / "blank.pgm"
        write_image(cover, ImagePlane.zeros(64, 8))
        result = invoke("--json", "extract", "--stego", cover, "--out", tmp_path / "p.bin")
        assert result.exit_code == 5
        assert orjson.loads(result.stderr)["error_code"] == "NOT_A_STEGO_IMAGE"

    def test_json_infinity(self, invoke, gray_cover):
        result = invoke("--json", "psnr", "--ref", gray_cover, "--test", gray_cover)
        assert orjson.loads(result.stdout)["psnr_db"] == "inf"

    def test_version(self, invoke):
        result = invoke("--version")
        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_commands_registered(self, app):
        assert {"embed", "extract", "capacity", "psnr"} <= set(app.commands)
