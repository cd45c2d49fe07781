"""
Command-line surface of mahlerrev.

Every command prints JSON or a table on stdout and exits with 0 when
nothing falls below its bound, 1 when something does and 2 on bad input.
"""
import functools
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import click
import numpy as np
from pydantic import ValidationError

from src.errors import MahlerError
from src.geometry.geom2d import conjugate, polar_with_check
from src.geometry.mahler import mahler_product, mahler_product_psh, santalo_axis_search
from src.geometry.revolve import polar_body, volume
from src.lemma.sign_claims import verify_sign_claims
from src.models.profile import AxialProfile
from src.models.sweep import SweepConfig, SweepMode
from src.reduction.reducer import reduce_to_terminal, verify_certificate
from src.sweeps.golden import golden_check
from src.sweeps.orchestrator import run_sweep
from src.utils.config import Config
from src.utils.formatters import ReportFormatter
from src.utils.loaders import load_axial, load_body, load_generator, load_polygon, load_psh

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

in_option = click.option('--in', 'in_path', type=click.Path(exists=True, dir_okay=False, path_type=Path),
                         required=True, help='JSON input file')
out_option = click.option('--out', 'out_path', type=click.Path(dir_okay=False, path_type=Path),
                          default=None, help='Also write the JSON result here')
tolerance_option = click.option('--tolerance', type=float, default=None,
                                help='Negative slack tolerated before reporting a violation')


def _emit(data: Dict[str, Any], out_path: Optional[Path], echo: bool = True):
    if echo:
        click.echo(json.dumps(data, indent=2))
    if out_path is not None:
        out_path.parent.mkdir(parents=True, exist_ok=True)
        ReportFormatter.export_json(data, out_path)


def _tolerance(ctx: click.Context, tolerance: Optional[float]) -> float:
    return ctx.obj.tolerance if tolerance is None else tolerance


def handle_errors(command):
    """Turn library and validation failures into a one-line message and exit code 2."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = command(*args, **kwargs)
        except (MahlerError, ValidationError) as e:
            logger.debug(f"{ctx.command.name} failed", exc_info=True)
            click.echo(f"error: {e}", err=True)
            ctx.exit(EXIT_INPUT)
        ctx.exit(code or EXIT_OK)
    return wrapper


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Log per-step detail')
@click.option('--env-file', type=click.Path(dir_okay=False), default=None, help='Settings file (.env)')
@click.pass_context
def cli(ctx: click.Context, verbose: bool, env_file: Optional[str]):
    """Mahler products of bodies of revolution and their equality cases."""
    config = Config(env_file)
    level = logging.DEBUG if verbose else getattr(logging, config.log_level.upper(), logging.INFO)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    ctx.obj = config


@cli.command('volume')
@in_option
@out_option
@handle_errors
def volume_cmd(in_path: Path, out_path: Optional[Path]):
    """Volume of the body generated by a profile or chain."""
    config = click.get_current_context().obj
    body = load_body(in_path)
    _emit({'volume': volume(body, config.quad_tol, config.quad_max_depth)}, out_path)


@cli.command('polar')
@in_option
@out_option
@handle_errors
def polar_cmd(in_path: Path, out_path: Optional[Path]):
    """Polar of an unconditional polygon with its involution error."""
    _emit(polar_with_check(load_polygon(in_path)).to_dict(), out_path)


@cli.command('conjugate')
@in_option
@out_option
@click.option('--samples', type=click.IntRange(min=2), default=33, show_default=True,
              help='Sample points printed for analytic profiles')
@handle_errors
def conjugate_cmd(in_path: Path, out_path: Optional[Path], samples: int):
    """Generating function of the polar body."""
    f = load_generator(in_path)
    g = conjugate(f)
    data = g.to_dict()
    if not g.is_piecewise_linear:
        xs = np.linspace(0.0, g.half_width, samples)
        data['samples'] = [[float(x), g.value(float(x))] for x in xs]
    if f.is_piecewise_linear:
        data['body'] = polar_body(load_body(in_path)).to_dict()
    _emit(data, out_path)


@cli.command('mahler')
@in_option
@out_option
@tolerance_option
@handle_errors
def mahler_cmd(in_path: Path, out_path: Optional[Path], tolerance: Optional[float]):
    """Mahler product of a body of revolution against 4 pi^2 / 3."""
    ctx = click.get_current_context()
    report = mahler_product(load_body(in_path), ctx.obj.quad_tol, ctx.obj.quad_max_depth)
    _emit(report.to_dict(), out_path)
    return EXIT_VIOLATION if report.slack < -_tolerance(ctx, tolerance) else EXIT_OK


@cli.command('psh')
@in_option
@out_option
@tolerance_option
@handle_errors
def psh_cmd(in_path: Path, out_path: Optional[Path], tolerance: Optional[float]):
    """Mahler product of a parallel-sections body against 32 / 3."""
    ctx = click.get_current_context()
    report = mahler_product_psh(load_psh(in_path), ctx.obj.quad_tol, ctx.obj.quad_max_depth)
    _emit(report.to_dict(), out_path)
    return EXIT_VIOLATION if report.slack < -_tolerance(ctx, tolerance) else EXIT_OK


@cli.command('santalo-cone')
@click.option('--in', 'in_path', type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help='Axial profile JSON (defaults to the cone 1 - x on [0, 1])')
@out_option
@tolerance_option
@handle_errors
def santalo_cone_cmd(in_path: Optional[Path], out_path: Optional[Path], tolerance: Optional[float]):
    """Best axis position of the origin and the resulting Mahler product."""
    ctx = click.get_current_context()
    profile = AxialProfile.cone() if in_path is None else load_axial(in_path)
    result = santalo_axis_search(profile, ctx.obj.golden_tol)
    _emit(result.to_dict(), out_path)
    return EXIT_VIOLATION if result.best_product - result.bound < -_tolerance(ctx, tolerance) else EXIT_OK


@cli.command('verify-lemma')
@click.option('--grid', type=click.IntRange(min=50), default=100, show_default=True, help='Grid rows')
@out_option
@tolerance_option
@handle_errors
def verify_lemma_cmd(grid: int, out_path: Optional[Path], tolerance: Optional[float]):
    """Check every endpoint-sign claim on the triangle grid."""
    ctx = click.get_current_context()
    report = verify_sign_claims(grid, _tolerance(ctx, tolerance))
    click.echo(ReportFormatter.format_claims(report))
    _emit(report.to_dict(), out_path, echo=False)
    return EXIT_VIOLATION if report.total_violations else EXIT_OK


@cli.command('reduce')
@in_option
@out_option
@tolerance_option
@handle_errors
def reduce_cmd(in_path: Path, out_path: Optional[Path], tolerance: Optional[float]):
    """Reduce a polygon to the cylinder or bicone and check the certificate."""
    ctx = click.get_current_context()
    certificate = reduce_to_terminal(load_polygon(in_path))
    click.echo(ReportFormatter.format_certificate(certificate))
    _emit(certificate.to_dict(), out_path, echo=False)
    return EXIT_OK if verify_certificate(certificate, _tolerance(ctx, tolerance)) else EXIT_VIOLATION


@cli.command('sweep')
@click.option('--mode', type=click.Choice([m.value for m in SweepMode]), default=SweepMode.REVOLUTION.value,
              show_default=True)
@click.option('--samples', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--seed', type=click.IntRange(min=0, max=2 ** 64 - 1), default=None)
@click.option('--jobs', type=click.IntRange(min=1), default=None)
@click.option('--max-vertices', type=click.IntRange(min=3, max=32), default=None)
@click.option('--out', 'out_path', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='CSV path; the summary goes next to it')
@tolerance_option
@handle_errors
def sweep_cmd(mode: str, samples: int, seed: Optional[int], jobs: Optional[int], max_vertices: Optional[int],
              out_path: Optional[Path], tolerance: Optional[float]):
    """Random sweep against the bound of a mode."""
    ctx = click.get_current_context()
    config = ctx.obj
    sweep_config = SweepConfig(
        samples=samples,
        max_vertices=config.max_vertices if max_vertices is None else max_vertices,
        seed=config.seed if seed is None else seed,
        mode=SweepMode(mode),
        out_path=out_path or config.output_dir / f"sweep-{mode}.csv",
        jobs=config.jobs if jobs is None else jobs,
    )
    summary = run_sweep(sweep_config, _tolerance(ctx, tolerance))
    click.echo(ReportFormatter.format_summary(summary))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


@cli.command('golden')
@out_option
@handle_errors
def golden_cmd(out_path: Optional[Path]):
    """Equality cases of every bound."""
    report = golden_check()
    click.echo(ReportFormatter.format_golden_table(report))
    _emit(report.to_dict(), out_path, echo=False)
    return EXIT_OK if report.all_passed else EXIT_VIOLATION


def main():
    cli(prog_name='mahlerrev')
