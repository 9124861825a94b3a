"""
Command-line front end.
Results go to stdout, logs to stderr. Exit codes: 0 success, 1 negative result, 2 usage or data error.
"""
import json
import logging
import os
import sys
from functools import wraps

import click

from config import config
from mostperfect.models.params import ConstructionParams
from mostperfect.models.search import SearchMode, SearchResult, SearchSpace
from mostperfect.models.square import Square
from mostperfect.services.algebra_service import AlgebraService
from mostperfect.services.construction_service import CONSTRUCTION_OBJECTS, ConstructionService
from mostperfect.services.search_service import SearchService
from mostperfect.services.square_service import SQUARE_FORMATS, FORMAT_ALIASES, SquareService
from mostperfect.services.verifier_service import VerifierService
from mostperfect.utils.errors import DimensionError, MostPerfectError, ParameterError
from mostperfect.utils.helpers import read_text_file, write_output
from mostperfect.utils.logging import configure_logging
from mostperfect.utils.validators import validate_construction_params, validate_integer, validate_shard_spec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

FORMAT_CHOICES = click.Choice(SQUARE_FORMATS + tuple(FORMAT_ALIASES), case_sensitive=False)
MODE_CHOICES = click.Choice([mode.value for mode in SearchMode])


class CommandFailed(Exception):
    """Raised inside a command to exit 2 with a message."""


def handle_errors(f):
    """Map domain and I/O errors to exit code 2 with a one-line message on stderr."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except MostPerfectError as e:
            click.echo(f'Error [{e.code}]: {e.message}', err=True)
        except CommandFailed as e:
            click.echo(f'Error: {e}', err=True)
        except OSError as e:
            click.echo(f'Error: {e.strerror or e}: {e.filename or ""}'.rstrip(': '), err=True)
        sys.exit(EXIT_ERROR)
    return decorated_function


def _settings(ctx: click.Context):
    return ctx.obj['config']


def _params(p, r) -> ConstructionParams:
    is_valid, params, error = validate_construction_params(p, r)
    if not is_valid:
        raise CommandFailed(error)
    return params


def _emit(data: bytes, output: str = None) -> None:
    write_output(data, output, click.get_binary_stream('stdout'))


def _emit_json(data: dict, output: str = None) -> None:
    _emit((json.dumps(data, sort_keys=True, indent=2) + '\n').encode('utf-8'), output)


def _params_for_matrix(matrix) -> ConstructionParams:
    """Recover (p, r) from a 2r x 2r matrix file."""
    if not matrix.is_square or matrix.rows % 2:
        raise DimensionError(f'Expected a 2r x 2r matrix, got {matrix.rows}x{matrix.cols}')
    return ConstructionParams(matrix.modulus, matrix.rows // 2)


@click.group()
@click.option('--log-level', default=None, help='Override LOG_LEVEL')
@click.pass_context
def cli(ctx, log_level):
    """Generate, verify and census linear most-perfect magic squares."""
    settings = config[os.getenv('MPS_ENV') or 'default']
    configure_logging(log_level or settings.LOG_LEVEL, settings.LOG_FORMAT)
    ctx.ensure_object(dict)
    ctx.obj['config'] = settings


@cli.command('generate')
@click.option('--p', 'p', required=True, type=int, help='Prime p')
@click.option('--r', 'r', required=True, type=int, help='Exponent r >= 2 (order n = p^r)')
@click.option('--format', 'fmt', default='grid', type=FORMAT_CHOICES, show_default=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write to file instead of stdout')
@click.option('--one-based', is_flag=True, help='Print symbols 1..n^2 instead of 0..n^2-1')
@handle_errors
def cmd_generate(p, r, fmt, output, one_based):
    """Write the square built from M for (p, r)."""
    params = _params(p, r)
    square = SquareService.build_square(ConstructionService.build_M(params), params)
    _emit(SquareService.serialize(square, fmt, 1 if one_based else 0), output)
    logger.info('Generated square', extra={'p': params.p, 'r': params.r, 'n': params.n, 'format': fmt})


@cli.command('verify')
@click.argument('input_path', required=False, type=click.Path(exists=True, dir_okay=False))
@click.option('--p', 'p', type=int, help='Type p to test (defaults to the matrix modulus with --matrix)')
@click.option('--matrix', 'matrix_path', type=click.Path(exists=True, dir_okay=False),
              help='Matrix text file; verifies the square it produces')
@click.option('--format', 'fmt', default=None, type=FORMAT_CHOICES, help='Input format (auto-detected)')
@click.option('--one-based', is_flag=True, help='Input symbols are 1..n^2')
@click.option('--window-corners', is_flag=True, help='Also sweep the window corner identity')
@handle_errors
def cmd_verify(input_path, p, matrix_path, fmt, one_based, window_corners):
    """Print the property report of a square; exit 0 only for a type-p most-perfect square."""
    if bool(input_path) == bool(matrix_path):
        raise CommandFailed('Give exactly one of INPUT_PATH or --matrix')

    if matrix_path:
        matrix = AlgebraService.parse_matrix(read_text_file(matrix_path))
        params = _params_for_matrix(matrix)
        square = SquareService.build_square(matrix, params)
        p = params.p if p is None else p
    else:
        if p is None:
            raise CommandFailed('--p is required when verifying a square file')
        with open(input_path, 'rb') as handle:
            square = SquareService.deserialize(handle.read(), fmt, 1 if one_based else 0)

    is_valid, type_p, error = validate_integer(p, min_value=2, field_name='p')
    if not is_valid:
        raise CommandFailed(error)

    report = VerifierService.verify_full(square, type_p)
    data = report.to_dict()
    if window_corners:
        windows = VerifierService.sweep_window_corners(square, type_p)
        data['window_corners'] = windows.ok
        data['window_corners_witness'] = windows.witness.to_dict() if windows.witness else None
    _emit_json(data)
    sys.exit(EXIT_OK if report.is_type_p_mps else EXIT_NEGATIVE)


@cli.command('matrix')
@click.option('--p', 'p', required=True, type=int)
@click.option('--r', 'r', required=True, type=int)
@click.option('--which', required=True, type=click.Choice(CONSTRUCTION_OBJECTS))
@handle_errors
def cmd_matrix(p, r, which):
    """Print one of the construction matrices (or delta) in matrix text format."""
    params = _params(p, r)
    built = ConstructionService.build_object(params, which)
    if which == 'delta':
        _emit(AlgebraService.format_vector(built).encode('utf-8'))
    else:
        _emit(AlgebraService.format_matrix(built).encode('utf-8'))


@cli.command('delta')
@click.option('--p', 'p', type=int)
@click.option('--r', 'r', type=int)
@click.option('--which', default='M', type=click.Choice(['Ltilde', 'M']), show_default=True)
@click.option('--matrix', 'matrix_path', type=click.Path(exists=True, dir_okay=False),
              help='Search a matrix file instead of a built matrix')
@handle_errors
def cmd_delta(p, r, which, matrix_path):
    """Find a fully nonzero x with X x = e_1 + e_{r+1}; exit 1 when none exists."""
    if matrix_path:
        matrix = AlgebraService.parse_matrix(read_text_file(matrix_path))
        params = _params_for_matrix(matrix)
    else:
        if p is None or r is None:
            raise CommandFailed('--p and --r are required without --matrix')
        params = _params(p, r)
        matrix = ConstructionService.build_object(params, which)

    delta = SearchService.find_delta(matrix, params)
    if delta is None:
        click.echo('No fully nonzero solution exists', err=True)
        sys.exit(EXIT_NEGATIVE)
    _emit(AlgebraService.format_vector(delta).encode('utf-8'))


@cli.command('search')
@click.option('--p', 'p', type=int)
@click.option('--r', 'r', type=int)
@click.option('--mode', default=SearchMode.EXHAUSTIVE_ALL.value, type=MODE_CHOICES, show_default=True)
@click.option('--shards', default=1, type=int, show_default=True, help='Number of shards')
@click.option('--shard', default=0, type=int, show_default=True, help='0-based shard to run')
@click.option('--budget', type=int, help='Candidate budget (default MPS_SEARCH_BUDGET)')
@click.option('--seed', default=0, type=int, show_default=True, help='Seed for random-sample')
@click.option('--count', default=0, type=int, help='Sample count for random-sample')
@click.option('--workers', default=1, type=int, show_default=True, help='Worker processes for a whole-space run')
@click.option('--checkpoint', 'checkpoint_path', type=click.Path(dir_okay=False), help='Resumable checkpoint file')
@click.option('--merge', 'merge_paths', multiple=True, type=click.Path(exists=True, dir_okay=False),
              help='Merge shard reports instead of searching (repeatable)')
@click.option('--with-timing', is_flag=True, help='Include wall_time in the report')
@click.option('--output', '-o', type=click.Path(dir_okay=False))
@click.pass_context
@handle_errors
def cmd_search(ctx, p, r, mode, shards, shard, budget, seed, count, workers, checkpoint_path,
               merge_paths, with_timing, output):
    """Census of matrices whose squares are most-perfect; prints a JSON report."""
    settings = _settings(ctx)

    if merge_paths:
        results = [SearchResult.from_dict(json.loads(read_text_file(path))) for path in merge_paths]
        merged = SearchService.merge_results(results, settings.MPS_REPRESENTATIVE_CAP)
        _emit_json(merged.to_dict(include_timing=with_timing), output)
        return

    if p is None or r is None:
        raise CommandFailed('--p and --r are required unless merging')
    params = _params(p, r)

    is_valid, shard_spec, error = validate_shard_spec(shard, shards)
    if not is_valid:
        raise CommandFailed(error)
    if workers < 1 or workers > max(settings.MPS_MAX_WORKERS, 1):
        raise CommandFailed(f'--workers must be between 1 and {max(settings.MPS_MAX_WORKERS, 1)}')
    if workers > 1 and (shards > 1 or checkpoint_path):
        raise CommandFailed('--workers cannot be combined with --shards or --checkpoint')

    try:
        space = SearchSpace(
            params=params,
            mode=SearchMode.parse(mode),
            sample_count=count,
            seed=seed,
            budget=budget if budget is not None else settings.MPS_SEARCH_BUDGET,
            representative_cap=settings.MPS_REPRESENTATIVE_CAP,
            algorithm=settings.MPS_RANDOM_ALGORITHM,
        )
    except ParameterError as e:
        raise CommandFailed(e.message)

    if workers > 1:
        result = SearchService.census_parallel(space, workers)
    else:
        result = SearchService.census_partition(space, shard_spec[0], shard_spec[1],
                                                checkpoint_path, settings.MPS_CHECKPOINT_INTERVAL)
    logger.info('Census complete', extra={**result.counts(), 'wall_time': result.wall_time})
    _emit_json(result.to_dict(include_timing=with_timing), output)


@cli.command('convert')
@click.argument('input_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--from', 'from_fmt', default=None, type=FORMAT_CHOICES, help='Input format (auto-detected)')
@click.option('--to', 'to_fmt', required=True, type=FORMAT_CHOICES)
@click.option('--from-offset', default=0, type=click.IntRange(0, 1), show_default=True)
@click.option('--to-offset', default=0, type=click.IntRange(0, 1), show_default=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False))
@handle_errors
def cmd_convert(input_path, from_fmt, to_fmt, from_offset, to_offset, output):
    """Re-encode a square file in another format."""
    with open(input_path, 'rb') as handle:
        square: Square = SquareService.deserialize(handle.read(), from_fmt, from_offset)
    _emit(SquareService.serialize(square, to_fmt, to_offset), output)


def main():
    cli(obj={})
