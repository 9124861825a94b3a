"""
Square materialization and serialization.
Builds the square of a linear map T_M and reads/writes grid-text, CSV and JSON.
"""
import csv
import io
import json
import logging
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from mostperfect.models.params import ConstructionParams, GridLocation
from mostperfect.models.square import Square
from mostperfect.models.zp import ZpMatrix
from mostperfect.services.algebra_service import AlgebraService
from mostperfect.services.codec_service import CodecService
from mostperfect.utils.errors import (
    DimensionError, DuplicateSymbolError, MalformedSquareError, ModulusError,
    ParameterError, SingularMatrixError, SymbolRangeError,
)

logger = logging.getLogger(__name__)

SQUARE_FORMATS = ('grid', 'csv', 'json')
FORMAT_ALIASES = {'grid-text': 'grid', 'text': 'grid', 'txt': 'grid'}


@lru_cache(maxsize=32)
def _digit_table(params: ConstructionParams) -> np.ndarray:
    table = CodecService.symbol_digit_table(params)
    table.setflags(write=False)
    return table


def normalize_format(fmt: str) -> str:
    fmt = (fmt or '').lower()
    fmt = FORMAT_ALIASES.get(fmt, fmt)
    if fmt not in SQUARE_FORMATS:
        raise ParameterError(f'Unknown square format "{fmt}"; choose one of {", ".join(SQUARE_FORMATS)}')
    return fmt


class SquareService:
    """Build, query and (de)serialize squares."""

    @staticmethod
    def _check_matrix(matrix: ZpMatrix, params: ConstructionParams) -> None:
        if matrix.modulus != params.p:
            raise ModulusError(f'Matrix lives over Z_{matrix.modulus}, expected Z_{params.p}')
        if matrix.rows != params.dim or matrix.cols != params.dim:
            raise DimensionError(f'Expected a {params.dim}x{params.dim} matrix, got {matrix.rows}x{matrix.cols}')

    @staticmethod
    def scatter(matrix: np.ndarray, params: ConstructionParams) -> np.ndarray:
        """
        Place every symbol at location M * symbol (forward T_M).

        The caller guarantees M is nonsingular; a singular M leaves cells
        unwritten and collides symbols.
        """
        n = params.n
        locations = (_digit_table(params) @ matrix.T) % params.p
        rows, cols = CodecService.location_indices(locations, params)
        grid = np.full((n, n), -1, dtype=np.int64)
        grid[rows, cols] = np.arange(n * n, dtype=np.int64)
        return grid

    @staticmethod
    def build_square(matrix: ZpMatrix, params: ConstructionParams) -> Square:
        """Square R with grid[T_M(symbol)] = symbol for every symbol."""
        SquareService._check_matrix(matrix, params)
        if not AlgebraService.is_nonsingular(matrix):
            raise SingularMatrixError('A singular matrix cannot produce a natural square')
        return Square(SquareService.scatter(matrix.to_numpy(), params), params)

    @staticmethod
    def symbol_at(matrix: ZpMatrix, params: ConstructionParams, location: GridLocation) -> int:
        """Point query: the symbol M^-1 * location, without building the square."""
        SquareService._check_matrix(matrix, params)
        vector = CodecService.location_to_vector(location, params)
        symbol_vector = AlgebraService.mat_vec_mul(AlgebraService.invert(matrix), vector)
        return CodecService.vector_to_symbol(symbol_vector, params)

    @staticmethod
    def entry_at(square: Square, row: int, col: int) -> int:
        return square.entry_at(row, col)

    @staticmethod
    def swap_location_blocks(matrix: ZpMatrix, params: ConstructionParams) -> ZpMatrix:
        """Exchange the row-digit and column-digit halves of M's output; its square is the transpose."""
        rows = matrix.to_rows()
        r = params.r
        return ZpMatrix.from_rows(rows[r:] + rows[:r], matrix.modulus)

    @staticmethod
    def serialize(square: Square, fmt: str = 'grid', offset: int = 0) -> bytes:
        """
        Render a square; offset shifts the displayed symbols only.

        Args:
            square: Square to render
            fmt: grid | csv | json
            offset: added to every symbol on output (1 for 1-based display)

        Returns:
            UTF-8 encoded text
        """
        fmt = normalize_format(fmt)
        rows = (square.grid + offset).tolist()

        if fmt == 'grid':
            width = max(len(str(value)) for row in rows for value in row)
            text = '\n'.join(' '.join(str(value).rjust(width) for value in row) for row in rows) + '\n'
        elif fmt == 'csv':
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            writer.writerows(rows)
            text = buffer.getvalue()
        else:
            params = square.params
            data = {
                'p': params.p if params else None,
                'r': params.r if params else None,
                'n': square.order,
                'grid': rows,
            }
            text = json.dumps(data) + '\n'

        return text.encode('utf-8')

    @staticmethod
    def detect_format(text: str) -> str:
        stripped = text.lstrip()
        if stripped.startswith('{'):
            return 'json'
        if ',' in stripped.split('\n', 1)[0]:
            return 'csv'
        return 'grid'

    @staticmethod
    def deserialize(data: Union[bytes, str], fmt: Optional[str] = None, offset: int = 0) -> Square:
        """
        Parse a serialized square and enforce naturality.

        Raises:
            MalformedSquareError: not an n x n integer grid
            SymbolRangeError: a symbol outside 0..n^2-1
            DuplicateSymbolError: a symbol appearing twice
        """
        if isinstance(data, bytes):
            try:
                data = data.decode('utf-8')
            except UnicodeDecodeError as e:
                raise MalformedSquareError(f'Square file is not UTF-8 text: {e}')
        fmt = normalize_format(fmt) if fmt else SquareService.detect_format(data)

        params = None
        if fmt == 'json':
            rows, params = SquareService._parse_json(data)
        elif fmt == 'csv':
            rows = [row for row in csv.reader(io.StringIO(data)) if row]
        else:
            rows = [line.split() for line in data.splitlines() if line.strip()]

        grid = SquareService._to_int_grid(rows)
        grid = [[value - offset for value in row] for row in grid]
        SquareService._validate_natural(grid)
        return Square(grid, params)

    @staticmethod
    def _parse_json(text: str):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedSquareError(f'Invalid JSON: {e}')
        if not isinstance(payload, dict) or not isinstance(payload.get('grid'), list):
            raise MalformedSquareError('JSON square must be an object with a "grid" list')
        rows = payload['grid']
        if not all(isinstance(row, list) for row in rows):
            raise MalformedSquareError('JSON grid must be a list of rows')
        n = payload.get('n')
        if n is not None and n != len(rows):
            raise MalformedSquareError(f'JSON declares n = {n} but holds {len(rows)} rows')
        params = None
        if payload.get('p') is not None and payload.get('r') is not None:
            try:
                params = ConstructionParams(payload['p'], payload['r'])
            except ParameterError as e:
                raise MalformedSquareError(f'JSON provenance is invalid: {e.message}')
            if params.n != len(rows):
                raise MalformedSquareError(f'p^r = {params.n} does not match the grid order {len(rows)}')
        return rows, params

    @staticmethod
    def _to_int_grid(rows) -> list:
        if not rows:
            raise MalformedSquareError('Square file holds no rows')
        n = len(rows)
        grid = []
        for index, row in enumerate(rows):
            if len(row) != n:
                raise MalformedSquareError(f'Row {index} has {len(row)} entries, expected {n}')
            try:
                grid.append([SquareService._to_int(value) for value in row])
            except (TypeError, ValueError):
                raise MalformedSquareError(f'Row {index} contains a non-integer entry')
        return grid

    @staticmethod
    def _to_int(value) -> int:
        if isinstance(value, bool) or isinstance(value, float):
            raise ValueError(value)
        return int(value.strip()) if isinstance(value, str) else int(value)

    @staticmethod
    def _validate_natural(grid: list) -> None:
        n = len(grid)
        seen = set()
        for i, row in enumerate(grid):
            for j, value in enumerate(row):
                if not 0 <= value < n * n:
                    raise SymbolRangeError(f'Symbol {value} at ({i}, {j}) outside 0..{n * n - 1}')
                if value in seen:
                    raise DuplicateSymbolError(f'Symbol {value} at ({i}, {j}) appears more than once')
                seen.add(value)
