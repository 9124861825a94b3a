"""
Tests for square construction, point queries and serialization.
"""
import json

import numpy as np
import pytest

from conftest import ORDER_8_GRID, ORDER_9_GRID
from mostperfect.models.params import ConstructionParams, GridLocation
from mostperfect.models.square import Square
from mostperfect.models.zp import ZpMatrix
from mostperfect.services.construction_service import ConstructionService
from mostperfect.services.square_service import SquareService
from mostperfect.utils.errors import (
    DuplicateSymbolError, MalformedSquareError, ModulusError, ParameterError, SingularMatrixError, SymbolRangeError,
)


def constructed(p, r):
    params = ConstructionParams(p, r)
    return SquareService.build_square(ConstructionService.build_M(params), params)


def test_order_8_square_matches_golden_grid():
    np.testing.assert_array_equal(constructed(2, 3).grid, np.array(ORDER_8_GRID))


def test_order_9_square_matches_golden_grid():
    np.testing.assert_array_equal(constructed(3, 2).grid, np.array(ORDER_9_GRID))


def test_symbol_at_answers_point_queries():
    params = ConstructionParams(2, 3)
    matrix = ConstructionService.build_M(params)
    assert SquareService.symbol_at(matrix, params, GridLocation(3, 5)) == 26
    square = constructed(2, 3)
    for row, col in [(0, 0), (0, 7), (5, 2), (7, 7)]:
        assert SquareService.symbol_at(matrix, params, GridLocation(row, col)) == square.entry_at(row, col)


def test_entry_at_wraps_around():
    square = constructed(2, 3)
    assert square.entry_at(8, 9) == 31
    assert SquareService.entry_at(square, -1, -1) == 45


@pytest.mark.parametrize('p,r', [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_constructed_squares_are_natural(p, r):
    assert constructed(p, r).is_natural()


@pytest.mark.parametrize('p,r', [(2, 3), (3, 2)])
def test_swapping_location_blocks_transposes(p, r):
    params = ConstructionParams(p, r)
    matrix = ConstructionService.build_M(params)
    swapped = SquareService.build_square(SquareService.swap_location_blocks(matrix, params), params)
    assert swapped == SquareService.build_square(matrix, params).transpose()


def test_singular_matrix_is_rejected():
    params = ConstructionParams(2, 2)
    with pytest.raises(SingularMatrixError):
        SquareService.build_square(ZpMatrix.zeros(4, 4, 2), params)


def test_matrix_over_wrong_field_is_rejected():
    params = ConstructionParams(2, 2)
    with pytest.raises(ModulusError):
        SquareService.build_square(ZpMatrix.identity(4, 3), params)


def test_square_accepts_non_natural_grids():
    square = Square([[1, 1], [1, 1]])
    assert square.order == 2
    assert not square.is_natural()
    assert Square([[0]]).is_natural()


@pytest.mark.parametrize('grid', [[], [[0, 1], [2]], [[0, 1, 2], [3, 4, 5]], [[0.5, 1], [2, 3]]])
def test_square_rejects_malformed_grids(grid):
    with pytest.raises(MalformedSquareError):
        Square(grid)


def test_square_grid_is_read_only():
    square = constructed(2, 2)
    with pytest.raises(ValueError):
        square.grid[0, 0] = 5


def test_grid_text_layout():
    text = SquareService.serialize(constructed(3, 2), 'grid').decode('utf-8')
    lines = text.splitlines()
    assert len(lines) == 9
    assert lines[0] == ' 0 16 23 63 79 59 45 34 41'
    assert text.endswith('\n')


def test_one_based_display():
    text = SquareService.serialize(constructed(2, 3), 'csv', offset=1).decode('utf-8')
    assert text.splitlines()[0] == '1,32,49,48,57,40,9,24'


def test_json_carries_provenance():
    data = json.loads(SquareService.serialize(constructed(3, 2), 'json'))
    assert (data['p'], data['r'], data['n']) == (3, 2, 9)
    assert data['grid'] == ORDER_9_GRID


@pytest.mark.parametrize('fmt', ['grid', 'csv', 'json'])
@pytest.mark.parametrize('offset', [0, 1])
def test_serialize_deserialize_identity(fmt, offset):
    square = constructed(2, 3)
    data = SquareService.serialize(square, fmt, offset)
    assert SquareService.deserialize(data, fmt, offset) == square
    assert SquareService.serialize(SquareService.deserialize(data, None, offset), fmt, offset) == data


def test_format_detection():
    assert SquareService.detect_format('{"grid": []}') == 'json'
    assert SquareService.detect_format('0,1\n2,3\n') == 'csv'
    assert SquareService.detect_format('0 1\n2 3\n') == 'grid'


def test_unknown_format():
    with pytest.raises(ParameterError):
        SquareService.serialize(constructed(2, 2), 'xml')


@pytest.mark.parametrize('text,error', [
    ('', MalformedSquareError),
    ('0 1\n2\n', MalformedSquareError),
    ('0 1 2\n3 4 5\n', MalformedSquareError),
    ('0 a\n2 3\n', MalformedSquareError),
    ('0 1\n2 2\n', DuplicateSymbolError),
    ('0 1\n2 4\n', SymbolRangeError),
    ('0 -1\n2 3\n', SymbolRangeError),
    ('{"grid": [[0, 1], [2, 3]], "n": 3}', MalformedSquareError),
    ('{"grid": 5}', MalformedSquareError),
    ('{"grid": [[0, 1], [2, 3]', MalformedSquareError),
])
def test_deserialize_errors(text, error):
    with pytest.raises(error):
        SquareService.deserialize(text)


def test_truncated_golden_file_is_malformed():
    text = SquareService.serialize(constructed(3, 2), 'grid').decode('utf-8')
    with pytest.raises(MalformedSquareError):
        SquareService.deserialize('\n'.join(text.splitlines()[:-1]))


@pytest.mark.parametrize('p,r', [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_identity_matrix_fills_row_major(p, r):
    params = ConstructionParams(p, r)
    square = SquareService.build_square(ZpMatrix.identity(params.dim, p), params)
    n = params.n
    np.testing.assert_array_equal(square.grid, np.arange(n * n).reshape(n, n))
    assert square.entry_at(2, 3) == 2 * n + 3
