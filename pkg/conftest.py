"""
Shared pytest fixtures and golden values.
"""
import pytest

from mostperfect import create_app

# Order-8 square of p = 2, r = 3
ORDER_8_GRID = [
    [0, 31, 48, 47, 56, 39, 8, 23],
    [59, 36, 11, 20, 3, 28, 51, 44],
    [6, 25, 54, 41, 62, 33, 14, 17],
    [61, 34, 13, 18, 5, 26, 53, 42],
    [7, 24, 55, 40, 63, 32, 15, 16],
    [60, 35, 12, 19, 4, 27, 52, 43],
    [1, 30, 49, 46, 57, 38, 9, 22],
    [58, 37, 10, 21, 2, 29, 50, 45],
]

# Order-9 square of p = 3, r = 2
ORDER_9_GRID = [
    [0, 16, 23, 63, 79, 59, 45, 34, 41],
    [64, 80, 57, 46, 35, 39, 1, 17, 21],
    [47, 33, 40, 2, 15, 22, 65, 78, 58],
    [7, 14, 18, 70, 77, 54, 52, 32, 36],
    [71, 75, 55, 53, 30, 37, 8, 12, 19],
    [51, 31, 38, 6, 13, 20, 69, 76, 56],
    [5, 9, 25, 68, 72, 61, 50, 27, 43],
    [66, 73, 62, 48, 28, 44, 3, 10, 26],
    [49, 29, 42, 4, 11, 24, 67, 74, 60],
]

M_2_3_ROWS = [
    [1, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [0, 1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
]

M_3_2_ROWS = [
    [2, 2, 2, 0],
    [0, 0, 1, 1],
    [2, 0, 2, 2],
    [1, 1, 0, 0],
]

# A 4x4 most-perfect square on 0..15 written out by hand
PANDIAGONAL_4 = [
    [0, 7, 12, 11],
    [13, 10, 1, 6],
    [3, 4, 15, 8],
    [14, 9, 2, 5],
]


@pytest.fixture
def app():
    """Flask application in testing mode."""
    return create_app('testing')


@pytest.fixture
def order_8_grid():
    return [list(row) for row in ORDER_8_GRID]


@pytest.fixture
def order_9_grid():
    return [list(row) for row in ORDER_9_GRID]


@pytest.fixture
def cli_env(monkeypatch):
    """Run CLI commands against the testing configuration."""
    monkeypatch.setenv('MPS_ENV', 'testing')
