"""
Tests for residues, vectors and matrices over Z_p.
"""
import itertools

import numpy as np
import pytest

from conftest import M_2_3_ROWS, M_3_2_ROWS
from mostperfect.models.zp import Residue, ZpMatrix, ZpVector, is_prime
from mostperfect.services.algebra_service import AlgebraService
from mostperfect.utils.errors import DimensionError, ModulusError, ParameterError, SingularMatrixError


@pytest.mark.parametrize('value,expected', [(2, True), (3, True), (5, True), (7, True), (97, True),
                                            (0, False), (1, False), (4, False), (9, False), (91, False)])
def test_is_prime(value, expected):
    assert is_prime(value) is expected


def test_residue_reduces_and_validates():
    """Residues are canonical 0..p-1."""
    assert Residue.of(-1, 3).value == 2
    assert not Residue.of(6, 3)
    with pytest.raises(ParameterError):
        Residue(3, 3)
    with pytest.raises(ParameterError):
        Residue(1, 4)


def test_vector_entries_are_reduced():
    vector = ZpVector((-1, 5, 3), 3)
    assert vector.entries == (2, 2, 0)
    assert not vector.is_fully_nonzero()
    assert ZpVector((1, 2), 3).is_fully_nonzero()


def test_vector_arithmetic():
    u = ZpVector((1, 2, 0), 3)
    v = ZpVector((2, 2, 1), 3)
    assert (u + v).entries == (0, 1, 1)
    assert (u - v).entries == (2, 0, 2)
    assert u.scale(2).entries == (2, 1, 0)
    assert ZpVector.elementary(1, 3, 3).entries == (0, 1, 0)


def test_vector_mismatch_errors():
    with pytest.raises(ModulusError):
        ZpVector((1,), 3) + ZpVector((1,), 5)
    with pytest.raises(DimensionError):
        ZpVector((1,), 3) + ZpVector((1, 1), 3)
    with pytest.raises(DimensionError):
        ZpVector((), 3)


def test_matrix_from_rows_reduces_negative_entries():
    matrix = ZpMatrix.from_rows([[-1, 0], [4, 1]], 3)
    assert matrix.to_rows() == [[2, 0], [1, 1]]
    assert matrix[1, 0] == 1
    assert matrix.column(0).entries == (2, 1)
    assert matrix.transpose().to_rows() == [[2, 1], [0, 1]]


def test_matrix_rejects_ragged_rows():
    with pytest.raises(DimensionError):
        ZpMatrix.from_rows([[1, 0], [1]], 3)


def test_with_column_replaces_one_column():
    matrix = ZpMatrix.identity(3, 5).with_column(2, ZpVector((1, 2, 3), 5))
    assert matrix.to_rows() == [[1, 0, 1], [0, 1, 2], [0, 0, 3]]


def test_mat_vec_mul():
    matrix = ZpMatrix.from_rows([[1, 2], [3, 4]], 5)
    assert AlgebraService.mat_vec_mul(matrix, ZpVector((1, 1), 5)).entries == (3, 2)


def test_mat_vec_mul_modulus_mismatch():
    with pytest.raises(ModulusError):
        AlgebraService.mat_vec_mul(ZpMatrix.identity(2, 5), ZpVector((1, 1), 3))


def test_determinant_and_inverse_mod_5():
    matrix = ZpMatrix.from_rows([[1, 2], [3, 4]], 5)
    assert AlgebraService.determinant(matrix).value == 3
    assert AlgebraService.invert(matrix).to_rows() == [[3, 1], [4, 2]]
    assert AlgebraService.solve(matrix, ZpVector((1, 0), 5)).entries == (3, 4)


def test_singular_matrix():
    matrix = ZpMatrix.from_rows([[1, 2], [2, 4]], 5)
    assert AlgebraService.rank(matrix) == 1
    assert not AlgebraService.is_nonsingular(matrix)
    assert AlgebraService.determinant(matrix).value == 0
    with pytest.raises(SingularMatrixError):
        AlgebraService.invert(matrix)
    with pytest.raises(SingularMatrixError):
        AlgebraService.solve(matrix, ZpVector((1, 0), 5))


def test_zero_and_identity_edge_cases():
    assert not AlgebraService.is_nonsingular(ZpMatrix.zeros(3, 3, 7))
    assert AlgebraService.invert(ZpMatrix.identity(4, 7)) == ZpMatrix.identity(4, 7)


def test_is_nonsingular_requires_square_matrix():
    with pytest.raises(DimensionError):
        AlgebraService.is_nonsingular(ZpMatrix.zeros(2, 3, 2))


def test_inverse_round_trip_on_known_matrix():
    matrix = ZpMatrix.from_rows(M_3_2_ROWS, 3)
    inverse = AlgebraService.invert(matrix)
    assert AlgebraService.mat_mul(matrix, inverse) == ZpMatrix.identity(4, 3)
    assert AlgebraService.mat_mul(inverse, matrix) == ZpMatrix.identity(4, 3)


@pytest.mark.parametrize('p', [2, 3, 5, 7])
@pytest.mark.parametrize('d', [1, 2, 4, 6, 8])
def test_random_matrices_invert_correctly(p, d):
    """M * M^-1 = M^-1 * M = I for every nonsingular draw; singular draws refuse to invert."""
    rng = np.random.Generator(np.random.PCG64(1000 * p + d))
    identity = ZpMatrix.identity(d, p)
    for _ in range(40):
        matrix = ZpMatrix.from_rows(rng.integers(0, p, size=(d, d)).tolist(), p)
        if AlgebraService.is_nonsingular(matrix):
            inverse = AlgebraService.invert(matrix)
            assert AlgebraService.mat_mul(matrix, inverse) == identity
            assert AlgebraService.mat_mul(inverse, matrix) == identity
            assert AlgebraService.determinant(matrix).value != 0
        else:
            assert AlgebraService.determinant(matrix).value == 0
            with pytest.raises(SingularMatrixError):
                AlgebraService.invert(matrix)


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_mat_vec_mul_distributes_over_addition(p):
    rng = np.random.Generator(np.random.PCG64(p))
    for _ in range(25):
        matrix = ZpMatrix.from_rows(rng.integers(0, p, size=(6, 6)).tolist(), p)
        u = ZpVector(tuple(int(x) for x in rng.integers(0, p, size=6)), p)
        v = ZpVector(tuple(int(x) for x in rng.integers(0, p, size=6)), p)
        assert AlgebraService.mat_vec_mul(matrix, u + v) == (
            AlgebraService.mat_vec_mul(matrix, u) + AlgebraService.mat_vec_mul(matrix, v)
        )


def test_order_8_matrix_maps_symbol_26():
    """Symbol 011010 lands at location 011101 (row 3, column 5)."""
    matrix = ZpMatrix.from_rows(M_2_3_ROWS, 2)
    assert AlgebraService.mat_vec_mul(matrix, ZpVector((0, 1, 1, 0, 1, 0), 2)).entries == (0, 1, 1, 1, 0, 1)
    assert AlgebraService.is_nonsingular(matrix)
    vector = ZpVector((1, 0, 1, 1, 0, 1), 2)
    assert AlgebraService.mat_vec_mul(ZpMatrix.identity(6, 2), vector) == vector


def test_gl_order_matches_exhaustive_count():
    """Closed form |GL(2, Z_3)| = 48 agrees with brute force."""
    count = sum(
        AlgebraService.is_nonsingular(ZpMatrix(2, 2, entries, 3))
        for entries in itertools.product(range(3), repeat=4)
    )
    assert count == AlgebraService.gl_order(2, 3) == 48
    assert AlgebraService.gl_order(4, 2) == 15 * 14 * 12 * 8 == 20160


def test_matrix_text_format():
    matrix = ZpMatrix.from_rows([[1, 0], [2, 1]], 3)
    text = AlgebraService.format_matrix(matrix)
    assert text == '3 2 2\n1 0\n2 1\n'
    assert AlgebraService.parse_matrix(text) == matrix
    assert AlgebraService.format_vector(ZpVector((2, 1), 3)) == '3 1 2\n2 1\n'
    assert AlgebraService.parse_vector('3 1 2\n2 1\n') == ZpVector((2, 1), 3)


@pytest.mark.parametrize('text,error', [
    ('', DimensionError),
    ('3 2\n1 0', DimensionError),
    ('3 2 2\n1 0\n', DimensionError),
    ('2 1 2\n0 2\n', DimensionError),
    ('3 1 2\n0 x\n', DimensionError),
    ('4 1 1\n0\n', ParameterError),
])
def test_parse_matrix_errors(text, error):
    with pytest.raises(error):
        AlgebraService.parse_matrix(text)
