"""
Tests for the staircase matrices, M and delta.
"""
import pytest

from conftest import M_2_3_ROWS, M_3_2_ROWS
from mostperfect.models.params import ConstructionParams
from mostperfect.models.zp import ZpMatrix, ZpVector
from mostperfect.services.algebra_service import AlgebraService
from mostperfect.services.construction_service import CONSTRUCTION_OBJECTS, ConstructionService
from mostperfect.utils.errors import ParameterError

PARAM_GRID = [(p, r) for p in (2, 3, 5, 7) for r in (2, 3) if p ** r <= 343]


def test_staircase_small_cases():
    assert ConstructionService.build_Lr(ConstructionParams(2, 2)).to_rows() == [[0, 1], [1, 1]]
    assert ConstructionService.build_Lr(ConstructionParams(3, 3)).to_rows() == [[0, 0, 1], [0, 1, 1], [1, 1, 1]]


@pytest.mark.parametrize('r', [2, 3, 4, 5])
def test_staircase_is_symmetric(r):
    staircase = ConstructionService.build_Lr(ConstructionParams(2, r))
    assert staircase == staircase.transpose()


def test_block_form_of_L():
    params = ConstructionParams(3, 2)
    assert ConstructionService.build_L(params).to_rows() == [
        [0, 0, 0, 1],
        [0, 0, 1, 1],
        [0, 1, 0, 0],
        [1, 1, 0, 0],
    ]


def test_ltilde_subtracts_diagonal_step_from_every_column():
    params = ConstructionParams(3, 2)
    assert ConstructionService.build_Ltilde(params).to_rows() == [
        [2, 2, 2, 0],
        [0, 0, 1, 1],
        [2, 0, 2, 2],
        [1, 1, 0, 0],
    ]


def test_M_for_order_8():
    assert ConstructionService.build_M(ConstructionParams(2, 3)) == ZpMatrix.from_rows(M_2_3_ROWS, 2)


def test_M_for_order_9():
    assert ConstructionService.build_M(ConstructionParams(3, 2)) == ZpMatrix.from_rows(M_3_2_ROWS, 3)


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_M_equals_ltilde_when_r_is_2(p):
    params = ConstructionParams(p, 2)
    assert ConstructionService.build_M(params) == ConstructionService.build_Ltilde(params)


def test_delta_for_p3_r2():
    assert ConstructionService.build_delta(ConstructionParams(3, 2)) == ZpVector((2, 1, 2, 1), 3)


@pytest.mark.parametrize('p,r', PARAM_GRID)
def test_construction_identities(p, r):
    """M is nonsingular, delta is fully nonzero and M delta = e_1 + e_{r+1}."""
    params = ConstructionParams(p, r)
    matrix = ConstructionService.build_M(params)
    delta = ConstructionService.build_delta(params)
    assert AlgebraService.is_nonsingular(matrix)
    assert delta.is_fully_nonzero()
    assert AlgebraService.mat_vec_mul(matrix, delta) == ConstructionService.diagonal_step(params)


@pytest.mark.parametrize('p,r', PARAM_GRID + [(2, 4), (3, 4)])
def test_lhat_determinant_is_plus_or_minus_one(p, r):
    params = ConstructionParams(p, r)
    determinant = AlgebraService.determinant(ConstructionService.build_Lhat(params)).value
    assert determinant in (1, p - 1)


def test_diagonal_step():
    assert ConstructionService.diagonal_step(ConstructionParams(2, 3)).entries == (1, 0, 0, 1, 0, 0)


@pytest.mark.parametrize('which', CONSTRUCTION_OBJECTS)
def test_build_object_dispatch(which):
    params = ConstructionParams(3, 2)
    built = ConstructionService.build_object(params, which)
    expected = getattr(ConstructionService, f'build_{which}')(params)
    assert built == expected


def test_build_object_unknown_name():
    with pytest.raises(ParameterError):
        ConstructionService.build_object(ConstructionParams(3, 2), 'N')
