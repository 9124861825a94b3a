"""
Validation utilities for user inputs.
Used at the edges (CLI options, API payloads) before any service call.
"""
from typing import Any, Optional, Tuple

from mostperfect.models.params import ConstructionParams
from mostperfect.models.search import SearchMode
from mostperfect.models.zp import is_prime
from mostperfect.services.construction_service import CONSTRUCTION_OBJECTS
from mostperfect.services.square_service import normalize_format
from mostperfect.utils.errors import ParameterError


def validate_integer(value: Any, min_value: int = 0, max_value: int = None,
                     field_name: str = 'value') -> Tuple[bool, Optional[int], Optional[str]]:
    """
    Validate and convert integer value.

    Returns:
        (is_valid, converted_value, error_message)
    """
    if isinstance(value, (bool, float)):
        return False, None, f'{field_name} must be a valid integer'
    try:
        int_value = int(value)

        if int_value < min_value:
            return False, None, f'{field_name} must be at least {min_value}'

        if max_value is not None and int_value > max_value:
            return False, None, f'{field_name} must not exceed {max_value}'

        return True, int_value, None

    except (ValueError, TypeError):
        return False, None, f'{field_name} must be a valid integer'


def validate_prime(value: Any, field_name: str = 'p') -> Tuple[bool, Optional[int], Optional[str]]:
    """
    Validate a prime modulus.

    Returns:
        (is_valid, prime, error_message)
    """
    is_valid, number, error = validate_integer(value, min_value=0, field_name=field_name)
    if not is_valid:
        return False, None, error
    if not is_prime(number):
        return False, None, f'{field_name} must be prime, got {number}'
    return True, number, None


def validate_construction_params(p: Any, r: Any,
                                 max_order: int = None) -> Tuple[bool, Optional[ConstructionParams], Optional[str]]:
    """
    Validate (p, r) and build ConstructionParams.

    Args:
        p: Prime modulus
        r: Exponent, at least 2
        max_order: Optional cap on n = p^r

    Returns:
        (is_valid, params, error_message)
    """
    if p is None or r is None:
        return False, None, 'p and r are required'
    is_valid, prime, error = validate_prime(p)
    if not is_valid:
        return False, None, error
    is_valid, exponent, error = validate_integer(r, min_value=1, field_name='r')
    if not is_valid:
        return False, None, error
    try:
        params = ConstructionParams(prime, exponent)
    except ParameterError as e:
        return False, None, e.message
    if max_order is not None and params.n > max_order:
        return False, None, f'Order n = {params.n} exceeds the limit of {max_order}'
    return True, params, None


def validate_format(fmt: Any) -> Tuple[bool, Optional[str], Optional[str]]:
    """
    Returns:
        (is_valid, canonical_format, error_message)
    """
    try:
        return True, normalize_format(fmt or 'grid'), None
    except ParameterError as e:
        return False, None, e.message


def validate_object_name(which: Any) -> Tuple[bool, Optional[str]]:
    if which in CONSTRUCTION_OBJECTS:
        return True, None
    return False, f'Unknown object "{which}"; choose one of {", ".join(CONSTRUCTION_OBJECTS)}'


def validate_search_mode(mode: Any) -> Tuple[bool, Optional[SearchMode], Optional[str]]:
    try:
        return True, SearchMode.parse(mode or SearchMode.EXHAUSTIVE_ALL.value), None
    except ParameterError as e:
        return False, None, e.message


def validate_shard_spec(shard: Any, shards: Any) -> Tuple[bool, Optional[Tuple[int, int]], Optional[str]]:
    """
    Validate a shard index against a shard count.

    Returns:
        (is_valid, (shard_index, shard_count), error_message)
    """
    is_valid, count, error = validate_integer(shards, min_value=1, field_name='shards')
    if not is_valid:
        return False, None, error
    is_valid, index, error = validate_integer(shard, min_value=0, max_value=count - 1, field_name='shard')
    if not is_valid:
        return False, None, error
    return True, (index, count), None


def validate_grid_payload(grid: Any) -> Tuple[bool, Optional[str]]:
    """
    Check that a JSON grid is a non-empty list of lists.

    Returns:
        (is_valid, error_message)
    """
    if not isinstance(grid, list) or not grid:
        return False, 'grid must be a non-empty list of rows'
    if not all(isinstance(row, list) for row in grid):
        return False, 'grid rows must be lists'
    return True, None
