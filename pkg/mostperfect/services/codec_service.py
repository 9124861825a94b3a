"""
Base-p encodings of symbols and grid locations as vectors of Z_p^(2r).
Both codecs write digits most-significant first.
"""
from typing import Tuple

import numpy as np

from mostperfect.models.params import ConstructionParams, GridLocation
from mostperfect.models.zp import ZpVector
from mostperfect.utils.errors import CodecRangeError, DimensionError, ModulusError


def _digits(value: int, base: int, width: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(width):
        value, digit = divmod(value, base)
        digits.append(digit)
    return tuple(reversed(digits))


def _from_digits(digits, base: int) -> int:
    value = 0
    for digit in digits:
        value = value * base + int(digit)
    return value


class CodecService:
    """Symbol and location codecs."""

    @staticmethod
    def _symbol_powers(params: ConstructionParams) -> Tuple[int, ...]:
        """Exponent of p carried by each symbol coordinate."""
        order = params.symbol_order or tuple(range(params.dim))
        return tuple(params.dim - 1 - j for j in order)

    @staticmethod
    def _check_vector(vector: ZpVector, params: ConstructionParams) -> None:
        if vector.modulus != params.p:
            raise ModulusError(f'Vector lives over Z_{vector.modulus}, expected Z_{params.p}')
        if len(vector) != params.dim:
            raise DimensionError(f'Expected a vector of length {params.dim}, got {len(vector)}')

    @staticmethod
    def symbol_to_vector(symbol: int, params: ConstructionParams) -> ZpVector:
        """Coordinates of a symbol with respect to the basis alpha_j = p^(2r-j)."""
        if not 0 <= symbol < params.symbol_count:
            raise CodecRangeError(f'Symbol {symbol} outside 0..{params.symbol_count - 1}')
        p = params.p
        return ZpVector(tuple((symbol // p ** power) % p for power in CodecService._symbol_powers(params)), p)

    @staticmethod
    def vector_to_symbol(vector: ZpVector, params: ConstructionParams) -> int:
        CodecService._check_vector(vector, params)
        p = params.p
        return sum(digit * p ** power for digit, power in zip(vector.entries, CodecService._symbol_powers(params)))

    @staticmethod
    def location_to_vector(location: GridLocation, params: ConstructionParams) -> ZpVector:
        """Row digits followed by column digits."""
        location.check_within(params.n)
        return ZpVector(
            _digits(location.row, params.p, params.r) + _digits(location.col, params.p, params.r),
            params.p
        )

    @staticmethod
    def vector_to_location(vector: ZpVector, params: ConstructionParams) -> GridLocation:
        CodecService._check_vector(vector, params)
        return GridLocation(
            _from_digits(vector.entries[:params.r], params.p),
            _from_digits(vector.entries[params.r:], params.p)
        )

    @staticmethod
    def symbol_digit_table(params: ConstructionParams) -> np.ndarray:
        """Row k holds symbol_to_vector(k) for every symbol, shape (n^2, 2r)."""
        powers = np.array([params.p ** e for e in CodecService._symbol_powers(params)], dtype=np.int64)
        symbols = np.arange(params.symbol_count, dtype=np.int64)
        return (symbols[:, None] // powers[None, :]) % params.p

    @staticmethod
    def location_indices(location_digits: np.ndarray, params: ConstructionParams) -> Tuple[np.ndarray, np.ndarray]:
        """Rows and columns addressed by a (k, 2r) table of location vectors."""
        weights = params.p ** np.arange(params.r - 1, -1, -1, dtype=np.int64)
        rows = location_digits[:, :params.r] @ weights
        cols = location_digits[:, params.r:] @ weights
        return rows, cols
