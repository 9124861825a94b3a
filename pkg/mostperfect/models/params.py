"""
Construction parameters and grid locations.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from mostperfect.models.zp import is_prime
from mostperfect.utils.errors import CodecRangeError, ParameterError


@dataclass(frozen=True)
class ConstructionParams:
    """
    The pair (p, r) defining a square of order n = p^r.

    symbol_order optionally reorders the symbol basis: coordinate j of a
    symbol vector is the digit of p^(2r-1-symbol_order[j]). None means the
    standard most-significant-first order.
    """
    p: int
    r: int
    symbol_order: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ParameterError(f'p must be prime, got {self.p}')
        if not isinstance(self.r, int) or self.r < 1:
            raise ParameterError(f'r must be a positive integer, got {self.r}')
        if self.r == 1:
            raise ParameterError(
                'r must be at least 2: prime orders (r = 1) are covered by '
                "de la Loubère's method, not by this linear construction"
            )
        if self.symbol_order is not None:
            order = tuple(int(j) for j in self.symbol_order)
            if sorted(order) != list(range(2 * self.r)):
                raise ParameterError(f'symbol_order must be a permutation of 0..{2 * self.r - 1}')
            object.__setattr__(self, 'symbol_order', None if order == tuple(range(2 * self.r)) else order)

    @property
    def n(self) -> int:
        """Order of the square."""
        return self.p ** self.r

    @property
    def dim(self) -> int:
        """Dimension of the symbol/location space Z_p^(2r)."""
        return 2 * self.r

    @property
    def symbol_count(self) -> int:
        return self.n * self.n

    def to_dict(self) -> dict:
        data = {'p': self.p, 'r': self.r, 'n': self.n}
        if self.symbol_order is not None:
            data['symbol_order'] = list(self.symbol_order)
        return data

    def __repr__(self):
        return f'<ConstructionParams p={self.p} r={self.r} n={self.n}>'


@dataclass(frozen=True)
class GridLocation:
    """Row/column position in a square; row 0 is the top, column 0 the left."""
    row: int
    col: int

    def check_within(self, order: int) -> None:
        if not (0 <= self.row < order and 0 <= self.col < order):
            raise CodecRangeError(f'Location ({self.row}, {self.col}) outside a {order}x{order} grid')

    def as_tuple(self) -> Tuple[int, int]:
        return self.row, self.col
