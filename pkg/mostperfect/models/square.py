"""
Square model.
An n x n integer grid with wraparound indexing.
"""
from typing import List, Optional

import numpy as np

from mostperfect.models.params import ConstructionParams
from mostperfect.utils.errors import MalformedSquareError


class Square:
    """Immutable square grid, optionally tagged with the (p, r) that built it."""

    def __init__(self, grid, params: Optional[ConstructionParams] = None):
        try:
            array = np.array(grid)
        except (ValueError, TypeError) as e:
            raise MalformedSquareError(f'Grid is not rectangular: {e}')
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise MalformedSquareError(f'Grid must be a non-empty n x n array, got shape {array.shape}')
        if array.dtype.kind not in 'iu':
            raise MalformedSquareError('Grid entries must be integers')
        if params is not None and params.n != array.shape[0]:
            raise MalformedSquareError(f'Grid of order {array.shape[0]} does not match n = {params.n}')
        self._grid = array.astype(np.int64)
        self._grid.setflags(write=False)
        self.params = params

    @property
    def order(self) -> int:
        return self._grid.shape[0]

    n = order

    @property
    def grid(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._grid

    def entry_at(self, row: int, col: int) -> int:
        """Entry at (row mod n, col mod n)."""
        return int(self._grid[row % self.order, col % self.order])

    def is_natural(self) -> bool:
        """Every integer 0..n^2-1 appears exactly once."""
        return bool(np.array_equal(np.sort(self._grid, axis=None), np.arange(self.order * self.order)))

    def transpose(self) -> 'Square':
        return Square(self._grid.T, None)

    def to_rows(self) -> List[List[int]]:
        return self._grid.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Square):
            return NotImplemented
        return np.array_equal(self._grid, other._grid)

    def __hash__(self):
        return hash((self.order, self._grid.tobytes()))

    def __repr__(self):
        source = f' p={self.params.p} r={self.params.r}' if self.params else ''
        return f'<Square n={self.order}{source}>'
