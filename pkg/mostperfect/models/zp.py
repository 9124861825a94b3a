"""
Residues, vectors and matrices over the prime field Z_p.
All values are immutable and stored as canonical representatives 0..p-1.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from mostperfect.utils.errors import DimensionError, ModulusError, ParameterError


@lru_cache(maxsize=256)
def is_prime(value: int) -> bool:
    """Trial-division primality test (moduli here are small)."""
    if value < 2:
        return False
    if value < 4:
        return True
    if value % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 2
    return True


def require_prime(modulus: int) -> None:
    """Raise ParameterError unless modulus is a prime."""
    if not isinstance(modulus, (int, np.integer)) or not is_prime(int(modulus)):
        raise ParameterError(f'p must be prime, got {modulus}')


@dataclass(frozen=True)
class Residue:
    """Element of Z_p."""
    value: int
    modulus: int

    def __post_init__(self):
        require_prime(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ParameterError(f'Residue {self.value} is not canonical mod {self.modulus}')

    @classmethod
    def of(cls, value: int, modulus: int) -> 'Residue':
        """Reduce an arbitrary integer into its canonical residue."""
        require_prime(modulus)
        return cls(int(value) % modulus, modulus)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self):
        return f'<Residue {self.value} mod {self.modulus}>'


@dataclass(frozen=True)
class ZpVector:
    """Column vector over Z_p."""
    entries: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        require_prime(self.modulus)
        object.__setattr__(self, 'entries', tuple(int(x) % self.modulus for x in self.entries))
        if len(self.entries) == 0:
            raise DimensionError('Vectors must have at least one entry')

    @classmethod
    def zeros(cls, length: int, modulus: int) -> 'ZpVector':
        return cls((0,) * length, modulus)

    @classmethod
    def elementary(cls, index: int, length: int, modulus: int) -> 'ZpVector':
        """Elementary vector e_index (0-based index)."""
        if not 0 <= index < length:
            raise DimensionError(f'Elementary index {index} outside length {length}')
        return cls(tuple(int(i == index) for i in range(length)), modulus)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)

    def _check_compatible(self, other: 'ZpVector') -> None:
        if self.modulus != other.modulus:
            raise ModulusError(f'Cannot combine vectors mod {self.modulus} and mod {other.modulus}')
        if len(self) != len(other):
            raise DimensionError(f'Vector lengths differ: {len(self)} vs {len(other)}')

    def __add__(self, other: 'ZpVector') -> 'ZpVector':
        self._check_compatible(other)
        return ZpVector(tuple(a + b for a, b in zip(self.entries, other.entries)), self.modulus)

    def __sub__(self, other: 'ZpVector') -> 'ZpVector':
        self._check_compatible(other)
        return ZpVector(tuple(a - b for a, b in zip(self.entries, other.entries)), self.modulus)

    def scale(self, factor: int) -> 'ZpVector':
        return ZpVector(tuple(factor * a for a in self.entries), self.modulus)

    def is_fully_nonzero(self) -> bool:
        """True when every component is a unit of Z_p."""
        return all(self.entries)

    def to_list(self) -> List[int]:
        return list(self.entries)

    def __repr__(self):
        return f'<ZpVector {self.entries} mod {self.modulus}>'


@dataclass(frozen=True)
class ZpMatrix:
    """Dense matrix over Z_p with row-major storage."""
    rows: int
    cols: int
    entries: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        require_prime(self.modulus)
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionError(f'Matrix shape {self.rows}x{self.cols} is empty')
        object.__setattr__(self, 'entries', tuple(int(x) % self.modulus for x in self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f'Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} matrix, '
                f'got {len(self.entries)}'
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int) -> 'ZpMatrix':
        """Build from nested rows; negative literals are reduced (-1 -> p-1)."""
        rows = [list(row) for row in rows]
        if not rows or not rows[0]:
            raise DimensionError('Matrix must have at least one row and one column')
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError('Matrix rows have unequal lengths')
        return cls(len(rows), width, tuple(x for row in rows for x in row), modulus)

    @classmethod
    def from_columns(cls, columns: Sequence[ZpVector]) -> 'ZpMatrix':
        modulus = columns[0].modulus
        height = len(columns[0])
        for column in columns:
            if column.modulus != modulus:
                raise ModulusError('Columns live over different fields')
            if len(column) != height:
                raise DimensionError('Columns have unequal lengths')
        return cls.from_rows([[c[i] for c in columns] for i in range(height)], modulus)

    @classmethod
    def identity(cls, size: int, modulus: int) -> 'ZpMatrix':
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)), modulus)

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int) -> 'ZpMatrix':
        return cls(rows, cols, (0,) * (rows * cols), modulus)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f'Index ({i}, {j}) outside {self.rows}x{self.cols} matrix')
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> ZpVector:
        return ZpVector(tuple(self.entries[i * self.cols + j] for i in range(self.rows)), self.modulus)

    def columns(self) -> List[ZpVector]:
        return [self.column(j) for j in range(self.cols)]

    def with_column(self, j: int, vector: ZpVector) -> 'ZpMatrix':
        """Copy with column j replaced."""
        if vector.modulus != self.modulus:
            raise ModulusError('Replacement column lives over another field')
        if len(vector) != self.rows:
            raise DimensionError(f'Column of length {len(vector)} does not fit {self.rows} rows')
        rows = self.to_rows()
        for i in range(self.rows):
            rows[i][j] = vector[i]
        return ZpMatrix.from_rows(rows, self.modulus)

    def with_row(self, i: int, values: Iterable[int]) -> 'ZpMatrix':
        rows = self.to_rows()
        values = list(values)
        if len(values) != self.cols:
            raise DimensionError(f'Row of length {len(values)} does not fit {self.cols} columns')
        rows[i] = values
        return ZpMatrix.from_rows(rows, self.modulus)

    def transpose(self) -> 'ZpMatrix':
        return ZpMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.modulus)

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def __repr__(self):
        return f'<ZpMatrix {self.rows}x{self.cols} mod {self.modulus}>'
