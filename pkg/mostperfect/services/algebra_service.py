"""
Exact linear algebra over Z_p.
Elimination, rank, determinant, inverse and the matrix text format.
"""
from typing import List, Tuple

from mostperfect.models.zp import Residue, ZpMatrix, ZpVector, require_prime
from mostperfect.utils.errors import DimensionError, ModulusError, SingularMatrixError


def _eliminate(rows: List[List[int]], modulus: int, pivot_cols: int) -> Tuple[List[List[int]], int, int]:
    """
    Reduce rows to reduced row echelon form, pivoting only in the first pivot_cols columns.

    Returns:
        (reduced_rows, rank, determinant) where the determinant is only
        meaningful for a square block (it is 0 when the block is rank deficient)
    """
    a = [list(row) for row in rows]
    height = len(a)
    det = 1
    rank = 0
    for col in range(pivot_cols):
        if rank == height:
            break
        pivot = next((i for i in range(rank, height) if a[i][col]), None)
        if pivot is None:
            det = 0
            continue
        if pivot != rank:
            a[rank], a[pivot] = a[pivot], a[rank]
            det = -det
        pivot_value = a[rank][col]
        det = det * pivot_value % modulus
        inverse = pow(pivot_value, -1, modulus)
        pivot_row = [x * inverse % modulus for x in a[rank]]
        a[rank] = pivot_row
        for i in range(height):
            factor = a[i][col]
            if i != rank and factor:
                a[i] = [(x - factor * y) % modulus for x, y in zip(a[i], pivot_row)]
        rank += 1
    if rank < min(height, pivot_cols):
        det = 0
    return a, rank, det % modulus


class AlgebraService:
    """Matrix and vector operations over Z_p."""

    @staticmethod
    def _require_same_modulus(left: int, right: int) -> None:
        if left != right:
            raise ModulusError(f'Operands live over Z_{left} and Z_{right}')

    @staticmethod
    def _require_square(matrix: ZpMatrix) -> None:
        if not matrix.is_square:
            raise DimensionError(f'Expected a square matrix, got {matrix.rows}x{matrix.cols}')

    @staticmethod
    def mat_vec_mul(matrix: ZpMatrix, vector: ZpVector) -> ZpVector:
        """Apply T_M: result[i] = sum_j M[i][j] * v[j] mod p."""
        AlgebraService._require_same_modulus(matrix.modulus, vector.modulus)
        if matrix.cols != len(vector):
            raise DimensionError(f'Cannot apply a {matrix.rows}x{matrix.cols} matrix to a vector of length {len(vector)}')
        p = matrix.modulus
        return ZpVector(
            tuple(sum(m * v for m, v in zip(matrix.row(i), vector.entries)) % p for i in range(matrix.rows)),
            p
        )

    @staticmethod
    def mat_mul(left: ZpMatrix, right: ZpMatrix) -> ZpMatrix:
        AlgebraService._require_same_modulus(left.modulus, right.modulus)
        if left.cols != right.rows:
            raise DimensionError(f'Cannot multiply {left.rows}x{left.cols} by {right.rows}x{right.cols}')
        p = left.modulus
        right_columns = [right.column(j).entries for j in range(right.cols)]
        return ZpMatrix.from_rows(
            [[sum(a * b for a, b in zip(left.row(i), col)) % p for col in right_columns] for i in range(left.rows)],
            p
        )

    @staticmethod
    def rank(matrix: ZpMatrix) -> int:
        _, rank, _ = _eliminate(matrix.to_rows(), matrix.modulus, matrix.cols)
        return rank

    @staticmethod
    def is_nonsingular(matrix: ZpMatrix) -> bool:
        """True iff elimination over Z_p yields full rank."""
        AlgebraService._require_square(matrix)
        return AlgebraService.rank(matrix) == matrix.rows

    @staticmethod
    def determinant(matrix: ZpMatrix) -> Residue:
        """Determinant mod p via elimination with sign tracking."""
        AlgebraService._require_square(matrix)
        _, _, det = _eliminate(matrix.to_rows(), matrix.modulus, matrix.cols)
        return Residue(det, matrix.modulus)

    @staticmethod
    def invert(matrix: ZpMatrix) -> ZpMatrix:
        """Inverse by Gauss-Jordan on [M | I]."""
        AlgebraService._require_square(matrix)
        size = matrix.rows
        p = matrix.modulus
        augmented = [list(matrix.row(i)) + [int(i == j) for j in range(size)] for i in range(size)]
        reduced, rank, _ = _eliminate(augmented, p, size)
        if rank < size:
            raise SingularMatrixError(f'Matrix is singular over Z_{p} (rank {rank} < {size})')
        return ZpMatrix.from_rows([row[size:] for row in reduced], p)

    @staticmethod
    def solve(matrix: ZpMatrix, rhs: ZpVector) -> ZpVector:
        """Unique solution of M x = b for nonsingular M."""
        AlgebraService._require_square(matrix)
        AlgebraService._require_same_modulus(matrix.modulus, rhs.modulus)
        if len(rhs) != matrix.rows:
            raise DimensionError(f'Right-hand side has length {len(rhs)}, expected {matrix.rows}')
        size = matrix.rows
        augmented = [list(matrix.row(i)) + [rhs[i]] for i in range(size)]
        reduced, rank, _ = _eliminate(augmented, matrix.modulus, size)
        if rank < size:
            raise SingularMatrixError(f'Matrix is singular over Z_{matrix.modulus}; no unique solution')
        return ZpVector(tuple(row[size] for row in reduced), matrix.modulus)

    @staticmethod
    def gl_order(dimension: int, modulus: int) -> int:
        """|GL(d, Z_p)| = prod_{i<d} (p^d - p^i)."""
        require_prime(modulus)
        total = 1
        for i in range(dimension):
            total *= modulus ** dimension - modulus ** i
        return total

    @staticmethod
    def format_matrix(matrix: ZpMatrix) -> str:
        """Matrix text format: header 'p d1 d2' then one line per row."""
        lines = [f'{matrix.modulus} {matrix.rows} {matrix.cols}']
        lines.extend(' '.join(str(x) for x in matrix.row(i)) for i in range(matrix.rows))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def format_vector(vector: ZpVector) -> str:
        """Vectors are written as a single-row matrix."""
        return f'{vector.modulus} 1 {len(vector)}\n' + ' '.join(str(x) for x in vector.entries) + '\n'

    @staticmethod
    def parse_matrix(text: str) -> ZpMatrix:
        """Parse the matrix text format; entries must already be digits 0..p-1."""
        lines = [line.split() for line in text.strip().splitlines() if line.strip()]
        if not lines or len(lines[0]) != 3:
            raise DimensionError('Matrix text must start with a "p d1 d2" header')
        try:
            p, rows, cols = (int(x) for x in lines[0])
            body = [[int(x) for x in line] for line in lines[1:]]
        except ValueError as e:
            raise DimensionError(f'Matrix text contains a non-integer token: {e}')
        require_prime(p)
        if len(body) != rows or any(len(line) != cols for line in body):
            raise DimensionError(f'Matrix text does not hold {rows} rows of {cols} entries')
        if any(not 0 <= x < p for line in body for x in line):
            raise DimensionError(f'Matrix entries must be digits 0..{p - 1}')
        return ZpMatrix.from_rows(body, p)

    @staticmethod
    def parse_vector(text: str) -> ZpVector:
        matrix = AlgebraService.parse_matrix(text)
        if matrix.rows != 1:
            raise DimensionError('Vector text must describe a single row')
        return ZpVector(matrix.row(0), matrix.modulus)
