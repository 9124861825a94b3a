"""
Property verification for arbitrary squares.
Every check sweeps all anchors with wraparound and reports the first failing index.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, Tuple

import numpy as np

from mostperfect.models.report import CheckResult, MagicConstants, PropertyReport, Witness, as_number
from mostperfect.models.square import Square
from mostperfect.utils.errors import VerificationError

logger = logging.getLogger(__name__)


def _compare(prop: str, sums: np.ndarray, target: Fraction) -> CheckResult:
    """Compare exact integer sums against a (possibly half-integral) target."""
    doubled = int(2 * target)
    bad = np.argwhere(2 * sums != doubled)
    if bad.size == 0:
        return CheckResult(True)
    first = tuple(int(x) for x in bad[0])
    return CheckResult(False, Witness(prop, first, int(sums[first]), as_number(target)))


class VerifierService:
    """Checks for magic, pandiagonal, complementary and p x p properties."""

    @staticmethod
    def magic_constants(order: int, type_p: int) -> MagicConstants:
        return MagicConstants(order, type_p)

    @staticmethod
    def _require_divisor(square: Square, type_p: int) -> None:
        if not isinstance(type_p, (int, np.integer)) or type_p < 2:
            raise VerificationError(f'Type p must be an integer of at least 2, got {type_p}')
        if square.order % type_p:
            raise VerificationError(f'p = {type_p} does not divide the order n = {square.order}')

    @staticmethod
    def check_natural(square: Square) -> CheckResult:
        """Grid is a permutation of 0..n^2-1."""
        if square.is_natural():
            return CheckResult(True)
        n = square.order
        seen = set()
        for (i, j), value in np.ndenumerate(square.grid):
            value = int(value)
            if not 0 <= value < n * n or value in seen:
                return CheckResult(False, Witness('natural', (i, j), value, None))
            seen.add(value)
        return CheckResult(False)

    @staticmethod
    def line_sums(square: Square) -> Dict[str, np.ndarray]:
        """Sums of rows, columns and broken diagonals of both slopes, indexed by start column."""
        grid = square.grid
        n = square.order
        i = np.arange(n)[:, None]
        k = np.arange(n)[None, :]
        return {
            'rows_magic': grid.sum(axis=1),
            'cols_magic': grid.sum(axis=0),
            'main_pandiagonal': grid[i, (i + k) % n].sum(axis=0),
            'off_pandiagonal': grid[i, (k - i) % n].sum(axis=0),
        }

    @staticmethod
    def check_lines(square: Square) -> Dict[str, CheckResult]:
        """Every row, column and broken diagonal reaches n(n^2-1)/2."""
        target = MagicConstants(square.order, 1).line_sum
        return {name: _compare(name, sums, target) for name, sums in VerifierService.line_sums(square).items()}

    @staticmethod
    def complementary_sums(square: Square, type_p: int, off_diagonal: bool = False) -> np.ndarray:
        """
        For each anchor (i, j): sum of the p entries n/p apart along the broken diagonal.

        The main diagonal steps (+n/p, +n/p); the off diagonal steps (+n/p, -n/p).
        """
        VerifierService._require_divisor(square, type_p)
        step = square.order // type_p
        col_sign = 1 if off_diagonal else -1
        total = np.zeros_like(square.grid)
        for k in range(type_p):
            total = total + np.roll(square.grid, (-k * step, col_sign * k * step), axis=(0, 1))
        return total

    @staticmethod
    def check_complementary(square: Square, type_p: int) -> CheckResult:
        sums = VerifierService.complementary_sums(square, type_p)
        return _compare('complementary', sums, MagicConstants(square.order, type_p).complementary_sum)

    @staticmethod
    def check_off_diagonal_complementary(square: Square, type_p: int) -> CheckResult:
        sums = VerifierService.complementary_sums(square, type_p, off_diagonal=True)
        return _compare('off_diagonal_complementary', sums, MagicConstants(square.order, type_p).complementary_sum)

    @staticmethod
    def block_sums(square: Square, type_p: int) -> np.ndarray:
        """Sum of the p x p window anchored (top-left) at every location."""
        VerifierService._require_divisor(square, type_p)
        total = np.zeros_like(square.grid)
        for a in range(type_p):
            for b in range(type_p):
                total = total + np.roll(square.grid, (-a, -b), axis=(0, 1))
        return total

    @staticmethod
    def check_p_by_p(square: Square, type_p: int) -> CheckResult:
        sums = VerifierService.block_sums(square, type_p)
        return _compare('p_by_p', sums, MagicConstants(square.order, type_p).block_sum)

    @staticmethod
    def check_p_by_p_at(square: Square, type_p: int, anchor: Tuple[int, int] = (0, 0)) -> bool:
        """Single-anchor p x p test used for fast rejection."""
        VerifierService._require_divisor(square, type_p)
        n = square.order
        rows = (anchor[0] + np.arange(type_p)) % n
        cols = (anchor[1] + np.arange(type_p)) % n
        observed = int(square.grid[np.ix_(rows, cols)].sum())
        return 2 * observed == type_p ** 2 * (n * n - 1)

    @staticmethod
    def _window_corners(square: Square, height: int, width: int) -> Tuple[np.ndarray, np.ndarray]:
        grid = square.grid
        a = grid
        b = np.roll(grid, (0, -width), axis=(0, 1))
        c = np.roll(grid, (-height, 0), axis=(0, 1))
        d = np.roll(grid, (-height, -width), axis=(0, 1))
        return a + d, c + b

    @staticmethod
    def check_window_corners(square: Square, type_p: int, anchor: Tuple[int, int], m: int, n_blocks: int) -> bool:
        """
        Corner identity a + d = c + b on the (mp+1) x (n_blocks p+1) window at anchor.

        a, b are the top-left and top-right corners; c, d the bottom-left and
        bottom-right. Holds on any square with the p x p property.
        """
        for name, value in (('m', m), ('n_blocks', n_blocks), ('p', type_p)):
            if not isinstance(value, (int, np.integer)) or value < 1:
                raise VerificationError(f'Window parameter {name} must be a positive integer, got {value}')
        i, j = anchor
        height, width = m * type_p, n_blocks * type_p
        a = square.entry_at(i, j)
        b = square.entry_at(i, j + width)
        c = square.entry_at(i + height, j)
        d = square.entry_at(i + height, j + width)
        return a + d == c + b

    @staticmethod
    def sweep_window_corners(square: Square, type_p: int, blocks: Iterable[int] = (1, 2)) -> CheckResult:
        """Corner identity for every anchor and every window shape drawn from blocks."""
        blocks = tuple(blocks)
        if not blocks or any(not isinstance(b, int) or b < 1 for b in blocks):
            raise VerificationError('Window block counts must be positive integers')
        for m in blocks:
            for k in blocks:
                left, right = VerifierService._window_corners(square, m * type_p, k * type_p)
                bad = np.argwhere(left != right)
                if bad.size:
                    i, j = (int(x) for x in bad[0])
                    return CheckResult(False, Witness('window_corners', (i, j, m, k),
                                                      int(left[i, j]), int(right[i, j])))
        return CheckResult(True)

    @staticmethod
    def verify_full(square: Square, type_p: int) -> PropertyReport:
        """Run every check; failures are report content, not errors."""
        VerifierService._require_divisor(square, type_p)
        report = PropertyReport(order=square.order, type_p=type_p,
                                constants=MagicConstants(square.order, type_p))
        report.record('natural', VerifierService.check_natural(square))
        for name, result in VerifierService.check_lines(square).items():
            report.record(name, result)
        report.record('complementary', VerifierService.check_complementary(square, type_p))
        report.record('off_diagonal_complementary', VerifierService.check_off_diagonal_complementary(square, type_p))
        report.record('p_by_p', VerifierService.check_p_by_p(square, type_p))
        logger.debug('Verified order-%d square for type %d: mps=%s', square.order, type_p, report.is_type_p_mps)
        return report

    @staticmethod
    def verify_reduced(square: Square, type_p: int) -> bool:
        """Natural + complementary + p x p, sufficient when p^2 divides n."""
        VerifierService._require_divisor(square, type_p)
        if square.order % (type_p * type_p):
            raise VerificationError(f'p^2 = {type_p * type_p} does not divide n = {square.order}')
        return bool(VerifierService.check_natural(square)
                    and VerifierService.check_complementary(square, type_p)
                    and VerifierService.check_p_by_p(square, type_p))
