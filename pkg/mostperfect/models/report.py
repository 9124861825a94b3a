"""
Verification report models.
Magic constants, failure witnesses and the per-property report.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

PROPERTY_FLAGS = (
    'natural',
    'rows_magic',
    'cols_magic',
    'main_pandiagonal',
    'off_pandiagonal',
    'complementary',
    'off_diagonal_complementary',
    'p_by_p',
)


def as_number(value: Fraction) -> Union[int, float]:
    return int(value) if value.denominator == 1 else float(value)


@dataclass(frozen=True)
class MagicConstants:
    """
    Target sums for a square of order n tested for type p.

    The values are exact fractions: when p(n^2-1) is odd no natural square
    can reach them and every check simply fails.
    """
    order: int
    type_p: int

    @property
    def line_sum(self) -> Fraction:
        n = self.order
        return Fraction(n * (n * n - 1), 2)

    @property
    def complementary_sum(self) -> Fraction:
        return Fraction(self.type_p * (self.order ** 2 - 1), 2)

    @property
    def block_sum(self) -> Fraction:
        return Fraction(self.type_p ** 2 * (self.order ** 2 - 1), 2)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in (self.line_sum, self.complementary_sum, self.block_sum))

    def to_dict(self) -> dict:
        return {
            'line_sum': as_number(self.line_sum),
            'complementary_sum': as_number(self.complementary_sum),
            'block_sum': as_number(self.block_sum),
        }


@dataclass(frozen=True)
class Witness:
    """First failing index of a property check, in row-major index order."""
    prop: str
    index: Tuple[int, ...]
    observed: int
    expected: Optional[Union[int, float]]

    def to_dict(self) -> dict:
        return {
            'property': self.prop,
            'index': list(self.index),
            'observed': self.observed,
            'expected': self.expected,
        }


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check."""
    ok: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class PropertyReport:
    """All property flags for one square and one type p."""
    order: int
    type_p: int
    natural: bool = False
    rows_magic: bool = False
    cols_magic: bool = False
    main_pandiagonal: bool = False
    off_pandiagonal: bool = False
    complementary: bool = False
    off_diagonal_complementary: bool = False
    p_by_p: bool = False
    witness: Optional[Witness] = None
    constants: Optional[MagicConstants] = field(default=None, repr=False)

    @property
    def is_type_p_mps(self) -> bool:
        """Natural pandiagonal magic square with the complementary and p x p properties."""
        return (self.natural and self.rows_magic and self.cols_magic
                and self.main_pandiagonal and self.off_pandiagonal
                and self.complementary and self.p_by_p)

    @property
    def all_true(self) -> bool:
        return all(getattr(self, flag) for flag in PROPERTY_FLAGS)

    def record(self, flag: str, result: CheckResult) -> None:
        """Set a flag, keeping the witness of the first failing property."""
        setattr(self, flag, result.ok)
        if not result.ok and self.witness is None:
            self.witness = result.witness

    def to_dict(self) -> dict:
        data = {'order': self.order, 'type_p': self.type_p}
        data.update({flag: getattr(self, flag) for flag in PROPERTY_FLAGS})
        data['is_type_p_mps'] = self.is_type_p_mps
        if self.constants is not None:
            data['constants'] = self.constants.to_dict()
        data['witness'] = self.witness.to_dict() if self.witness else None
        return data
