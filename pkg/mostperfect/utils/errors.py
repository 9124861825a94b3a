"""
Domain exceptions.
Every error carries a stable code so the API and CLI can report it uniformly.
"""
from typing import Any, Optional


class MostPerfectError(Exception):
    """Base class for all toolkit errors."""

    code = 'VALIDATION_ERROR'

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        """Convert to the error envelope body."""
        data = {'code': self.code, 'message': self.message}
        if self.details is not None:
            data['details'] = self.details
        return data


class ParameterError(MostPerfectError):
    """Invalid construction parameters (non-prime p, r out of range)."""
    code = 'INVALID_PARAMETERS'


class ModulusError(MostPerfectError):
    """Operands live over different prime fields."""
    code = 'MODULUS_MISMATCH'


class DimensionError(MostPerfectError):
    """Operand shapes do not fit together."""
    code = 'DIMENSION_MISMATCH'


class SingularMatrixError(MostPerfectError):
    """A nonsingular matrix was required."""
    code = 'SINGULAR_MATRIX'


class CodecRangeError(MostPerfectError):
    """A symbol or location lies outside the encodable range."""
    code = 'OUT_OF_RANGE'


class SquareFormatError(MostPerfectError):
    """A serialized square could not be read."""
    code = 'MALFORMED_SQUARE'


class MalformedSquareError(SquareFormatError):
    """Text does not describe an n x n integer grid."""
    code = 'MALFORMED_SQUARE'


class DuplicateSymbolError(SquareFormatError):
    """A symbol appears more than once."""
    code = 'DUPLICATE_SYMBOL'


class SymbolRangeError(SquareFormatError):
    """A symbol lies outside 0..n^2-1."""
    code = 'SYMBOL_OUT_OF_RANGE'


class VerificationError(MostPerfectError):
    """A verifier precondition does not hold (e.g. p does not divide n)."""
    code = 'VERIFICATION_PRECONDITION'


class BudgetExceededError(MostPerfectError):
    """The requested census enumerates more candidates than allowed."""
    code = 'BUDGET_EXCEEDED'


class ShardSpecError(MostPerfectError):
    """Shard index/count pair is inconsistent."""
    code = 'BAD_SHARD_SPEC'


class CheckpointError(MostPerfectError):
    """Checkpoint file is unreadable or belongs to another shard."""
    code = 'BAD_CHECKPOINT'
