"""
Domain models package.
Residues, vectors and matrices over Z_p, squares, reports and census records.
"""
from mostperfect.models.params import ConstructionParams, GridLocation
from mostperfect.models.report import CheckResult, MagicConstants, PropertyReport, Witness
from mostperfect.models.search import Checkpoint, SearchMode, SearchResult, SearchSpace
from mostperfect.models.square import Square
from mostperfect.models.zp import Residue, ZpMatrix, ZpVector, is_prime

__all__ = [
    'CheckResult', 'Checkpoint', 'ConstructionParams', 'GridLocation', 'MagicConstants',
    'PropertyReport', 'Residue', 'SearchMode', 'SearchResult', 'SearchSpace', 'Square',
    'Witness', 'ZpMatrix', 'ZpVector', 'is_prime',
]
