"""
Construction of the staircase matrices and the construction matrix M.
Formulas are stated with 1-based indices and converted to 0-based storage here.
"""
import logging
from typing import Union

from mostperfect.models.params import ConstructionParams
from mostperfect.models.zp import ZpMatrix, ZpVector
from mostperfect.utils.errors import ParameterError

logger = logging.getLogger(__name__)

CONSTRUCTION_OBJECTS = ('Lr', 'L', 'Ltilde', 'Lhat', 'M', 'delta')


class ConstructionService:
    """Builders for L_r, L, L~, L^, M and delta."""

    @staticmethod
    def build_Lr(params: ConstructionParams) -> ZpMatrix:
        """r x r staircase: entry (i, j) is 1 exactly when i + j > r (1-based)."""
        r = params.r
        return ZpMatrix.from_rows(
            [[int(i + j > r) for j in range(1, r + 1)] for i in range(1, r + 1)],
            params.p
        )

    @staticmethod
    def build_L(params: ConstructionParams) -> ZpMatrix:
        """Block form [[0, L_r], [L_r, 0]]."""
        r = params.r
        staircase = ConstructionService.build_Lr(params)
        rows = []
        for i in range(2 * r):
            row = [0] * (2 * r)
            for j in range(r):
                if i < r:
                    row[r + j] = staircase[i, j]
                else:
                    row[j] = staircase[i - r, j]
            rows.append(row)
        return ZpMatrix.from_rows(rows, params.p)

    @staticmethod
    def build_Ltilde(params: ConstructionParams) -> ZpMatrix:
        """Every column of L shifted by -(e_1 + e_{r+1})."""
        shift = ConstructionService.diagonal_step(params)
        return ZpMatrix.from_columns([column - shift for column in ConstructionService.build_L(params).columns()])

    @staticmethod
    def build_Lhat(params: ConstructionParams) -> ZpMatrix:
        """L~ with row r+1 replaced by (row r+1) - (row 1); its determinant is +-1."""
        tilde = ConstructionService.build_Ltilde(params)
        r = params.r
        return tilde.with_row(r, [a - b for a, b in zip(tilde.row(r), tilde.row(0))])

    @staticmethod
    def build_M(params: ConstructionParams) -> ZpMatrix:
        """
        L~ with columns r and 2r replaced by alternating sums of earlier columns.

        m_r    = l~_r    + sum_{j=2}^{r-1} (-1)^(j+1) l~_{r-j}
        m_{2r} = l~_{2r} + sum_{j=2}^{r-1} (-1)^(j+1) l~_{2r-j}

        The sums are empty for r = 2, so M = L~ there.
        """
        r = params.r
        columns = ConstructionService.build_Ltilde(params).columns()

        def modified(last: int) -> ZpVector:
            column = columns[last - 1]
            for j in range(2, r):
                sign = 1 if (j + 1) % 2 == 0 else -1
                column = column + columns[last - j - 1].scale(sign)
            return column

        columns[r - 1] = modified(r)
        columns[2 * r - 1] = modified(2 * r)
        return ZpMatrix.from_columns(columns)

    @staticmethod
    def build_delta(params: ConstructionParams) -> ZpVector:
        """delta = sum_{j=1}^{r} (-1)^(r+j) (e_j + e_{r+j}); every component is +-1."""
        r = params.r
        half = [1 if (r + j) % 2 == 0 else -1 for j in range(1, r + 1)]
        return ZpVector(tuple(half + half), params.p)

    @staticmethod
    def diagonal_step(params: ConstructionParams) -> ZpVector:
        """e_1 + e_{r+1}: the location step one unit down and one unit right, n/p times over."""
        return (ZpVector.elementary(0, params.dim, params.p)
                + ZpVector.elementary(params.r, params.dim, params.p))

    @staticmethod
    def build_object(params: ConstructionParams, which: str) -> Union[ZpMatrix, ZpVector]:
        """Dispatch by name (Lr, L, Ltilde, Lhat, M, delta)."""
        builders = {
            'Lr': ConstructionService.build_Lr,
            'L': ConstructionService.build_L,
            'Ltilde': ConstructionService.build_Ltilde,
            'Lhat': ConstructionService.build_Lhat,
            'M': ConstructionService.build_M,
            'delta': ConstructionService.build_delta,
        }
        if which not in builders:
            raise ParameterError(f'Unknown object "{which}"; choose one of {", ".join(CONSTRUCTION_OBJECTS)}')
        logger.debug('Building %s for p=%d r=%d', which, params.p, params.r)
        return builders[which](params)
