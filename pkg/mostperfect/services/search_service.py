"""
Census of linear type-p most-perfect squares.
Enumerates matrices over Z_p in a fixed order, shards that order, and tallies
the matrices whose squares pass the full verifier.
"""
import logging
import multiprocessing
import os
import time
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from mostperfect.models.params import ConstructionParams
from mostperfect.models.search import Checkpoint, SearchMode, SearchResult, SearchSpace
from mostperfect.models.square import Square
from mostperfect.models.zp import ZpMatrix, ZpVector
from mostperfect.services.algebra_service import AlgebraService
from mostperfect.services.construction_service import ConstructionService
from mostperfect.services.square_service import SquareService
from mostperfect.services.verifier_service import VerifierService
from mostperfect.utils.errors import (
    BudgetExceededError, CheckpointError, ParameterError, ShardSpecError, SingularMatrixError,
)
from mostperfect.utils.helpers import calculate_percentage

logger = logging.getLogger(__name__)

DEFAULT_CHECKPOINT_INTERVAL = 10_000

Candidate = Tuple[int, Tuple[int, ...]]


def _digits(value: int, base: int, width: int) -> Tuple[int, ...]:
    digits = [0] * width
    for position in range(width - 1, -1, -1):
        value, digits[position] = divmod(value, base)
    return tuple(digits)


def _reduce(row: Sequence[int], basis: Sequence[Tuple[int, Tuple[int, ...]]], p: int) -> List[int]:
    """Reduce row against echelon basis rows (pivot, row normalized to 1 at pivot)."""
    reduced = list(row)
    for pivot, basis_row in basis:
        factor = reduced[pivot]
        if factor:
            reduced = [(x - factor * y) % p for x, y in zip(reduced, basis_row)]
    return reduced


def _normalize(row: List[int], p: int) -> Tuple[int, Tuple[int, ...]]:
    pivot = next(i for i, x in enumerate(row) if x)
    inverse = pow(row[pivot], -1, p)
    return pivot, tuple(x * inverse % p for x in row)


class SearchService:
    """Deterministic, shardable census over matrices of Z_p."""

    @staticmethod
    def candidate_count(space: SearchSpace) -> int:
        """Length of the full candidate sequence."""
        p, d = space.params.p, space.dim
        if space.mode is SearchMode.EXHAUSTIVE_ALL:
            return p ** (d * d)
        if space.mode is SearchMode.EXHAUSTIVE_NONSINGULAR:
            return AlgebraService.gl_order(d, p)
        return space.sample_count

    @staticmethod
    def shard_bounds(total: int, shard_index: int, shard_count: int) -> Tuple[int, int]:
        """Contiguous slice [start, stop) of shard_index; sizes differ by at most one."""
        for name, value in (('shard index', shard_index), ('shard count', shard_count)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ShardSpecError(f'{name} must be an integer, got {value!r}')
        if shard_count < 1:
            raise ShardSpecError(f'Shard count must be at least 1, got {shard_count}')
        if not 0 <= shard_index < shard_count:
            raise ShardSpecError(f'Shard index {shard_index} outside 0..{shard_count - 1}')
        return shard_index * total // shard_count, (shard_index + 1) * total // shard_count

    @staticmethod
    def check_budget(space: SearchSpace, candidates: int) -> None:
        if space.is_exhaustive and candidates > space.budget:
            raise BudgetExceededError(
                f'{space.mode.value} over {space.dim}x{space.dim} matrices mod {space.params.p} '
                f'needs {candidates} candidates, budget is {space.budget}',
                details={'candidates': candidates, 'budget': space.budget}
            )

    @staticmethod
    def matrix_index(matrix: ZpMatrix) -> int:
        """Base-p integer of the row-major entries (first entry most significant)."""
        index = 0
        for entry in matrix.entries:
            index = index * matrix.modulus + entry
        return index

    @staticmethod
    def candidate_at(index: int, params: ConstructionParams) -> ZpMatrix:
        d = params.dim
        if not 0 <= index < params.p ** (d * d):
            raise ParameterError(f'Candidate index {index} outside the matrix space')
        return ZpMatrix(d, d, _digits(index, params.p, d * d), params.p)

    @staticmethod
    def enumerate_candidates(space: SearchSpace, start: int = 0, stop: Optional[int] = None) -> Iterator[Candidate]:
        """Yield (sequence index, row-major entries) for positions start..stop-1."""
        total = SearchService.candidate_count(space)
        stop = total if stop is None else min(stop, total)
        if start >= stop:
            return
        if space.mode is SearchMode.EXHAUSTIVE_ALL:
            p, width = space.params.p, space.dim * space.dim
            for index in range(start, stop):
                yield index, _digits(index, p, width)
        elif space.mode is SearchMode.EXHAUSTIVE_NONSINGULAR:
            matrices = SearchService._nonsingular_from(space.params.p, space.dim, start)
            for index, entries in zip(range(start, stop), matrices):
                yield index, entries
        else:
            yield from SearchService._sample_from(space, start, stop)

    @staticmethod
    def _nonsingular_from(p: int, d: int, start: int) -> Iterator[Tuple[int, ...]]:
        """
        Nonsingular d x d matrices in ascending row-major order, from rank start.

        Every choice of t independent rows has the same number of completions,
        prod_{i>t} (p^d - p^i), so the start position is unranked directly.
        """
        size = p ** d
        rows = [_digits(v, p, d) for v in range(size)]
        completions = [1] * d
        for t in range(d - 1, 0, -1):
            completions[t - 1] = completions[t] * (size - p ** t)

        cursor = [0] * d
        basis: List[Tuple[int, Tuple[int, ...]]] = [(0, ())] * d

        def next_valid(level: int, begin: int) -> Optional[int]:
            for v in range(begin, size):
                reduced = _reduce(rows[v], basis[:level], p)
                if any(reduced):
                    basis[level] = _normalize(reduced, p)
                    return v
            return None

        remaining = start
        for level in range(d):
            v = next_valid(level, 0)
            while remaining >= completions[level]:
                remaining -= completions[level]
                v = next_valid(level, v + 1)
                if v is None:
                    return
            cursor[level] = v

        while True:
            yield tuple(x for v in cursor for x in rows[v])
            level = d - 1
            while level >= 0:
                v = next_valid(level, cursor[level] + 1)
                if v is not None:
                    cursor[level] = v
                    for deeper in range(level + 1, d):
                        cursor[deeper] = next_valid(deeper, 0)
                    break
                level -= 1
            if level < 0:
                return

    @staticmethod
    def _sample_from(space: SearchSpace, start: int, stop: int) -> Iterator[Candidate]:
        """Uniform random matrices; draw k is the same in every shard."""
        rng = np.random.Generator(getattr(np.random, space.algorithm)(space.seed))
        d, p = space.dim, space.params.p
        for index in range(stop):
            entries = rng.integers(0, p, size=d * d, dtype=np.int64)
            if index >= start:
                yield index, tuple(int(x) for x in entries)

    @staticmethod
    def _passes_constraints(space: SearchSpace, entries: Tuple[int, ...]) -> bool:
        if not space.column_constraints:
            return True
        d = space.dim
        for j in range(d):
            column = entries[j::d]
            if not all(constraint(j, column) for constraint in space.column_constraints):
                return False
        return True

    @staticmethod
    def is_mps_producing(matrix: ZpMatrix, params: ConstructionParams) -> bool:
        """Fast-reject chain: nonsingular, then one p x p window, then the full verifier."""
        if not AlgebraService.is_nonsingular(matrix):
            return False
        return SearchService._passes_verifier(matrix, params)

    @staticmethod
    def _passes_verifier(matrix: ZpMatrix, params: ConstructionParams) -> bool:
        square = Square(SquareService.scatter(matrix.to_numpy(), params), params)
        if not VerifierService.check_p_by_p_at(square, params.p):
            return False
        return VerifierService.verify_full(square, params.p).is_type_p_mps

    @staticmethod
    def census(space: SearchSpace, checkpoint_path: Optional[str] = None,
               checkpoint_interval: int = DEFAULT_CHECKPOINT_INTERVAL) -> SearchResult:
        """Whole-space census."""
        return SearchService.census_partition(space, 0, 1, checkpoint_path, checkpoint_interval)

    @staticmethod
    def census_partition(space: SearchSpace, shard_index: int, shard_count: int,
                         checkpoint_path: Optional[str] = None,
                         checkpoint_interval: int = DEFAULT_CHECKPOINT_INTERVAL) -> SearchResult:
        """
        Census of one contiguous shard of the candidate sequence.

        Args:
            space: Search space (params, mode, budget)
            shard_index: 0-based shard number
            shard_count: Number of shards the sequence is split into
            checkpoint_path: Optional JSON checkpoint; resumed when it matches this shard
            checkpoint_interval: Candidates between checkpoint writes and progress lines

        Returns:
            SearchResult for this shard
        """
        total = SearchService.candidate_count(space)
        start, stop = SearchService.shard_bounds(total, shard_index, shard_count)
        SearchService.check_budget(space, stop - start)
        if checkpoint_interval < 1:
            raise ParameterError('Checkpoint interval must be positive')

        result = SearchResult(space=space.describe(), shard_count=shard_count, shards=[shard_index])
        position = start
        if checkpoint_path and os.path.exists(checkpoint_path):
            position = SearchService._resume(checkpoint_path, space, result, start, stop)

        params = space.params
        began = time.perf_counter()
        logger.info('Census shard started', extra={
            'shard_index': shard_index, 'shard_count': shard_count, 'start': position, 'stop': stop,
            'mode': space.mode.value, 'p': params.p, 'r': params.r,
        })

        for index, entries in SearchService.enumerate_candidates(space, position, stop):
            result.tested += 1
            if not SearchService._passes_constraints(space, entries):
                result.pruned += 1
            else:
                matrix = ZpMatrix(space.dim, space.dim, entries, params.p)
                if AlgebraService.is_nonsingular(matrix):
                    result.nonsingular += 1
                    if SearchService._passes_verifier(matrix, params):
                        result.mps_count += 1
                        if len(result.representatives) < space.representative_cap:
                            result.representatives.append((index, matrix))

            if (index + 1 - start) % checkpoint_interval == 0:
                SearchService._report_progress(result, index + 1, start, stop)
                if checkpoint_path:
                    SearchService._checkpoint(space, result, shard_index, shard_count, index + 1).save(checkpoint_path)

        result.wall_time = time.perf_counter() - began
        if checkpoint_path:
            SearchService._checkpoint(space, result, shard_index, shard_count, stop).save(checkpoint_path)
        logger.info('Census shard finished', extra={'shard_index': shard_index, **result.counts(),
                                                    'wall_time': round(result.wall_time, 3)})
        return result

    @staticmethod
    def _report_progress(result: SearchResult, position: int, start: int, stop: int) -> None:
        logger.info('Census progress', extra={
            'shard_index': result.shards[0],
            'position': position,
            'percent_done': calculate_percentage(position - start, stop - start),
            **result.counts(),
        })

    @staticmethod
    def _checkpoint(space: SearchSpace, result: SearchResult, shard_index: int, shard_count: int,
                    next_index: int) -> Checkpoint:
        return Checkpoint(
            shard_index=shard_index,
            shard_count=shard_count,
            next_candidate_index=next_index,
            partial_counts=result.counts(),
            space=space.describe(),
            representatives=result.to_dict()['representatives'],
        )

    @staticmethod
    def _resume(path: str, space: SearchSpace, result: SearchResult, start: int, stop: int) -> int:
        checkpoint = Checkpoint.load(path)
        shard_index, shard_count = result.shards[0], result.shard_count
        if (checkpoint.shard_index, checkpoint.shard_count) != (shard_index, shard_count):
            raise CheckpointError(
                f'Checkpoint belongs to shard {checkpoint.shard_index}/{checkpoint.shard_count}, '
                f'not {shard_index}/{shard_count}'
            )
        if checkpoint.space and checkpoint.space != space.describe():
            raise CheckpointError('Checkpoint was written for a different search space')
        if not start <= checkpoint.next_candidate_index <= stop:
            raise CheckpointError(f'Checkpoint position {checkpoint.next_candidate_index} outside {start}..{stop}')

        restored = SearchResult.from_dict({**checkpoint.partial_counts,
                                           'representatives': checkpoint.representatives})
        result.tested = restored.tested
        result.nonsingular = restored.nonsingular
        result.mps_count = restored.mps_count
        result.pruned = restored.pruned
        result.representatives = restored.representatives
        logger.info('Resuming census from checkpoint', extra={'path': path,
                                                              'position': checkpoint.next_candidate_index})
        return checkpoint.next_candidate_index

    @staticmethod
    def merge_results(results: Sequence[SearchResult], representative_cap: Optional[int] = None) -> SearchResult:
        """Add shard tallies; representatives merge in candidate-index order."""
        if not results:
            raise ParameterError('Nothing to merge')
        first = results[0]
        for other in results[1:]:
            if other.space != first.space or other.shard_count != first.shard_count:
                raise ParameterError('Cannot merge results from different search spaces or shard layouts')
        shards = sorted(s for result in results for s in result.shards)
        if len(shards) != len(set(shards)):
            raise ShardSpecError(f'Shard listed more than once: {shards}')

        cap = representative_cap
        if cap is None:
            cap = max(len(result.representatives) for result in results)
        representatives = sorted((rep for result in results for rep in result.representatives),
                                 key=lambda rep: rep[0])[:cap]
        times = [result.wall_time for result in results if result.wall_time is not None]
        shard_count = first.shard_count
        if shards == list(range(shard_count)):
            # every shard present: report as one whole-space census
            shard_count, shards = 1, [0]
        return SearchResult(
            space=dict(first.space),
            tested=sum(result.tested for result in results),
            nonsingular=sum(result.nonsingular for result in results),
            mps_count=sum(result.mps_count for result in results),
            pruned=sum(result.pruned for result in results),
            representatives=representatives,
            shard_count=shard_count,
            shards=shards,
            wall_time=sum(times) if times else None,
        )

    @staticmethod
    def census_parallel(space: SearchSpace, workers: int) -> SearchResult:
        """Split the sequence into one shard per worker and merge the results."""
        if workers < 1:
            raise ParameterError('Worker count must be at least 1')
        SearchService.check_budget(space, SearchService.candidate_count(space))
        if workers == 1 or space.column_constraints:
            if space.column_constraints and workers > 1:
                logger.warning('Column constraints are not shipped to worker processes; running in-process')
            result = SearchService.census(space)
        else:
            with multiprocessing.Pool(workers) as pool:
                shard_results = pool.starmap(
                    SearchService.census_partition,
                    [(space, index, workers) for index in range(workers)]
                )
            result = SearchService.merge_results(shard_results, space.representative_cap)
        return result

    @staticmethod
    def find_delta(matrix: ZpMatrix, params: ConstructionParams) -> Optional[ZpVector]:
        """
        Solve M x = e_1 + e_{r+1}; return x only when every component is nonzero.

        Raises:
            SingularMatrixError: M is singular
        """
        if not AlgebraService.is_nonsingular(matrix):
            raise SingularMatrixError('find_delta needs a nonsingular matrix')
        solution = AlgebraService.solve(matrix, ConstructionService.diagonal_step(params))
        return solution if solution.is_fully_nonzero() else None
