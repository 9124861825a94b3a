"""
Search space, census result and checkpoint models.
"""
import enum
import json
import os
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from mostperfect.models.params import ConstructionParams
from mostperfect.models.zp import ZpMatrix
from mostperfect.utils.errors import CheckpointError, ParameterError

DEFAULT_SEARCH_BUDGET = 10_000_000
DEFAULT_REPRESENTATIVE_CAP = 10
RANDOM_ALGORITHM = 'PCG64'
# numpy bit generators a random-sample census may be seeded with
RANDOM_ALGORITHMS = ('PCG64', 'MT19937', 'Philox', 'SFC64')

# (column index, column entries) -> keep candidate
ColumnConstraint = Callable[[int, Tuple[int, ...]], bool]


class SearchMode(enum.Enum):
    """Candidate enumeration modes."""
    EXHAUSTIVE_ALL = 'exhaustive-all'
    EXHAUSTIVE_NONSINGULAR = 'exhaustive-nonsingular'
    RANDOM_SAMPLE = 'random-sample'

    @classmethod
    def parse(cls, value: str) -> 'SearchMode':
        try:
            return cls(value)
        except ValueError:
            choices = ', '.join(mode.value for mode in cls)
            raise ParameterError(f'Unknown search mode "{value}"; choose one of {choices}')


@dataclass(frozen=True)
class SearchSpace:
    """Which 2r x 2r matrices over Z_p a census walks through."""
    params: ConstructionParams
    mode: SearchMode = SearchMode.EXHAUSTIVE_ALL
    sample_count: int = 0
    seed: int = 0
    column_constraints: Tuple[ColumnConstraint, ...] = ()
    budget: int = DEFAULT_SEARCH_BUDGET
    representative_cap: int = DEFAULT_REPRESENTATIVE_CAP
    algorithm: str = RANDOM_ALGORITHM

    def __post_init__(self):
        if self.mode is SearchMode.RANDOM_SAMPLE and self.sample_count < 1:
            raise ParameterError('random-sample mode needs a positive sample count')
        if self.budget < 1:
            raise ParameterError('Search budget must be positive')
        if self.representative_cap < 0:
            raise ParameterError('Representative cap cannot be negative')
        if self.algorithm not in RANDOM_ALGORITHMS:
            raise ParameterError(f'Unknown random algorithm "{self.algorithm}"; choose one of {", ".join(RANDOM_ALGORITHMS)}')

    @property
    def dim(self) -> int:
        return self.params.dim

    @property
    def is_exhaustive(self) -> bool:
        return self.mode is not SearchMode.RANDOM_SAMPLE

    def describe(self) -> Dict[str, Any]:
        data = {'p': self.params.p, 'r': self.params.r, 'mode': self.mode.value}
        if self.mode is SearchMode.RANDOM_SAMPLE:
            data.update({'sample_count': self.sample_count, 'seed': self.seed, 'algorithm': self.algorithm})
        return data


@dataclass
class SearchResult:
    """Census tallies for one shard (or several merged shards)."""
    space: Dict[str, Any]
    tested: int = 0
    nonsingular: int = 0
    mps_count: int = 0
    pruned: int = 0
    representatives: List[Tuple[int, ZpMatrix]] = field(default_factory=list)
    shard_count: int = 1
    shards: List[int] = field(default_factory=lambda: [0])
    wall_time: Optional[float] = None

    def counts(self) -> Dict[str, int]:
        return {
            'tested': self.tested,
            'nonsingular': self.nonsingular,
            'mps_count': self.mps_count,
            'pruned': self.pruned,
        }

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        """JSON report; timing is opt-in so reports stay byte-deterministic."""
        from mostperfect.services.algebra_service import AlgebraService

        data = dict(self.space)
        data.update(self.counts())
        data['shard_count'] = self.shard_count
        data['shards'] = list(self.shards)
        data['representatives'] = [
            {'index': index, 'matrix': AlgebraService.format_matrix(matrix)}
            for index, matrix in self.representatives
        ]
        if include_timing and self.wall_time is not None:
            data['wall_time'] = round(self.wall_time, 6)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SearchResult':
        from mostperfect.services.algebra_service import AlgebraService

        space_keys = ('p', 'r', 'mode', 'sample_count', 'seed', 'algorithm')
        try:
            return cls(
                space={key: data[key] for key in space_keys if key in data},
                tested=int(data['tested']),
                nonsingular=int(data['nonsingular']),
                mps_count=int(data['mps_count']),
                pruned=int(data.get('pruned', 0)),
                representatives=[
                    (int(item['index']), AlgebraService.parse_matrix(item['matrix']))
                    for item in data.get('representatives', [])
                ],
                shard_count=int(data.get('shard_count', 1)),
                shards=[int(s) for s in data.get('shards', [0])],
                wall_time=data.get('wall_time'),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParameterError(f'Not a census report: {e}')

    def __repr__(self):
        return (f'<SearchResult tested={self.tested} nonsingular={self.nonsingular} '
                f'mps={self.mps_count} shards={self.shards}/{self.shard_count}>')


@dataclass
class Checkpoint:
    """Resumable position of one shard."""
    shard_index: int
    shard_count: int
    next_candidate_index: int
    partial_counts: Dict[str, int]
    space: Dict[str, Any] = field(default_factory=dict)
    representatives: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'shard_index': self.shard_index,
            'shard_count': self.shard_count,
            'next_candidate_index': self.next_candidate_index,
            'partial_counts': dict(self.partial_counts),
            'space': dict(self.space),
            'representatives': list(self.representatives),
        }

    def save(self, path: str) -> None:
        """Write atomically (temp file, then rename)."""
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        temp_path = f'{path}.tmp'
        with open(temp_path, 'w', encoding='utf-8') as handle:
            json.dump(self.to_dict(), handle, sort_keys=True)
        os.replace(temp_path, path)

    @classmethod
    def load(cls, path: str) -> 'Checkpoint':
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                data = json.load(handle)
            return cls(
                shard_index=int(data['shard_index']),
                shard_count=int(data['shard_count']),
                next_candidate_index=int(data['next_candidate_index']),
                partial_counts={k: int(v) for k, v in data['partial_counts'].items()},
                space=dict(data.get('space', {})),
                representatives=list(data.get('representatives', [])),
            )
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as e:
            raise CheckpointError(f'Cannot read checkpoint {path}: {e}')
