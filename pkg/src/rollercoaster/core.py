"""Sequences, their point-set view, run decomposition and the rollercoaster check."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from numbers import Integral, Real
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateValue, InvalidIndices, TooShort

ASC = "asc"
DESC = "desc"

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def _ranks(values):
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return ranks


@dataclass(frozen=True)
class NumberSequence:
    """Finite sequence of pairwise distinct numbers.

    ``values`` keeps what the caller supplied.  ``keys`` is an int64 array with
    the same relative order: the values themselves when they are machine
    integers, otherwise their ranks ``1..n``.  Every algorithm reads ``keys``.
    """

    values: tuple
    keys: np.ndarray = field(repr=False, compare=False)

    def __init__(self, values: Iterable[Real]):
        vals = tuple(values)
        if len(set(vals)) != len(vals):
            seen = set()
            dup = next(v for v in vals if v in seen or seen.add(v))
            raise DuplicateValue(f"value {dup} occurs more than once")
        if all(isinstance(v, Integral) and _INT64_MIN <= v <= _INT64_MAX for v in vals):
            keys = np.array(vals, dtype=np.int64)
        else:
            keys = np.array(_ranks([Fraction(v) for v in vals]), dtype=np.int64)
        keys.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "keys", keys)

    @classmethod
    def from_reals(cls, values: Iterable[Real]) -> "NumberSequence":
        """Rank-map arbitrary distinct reals to ``1..n`` before storing."""
        vals = [Fraction(v) for v in values]
        if len(set(vals)) != len(vals):
            raise DuplicateValue("values are not pairwise distinct")
        return cls(_ranks(vals))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def as_sequence(seq) -> NumberSequence:
    return seq if isinstance(seq, NumberSequence) else NumberSequence(seq)


def keys_of(seq) -> np.ndarray:
    """int64 order-isomorphic keys for a NumberSequence, array or plain list."""
    if isinstance(seq, NumberSequence):
        return seq.keys
    if isinstance(seq, np.ndarray) and seq.dtype.kind == "i":
        return seq.astype(np.int64, copy=False)
    return as_sequence(seq).keys


@dataclass(frozen=True)
class Run:
    """Maximal monotone stretch of a subsequence.

    ``start`` and ``end`` are positions in the index list (inclusive), so the
    run has ``end - start + 1`` elements and consecutive runs share an end.
    """

    direction: str
    start: int
    end: int

    def __len__(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class Rollercoaster:
    indices: tuple
    min_run: int = 3

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def values(self, seq) -> list:
        vals = as_sequence(seq).values
        return [vals[i] for i in self.indices]


@dataclass(frozen=True)
class PointSet:
    points: tuple

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def check_indices(n: int, indices: Sequence[int]) -> np.ndarray:
    idx = np.asarray(indices, dtype=np.int64).reshape(-1)
    if idx.size and (idx[0] < 0 or idx[-1] >= n or np.any(np.diff(idx) <= 0)):
        raise InvalidIndices("indices must be strictly increasing positions of the sequence")
    return idx


def run_lengths(values: np.ndarray) -> np.ndarray:
    """Element counts of the maximal runs of ``values`` (empty below length 2)."""
    if len(values) < 2:
        return np.zeros(0, dtype=np.int64)
    up = np.diff(values) > 0
    cuts = np.flatnonzero(up[1:] != up[:-1]) + 1
    bounds = np.concatenate(([0], cuts, [len(up)]))
    return np.diff(bounds) + 1


def decompose_runs(seq, indices: Sequence[int] | None = None) -> list[Run]:
    keys = keys_of(seq)
    idx = np.arange(len(keys)) if indices is None else check_indices(len(keys), indices)
    vals = keys[idx]
    runs = []
    start = 0
    for length in run_lengths(vals):
        end = start + int(length) - 1
        runs.append(Run(ASC if vals[end] > vals[start] else DESC, start, end))
        start = end
    return runs


def validate(seq, indices: Sequence[int] | None = None, min_run: int = 3) -> bool:
    """True iff the chosen subsequence has at least ``min_run`` elements and
    every one of its runs does too."""
    keys = keys_of(seq)
    idx = np.arange(len(keys)) if indices is None else check_indices(len(keys), indices)
    if len(idx) < min_run:
        return False
    return bool(np.all(run_lengths(keys[idx]) >= min_run))


def to_points(seq) -> PointSet:
    s = as_sequence(seq)
    return PointSet(tuple((i + 1, v) for i, v in enumerate(s.values)))


def monotone_triple(seq) -> Rollercoaster:
    """A monotone triple among the first five elements."""
    keys = keys_of(seq)
    if len(keys) < 5:
        raise TooShort("a monotone triple is only guaranteed for n >= 5")
    for trio in combinations(range(5), 3):
        a, b, c = (keys[t] for t in trio)
        if a < b < c or a > b > c:
            return Rollercoaster(trio)
    raise AssertionError("five distinct values always contain a monotone triple")
