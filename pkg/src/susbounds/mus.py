"""Minimal unique substrings (MUSs)."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterable, List

import numpy as np

from .suffix_index import SuffixIndex
from .text import Interval


@dataclass(frozen=True, eq=False)
class MusList:
    """MUS intervals of a text of length ``n``, sorted by begin position.

    ``begins`` and ``ends`` are plain lists for scalar bisection; ``b`` and
    ``e`` are the same data as numpy arrays for vectorised passes.
    """
    n: int
    begins: List[int]
    ends: List[int]
    b: np.ndarray = field(repr=False)
    e: np.ndarray = field(repr=False)

    @classmethod
    def from_arrays(cls, n: int, b: np.ndarray, e: np.ndarray) -> "MusList":
        b = np.asarray(b, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        return cls(n, b.tolist(), e.tolist(), b, e)

    @classmethod
    def from_intervals(cls, n: int, items: Iterable[Interval]) -> "MusList":
        items = sorted(items)
        b = np.array([iv[0] for iv in items], dtype=np.int64)
        e = np.array([iv[1] for iv in items], dtype=np.int64)
        return cls.from_arrays(n, b, e)

    @property
    def m(self) -> int:
        return len(self.begins)

    @property
    def items(self) -> List[Interval]:
        return [Interval(b, e) for b, e in zip(self.begins, self.ends)]

    def __len__(self) -> int:
        return len(self.begins)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, k: int) -> Interval:
        return Interval(self.begins[k], self.ends[k])

    def by_begin(self, b: int):
        k = bisect_left(self.begins, b)
        if k < self.m and self.begins[k] == b:
            return self[k]
        return None

    def by_end(self, e: int):
        k = bisect_left(self.ends, e)
        if k < self.m and self.ends[k] == e:
            return self[k]
        return None

    def last_ending_before(self, pos: int) -> int:
        """Index of the last MUS with end < pos, or -1."""
        return bisect_left(self.ends, pos) - 1

    def first_beginning_after(self, pos: int) -> int:
        """Index of the first MUS with begin > pos, or m."""
        return bisect_right(self.begins, pos)


def compute_mus(index: SuffixIndex) -> MusList:
    ext = index.ext[1:]
    defined = int(np.count_nonzero(ext))
    # ext is defined exactly on a prefix of positions
    pos = np.arange(1, defined + 1, dtype=np.int64)
    y = pos + ext[:defined] - 1
    keep = np.ones(defined, dtype=bool)
    keep[:-1] = y[1:] > y[:-1]
    return MusList.from_arrays(index.n, pos[keep], y[keep])


def check_mus_invariants(muslist: MusList, n: int) -> bool:
    b, e = muslist.b, muslist.e
    if not 1 <= muslist.m <= n:
        return False
    return bool(np.all(b[1:] > b[:-1]) and np.all(e[1:] > e[:-1]))


def meaningless_mus(muslist: MusList, ps) -> set:
    """MUSs that are a shortest unique substring for no position."""
    return set(muslist.items) - set(ps)
