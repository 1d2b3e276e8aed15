"""Point and interval SUS queries over the MUS list.

Every unique interval contains a MUS and every interval containing a MUS is
unique, so the SUSs for a query are the shortest covers of (query, MUS).
Only three kinds of MUS can give a shortest cover: the last MUS ending before
the query end, the first MUS beginning after the query begin, and the MUSs
that contain the query, which form a contiguous run of the sorted list.
"""
from __future__ import annotations

import weakref
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import List

from .mus import MusList
from .rmq import SparseTable
from .text import Interval, IntervalOutOfRange, PositionOutOfRange, check_interval


@dataclass(frozen=True)
class SusAnswer:
    query: Interval
    sus_list: List[Interval]
    sus_length: int


def cover(mus: Interval, query: Interval) -> Interval:
    return Interval(min(mus[0], query[0]), max(mus[1], query[1]))


class SusIndex:
    """Query structure over a MusList; ``method="scan"`` is the O(m) reference path."""

    def __init__(self, muslist: MusList):
        self.muslist = muslist

    @cached_property
    def _lengths(self) -> SparseTable:
        ml = self.muslist
        return SparseTable(ml.e - ml.b + 1, "min")

    def interval_sus(self, q: Interval, method: str = "window") -> SusAnswer:
        s, t = q = check_interval(q, self.muslist.n, IntervalOutOfRange)
        if method == "window":
            cands = self._window_candidates(s, t)
        elif method == "scan":
            cands = [(min(b, s), max(e, t)) for b, e in zip(self.muslist.begins, self.muslist.ends)]
        else:
            raise ValueError(f"unknown method {method!r}")
        best = min(e - b for b, e in cands)
        found = sorted({c for c in cands if c[1] - c[0] == best})
        return SusAnswer(q, [Interval(b, e) for b, e in found], best + 1)

    def point_sus(self, p: int, method: str = "window") -> SusAnswer:
        if not 1 <= p <= self.muslist.n:
            raise PositionOutOfRange(f"position {p} not within [1,{self.muslist.n}]")
        return self.interval_sus(Interval(p, p), method)

    def _window_candidates(self, s: int, t: int) -> list:
        ml = self.muslist
        begins, ends = ml.begins, ml.ends
        cands = []
        left = bisect_left(ends, t) - 1  # last MUS ending before t
        if left >= 0:
            cands.append((min(begins[left], s), t))
        right = bisect_right(begins, s)  # first MUS beginning after s
        if right < ml.m:
            cands.append((s, max(ends[right], t)))
        # MUSs with begin <= s and end >= t occupy indices left+1 .. right-1
        if left + 1 < right:
            for k in self._lengths.all_best(left + 1, right - 1):
                cands.append((begins[k], ends[k]))
        return cands


_indexes: "weakref.WeakKeyDictionary[MusList, SusIndex]" = weakref.WeakKeyDictionary()


def sus_index(muslist: MusList) -> SusIndex:
    idx = _indexes.get(muslist)
    if idx is None:
        idx = _indexes[muslist] = SusIndex(muslist)
    return idx


def point_sus(muslist: MusList, p: int, method: str = "window") -> SusAnswer:
    return sus_index(muslist).point_sus(p, method)


def interval_sus(muslist: MusList, q: Interval, method: str = "window") -> SusAnswer:
    return sus_index(muslist).interval_sus(q, method)
