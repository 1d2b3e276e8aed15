"""Suffix array, rank, LCP and shortest-unique-extension arrays.

All arrays are numpy arrays padded with an unused slot 0 so that they are
indexed exactly like the 1-based positions and ranks they describe:
``sa[r]`` for ranks ``r = 1..n`` holds a position, ``rank[i]`` for positions
``i = 1..n`` holds a rank.  ``ext[i] == 0`` means "none": the suffix starting
at ``i`` repeats, so no unique substring starts there.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .text import Interval, Text, check_interval


def suffix_array(data: bytes) -> np.ndarray:
    """0-based suffix array by prefix doubling, O(n log^2 n) worst case."""
    n = len(data)
    rank = np.frombuffer(data, dtype=np.uint8).astype(np.int64)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        # second key: rank of the suffix k further on, 0 past the end
        second = np.zeros(n, dtype=np.int64)
        second[: n - k] = rank[k:] + 1
        key = rank * (n + 258) + second
        sa = np.argsort(key, kind="stable")
        ks = key[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum(ks[1:] != ks[:-1])))
        rank = new_rank
        if rank[sa[-1]] == n - 1 or k >= n:
            return sa
        k *= 2


def lcp_kasai(data: bytes, sa: np.ndarray) -> np.ndarray:
    """lcp[r] = LCP of suffixes sa[r-1] and sa[r] (0-based ranks, lcp[0] = 0)."""
    n = len(data)
    sal = sa.tolist()
    rank = [0] * n
    for r, p in enumerate(sal):
        rank[p] = r
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sal[r - 1]
        while i + h < n and j + h < n and data[i + h] == data[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class SuffixIndex:
    text: Text
    sa: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray
    ext: np.ndarray

    @property
    def n(self) -> int:
        return self.text.n

    def ext_at(self, i: int):
        """Shortest unique length starting at position ``i``, or None."""
        v = int(self.ext[i])
        return v or None


def build_index(text: Text) -> SuffixIndex:
    data = text.data
    n = len(data)
    sa0 = suffix_array(data)
    lcp0 = lcp_kasai(data, sa0)

    sa = np.zeros(n + 1, dtype=np.int64)
    sa[1:] = sa0 + 1
    rank = np.zeros(n + 1, dtype=np.int64)
    rank[sa[1:]] = np.arange(1, n + 1)
    lcp = np.zeros(n + 2, dtype=np.int64)  # lcp[n + 1] = 0 is the missing right neighbour
    lcp[1:n + 1] = lcp0

    pos = np.arange(1, n + 1)
    r = rank[1:]
    need = 1 + np.maximum(lcp[r], lcp[r + 1])
    ext = np.zeros(n + 1, dtype=np.int64)
    ext[1:] = np.where(pos + need - 1 <= n, need, 0)
    return SuffixIndex(text, sa, rank, lcp[: n + 1], ext)


def _compare_prefix(data: bytes, start: int, pattern: bytes) -> int:
    chunk = data[start:start + len(pattern)]
    if chunk == pattern:
        return 0
    return -1 if chunk < pattern else 1


def occurrence_count(index: SuffixIndex, iv: Interval) -> int:
    """Number of occurrences of the substring at ``iv``, by binary search on the suffix array."""
    b, e = check_interval(iv, index.n)
    data = index.text.data
    pattern = data[b - 1:e]
    sa = index.sa
    n = index.n

    lo, hi = 1, n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare_prefix(data, int(sa[mid]) - 1, pattern) < 0:
            lo = mid + 1
        else:
            hi = mid
    first = lo
    hi = n + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare_prefix(data, int(sa[mid]) - 1, pattern) <= 0:
            lo = mid + 1
        else:
            hi = mid
    return lo - first
