"""Sparse-table range minimum / maximum over a static numpy array."""
from __future__ import annotations

import numpy as np


class SparseTable:
    """O(1) range queries after O(n log n) preprocessing.

    ``max_width`` caps the supported range width, saving memory when all
    queries are known to be short.

    ``table[k][i]`` holds the index of the extreme value in ``values[i:i + 2**k]``
    (leftmost on ties).  Ranges are inclusive ``[lo, hi]`` 0-based array indices.
    """

    def __init__(self, values, op: str = "min", max_width: int = None):
        if op not in ("min", "max"):
            raise ValueError(op)
        self.values = np.asarray(values, dtype=np.int64)
        self.op = op
        n = len(self.values)
        idx = np.arange(n, dtype=np.int64)
        self.table = [idx]
        k = 1
        limit = n if max_width is None else min(n, max_width)
        while (1 << k) <= limit:
            prev = self.table[-1]
            half = 1 << (k - 1)
            a = prev[: n - (1 << k) + 1]
            b = prev[half: half + len(a)]
            va, vb = self.values[a], self.values[b]
            pick_b = vb < va if op == "min" else vb > va
            self.table.append(np.where(pick_b, b, a))
            k += 1

    def __len__(self) -> int:
        return len(self.values)

    def argbest(self, lo: int, hi: int) -> int:
        k = (hi - lo + 1).bit_length() - 1
        a = int(self.table[k][lo])
        b = int(self.table[k][hi - (1 << k) + 1])
        va, vb = self.values[a], self.values[b]
        if self.op == "min":
            return b if vb < va else a
        return b if vb > va else a

    def best(self, lo: int, hi: int) -> int:
        return int(self.values[self.argbest(lo, hi)])

    def all_best(self, lo: int, hi: int) -> list:
        """Sorted indices in [lo, hi] attaining the range extreme; O(output) queries."""
        if lo > hi:
            return []
        if lo == hi:
            return [lo]
        target = self.best(lo, hi)
        out = []
        stack = [(lo, hi)]
        while stack:
            l, h = stack.pop()
            if l > h:
                continue
            i = self.argbest(l, h)
            if self.values[i] != target:
                continue
            out.append(i)
            stack.append((l, i - 1))
            stack.append((i + 1, h))
        out.sort()
        return out

    def best_many(self, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        """Vectorised extreme values for ranges with lo <= hi."""
        width = hi - lo + 1
        k = np.floor(np.log2(np.maximum(width, 1))).astype(np.int64)
        # guard float rounding at powers of two
        k = np.where((1 << (k + 1)) <= width, k + 1, k)
        k = np.where((1 << k) > width, k - 1, k)
        out = np.empty(len(lo), dtype=np.int64)
        for level in np.unique(k):
            sel = k == level
            t = self.table[level]
            a = self.values[t[lo[sel]]]
            b = self.values[t[hi[sel] - (1 << level) + 1]]
            out[sel] = np.minimum(a, b) if self.op == "min" else np.maximum(a, b)
        return out
