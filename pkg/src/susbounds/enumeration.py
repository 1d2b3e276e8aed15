"""Enumeration of all point / interval SUSs, the charging map, and bound checks."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from .mus import MusList, check_mus_invariants, compute_mus
from .query import SusIndex, sus_index
from .rmq import SparseTable
from .suffix_index import build_index
from .text import Interval, Text


@dataclass
class PointSusSet:
    """All point SUSs split into left extensions, MUSs and right extensions of MUSs."""
    ps: List[Interval]
    ls: List[Interval]
    ms: List[Interval]
    rs: List[Interval]


@dataclass
class ChargingMap:
    f: Dict[Interval, int]
    finv: Dict[int, Tuple[Interval, ...]]
    big_u: List[int]


@dataclass
class BoundCheck:
    name: str
    lhs: object
    relation: str
    rhs: object
    passed: bool


@dataclass
class BoundReport:
    n: int
    m: int
    ps_count: int
    is_count: int
    ls_count: int
    ms_count: int
    rs_count: int
    u_count: int
    checks: List[BoundCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def tight(self) -> bool:
        """|PS| attains (3n - 1) / 2."""
        return 2 * self.ps_count == 3 * self.n - 1

    def failures(self) -> List[BoundCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        d = asdict(self)
        for c in d["checks"]:
            for side in ("lhs", "rhs"):
                if isinstance(c[side], Fraction):
                    c[side] = float(c[side])
        d["tight"] = self.tight
        d["ok"] = self.ok
        return d


def classify(ps, muslist: MusList) -> PointSusSet:
    """Split a set of point SUSs by the MUS each one extends."""
    mus = set(muslist.items)
    ls, ms, rs = [], [], []
    for iv in sorted(set(ps)):
        x, y = iv
        if iv in mus:
            ms.append(iv)
            continue
        m_at_x = muslist.by_begin(x)
        if m_at_x is not None and m_at_x.end < y:
            rs.append(iv)
            continue
        m_at_y = muslist.by_end(y)
        if m_at_y is not None and m_at_y.begin > x:
            ls.append(iv)
            continue
        raise AssertionError(f"{iv} is not an extension of any MUS")
    return PointSusSet(sorted(set(ps)), ls, ms, rs)


def _pairs(b: np.ndarray, e: np.ndarray) -> List[Interval]:
    return [Interval(x, y) for x, y in zip(b.tolist(), e.tolist())]


def _point_sus_fast(muslist: MusList) -> PointSusSet:
    n, m = muslist.n, muslist.m
    b, e = muslist.b, muslist.e
    lengths = e - b + 1
    inf = n + 1
    p = np.arange(1, n + 1, dtype=np.int64)

    ia = np.searchsorted(e, p, side="left") - 1   # last MUS ending before p
    ic = np.searchsorted(b, p, side="right")      # first MUS beginning after p
    has_a = ia >= 0
    has_c = ic < m
    b_a = b[np.where(has_a, ia, 0)]
    e_c = e[np.where(has_c, ic, 0)]
    rs_len = np.where(has_a, p - b_a + 1, inf)
    ls_len = np.where(has_c, e_c - p + 1, inf)

    lo, hi = ia + 1, ic - 1
    has_b = lo <= hi
    ms_len = np.full(n, inf, dtype=np.int64)
    if has_b.any():
        table = SparseTable(lengths, "min")
        ms_len[has_b] = table.best_many(lo[has_b], hi[has_b])
    best = np.minimum(np.minimum(rs_len, ls_len), ms_len)

    sel = rs_len == best
    rs = _pairs(b_a[sel], p[sel])
    sel = ls_len == best
    ls = _pairs(p[sel], e_c[sel])
    # a MUS is a SUS iff some position inside it has best length equal to its length
    widest = int(lengths.max())
    inside = SparseTable(best, "max", max_width=widest).best_many(b - 1, e - 1)
    sel = inside == lengths
    ms = _pairs(b[sel], e[sel])
    return PointSusSet(sorted(rs + ls + ms), ls, ms, rs)


def enumerate_point_sus(muslist: MusList, method: str = "fast") -> PointSusSet:
    """PS_S with its decomposition.

    ``fast`` is a vectorised pass over all positions; ``query`` unions
    per-position answers of the query structure.
    """
    if method == "fast":
        return _point_sus_fast(muslist)
    if method == "query":
        idx = sus_index(muslist)
        ps = set()
        for p in range(1, muslist.n + 1):
            ps.update(idx.point_sus(p).sus_list)
        return classify(ps, muslist)
    raise ValueError(f"unknown method {method!r}")


def build_charging(ps_set: PointSusSet, muslist: MusList) -> ChargingMap:
    f = {}
    for iv in ps_set.ls:
        f[iv] = iv.begin
    for iv in ps_set.ms:
        f[iv] = iv.begin
    for iv in ps_set.rs:
        f[iv] = iv.end
    buckets: Dict[int, list] = {u: [] for u in range(1, muslist.n + 1)}
    for iv, u in f.items():
        buckets[u].append(iv)
    finv = {u: tuple(sorted(v)) for u, v in buckets.items()}
    big_u = [u for u, v in finv.items() if len(v) == 2]
    return ChargingMap(f, finv, big_u)


def enumerate_interval_sus(muslist: MusList, method: str = "fast") -> List[Interval]:
    """IS_S: answers that are non-trivial for at least one query interval.

    An answer is trivial for a query only when it equals a query of length >= 2.
    ``queries`` runs every query through the query structure.  ``fast`` uses
    the equivalent closed form: a unique [x, y] is in IS_S iff x == y, or
    [x+1, y] repeats, or [x, y-1] repeats.
    """
    n = muslist.n
    if method == "queries":
        idx = sus_index(muslist)
        out = set()
        for s in range(1, n + 1):
            for t in range(s, n + 1):
                for iv in idx.interval_sus(Interval(s, t)).sus_list:
                    if s == t or iv != (s, t):
                        out.add(iv)
        return sorted(out)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")

    b, e, m = muslist.b, muslist.e, muslist.m
    x = np.arange(1, n + 2, dtype=np.int64)
    k = np.searchsorted(b, x, side="left")
    # shortest unique interval starting at x ends at the end of the first MUS beginning at or after x
    first_end = np.where(k < m, e[np.minimum(k, m - 1)], n + 1)
    start, nxt = first_end[:-1], first_end[1:]
    defined = start <= n
    xs, start, nxt = x[:-1][defined], start[defined], nxt[defined]
    stop = np.maximum(start, nxt - 1)
    counts = stop - start + 1
    xs_rep = np.repeat(xs, counts)
    offsets = np.arange(int(counts.sum()), dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    ys = np.repeat(start, counts) + offsets
    return _pairs(xs_rep, ys)


def check_finv2_structure(charging: ChargingMap, muslist: MusList, ps_set: PointSusSet = None) -> bool:
    return not _finv2_failures(charging, muslist, ps_set)


def _finv2_failures(charging: ChargingMap, muslist: MusList, ps_set: PointSusSet = None) -> List[int]:
    if ps_set is None:
        rs = {iv for iv, u in charging.f.items() if iv.end == u and iv.begin != u}
    else:
        rs = set(ps_set.rs)
    begins = set(muslist.begins)
    ends = set(muslist.ends)
    bad = []
    for u in charging.big_u:
        first, second = sorted(charging.finv[u])
        ok = (
            first.begin < second.begin
            and first in rs and first.end == u and first.begin < u
            and second not in rs and second.begin == u
            and first.begin in begins and second.end in ends
        )
        if not ok:
            bad.append(u)
    return bad


def _property_of_s_failures(ps_set: PointSusSet, idx: SusIndex) -> int:
    bad = 0
    for iv in ps_set.rs:
        if iv not in idx.point_sus(iv.end).sus_list:
            bad += 1
    for iv in ps_set.ls:
        if iv not in idx.point_sus(iv.begin).sus_list:
            bad += 1
    return bad


def _nesting_violations(muslist: MusList) -> int:
    b, e = muslist.b, muslist.e
    return int(np.count_nonzero(b[1:] <= b[:-1]) + np.count_nonzero(e[1:] <= e[:-1]))


@dataclass
class Analysis:
    """Everything computed for one text by :func:`analyze`."""
    text: Text
    muslist: MusList
    ps_set: PointSusSet
    charging: ChargingMap
    is_set: List[Interval]
    report: BoundReport


def _check(name, lhs, relation, rhs) -> BoundCheck:
    passed = lhs <= rhs if relation == "<=" else lhs == rhs
    return BoundCheck(name, lhs, relation, rhs, bool(passed))


def analyze(text: Text) -> Analysis:
    muslist = compute_mus(build_index(text))
    ps_set = enumerate_point_sus(muslist)
    charging = build_charging(ps_set, muslist)
    is_set = enumerate_interval_sus(muslist)
    n, m = text.n, muslist.m
    ps, ls, ms, rs = len(ps_set.ps), len(ps_set.ls), len(ps_set.ms), len(ps_set.rs)
    sizes = [len(v) for v in charging.finv.values()]
    b1, bm = muslist.begins[0], muslist.begins[-1]
    outer = [len(charging.finv[u]) for u in range(1, n + 1) if u <= b1 or u > bm]
    parts = [set(ps_set.ls), set(ps_set.ms), set(ps_set.rs)]

    checks = [
        _check("mus_count_min: 1 <= |M|", 1, "<=", m),
        _check("mus_count_max: |M| <= n", m, "<=", n),
        _check("mus_non_nesting: violations == 0", _nesting_violations(muslist), "==", 0),
        _check("ubound1: |PS| <= 2n - |M|", ps, "<=", 2 * n - m),
        _check("ubound2: |PS| <= n + |M| - 1", ps, "<=", n + m - 1),
        _check("ubound_tight: |PS| <= (3n - 1)/2", ps, "<=", Fraction(3 * n - 1, 2)),
        _check("intervalubound: |IS| <= 2n - |M|", len(is_set), "<=", 2 * n - m),
        _check("ls_size: |LS| <= n - |M|", ls, "<=", n - m),
        _check("rs_size: |RS| <= n - |M|", rs, "<=", n - m),
        _check("ms_size: |MS| <= |M|", ms, "<=", m),
        _check("decomposition: |LS| + |MS| + |RS| == |PS|", ls + ms + rs, "==", ps),
        _check("decomposition_union: |LS u MS u RS| == |PS|",
               len(parts[0] | parts[1] | parts[2]), "==", ps),
        _check("charging_total: sum |f^-1(u)| == |PS|", sum(sizes), "==", ps),
        _check("sizeof_finv: max |f^-1(u)| <= 2", max(sizes), "<=", 2),
        _check("endSUSnum: max |f^-1(u)| <= 1 for u <= b_1 or u > b_m",
               max(outer, default=0), "<=", 1),
        _check("sizeof_U: |U| <= |M| - 1", len(charging.big_u), "<=", m - 1),
        _check("finv2_structure: failing u in U == 0",
               len(_finv2_failures(charging, muslist, ps_set)), "==", 0),
        _check("propertyofS: failures == 0",
               _property_of_s_failures(ps_set, sus_index(muslist)), "==", 0),
    ]
    report = BoundReport(n, m, ps, len(is_set), ls, ms, rs, len(charging.big_u), checks)
    return Analysis(text, muslist, ps_set, charging, is_set, report)


def verify_bounds(text: Text) -> BoundReport:
    return analyze(text).report
