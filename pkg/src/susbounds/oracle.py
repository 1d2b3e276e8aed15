"""Brute-force reference implementations and the exhaustive sweep harness.

Nothing here touches suffix arrays or the MUS cover characterisation: every
answer comes from counting substring occurrences directly.
"""
from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, List, Optional, Set

from .text import Interval, SusError, Text, check_interval, make_text

log = logging.getLogger(__name__)


class BudgetExceeded(SusError):
    pass


def naive_unique(text: Text, iv: Interval) -> bool:
    b, e = check_interval(iv, text.n)
    data = text.data
    w = data[b - 1:e]
    hits = 0
    for i in range(text.n - len(w) + 1):
        if data[i:i + len(w)] == w:
            hits += 1
            if hits > 1:
                return False
    return hits == 1


class _Table:
    """uniq[i][j] for 1-based i <= j, from a full substring occurrence count."""

    def __init__(self, data: bytes):
        n = len(data)
        counts = Counter(data[i:j] for i in range(n) for j in range(i + 1, n + 1))
        self.n = n
        self.uniq = [[False] * (n + 2) for _ in range(n + 2)]
        for i in range(1, n + 1):
            row = self.uniq[i]
            for j in range(i, n + 1):
                row[j] = counts[data[i - 1:j]] == 1

    def mus(self) -> List[Interval]:
        u, n = self.uniq, self.n
        out = []
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if u[i][j] and (i == j or (not u[i + 1][j] and not u[i][j - 1])):
                    out.append(Interval(i, j))
        return out

    def sus(self, s: int, t: int) -> List[Interval]:
        u, n = self.uniq, self.n
        for length in range(t - s + 1, n + 1):
            found = [Interval(i, i + length - 1)
                     for i in range(max(1, t - length + 1), min(s, n - length + 1) + 1)
                     if u[i][i + length - 1]]
            if found:
                return found
        raise AssertionError("whole text is always unique")


@lru_cache(maxsize=32)
def _table(data: bytes) -> _Table:
    return _Table(data)


def naive_mus(text: Text) -> List[Interval]:
    return _table(text.data).mus()


def naive_point_sus(text: Text, p: int) -> List[Interval]:
    check_interval((p, p), text.n)
    return _table(text.data).sus(p, p)


def naive_interval_sus(text: Text, q: Interval) -> List[Interval]:
    s, t = check_interval(q, text.n)
    return _table(text.data).sus(s, t)


def naive_all_interval_sus(text: Text) -> dict:
    """Answers for every query interval, keyed by (s, t)."""
    tab = _table(text.data)
    return {(s, t): tab.sus(s, t) for s in range(1, text.n + 1) for t in range(s, text.n + 1)}


def naive_ps_set(text: Text) -> Set[Interval]:
    tab = _table(text.data)
    return {iv for p in range(1, text.n + 1) for iv in tab.sus(p, p)}


def naive_is_set(text: Text, answers: Optional[dict] = None) -> Set[Interval]:
    """Answers that are non-trivial for some query: not equal to a query of length >= 2."""
    if answers is None:
        answers = naive_all_interval_sus(text)
    return {iv for (s, t), ans in answers.items() for iv in ans if s == t or iv != (s, t)}


def compare_with_oracle(text: Text, analysis=None) -> List[str]:
    """Run every fast path against the oracle; return human-readable mismatches."""
    from .enumeration import analyze
    from .query import sus_index

    a = analysis if analysis is not None else analyze(text)
    out = []
    label = text.data.decode("latin-1")
    if a.muslist.items != naive_mus(text):
        out.append(f"{label!r}: compute_mus differs from oracle")
    answers = naive_all_interval_sus(text)
    idx = sus_index(a.muslist)
    for (s, t), expected in answers.items():
        got = idx.interval_sus(Interval(s, t)).sus_list
        if got != expected:
            kind = "point_sus" if s == t else "interval_sus"
            out.append(f"{label!r}: {kind} [{s},{t}] gave {got}, oracle {expected}")
    ps = {iv for p in range(1, text.n + 1) for iv in answers[(p, p)]}
    if set(a.ps_set.ps) != ps:
        out.append(f"{label!r}: enumerate_point_sus differs from oracle")
    if set(a.is_set) != naive_is_set(text, answers):
        out.append(f"{label!r}: enumerate_interval_sus differs from oracle")
    return out


def canonical_strings(n: int, sigma: int) -> Iterator[bytes]:
    """Length-n strings over at most sigma symbols, one per renaming class.

    Symbols appear in first-occurrence order 'a', 'b', ... (restricted growth strings).
    """
    if n <= 0:
        return
    symbols = bytes(range(ord("a"), ord("a") + sigma)) if sigma <= 26 else bytes(range(sigma))
    word = bytearray()

    def extend(used):
        if len(word) == n:
            yield bytes(word)
            return
        for c in range(min(used + 1, sigma)):
            word.append(symbols[c])
            yield from extend(max(used, c + 1))
            word.pop()

    yield from extend(0)


def count_canonical(n: int, sigma: int) -> int:
    """Number of canonical strings: sum of Stirling numbers S(n, k) for k <= sigma."""
    row = [1] + [0] * sigma  # S(0, k)
    for _ in range(n):
        new = [0] * (sigma + 1)
        for k in range(1, sigma + 1):
            new[k] = k * row[k] + row[k - 1]
        row = new
    return sum(row[1:])


@dataclass
class SweepResult:
    n: int
    sigma: int
    strings: int = 0
    max_ps: int = 0
    max_is: int = 0
    ps_witnesses: List[str] = field(default_factory=list)
    is_witnesses: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.mismatches

    def merge(self, other: "SweepResult", max_witnesses: int) -> None:
        self.strings += other.strings
        for attr in ("ps", "is"):
            mine, theirs = getattr(self, f"max_{attr}"), getattr(other, f"max_{attr}")
            wl = getattr(self, f"{attr}_witnesses")
            if theirs > mine:
                setattr(self, f"max_{attr}", theirs)
                wl[:] = getattr(other, f"{attr}_witnesses")[:max_witnesses]
            elif theirs == mine:
                wl.extend(getattr(other, f"{attr}_witnesses"))
                del wl[max_witnesses:]
        self.violations.extend(other.violations)
        self.mismatches.extend(other.mismatches)


MAX_WITNESSES = 10


def check_string(data: bytes, sigma: int, with_oracle: bool) -> SweepResult:
    """Bound checks (and optionally oracle comparison) for a single text."""
    from .enumeration import analyze

    text = make_text(data)
    a = analyze(text)
    rep = a.report
    label = data.decode("latin-1")
    res = SweepResult(text.n, sigma, 1, rep.ps_count, rep.is_count, [label], [label])
    for c in rep.failures():
        res.violations.append(f"{label!r}: {c.name} ({c.lhs} {c.relation} {c.rhs})")
    if with_oracle:
        res.mismatches.extend(compare_with_oracle(text, a))
    return res


def _sweep_chunk(args) -> SweepResult:
    n, sigma, strings, with_oracle = args
    acc = SweepResult(n, sigma)
    for data in strings:
        acc.merge(check_string(data, sigma, with_oracle), MAX_WITNESSES)
    return acc


def sweep(n_max: int, sigma: int, budget: int = 2_000_000, with_oracle: bool = False,
          jobs: int = 1, n_min: int = 1, chunk: int = 2000) -> List[SweepResult]:
    """Check every canonical string of length n_min..n_max over sigma symbols."""
    total = sum(count_canonical(n, sigma) for n in range(n_min, n_max + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} canonical strings exceed budget {budget}")
    results = []
    pool = None
    if jobs > 1:
        import multiprocessing
        pool = multiprocessing.Pool(jobs)
    try:
        for n in range(n_min, n_max + 1):
            def tasks():
                batch = []
                for s in canonical_strings(n, sigma):
                    batch.append(s)
                    if len(batch) == chunk:
                        yield (n, sigma, batch, with_oracle)
                        batch = []
                if batch:
                    yield (n, sigma, batch, with_oracle)
            acc = SweepResult(n, sigma)
            parts = pool.imap(_sweep_chunk, tasks()) if pool else map(_sweep_chunk, tasks())
            for part in parts:  # imap preserves order, so merging is deterministic
                acc.merge(part, MAX_WITNESSES)
            log.info("n=%d sigma=%d: %d strings, max|PS|=%d max|IS|=%d",
                     n, sigma, acc.strings, acc.max_ps, acc.max_is)
            results.append(acc)
    finally:
        if pool:
            pool.close()
            pool.join()
    return results


def alphabet(sigma: int) -> bytes:
    if not 1 <= sigma <= 256:
        raise ValueError(f"sigma must be in 1..256, got {sigma}")
    return bytes(range(ord("a"), ord("a") + sigma)) if sigma <= 26 else bytes(range(sigma))


def random_strings(count: int, max_len: int, sigma: int, seed: int) -> List[bytes]:
    """Deterministic random texts with lengths uniform in 1..max_len."""
    rng = random.Random(seed)
    symbols = alphabet(sigma)
    return [bytes(rng.choice(symbols) for _ in range(rng.randint(1, max_len)))
            for _ in range(count)]


def _random_chunk(args) -> SweepResult:
    strings, sigma, with_oracle = args
    acc = SweepResult(0, sigma)
    for data in strings:
        acc.merge(check_string(data, sigma, with_oracle), MAX_WITNESSES)
    return acc


def verify_random(count: int, max_len: int, sigma: int, seed: int, with_oracle: bool = True,
                  jobs: int = 1, chunk: int = 50) -> SweepResult:
    """Bound checks and oracle comparison over seeded random strings.

    ``n`` of the result is the longest text seen; maxima are over all lengths.
    """
    strings = random_strings(count, max_len, sigma, seed)
    tasks = [(strings[i:i + chunk], sigma, with_oracle) for i in range(0, len(strings), chunk)]
    acc = SweepResult(max(map(len, strings), default=0), sigma)
    if jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_random_chunk, tasks)
    else:
        parts = map(_random_chunk, tasks)
    for part in parts:
        acc.merge(part, MAX_WITNESSES)
    return acc
