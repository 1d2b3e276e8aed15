"""String families that attain the extremal SUS counts."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .enumeration import enumerate_interval_sus, enumerate_point_sus
from .mus import compute_mus
from .suffix_index import build_index
from .text import SusError, Text, make_text

SEPARATOR = ord("x")
# 'a', 'b', ... upward through 0xff, then the low bytes; 'x' is reserved
SYMBOLS = bytes(c for c in [*range(ord("a"), 256), *range(ord("a"))] if c != SEPARATOR)
FILLER, C1, C2, C3 = b"a", b"b", b"c", b"d"


class ParamOutOfRange(SusError, ValueError):
    pass


class AlphabetTooSmall(ParamOutOfRange):
    pass


@dataclass
class ExtremalSpec:
    family: str
    params: dict
    text: Text
    predicted_count: int
    predicted_mus_count: Optional[int] = None
    extra: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.text.n


def gen_point_tight(k: int) -> ExtremalSpec:
    """a_1 x a_2 x ... x a_k: odd length n = 2k - 1 with (3n - 1)/2 point SUSs."""
    if k < 3:
        raise ParamOutOfRange(f"k must be >= 3, got {k}")
    if k > len(SYMBOLS):
        raise AlphabetTooSmall(f"k={k} needs {k} distinct symbols besides the separator")
    data = bytes([SEPARATOR]).join(SYMBOLS[i:i + 1] for i in range(k))
    n = len(data)
    return ExtremalSpec("point-tight", {"k": k}, make_text(data), (3 * n - 1) // 2)


def gen_sigma_family(n: int, sigma: int) -> ExtremalSpec:
    """a_1 x a_2 x ... a_{sigma-1} x^(n - 2 sigma + 3): n + sigma - 2 point SUSs."""
    if n < 2 or sigma < 2 or 2 * sigma > n + 3:
        raise ParamOutOfRange(f"need n >= 2 and 2 <= sigma <= (n+3)/2, got n={n}, sigma={sigma}")
    if sigma - 1 > len(SYMBOLS):
        raise AlphabetTooSmall(f"sigma={sigma} exceeds the byte alphabet")
    head = bytes([SEPARATOR]).join(SYMBOLS[i:i + 1] for i in range(sigma - 1))
    data = head + bytes([SEPARATOR]) * (n - 2 * sigma + 3)
    return ExtremalSpec("sigma-family", {"n": n, "sigma": sigma}, make_text(data), n + sigma - 2)


def parse_eps(eps: Union[str, int, Fraction]) -> Fraction:
    try:
        value = Fraction(eps)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParamOutOfRange(f"bad epsilon {eps!r}") from exc
    if value <= 0:
        raise ParamOutOfRange(f"epsilon must be positive, got {value}")
    return value


def gen_interval_family(eps: Union[str, int, Fraction]) -> ExtremalSpec:
    """c1 a^x c2 a^x c3 with x = ceil(3 / (2 eps)): 4x + 3 non-trivial interval SUSs."""
    eps = parse_eps(eps)
    x = math.ceil(Fraction(3) / (2 * eps))
    data = C1 + FILLER * x + C2 + FILLER * x + C3
    n = len(data)
    predicted = 4 * x + 3
    gap = (2 * n - 3) - (2 - eps) * n
    extra = {
        "x": x,
        "eps": eps,
        "lower_target": (2 - eps) * n,
        "gap": gap,
        "gap_limit": 5 * eps,
        "gap_within_limit": gap <= 5 * eps,
    }
    return ExtremalSpec("interval-family", {"eps": str(eps)}, make_text(data), predicted, 3, extra)


def measure(spec: ExtremalSpec) -> dict:
    """Enumerate the generated text and compare against the predictions."""
    muslist = compute_mus(build_index(spec.text))
    if spec.family == "interval-family":
        measured = len(enumerate_interval_sus(muslist))
    else:
        measured = len(enumerate_point_sus(muslist).ps)
    out = {
        "predicted": spec.predicted_count,
        "measured": measured,
        "mus_count": muslist.m,
        "match": measured == spec.predicted_count,
    }
    if spec.predicted_mus_count is not None:
        out["predicted_mus_count"] = spec.predicted_mus_count
        out["match"] = out["match"] and muslist.m == spec.predicted_mus_count
    return out
