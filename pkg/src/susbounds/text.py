"""Text values and 1-based inclusive intervals."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union


class SusError(Exception):
    """Base class for errors raised by this package."""


class EmptyText(SusError, ValueError):
    pass


class OutOfBounds(SusError, IndexError):
    pass


class PositionOutOfRange(OutOfBounds):
    pass


class IntervalOutOfRange(OutOfBounds):
    pass


class Interval(NamedTuple):
    """Closed interval ``[begin, end]`` of 1-based text positions."""
    begin: int
    end: int

    def __len__(self) -> int:
        return self.end - self.begin + 1

    @property
    def length(self) -> int:
        return self.end - self.begin + 1

    def __str__(self) -> str:
        return f"[{self.begin},{self.end}]"


@dataclass(frozen=True)
class Text:
    data: bytes

    def __post_init__(self):
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))
        if len(self.data) == 0:
            raise EmptyText("text must contain at least one symbol")

    @property
    def n(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, iv: Interval) -> bytes:
        return substring(self, iv)


def make_text(symbols: Union[bytes, bytearray, str]) -> Text:
    """Build a Text; ``str`` input is UTF-8 encoded, so positions are byte positions."""
    if isinstance(symbols, str):
        symbols = symbols.encode("utf-8")
    return Text(bytes(symbols))


def read_text_file(path) -> Text:
    with open(path, "rb") as fh:
        data = fh.read()
    if data.endswith(b"\n"):
        data = data[:-1]
    return make_text(data)


def check_interval(iv: Interval, n: int, exc=OutOfBounds) -> Interval:
    b, e = iv
    if not (1 <= b <= e <= n):
        raise exc(f"interval [{b},{e}] not within [1,{n}]")
    return Interval(b, e)


def substring(text: Text, iv: Interval) -> bytes:
    b, e = check_interval(iv, text.n)
    return text.data[b - 1:e]


def contains(outer: Interval, inner: Interval) -> bool:
    """True iff ``inner`` lies within ``outer`` (equality included)."""
    return outer[0] <= inner[0] and inner[1] <= outer[1]

