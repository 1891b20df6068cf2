"""Interval metadata for events.

Time points are floats measured in minutes, with IEEE infinities as the top
and bottom elements.  An event that happens at ``t`` carries ``[t, t]``;
joined events carry the smallest interval containing all constituents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

from hetjoin.render import format_number

__all__ = [
    "INFTY",
    "NINFTY",
    "Interval",
    "at",
    "minutes",
    "merge",
    "merge_all",
    "span",
    "within",
    "time_to_json",
    "time_from_json",
]

INFTY = math.inf
NINFTY = -math.inf

Number = Union[int, float]


def _time(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise TypeError(f"time points are numbers, got {x!r}")
    t = float(x)
    if math.isnan(t):
        raise ValueError("NaN is not a time point")
    return t


@dataclass(frozen=True, order=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", _time(self.lo))
        object.__setattr__(self, "hi", _time(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval [{self.lo}, {self.hi}] has lo > hi")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def to_json(self) -> list:
        return [time_to_json(self.lo), time_to_json(self.hi)]

    @classmethod
    def from_json(cls, data) -> "Interval":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"an interval is a 2-array, got {data!r}")
        return cls(time_from_json(data[0]), time_from_json(data[1]))

    def __repr__(self) -> str:
        return f"[{format_number(self.lo)},{format_number(self.hi)}]"


def at(t: Number) -> Interval:
    """Singleton interval of an event occurring at ``t``."""
    return Interval(t, t)


def minutes(x: Number) -> float:
    return _time(x)


def merge(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def merge_all(ms: Iterable[Interval]) -> Interval:
    ms = list(ms)
    if not ms:
        raise ValueError("merge_all needs at least one interval")
    return reduce(merge, ms)


def span(a: Interval) -> float:
    # inf - inf only arises for [inf, inf] / [-inf, -inf], both of zero width
    if a.lo == a.hi:
        return 0.0
    return a.hi - a.lo


def within(a: Interval, b: Interval, bound: Number) -> bool:
    """True when both intervals fit inside a window of length ``bound``."""
    return span(merge(a, b)) <= bound


def time_to_json(t: float):
    if math.isinf(t):
        return "inf" if t > 0 else "-inf"
    return int(t) if t.is_integer() and abs(t) < 2**53 else t


def time_from_json(x) -> float:
    if x == "inf":
        return INFTY
    if x == "-inf":
        return NINFTY
    return _time(x)
