from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from hetjoin.hetseq import conforms
from hetjoin.time_meta import Interval, at

__all__ = ["Event", "Notification", "Source", "notify"]


@dataclass(frozen=True)
class Event:
    value: Any
    meta: Interval

    @classmethod
    def at(cls, value, t) -> "Event":
        return cls(value, at(t))

    @property
    def time(self) -> float:
        return self.meta.lo


@dataclass(frozen=True)
class Notification:
    """Event arriving at join position ``source`` (0-based)."""

    source: int
    event: Event

    @property
    def key(self):
        return (self.event.time, self.source)


def notify(source: int, value, t) -> Notification:
    return Notification(source, Event.at(value, t))


@dataclass(frozen=True)
class Source:
    """An event source: a name and the type of the values it carries."""

    name: str
    dtype: type = object

    def accepts(self, value) -> bool:
        return conforms(value, self.dtype)

    def __repr__(self):
        return self.name
