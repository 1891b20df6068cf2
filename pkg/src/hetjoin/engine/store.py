"""Per-position mailboxes and the focused cross-product."""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Iterable, Sequence

from hetjoin.errors import PayloadTypeError, UnknownSource
from hetjoin.hetseq import HSeq, WrapperFamily, conforms, hseq

from .events import Event

__all__ = ["EVENT_MAILBOX", "MailboxStore", "snapshot", "snapshot_focused", "crossproduct"]

EVENT_MAILBOX = WrapperFamily(
    "mailbox",
    lambda v, t: isinstance(v, tuple)
    and all(isinstance(e, Event) and conforms(e.value, t) for e in v),
)


class MailboxStore:
    """One FIFO buffer of events per join position; arity is fixed."""

    def __init__(self, dtypes: Sequence[type]):
        if len(dtypes) < 1:
            raise ValueError("a mailbox store needs at least one position")
        self.dtypes = tuple(dtypes)
        self._boxes = [deque() for _ in self.dtypes]

    @property
    def arity(self) -> int:
        return len(self.dtypes)

    def check_position(self, i: int) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < self.arity:
            raise UnknownSource(f"position {i!r} is outside a join of arity {self.arity}")

    def check_event(self, i: int, x: Event) -> None:
        self.check_position(i)
        if not isinstance(x, Event):
            raise PayloadTypeError(f"expected an Event, got {type(x).__name__}")
        if not conforms(x.value, self.dtypes[i]):
            raise PayloadTypeError(
                f"position {i} carries {self.dtypes[i].__name__} values, got {x.value!r}"
            )

    def read(self, i: int) -> tuple:
        self.check_position(i)
        return tuple(self._boxes[i])

    def replace(self, i: int, contents: Iterable[Event]) -> None:
        self.check_position(i)
        contents = list(contents)
        for x in contents:
            self.check_event(i, x)
        self._boxes[i] = deque(contents)

    def append(self, i: int, x: Event) -> None:
        self.check_event(i, x)
        self._boxes[i].append(x)

    def sizes(self) -> tuple:
        return tuple(len(b) for b in self._boxes)


def snapshot(store: MailboxStore) -> HSeq:
    """Copies of every mailbox, in position order; the store is untouched."""
    return hseq(*(tuple(b) for b in store._boxes), tags=store.dtypes, family=EVENT_MAILBOX)


def snapshot_focused(store: MailboxStore, i: int, x: Event) -> HSeq:
    """Snapshot with position ``i`` replaced by the singleton ``(x,)``."""
    return snapshot_replacing(store, {i: x})


def snapshot_replacing(store: MailboxStore, focus: dict) -> HSeq:
    for i, x in focus.items():
        store.check_event(i, x)
    boxes = [(focus[i],) if i in focus else tuple(b) for i, b in enumerate(store._boxes)]
    return hseq(*boxes, tags=store.dtypes, family=EVENT_MAILBOX)


def crossproduct(mailboxes: HSeq, consumer: Callable[[tuple], None]) -> None:
    """Feed every one-event-per-mailbox tuple to ``consumer``.

    Position 0 varies slowest; each mailbox is walked in FIFO order.
    """
    for combo in itertools.product(*mailboxes):
        consumer(combo)
