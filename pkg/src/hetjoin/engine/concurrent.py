"""Driving a join from independent, concurrently running feeds.

Each feed runs in its own producer thread and hands its events to a single
consumer, which serializes them and steps the instance.  A feed never waits
on another feed: the default serializer releases notifications in arrival
order.  Tests can pin the serialization with :class:`ScriptedScheduler`.
"""

from __future__ import annotations

import queue
import threading
from collections import deque
from typing import Iterable, Iterator, List, Optional, Sequence

from hetjoin.errors import TraceOrderError

from .events import Event, Notification
from .instance import JoinInstance

__all__ = ["ScriptedScheduler", "run_concurrent"]

_DONE = object()


class ScriptedScheduler:
    """Release notifications following a fixed order of feed indices.

    Once the script is used up, remaining notifications go out in arrival
    order.  A script naming a feed that has finished is skipped past.
    """

    def __init__(self, order: Iterable[int]):
        self.order = deque(order)

    def choose(self, pending: dict, finished: set) -> Optional[int]:
        while self.order:
            k = self.order[0]
            if pending.get(k):
                self.order.popleft()
                return k
            if k in finished:
                self.order.popleft()
                continue
            return None
        return -1


def _as_event(item) -> Event:
    if isinstance(item, Event):
        return item
    value, t = item
    return Event.at(value, t)


def _produce(k: int, feed: Iterable, out: queue.Queue) -> None:
    try:
        last = None
        for item in feed:
            ev = _as_event(item)
            if last is not None and ev.time < last:
                raise TraceOrderError(f"feed {k} went back in time: {ev.time} after {last}")
            last = ev.time
            out.put((k, ev))
    except BaseException as exc:  # surfaced on the consumer side
        out.put((k, exc))
        return
    out.put((k, _DONE))


def run_concurrent(
    instance: JoinInstance,
    feeds: Sequence[Iterable],
    scheduler: Optional[ScriptedScheduler] = None,
) -> Iterator[Event]:
    """Yield output events as the serialized notifications are stepped.

    ``feeds[k]`` produces the events of source ``k`` as :class:`Event` values or
    ``(value, time)`` pairs.  The serialized order actually used is recorded
    in ``instance.history``, so a replay of that history reproduces the output.
    Any error (a wrongly typed payload, a feed failure) aborts the instance
    and is re-raised to the caller.
    """
    if len(feeds) != instance.arity:
        raise ValueError(f"{len(feeds)} feeds for a join of arity {instance.arity}")
    inbox: queue.Queue = queue.Queue()
    threads = [
        threading.Thread(target=_produce, args=(k, feed, inbox), daemon=True, name=f"feed-{k}")
        for k, feed in enumerate(feeds)
    ]
    for t in threads:
        t.start()

    pending = {k: deque() for k in range(len(feeds))}
    arrivals: deque = deque()
    finished: set = set()

    def release() -> List[Notification]:
        out = []
        while True:
            if scheduler is None:
                k = arrivals.popleft() if arrivals else None
            else:
                k = scheduler.choose(pending, finished)
                if k == -1:
                    k = arrivals[0] if arrivals else None
                if k is not None:
                    arrivals.remove(k)
            if k is None:
                return out
            out.append(Notification(k, pending[k].popleft()))

    while len(finished) < len(feeds) or arrivals:
        if len(finished) < len(feeds):
            k, item = inbox.get()
            if item is _DONE:
                finished.add(k)
            elif isinstance(item, BaseException):
                instance.abort(item)
                raise item
            else:
                pending[k].append(item)
                arrivals.append(k)
        ready = release()
        if not ready and len(finished) == len(feeds) and arrivals:
            # script waits on data that will never come; drain in arrival order
            scheduler = None
            ready = release()
        for n in ready:
            try:
                emitted = instance.step(n)
            except Exception as exc:
                instance.abort(exc)
                raise
            yield from emitted
