"""Running joins: the event-correlation interpreter of the extended signature.

A :class:`JoinInstance` is a deterministic state machine.  Each
:meth:`~JoinInstance.step` takes one notification through the interceptor
chain; the last link is the default callback, which

1. crosses the just-arrived event (as a singleton at its position) with the
   mailboxes of every other position, testing each tuple against the pattern,
2. appends the event to its own mailbox.

So every combination of events is tested exactly once, when its last
constituent arrives.
"""

from __future__ import annotations

import copy
from typing import Callable, List, NamedTuple, Optional, Sequence

from hetjoin.dsl import Bind, Context, ExtSym, PatVar, ValueExpr, check_body_arity
from hetjoin.errors import (
    InstanceAborted,
    PatternTypeError,
    TraceOrderError,
)
from hetjoin.time_meta import Interval, merge, merge_all, minutes, within

from .events import Event, Notification, Source
from .interceptors import Chain, Ops, as_chain, compose_chain
from .store import MailboxStore, crossproduct, snapshot_focused, snapshot_replacing

__all__ = [
    "Emit",
    "FAIL",
    "Pattern",
    "Matcher",
    "JoinInstance",
    "EventSym",
    "check_trace_order",
]


class Emit(NamedTuple):
    value: object
    meta: Interval


class _Fail:
    __slots__ = ()

    def __repr__(self):
        return "FAIL"

    def __bool__(self):
        return False


FAIL = _Fail()


class Pattern:
    """Pattern denotation: given the input intervals, produce ``Emit`` or ``FAIL``."""

    __slots__ = ("run",)

    def __init__(self, run: Callable[[Sequence[Interval]], object]):
        self.run = run

    def __call__(self, metas):
        return self.run(metas)


class Matcher:
    """The compiled body of a join, applied to one tuple of events at a time."""

    def __init__(self, body: Callable[..., Pattern], arity: int):
        check_body_arity(body, arity)
        self.body = body
        self.arity = arity

    def __call__(self, events: Sequence[Event]):
        return self.match_tuple(events)

    def match_tuple(self, events: Sequence[Event]):
        if len(events) != self.arity:
            raise PatternTypeError(f"matcher of arity {self.arity} got {len(events)} events")
        pat = self.body(*(PatVar(e.value, e.meta) for e in events))
        if not isinstance(pat, Pattern):
            raise PatternTypeError(
                f"join body must return a pattern (where/yield), got {type(pat).__name__}"
            )
        return pat([e.meta for e in events])


def check_trace_order(trace: Sequence[Notification]) -> None:
    for k in range(1, len(trace)):
        if trace[k].key < trace[k - 1].key:
            raise TraceOrderError(
                f"notification {k} at {trace[k].key} precedes its predecessor at {trace[k - 1].key}"
            )


class JoinInstance:
    """A running n-way join over typed sources."""

    def __init__(
        self,
        sources: Sequence[Source],
        matcher: Matcher,
        chain: Optional[Chain] = None,
        sink: Optional[Callable[[Event], None]] = None,
    ):
        sources = tuple(sources)
        if not sources:
            raise PatternTypeError("a join needs at least one source")
        if matcher.arity != len(sources):
            raise PatternTypeError(f"matcher arity {matcher.arity} != {len(sources)} sources")
        chain = as_chain(chain)
        chain.validate(len(sources))
        self.sources = sources
        self.matcher = matcher
        self.chain = chain
        self._interceptors = [copy.deepcopy(it) for it in chain]
        self.store = MailboxStore([s.dtype for s in sources])
        self.output: List[Event] = []
        self.history: List[Notification] = []
        self._subscribers = [] if sink is None else [sink]
        self._pending: List[Event] = []
        self._aborted: Optional[BaseException] = None

    @property
    def arity(self) -> int:
        return len(self.sources)

    def subscribe(self, callback: Callable[[Event], None]) -> None:
        self._subscribers.append(callback)

    def fresh(self) -> "JoinInstance":
        """A new instance built from the same pattern and chain, with empty state."""
        return JoinInstance(self.sources, self.matcher, self.chain)

    # -- transitions --------------------------------------------------------

    def step(self, notification: Notification) -> List[Event]:
        """Process one notification; return the events it produced, in order."""
        if self._aborted is not None:
            raise InstanceAborted("join instance was aborted") from self._aborted
        if not isinstance(notification, Notification):
            raise TypeError(f"expected a Notification, got {type(notification).__name__}")
        self.store.check_event(notification.source, notification.event)
        self._pending = []
        try:
            self._dispatch(0, notification.source, notification.event)
        except Exception as exc:
            self._aborted = exc
            raise
        self.history.append(notification)
        emitted, self._pending = self._pending, []
        return emitted

    def push(self, source: int, value, t) -> List[Event]:
        return self.step(Notification(source, Event.at(value, t)))

    def run_replay(self, trace: Sequence[Notification]) -> List[Event]:
        """Replay a trace ordered by (time, source); returns the concatenated outputs."""
        trace = list(trace)
        check_trace_order(trace)
        out: List[Event] = []
        for n in trace:
            out.extend(self.step(n))
        return out

    def abort(self, exc: BaseException) -> None:
        self._aborted = exc

    @property
    def aborted(self) -> bool:
        return self._aborted is not None

    # -- internals ----------------------------------------------------------

    def _dispatch(self, depth: int, position: int, event: Event) -> None:
        self.store.check_event(position, event)
        if depth < len(self._interceptors):
            it = self._interceptors[depth]
            it.on_push(position, event, Ops(self, depth, it))
        else:
            self.default_on_push(position, event)

    def default_on_push(self, i: int, x: Event) -> None:
        crossproduct(snapshot_focused(self.store, i, x), self._consume)
        self.store.append(i, x)

    def _match_focused(self, focus: dict) -> None:
        crossproduct(snapshot_replacing(self.store, focus), self._consume)

    def _consume(self, events: tuple) -> None:
        result = self.matcher.match_tuple(events)
        if result is FAIL:
            return
        if not isinstance(result, Emit):
            raise PatternTypeError(f"pattern produced {result!r}, expected Emit or FAIL")
        self._emit(Event(result.value, result.meta))

    def _emit(self, ev: Event) -> None:
        self._pending.append(ev)
        self.output.append(ev)
        for cb in self._subscribers:
            cb(ev)


class EventSym(ValueExpr, ExtSym):
    """Extended signature realized by :class:`JoinInstance`.

    Sources are :class:`~hetjoin.engine.events.Source` descriptors, ``join``
    returns a fresh instance, extensions are interceptor chains.
    """

    def from_(self, source) -> Bind:
        if not isinstance(source, Source):
            raise PatternTypeError(f"from_ expects a Source, got {type(source).__name__}")
        return Bind(source, source.dtype)

    def yield_(self, e) -> Pattern:
        return Pattern(lambda metas: Emit(e, merge_all(metas)))

    def where(self, cond, body) -> Pattern:
        if not isinstance(body, Pattern):
            raise PatternTypeError(f"where expects a pattern body, got {type(body).__name__}")
        if not isinstance(cond, bool):
            raise PatternTypeError(f"where condition must be a bool, got {cond!r}")
        return body if cond else Pattern(lambda metas: FAIL)

    def enil(self) -> Chain:
        return Chain()

    def ext_merge(self, x, y) -> Chain:
        return compose_chain(x, y)

    def mmerge(self, m, n) -> Interval:
        return merge(m, n)

    def minutes(self, x) -> float:
        return minutes(x)

    def within(self, m1, m2, bound) -> bool:
        return within(m1, m2, bound)

    def join(self, ctx: Context, ext, body) -> JoinInstance:
        if not isinstance(ctx, Context):
            raise PatternTypeError(f"join expects a context, got {type(ctx).__name__}")
        sources = [b.source for b in ctx]
        return JoinInstance(sources, Matcher(body, len(sources)), as_chain(ext))
