"""Restriction handlers as an interceptor chain.

Every push travels down the chain before reaching the default callback of the
join.  An interceptor sees the push through :class:`Ops`, which lets it read or
replace the mailboxes of the positions it was registered for, forward the push
(possibly altered) to the rest of the chain, or drop it by not forwarding.

Interceptors are templates: a join instance deep-copies every interceptor of
its chain, so stateful ones such as :class:`Aligning` never share queues
between instances.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Tuple, Union

from hetjoin.errors import ContractViolation, IllFormedIndex
from hetjoin.hetseq import Index, IndexSet, check_index

from .events import Event

__all__ = [
    "Ops",
    "Interceptor",
    "MostRecently",
    "Aligning",
    "Chain",
    "as_chain",
    "compose_chain",
    "most_recently",
    "aligning",
]


class Ops:
    """Capabilities handed to one interceptor for one push."""

    def __init__(self, instance, depth: int, interceptor: "Interceptor"):
        self._instance = instance
        self._depth = depth
        self._allowed = interceptor.owned

    def _guard(self, position) -> int:
        i = position.depth if isinstance(position, Index) else position
        if i not in self._allowed:
            raise ContractViolation(
                f"interceptor registered for {sorted(self._allowed)} touched position {i}"
            )
        return i

    def read_mailbox(self, position) -> tuple:
        return self._instance.store.read(self._guard(position))

    def replace_mailbox(self, position, contents: Iterable[Event]) -> None:
        self._instance.store.replace(self._guard(position), contents)

    def forward(self, position: int, event: Event) -> None:
        self._instance._dispatch(self._depth + 1, position, event)

    def match_round(self, focus: dict) -> None:
        """Cross the given events (as singletons at their positions) with the other mailboxes."""
        self._instance._match_focused(focus)


class Interceptor:
    """Base interceptor; forwards every push unchanged."""

    def __init__(self, positions: Tuple[Index, ...] = ()):
        self.positions = tuple(positions)

    @property
    def owned(self) -> frozenset:
        return frozenset(p.depth for p in self.positions)

    def validate(self, arity: int) -> None:
        for p in self.positions:
            check_index(p, arity)

    def on_push(self, position: int, event: Event, ops: Ops) -> None:
        ops.forward(position, event)

    def __repr__(self):
        args = ", ".join(f"p{p.depth}" for p in self.positions)
        return f"{type(self).__name__}({args})"


class MostRecently(Interceptor):
    """Keep only the latest event of one position."""

    def __init__(self, p: Index):
        super().__init__((p,))
        self.position = p.depth

    def on_push(self, position, event, ops):
        if position == self.position:
            # the default callback crosses with the focused event and then stores it,
            # so clearing here leaves exactly the latest event buffered
            ops.replace_mailbox(position, ())
        ops.forward(position, event)


class Aligning(Interceptor):
    """Consume the aligned positions in lockstep (zip).

    Pushes at aligned positions are queued and not forwarded.  Whenever every
    aligned queue has an event, one head per queue is taken and matched
    against the current mailboxes of the remaining positions.  Taken events
    are gone whether or not the pattern accepts the round.
    """

    def __init__(self, ps: IndexSet):
        positions = tuple(ps)
        if len(positions) < 2:
            raise ValueError("aligning needs at least two positions")
        depths = [p.depth for p in positions]
        if len(set(depths)) != len(depths):
            raise IllFormedIndex(f"aligning positions must be distinct, got {depths}")
        super().__init__(positions)
        self.queues = {d: deque() for d in depths}

    def on_push(self, position, event, ops):
        if position not in self.queues:
            ops.forward(position, event)
            return
        self.queues[position].append(event)
        while all(self.queues.values()):
            ops.match_round({d: q.popleft() for d, q in self.queues.items()})

    def __repr__(self):
        return "Aligning({" + ", ".join(f"p{p.depth}" for p in self.positions) + "})"


class Chain:
    """Ordered interceptors; the first one sees each push first."""

    __slots__ = ("items",)

    def __init__(self, *items: Interceptor):
        for it in items:
            if not isinstance(it, Interceptor):
                raise TypeError(f"not an interceptor: {it!r}")
        self.items = tuple(items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def __eq__(self, other):
        return isinstance(other, Chain) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __repr__(self):
        return "Chain(" + ", ".join(map(repr, self.items)) + ")"

    def validate(self, arity: int) -> None:
        for it in self.items:
            it.validate(arity)


def as_chain(x: Union[Chain, Interceptor, None]) -> Chain:
    if x is None:
        return Chain()
    if isinstance(x, Interceptor):
        return Chain(x)
    if isinstance(x, Chain):
        return x
    raise TypeError(f"expected an interceptor or chain, got {type(x).__name__}")


def compose_chain(x, y) -> Chain:
    """``x |++| y``: ``y`` is innermost, so it intercepts first."""
    return Chain(*as_chain(y), *as_chain(x))


def most_recently(p: Index) -> MostRecently:
    if not isinstance(p, Index):
        raise TypeError(f"most_recently expects an Index, got {type(p).__name__}")
    return MostRecently(p)


def aligning(ps: IndexSet) -> Aligning:
    if not isinstance(ps, IndexSet):
        raise TypeError(f"aligning expects an IndexSet, got {type(ps).__name__}")
    return Aligning(ps)
