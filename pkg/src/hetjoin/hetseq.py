"""Heterogeneous sequences with typed indices.

An :class:`HSeq` is an inductive list (``Nil`` / ``Cons``) where every position
remembers the base type of the element stored there.  The ordered tuple of
those types is the sequence's *shape*.  Positions are addressed with
inductive indices (``Here`` / ``There``) and sets of indices (``Empty`` /
``Add``); both are checked against the target sequence before anything is
projected, so an out-of-range access never reaches the element walk.

Python cannot carry per-position types statically, so each element is boxed
with a runtime tag and :func:`proj` performs a checked downcast.  A tag
mismatch means a sequence was assembled inconsistently and raises
:class:`~hetjoin.errors.TagMismatch`.

A :class:`WrapperFamily` describes how the stored value relates to the base
type at each position: ``PLAIN`` stores the value itself, ``COLLECTION``
stores a list of values, ``MAILBOX`` a FIFO buffer.  :func:`map_family` moves
a sequence from one family to another without touching its shape.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional

from hetjoin.errors import IllFormedIndex, TagMismatch

__all__ = [
    "conforms",
    "WrapperFamily",
    "PLAIN",
    "COLLECTION",
    "MAILBOX",
    "OPAQUE",
    "HSeq",
    "Nil",
    "Cons",
    "hnil",
    "hcons",
    "hseq",
    "safe_head",
    "Index",
    "Here",
    "There",
    "index",
    "p0",
    "p1",
    "p2",
    "p3",
    "IndexSet",
    "Empty",
    "Add",
    "index_set",
    "check_index",
    "check_index_set",
    "proj",
    "mproj",
    "map_family",
]


def conforms(value, tag) -> bool:
    """Runtime type test used for boxed elements."""
    # bool is an int subclass; keep the two apart so a flag never passes as a number
    if tag in (int, float) and isinstance(value, bool):
        return False
    if tag is float:
        return isinstance(value, (int, float))
    return isinstance(value, tag)


@dataclass(frozen=True)
class WrapperFamily:
    """A type constructor applied uniformly to every position of a sequence.

    ``accepts(value, tag)`` decides whether ``value`` is a valid element of
    the family at a position whose base type is ``tag``.
    """

    name: str
    accepts: Callable[[Any, type], bool] = field(compare=False, repr=False)


PLAIN = WrapperFamily("plain", conforms)
COLLECTION = WrapperFamily(
    "collection",
    lambda v, t: isinstance(v, list) and all(conforms(x, t) for x in v),
)
MAILBOX = WrapperFamily(
    "mailbox",
    lambda v, t: isinstance(v, (deque, tuple)) and all(conforms(x, t) for x in v),
)
# escape hatch for families whose elements cannot be inspected (e.g. callables)
OPAQUE = WrapperFamily("opaque", lambda v, t: True)


class HSeq:
    """Base class of the two sequence constructors."""

    __slots__ = ()

    family: WrapperFamily

    def __iter__(self) -> Iterator[Any]:
        node = self
        while isinstance(node, Cons):
            yield node.head
            node = node.tail

    def __len__(self) -> int:
        n = 0
        node = self
        while isinstance(node, Cons):
            n += 1
            node = node.tail
        return n

    @property
    def shape(self) -> tuple:
        """Ordered base types of the positions."""
        tags = []
        node = self
        while isinstance(node, Cons):
            tags.append(node.tag)
            node = node.tail
        return tuple(tags)

    def to_pairs(self):
        """Right-nested pair encoding, e.g. ``(1, ("two", (3.0, ())))``."""
        out = ()
        for value in reversed(list(self)):
            out = (value, out)
        return out

    def __repr__(self) -> str:
        body = ", ".join(repr(v) for v in self)
        return f"hseq({body})" if self.family is PLAIN else f"hseq[{self.family.name}]({body})"


@dataclass(frozen=True, repr=False)
class Nil(HSeq):
    family: WrapperFamily = PLAIN


@dataclass(frozen=True, repr=False)
class Cons(HSeq):
    head: Any
    tail: HSeq
    tag: type
    family: WrapperFamily = PLAIN

    def __post_init__(self):
        if self.tail.family != self.family:
            raise TagMismatch(
                f"cannot cons a {self.family.name} element onto a {self.tail.family.name} sequence"
            )
        if not self.family.accepts(self.head, self.tag):
            raise TagMismatch(
                f"{self.head!r} is not a valid {self.family.name} element of type {self.tag.__name__}"
            )


def hnil(family: WrapperFamily = PLAIN) -> Nil:
    return Nil(family)


def hcons(head, tail: HSeq, tag: Optional[type] = None) -> Cons:
    """Prepend ``head``; its tag defaults to ``type(head)`` for plain sequences."""
    if tag is None:
        if tail.family is not PLAIN:
            raise TagMismatch("a tag is required when consing onto a non-plain sequence")
        tag = type(head)
    return Cons(head, tail, tag, tail.family)


def hseq(*values, tags: Optional[Iterable[type]] = None, family: WrapperFamily = PLAIN) -> HSeq:
    """Build a sequence from positional values (first value at position 0)."""
    values = list(values)
    tags = [None] * len(values) if tags is None else list(tags)
    if len(tags) != len(values):
        raise ValueError(f"{len(values)} values but {len(tags)} tags")
    out: HSeq = hnil(family)
    for value, tag in zip(reversed(values), reversed(tags)):
        out = hcons(value, out, tag)
    return out


def safe_head(s: HSeq):
    if not isinstance(s, Cons):
        raise IllFormedIndex("safe_head of an empty sequence")
    return s.head


# -- indices -----------------------------------------------------------------


class Index:
    """Inductive position: ``Here`` is position 0, ``There(i)`` is one past ``i``."""

    __slots__ = ()

    @property
    def depth(self) -> int:
        d = 0
        node = self
        while isinstance(node, There):
            d += 1
            node = node.inner
        return d


@dataclass(frozen=True)
class Here(Index):
    def __repr__(self):
        return "Here"


@dataclass(frozen=True)
class There(Index):
    inner: Index

    def __repr__(self):
        return f"There({self.inner!r})"


def index(k: int) -> Index:
    """The index of depth ``k``."""
    if k < 0:
        raise IllFormedIndex(f"negative position {k}")
    out: Index = Here()
    for _ in range(k):
        out = There(out)
    return out


p0, p1, p2, p3 = (index(k) for k in range(4))


class IndexSet:
    """Ordered collection of indices, built like a list (``Empty`` / ``Add``)."""

    __slots__ = ()

    def __iter__(self) -> Iterator[Index]:
        node = self
        while isinstance(node, Add):
            yield node.first
            node = node.rest

    @property
    def size(self) -> int:
        return sum(1 for _ in self)

    def __len__(self) -> int:
        return self.size

    @property
    def depths(self) -> tuple:
        return tuple(i.depth for i in self)


@dataclass(frozen=True)
class Empty(IndexSet):
    def __repr__(self):
        return "Empty"


@dataclass(frozen=True)
class Add(IndexSet):
    first: Index
    rest: IndexSet

    def __repr__(self):
        return f"Add({self.first!r}, {self.rest!r})"


def index_set(*indices) -> IndexSet:
    """Build an index set from ``Index`` values or plain ints, preserving order."""
    out: IndexSet = Empty()
    for i in reversed(indices):
        out = Add(index(i) if isinstance(i, int) else i, out)
    return out


def check_index(i: Index, length: int) -> None:
    if not isinstance(i, Index):
        raise TypeError(f"expected an Index, got {type(i).__name__}")
    if i.depth >= length:
        raise IllFormedIndex(f"index of depth {i.depth} is ill-formed for a shape of length {length}")


def check_index_set(ps: IndexSet, length: int) -> None:
    if not isinstance(ps, IndexSet):
        raise TypeError(f"expected an IndexSet, got {type(ps).__name__}")
    for i in ps:
        check_index(i, length)


def proj(i: Index, s: HSeq):
    """Element at position ``i.depth`` of ``s``; ``i`` is validated first."""
    check_index(i, len(s))
    node = s
    cur = i
    while isinstance(cur, There):
        node = node.tail
        cur = cur.inner
    if not node.family.accepts(node.head, node.tag):
        raise TagMismatch(f"position {i.depth} holds {node.head!r}, expected {node.tag.__name__}")
    return node.head


def mproj(ps: IndexSet, s: HSeq) -> HSeq:
    """Sequence of the elements at ``ps``, in the order of ``ps``."""
    check_index_set(ps, len(s))
    tags = s.shape
    picked = [(proj(i, s), tags[i.depth]) for i in ps]
    return hseq(*(v for v, _ in picked), tags=[t for _, t in picked], family=s.family)


def map_family(f: Callable[[Any], Any], s: HSeq, family: WrapperFamily = PLAIN) -> HSeq:
    """Apply ``f`` at every position, moving ``s`` into ``family``.

    The result has the same length and the same per-position base types.
    """
    return hseq(*(f(v) for v in s), tags=s.shape, family=family)
