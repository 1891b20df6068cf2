"""Tagless-final signatures for join patterns.

A pattern *term* is an ordinary Python function that takes an algebra instance
and builds a value with it::

    def fire_alarm(S, temp, smoke):
        ctx = S.ccons(S.from_(temp), S.ccons(S.from_(smoke), S.cnil()))
        return S.join(ctx, S.enil(), lambda t, s: S.where(..., S.yield_(...)))

The same term therefore runs under every interpreter implementing the
signature it uses.  Two tiers exist:

* :class:`CoreSym` -- contexts, ``where``/``yield`` and ``join(ctx, body)``.
  Pattern variables are the bare element values.
* :class:`ExtSym` -- adds interval metadata and contextual extensions;
  ``join(ctx, ext, body)`` hands the body one :class:`PatVar` ``(value, meta)``
  per binding.

The body of a join takes one positional parameter per binding, leftmost
binding first.  Its arity is compared against the context when the join is
built; a mismatch raises :class:`~hetjoin.errors.PatternTypeError` before any
data is touched.

:class:`ArithSym` is the small arithmetic signature used to exercise the
machinery (see :mod:`hetjoin.interp_list` for ``Num`` and ``PP``).
"""

from __future__ import annotations

import abc
import inspect
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple, Optional

from hetjoin.errors import PatternTypeError
from hetjoin.hetseq import OPAQUE, HSeq, hcons, hnil
from hetjoin.render import format_number
from hetjoin.time_meta import Interval

__all__ = [
    "ArithSym",
    "NumBoolSym",
    "ExprSym",
    "ContextSym",
    "CoreSym",
    "ExtSym",
    "Bind",
    "Context",
    "PatVar",
    "ValueExpr",
    "render_fmt1",
    "check_body_arity",
]


class ArithSym(abc.ABC):
    @abc.abstractmethod
    def lit(self, n: int):
        ...

    @abc.abstractmethod
    def add(self, a, b):
        ...


class NumBoolSym(ArithSym):
    @abc.abstractmethod
    def b_lit(self, b: bool):
        ...

    @abc.abstractmethod
    def conj(self, a, b):
        ...


class ExprSym(abc.ABC):
    """Expression forms needed by the built-in patterns."""

    @abc.abstractmethod
    def lit_float(self, x: float):
        ...

    @abc.abstractmethod
    def lit_bool(self, b: bool):
        ...

    @abc.abstractmethod
    def lit_string(self, s: str):
        ...

    @abc.abstractmethod
    def pair(self, a, b):
        ...

    @abc.abstractmethod
    def ge(self, a, b):
        """Float comparison ``a >= b``."""

    @abc.abstractmethod
    def and_(self, a, b):
        ...

    @abc.abstractmethod
    def fmt1(self, template: str, x):
        """Render ``x`` into the single ``%f`` (or ``%d``/``%s``) hole of ``template``."""


@dataclass(frozen=True)
class Bind:
    """A binding: one input source and the element type it contributes to the shape."""

    source: Any
    elem_type: type = object


class Context:
    """A context of bindings; the leftmost binding is position 0.

    Context formation and shape translation are one structure: ``shape`` gives
    the source element types, and the interpreter decides what each pattern
    variable looks like.
    """

    __slots__ = ("bindings",)

    def __init__(self, bindings: HSeq):
        self.bindings = bindings

    @property
    def arity(self) -> int:
        return len(self.bindings)

    @property
    def shape(self) -> tuple:
        return tuple(b.elem_type for b in self.bindings)

    def __iter__(self):
        return iter(self.bindings)

    def __repr__(self):
        inner = " @. ".join(f"(from {b.source!r})" for b in self.bindings)
        return f"{inner} @. cnil" if inner else "cnil"


class ContextSym(abc.ABC):
    """Context formation plus the two pattern forms; shared by both tiers."""

    @abc.abstractmethod
    def from_(self, source) -> Bind:
        ...

    def cnil(self) -> Context:
        return Context(hnil(OPAQUE))

    def ccons(self, v: Bind, ctx: Context) -> Context:
        if not isinstance(v, Bind):
            raise PatternTypeError(f"ccons expects a binding made by from_, got {type(v).__name__}")
        if not isinstance(ctx, Context):
            raise PatternTypeError(f"ccons expects a context, got {type(ctx).__name__}")
        return Context(hcons(v, ctx.bindings, Bind))

    def context(self, *sources) -> Context:
        """Shorthand for ``ccons(from_(s0), ccons(from_(s1), ... cnil()))``."""
        ctx = self.cnil()
        for s in reversed(sources):
            ctx = self.ccons(self.from_(s), ctx)
        return ctx

    @abc.abstractmethod
    def yield_(self, e):
        ...

    @abc.abstractmethod
    def where(self, cond, body):
        ...


class CoreSym(ExprSym, ContextSym):
    @abc.abstractmethod
    def join(self, ctx: Context, body: Callable):
        ...


class PatVar(NamedTuple):
    """Pattern variable of the extended tier: an element value and its interval."""

    value: Any
    meta: Interval


class ExtSym(ExprSym, ContextSym):
    @abc.abstractmethod
    def enil(self):
        ...

    @abc.abstractmethod
    def ext_merge(self, x, y):
        ...

    @abc.abstractmethod
    def mmerge(self, m, n):
        ...

    @abc.abstractmethod
    def minutes(self, x: float):
        ...

    @abc.abstractmethod
    def within(self, m1, m2, bound):
        ...

    @abc.abstractmethod
    def join(self, ctx: Context, ext, body: Callable):
        ...


def _plural(n: int) -> str:
    return "variable" if n == 1 else "variables"


def check_body_arity(body: Callable, n: int) -> None:
    """Reject ``body`` unless it accepts exactly ``n`` positional pattern variables."""
    if not callable(body):
        raise PatternTypeError(f"join body must be callable, got {type(body).__name__}")
    try:
        sig = inspect.signature(body)
    except (TypeError, ValueError):
        return
    params = list(sig.parameters.values())
    if any(p.kind is p.VAR_POSITIONAL for p in params):
        return
    positional = [p for p in params if p.kind in (p.POSITIONAL_ONLY, p.POSITIONAL_OR_KEYWORD)]
    required = [p for p in positional if p.default is p.empty]
    if not (len(required) <= n <= len(positional)):
        expected = len(positional)
        raise PatternTypeError(
            f"this pattern matches {expected} {_plural(expected)} but the context "
            f"binds {n} {_plural(n)}"
        )


def _fmt_hole(template: str) -> Optional[str]:
    for hole in ("%f", "%d", "%s"):
        if hole in template:
            return hole
    return None


def render_fmt1(template: str, x, render: Callable[[Any], str]) -> str:
    hole = _fmt_hole(template)
    if hole is None or template.count(hole) != 1:
        raise PatternTypeError(f"format template needs exactly one hole: {template!r}")
    return template.replace(hole, render(x))


class ValueExpr(ExprSym):
    """Meta-circular expression forms: every expression denotes a Python value."""

    def lit_float(self, x):
        return float(x)

    def lit_bool(self, b):
        return bool(b)

    def lit_string(self, s):
        return str(s)

    def pair(self, a, b):
        return (a, b)

    def ge(self, a, b):
        return a >= b

    def and_(self, a, b):
        return a and b

    def fmt1(self, template, x):
        return render_fmt1(template, x, format_number)
