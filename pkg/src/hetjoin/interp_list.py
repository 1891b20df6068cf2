"""Sequential interpreters.

``ListSym`` interprets the core join signature over Python lists: a join is the
nested list comprehension over its bindings (leftmost binding outermost), with
the pattern body innermost.  ``CorePP`` prints the same terms as text, which is
handy for checking that a term is interpreter-agnostic.  ``Num`` and ``PP`` are
the two interpreters of the small arithmetic signature.
"""

from __future__ import annotations

from typing import Callable, List

from hetjoin.dsl import ArithSym, Bind, Context, CoreSym, NumBoolSym, ValueExpr, check_body_arity
from hetjoin.errors import PatternTypeError
from hetjoin.hetseq import Cons, HSeq, hcons, hnil
from hetjoin.render import format_number

__all__ = ["Num", "PP", "ListSym", "CorePP", "cart", "join_list"]


class Num(NumBoolSym):
    """Expressions as Python ints and bools."""

    def lit(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def b_lit(self, b):
        return bool(b)

    def conj(self, a, b):
        return a and b


class PP(NumBoolSym):
    """Expressions as their printed form."""

    def lit(self, n):
        return f"<{n}>"

    def add(self, a, b):
        return f"({a} + {b})"

    def b_lit(self, b):
        return f"<{'true' if b else 'false'}>"

    def conj(self, a, b):
        return f"({a} & {b})"


def _common_type(xs) -> type:
    types = {type(x) for x in xs}
    if len(types) == 1:
        return types.pop()
    if types and types <= {int, float}:
        return float
    return object


def cart(bindings: HSeq, k: Callable[[HSeq], list]) -> list:
    """Wrap ``k`` in one list-bind per binding, leftmost binding outermost.

    ``k`` receives the heterogeneous sequence of bound element values.  With no
    bindings ``k`` runs once on the empty sequence.
    """
    if not isinstance(bindings, Cons):
        return k(hnil())
    head: Bind = bindings.head
    out: list = []
    for x in head.source:
        out.extend(cart(bindings.tail, _pushing(k, x, head.elem_type)))
    return out


def _pushing(k, x, tag):
    return lambda rest: k(hcons(x, rest, tag))


def join_list(ctx: Context, body: Callable[..., list]) -> list:
    check_body_arity(body, ctx.arity)

    def innermost(values: HSeq) -> list:
        produced = body(*values)
        if not isinstance(produced, list):
            raise PatternTypeError(f"pattern body must produce a list, got {type(produced).__name__}")
        return produced

    return cart(ctx.bindings, innermost)


class ListSym(ValueExpr, CoreSym):
    """Core signature over lists: the nested-loop cartesian product."""

    def lift(self, *xs) -> List:
        return list(xs)

    def from_(self, source) -> Bind:
        xs = list(source)
        return Bind(xs, _common_type(xs))

    def yield_(self, e) -> list:
        return [e]

    def where(self, cond, body) -> list:
        return body if cond else []

    def join(self, ctx, body):
        return join_list(ctx, body)


def _pp_nested(names) -> str:
    out = "()"
    for n in reversed(names):
        out = f"({n}, {out})"
    return out


class CorePP(CoreSym):
    """Core signature as source text."""

    def lift(self, *xs) -> str:
        return "[" + "; ".join(self._atom(x) for x in xs) + "]"

    def _atom(self, x) -> str:
        if isinstance(x, str):
            return f'"{x}"'
        return format_number(x)

    def lit_float(self, x):
        return format_number(float(x))

    def lit_bool(self, b):
        return format_number(bool(b))

    def lit_string(self, s):
        return f'"{s}"'

    def pair(self, a, b):
        return f"(pair {a} {b})"

    def ge(self, a, b):
        return f"({a} >= {b})"

    def and_(self, a, b):
        return f"({a} && {b})"

    def fmt1(self, template, x):
        return f'(format "{template}" {x})'

    def from_(self, source) -> Bind:
        return Bind(source if isinstance(source, str) else self.lift(*source))

    def yield_(self, e):
        return f"(yield {e})"

    def where(self, cond, body):
        return f"(where {cond} {body})"

    def join(self, ctx, body):
        check_body_arity(body, ctx.arity)
        names = [f"x{i}" for i in range(ctx.arity)]
        binds = "".join(f"(from {b.source}) @. " for b in ctx)
        return f"join ({binds}cnil) (fun {_pp_nested(names)} -> {body(*names)})"
