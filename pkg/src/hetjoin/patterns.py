"""The built-in pattern terms, written once against the signatures."""

from __future__ import annotations

from hetjoin.dsl import CoreSym, ExtSym
from hetjoin.engine import Source, aligning, most_recently
from hetjoin.hetseq import index_set, p0, p1

__all__ = [
    "TEMP",
    "SMOKE",
    "fire_alarm",
    "combine_latest",
    "align",
    "pairs",
    "cartesian",
]

TEMP = Source("temp_sensor", float)
SMOKE = Source("smoke_sensor", bool)


def fire_alarm(S: ExtSym, temp=TEMP, smoke=SMOKE, window: float = 5.0):
    """Temperature of at least 50 and smoke, no more than ``window`` minutes apart."""
    ctx = S.ccons(S.from_(temp), S.ccons(S.from_(smoke), S.cnil()))

    def body(t, s):
        temp_v, t1 = t
        smoke_v, t2 = s
        cond = S.and_(
            S.within(t1, t2, S.minutes(window)),
            S.and_(smoke_v, S.ge(temp_v, S.lit_float(50.0))),
        )
        return S.where(cond, S.yield_(S.fmt1("Fire: %f", temp_v)))

    return S.join(ctx, S.enil(), body)


def _pair_body(S):
    return lambda t, s: S.yield_(S.pair(t.value, s.value))


def combine_latest(S: ExtSym, temp=TEMP, smoke=SMOKE):
    ctx = S.ccons(S.from_(temp), S.ccons(S.from_(smoke), S.cnil()))
    ext = S.ext_merge(most_recently(p0), most_recently(p1))
    return S.join(ctx, ext, _pair_body(S))


def align(S: ExtSym, temp=TEMP, smoke=SMOKE):
    ctx = S.ccons(S.from_(temp), S.ccons(S.from_(smoke), S.cnil()))
    return S.join(ctx, aligning(index_set(p0, p1)), _pair_body(S))


def pairs(S: ExtSym, a, b, ext=None):
    """Unguarded two-way join yielding value pairs, under an arbitrary extension."""
    ctx = S.ccons(S.from_(a), S.ccons(S.from_(b), S.cnil()))
    return S.join(ctx, S.enil() if ext is None else ext, _pair_body(S))


def cartesian(S: CoreSym, *sources):
    """Right-nested tuple of one element per source, over every combination."""
    ctx = S.context(*sources)

    def body(*xs):
        out = xs[-1]
        for x in reversed(xs[:-1]):
            out = S.pair(x, out)
        return S.yield_(out)

    return S.join(ctx, body)
