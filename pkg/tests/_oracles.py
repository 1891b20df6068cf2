"""Independent reference models used by the engine and acceptance tests."""

import itertools
import random
from functools import reduce

from hetjoin.engine import Event, Notification
from hetjoin.time_meta import Interval, at


def hull(metas):
    return reduce(lambda a, b: Interval(min(a.lo, b.lo), max(a.hi, b.hi)), metas)


def sorted_trace(per_source):
    """Merge per-source (value, time) lists into a (time, source)-ordered trace."""
    trace = [
        Notification(k, Event(v, at(t))) for k, evs in enumerate(per_source) for v, t in evs
    ]
    return sorted(trace, key=lambda n: (n.event.time, n.source))


def random_case(rng: random.Random, max_sources=3, max_events=5, horizon=6):
    n = rng.randint(1, max_sources)
    per_source = []
    for k in range(n):
        times = sorted(rng.randint(0, horizon) for _ in range(rng.randint(0, max_events)))
        # values are unique ids so duplicated emissions are visible
        per_source.append([(k * 100 + j, t) for j, t in enumerate(times)])
    weights = [rng.randint(0, 3) for _ in range(n)]
    modulus = rng.randint(1, 3)
    residue = rng.randrange(modulus)

    def pred(*values):
        return sum(w * v for w, v in zip(weights, values)) % modulus == residue

    return per_source, pred


def brute_force_default(trace, arity, pred):
    """Every combination over the complete trace, in emission order.

    A combination is emitted when its last constituent arrives; within one
    arrival, position 0 varies slowest and each position in arrival order.
    """
    by_pos = [[(i, n.event) for i, n in enumerate(trace) if n.source == k] for k in range(arity)]
    out = []
    for combo in itertools.product(*by_pos):
        values = tuple(ev.value for _, ev in combo)
        if pred(*values):
            key = (max(i for i, _ in combo), tuple(i for i, _ in combo))
            out.append((key, values, hull([ev.meta for _, ev in combo])))
    out.sort(key=lambda r: r[0])
    return [(v, m) for _, v, m in out]


def combine_latest_model(trace, arity, latest_positions):
    """Positions in ``latest_positions`` keep one event, others keep all."""
    boxes = [[] for _ in range(arity)]
    out = []
    for n in trace:
        k, ev = n.source, n.event
        others = [boxes[j] if j != k else [ev] for j in range(arity)]
        for combo in itertools.product(*others):
            out.append((tuple(e.value for e in combo), hull([e.meta for e in combo])))
        boxes[k] = [ev] if k in latest_positions else boxes[k] + [ev]
    return out


def zip_model(trace, arity, aligned):
    """Aligned positions zip in lockstep; the rest keep default mailboxes."""
    queues = {k: [] for k in aligned}
    boxes = [[] for _ in range(arity)]
    out = []
    for n in trace:
        k, ev = n.source, n.event
        if k in queues:
            queues[k].append(ev)
            while all(queues.values()):
                heads = {j: q.pop(0) for j, q in queues.items()}
                cols = [[heads[j]] if j in heads else boxes[j] for j in range(arity)]
                for combo in itertools.product(*cols):
                    out.append((tuple(e.value for e in combo), hull([e.meta for e in combo])))
        else:
            cols = [boxes[j] if j != k else [ev] for j in range(arity)]
            for combo in itertools.product(*cols):
                out.append((tuple(e.value for e in combo), hull([e.meta for e in combo])))
            boxes[k].append(ev)
    return out
