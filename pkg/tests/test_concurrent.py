import threading

import pytest

from hetjoin import patterns
from hetjoin.engine import EventSym, ScriptedScheduler, run_concurrent
from hetjoin.errors import InstanceAborted, PayloadTypeError, TraceOrderError
from hetjoin.time_meta import Interval

E = EventSym()
TEMPS = [(20.0, 2), (53.5, 4), (35.0, 5), (60.2, 8)]
SMOKES = [(True, 9), (False, 10), (True, 12)]


def test_pinned_serialization_reproduces_fire_alarm():
    j = patterns.fire_alarm(E)
    sched = ScriptedScheduler([0, 0, 0, 0, 1, 1, 1])
    out = list(run_concurrent(j, [iter(TEMPS), iter(SMOKES)], scheduler=sched))
    assert [(e.value, e.meta) for e in out] == [
        ("Fire: 53.5", Interval(4, 9)),
        ("Fire: 60.2", Interval(8, 9)),
        ("Fire: 60.2", Interval(8, 12)),
    ]


def test_silent_feed_does_not_block():
    sent = threading.Event()
    stop = threading.Event()

    def smoke():
        yield (True, 0)
        sent.set()
        stop.wait(10)

    def temp():
        sent.wait(10)
        yield from [(1.0, 1), (2.0, 2), (3.0, 3)]

    j = patterns.combine_latest(E)
    stream = run_concurrent(j, [temp(), smoke()])
    try:
        got = [next(stream) for _ in range(3)]
    finally:
        stop.set()
    assert [e.value for e in got] == [(1.0, True), (2.0, True), (3.0, True)]
    assert list(stream) == []


def test_single_feed_equals_replay():
    from hetjoin.engine import JoinInstance, Matcher, Source, notify

    def make():
        return JoinInstance([Source("s", int)], Matcher(lambda a: E.yield_(a.value * 2), 1))

    feed = [(v, v) for v in range(6)]
    out = list(run_concurrent(make(), [iter(feed)]))
    assert out == make().run_replay([notify(0, v, t) for v, t in feed])


def test_output_equals_replay_of_chosen_serialization():
    for _ in range(20):
        j = patterns.fire_alarm(E)
        out = list(run_concurrent(j, [iter(TEMPS), iter(SMOKES)]))
        again = j.fresh()
        replayed = [ev for n in j.history for ev in again.step(n)]
        assert out == replayed
        assert len(j.history) == 7


def test_wrong_payload_aborts():
    j = patterns.fire_alarm(E)
    with pytest.raises(PayloadTypeError):
        list(run_concurrent(j, [iter([("hot", 1)]), iter([])]))
    assert j.aborted
    with pytest.raises(InstanceAborted):
        j.push(0, 1.0, 2)


def test_feed_going_back_in_time():
    j = patterns.fire_alarm(E)
    with pytest.raises(TraceOrderError):
        list(run_concurrent(j, [iter([(1.0, 5), (2.0, 3)]), iter([])]))


def test_feed_count_must_match_arity():
    with pytest.raises(ValueError):
        list(run_concurrent(patterns.fire_alarm(E), [iter(TEMPS)]))
