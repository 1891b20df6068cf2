import pytest

from hetjoin import patterns
from hetjoin.dsl import ArithSym, Context, CoreSym, ExtSym, check_body_arity
from hetjoin.engine import Chain, EventSym, Source, most_recently, notify
from hetjoin.errors import PatternTypeError
from hetjoin.hetseq import p0, p1
from hetjoin.interp_list import PP, CorePP, ListSym, Num


def exp1(S: ArithSym):
    return S.add(S.lit(1), S.lit(2))


def exp2(S: ArithSym, x, y):
    return S.add(S.add(S.add(exp1(S), S.lit(3)), x), y)


def test_primer_num_and_pp():
    assert exp1(Num()) == 3
    assert exp1(PP()) == "(<1> + <2>)"
    assert exp2(Num(), 4, 5) == 15
    assert exp2(PP(), "<4>", "<5>") == "((((<1> + <2>) + <3>) + <4>) + <5>)"


def test_numbool_extension():
    assert Num().conj(Num().b_lit(True), Num().b_lit(False)) is False
    assert PP().conj(PP().b_lit(True), PP().b_lit(False)) == "(<true> & <false>)"


def test_context_shapes():
    S = ListSym()
    assert S.cnil().arity == 0
    assert S.cnil().shape == ()
    one = S.ccons(S.from_([1, 2, 3]), S.cnil())
    assert one.arity == 1 and one.shape == (int,)
    three = S.context([1], ["a"], [2.5])
    assert three.shape == (int, str, float)


def test_engine_context_shape():
    E = EventSym()
    p, q, r = Source("p", float), Source("q", bool), Source("r", str)
    ctx = E.ccons(E.from_(p), E.ccons(E.from_(q), E.ccons(E.from_(r), E.cnil())))
    assert isinstance(ctx, Context)
    assert ctx.shape == (float, bool, str)


def test_same_source_twice_gives_two_bindings():
    S = ListSym()
    xs = [1, 2]
    ctx = S.context(xs, xs)
    assert ctx.arity == 2
    assert S.join(ctx, lambda a, b: S.yield_(S.pair(a, b))) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_ccons_rejects_non_binding():
    S = ListSym()
    with pytest.raises(PatternTypeError):
        S.ccons([1, 2], S.cnil())


@pytest.mark.parametrize("n_vars", [0, 1, 3])
def test_arity_mismatch_rejected_core(n_vars):
    S = ListSym()
    ctx = S.context([1], ["x"])
    bodies = {0: lambda: S.yield_(1), 1: lambda a: S.yield_(a), 3: lambda a, b, c: S.yield_(a)}
    with pytest.raises(PatternTypeError, match="context binds 2 variables"):
        S.join(ctx, bodies[n_vars])


def test_arity_mismatch_rejected_before_data_flows():
    E = EventSym()
    ctx = E.context(patterns.TEMP, patterns.SMOKE)
    calls = []

    def body(t):
        calls.append(t)
        return E.yield_(t.value)

    with pytest.raises(PatternTypeError, match="this pattern matches 1 variable"):
        E.join(ctx, E.enil(), body)
    assert calls == []


def test_check_body_arity_defaults_and_varargs():
    check_body_arity(lambda a, b=0: None, 1)
    check_body_arity(lambda a, b=0: None, 2)
    check_body_arity(lambda *xs: None, 5)
    with pytest.raises(PatternTypeError):
        check_body_arity(lambda a, b=0: None, 3)
    with pytest.raises(PatternTypeError):
        check_body_arity("not callable", 1)


def test_fmt1():
    assert ListSym().fmt1("Fire: %f", 53.5) == "Fire: 53.5"
    assert EventSym().fmt1("Fire: %f", 60.2) == "Fire: 60.2"
    assert ListSym().fmt1("n=%d", 7) == "n=7"
    with pytest.raises(PatternTypeError):
        ListSym().fmt1("no hole", 1)


def test_where_true_false():
    S = ListSym()
    ctx = S.context([1, 2])
    assert S.join(ctx, lambda x: S.where(S.lit_bool(True), S.yield_(x))) == S.join(
        ctx, lambda x: S.yield_(x)
    )
    assert S.join(ctx, lambda x: S.where(S.lit_bool(False), S.yield_(x))) == []


def test_yield_in_empty_context():
    S = ListSym()
    assert S.join(S.cnil(), lambda: S.yield_(42)) == [42]


def test_interpreter_independence():
    # one term, two core interpreters
    def term(S: CoreSym, a, b):
        return S.join(
            S.context(a, b),
            lambda x, y: S.where(S.ge(x, S.lit_float(2.0)), S.yield_(S.pair(x, y))),
        )

    assert term(ListSym(), [1.0, 2.0, 3.0], ["u"]) == [(2.0, "u"), (3.0, "u")]
    assert term(CorePP(), [1.0], ["u"]) == (
        'join ((from [1]) @. (from ["u"]) @. cnil) '
        "(fun (x0, (x1, ())) -> (where (x0 >= 2) (yield (pair x0 x1))))"
    )


def test_extended_algebra_signature():
    E = EventSym()
    assert isinstance(E, ExtSym)
    assert E.enil() == Chain()
    x = most_recently(p0)
    assert list(E.ext_merge(E.enil(), x)) == [x]
    assert list(E.ext_merge(x, E.enil())) == [x]
    assert E.mmerge(*map(lambda t: notify(0, 0, t).event.meta, (1, 4))).to_json() == [1, 4]


def test_ext_shape_mismatch_rejected_before_run():
    E = EventSym()
    ctx = E.context(Source("only", int))
    from hetjoin.errors import IllFormedIndex

    with pytest.raises(IllFormedIndex):
        E.join(ctx, most_recently(p1), lambda a: E.yield_(a.value))


def test_fire_alarm_body_receives_value_meta_pairs():
    E = EventSym()
    seen = []

    def body(t, s):
        (temp, t1), (smoke, t2) = t, s
        seen.append((temp, t1, smoke, t2))
        return E.yield_(E.pair(temp, smoke))

    j = E.join(E.context(patterns.TEMP, patterns.SMOKE), E.enil(), body)
    j.run_replay([notify(0, 1.5, 1), notify(1, True, 2)])
    assert seen == [(1.5, notify(0, 1.5, 1).event.meta, True, notify(1, True, 2).event.meta)]
