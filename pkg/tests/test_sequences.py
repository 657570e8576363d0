from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from mulab.errors import ParseError
from mulab.sequences import (
    DEFAULT_BUDGET,
    Found,
    NoneBelowBudget,
    OpaqueSequence,
    PresentedSequence,
    first_nonzero,
    format_sequence,
    mu_budgeted,
    mu_exact,
    parse_sequence,
    pointwise_combine,
    shift,
)

from oracles import scan_first_nonzero, scan_first_zero, unroll

small_nat = st.integers(min_value=0, max_value=6)
prefixes = st.lists(small_nat, max_size=8).map(tuple)
tails = st.lists(small_nat, min_size=1, max_size=6).map(tuple)


def test_values_match_literal_unrolling():
    s = PresentedSequence((5, 1, 2), (0, 4))
    assert s.values(9) == unroll((5, 1, 2), (0, 4), 9)


def test_tail_reduces_to_minimal_period():
    s = PresentedSequence((9,), (3, 3, 3))
    assert s.tail == (3,)
    t = PresentedSequence((), (1, 2, 1, 2))
    assert t.tail == (1, 2)


def test_prefix_absorbed_into_rotated_tail():
    s = PresentedSequence((1, 2, 3), (2, 3))
    assert s.prefix == (1,)
    assert s.tail == (2, 3)
    assert s.values(7) == unroll((1, 2, 3), (2, 3), 7)


@given(prefixes, tails)
def test_canonical_form_keeps_values(prefix, tail):
    s = PresentedSequence(prefix, tail)
    count = len(prefix) + 3 * len(tail) + 2
    assert s.values(count) == unroll(prefix, tail, count)


@given(prefixes, tails)
def test_canonical_form_is_minimal(prefix, tail):
    s = PresentedSequence(prefix, tail)
    # primitive tail: no proper divisor period generates it
    for d in range(1, len(s.tail)):
        if len(s.tail) % d == 0:
            assert s.tail != s.tail[:d] * (len(s.tail) // d)
    # no prefix entry can slide into the tail
    if s.prefix:
        assert s.prefix[-1] != s.tail[-1]


@given(prefixes, tails)
def test_canonical_form_is_a_fixed_point(prefix, tail):
    s = PresentedSequence(prefix, tail)
    again = PresentedSequence(s.prefix, s.tail)
    assert again == s


def test_rejects_empty_tail_and_negatives():
    with pytest.raises(ValueError):
        PresentedSequence((), ())
    with pytest.raises(ValueError):
        PresentedSequence((-1,), (1,))
    with pytest.raises(ValueError):
        PresentedSequence((0,), (2, -3))


@given(prefixes, tails)
def test_mu_exact_matches_brute_scan(prefix, tail):
    s = PresentedSequence(prefix, tail)
    window = s.horizon + 2 * len(s.tail)
    assert mu_exact(s) == scan_first_zero(s.values(window))


@given(prefixes, tails)
def test_first_nonzero_matches_brute_scan(prefix, tail):
    s = PresentedSequence(prefix, tail)
    window = s.horizon + 2 * len(s.tail)
    assert first_nonzero(s) == scan_first_nonzero(s.values(window))


def test_mu_budgeted_finds_and_reports_budget():
    s = PresentedSequence((1, 1, 0), (1,))
    assert mu_budgeted(s) == Found(2)
    never = OpaqueSequence(lambda n: 1)
    assert mu_budgeted(never, budget=50) == NoneBelowBudget(50)
    assert mu_budgeted(PresentedSequence((), (7,)), budget=10) == NoneBelowBudget(10)


def test_budget_default_is_large():
    assert DEFAULT_BUDGET == 2 ** 20


@given(prefixes, tails, prefixes, tails,
       st.sampled_from(["add", "mul", "max", "min",
                        "eq-indicator", "neq-indicator"]))
def test_pointwise_combine_matches_brute(pa, ta, pb, tb, op):
    from mulab.sequences import POINTWISE_OPS
    a = PresentedSequence(pa, ta)
    b = PresentedSequence(pb, tb)
    c = pointwise_combine(op, a, b)
    fn = POINTWISE_OPS[op]
    for n in range(a.horizon + b.horizon + 6):
        assert c.value(n) == fn(a.value(n), b.value(n))


def test_pointwise_combine_rejects_unknown_op():
    a = PresentedSequence((), (1,))
    with pytest.raises(ValueError):
        pointwise_combine("sub", a, a)


@given(prefixes, tails, st.integers(min_value=0, max_value=12))
def test_shift_drops_exactly_k(prefix, tail, k):
    s = PresentedSequence(prefix, tail)
    t = shift(s, k)
    for n in range(s.horizon + 4):
        assert t.value(n) == s.value(n + k)


def test_parse_format_round_trip():
    for text in ["prefix=[];tail=[1]",
                 "prefix=[1,2,3];tail=[0,4]",
                 "prefix=[0];tail=[5,5,1]"]:
        s = parse_sequence(text)
        assert parse_sequence(format_sequence(s)) == s


def test_parse_accepts_whitespace():
    s = parse_sequence(" prefix=[1, 2] ; tail=[3] ")
    assert s == PresentedSequence((1, 2), (3,))


@pytest.mark.parametrize("bad", [
    "",
    "prefix=[1];tail=[]",
    "tail=[1];prefix=[]",
    "prefix=[1,];tail=[2]",
    "prefix=[a];tail=[1]",
    "prefix=[1];tail=[2];extra=[3]",
])
def test_parse_rejects_bad_syntax(bad):
    with pytest.raises(ParseError):
        parse_sequence(bad)


def test_opaque_view_round_trip():
    s = PresentedSequence((2, 0), (9,))
    assert [s.as_opaque().value(n) for n in range(5)] == s.values(5)
    assert s.view()(1) == 0
