from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from mulab.coding import rational_code
from mulab.errors import BudgetExceeded, ParseError
from mulab.functionals import (
    TracedFunctional,
    TracedRealView,
    TracedSeqView,
    catalog_functional,
    catalog_names,
    e2_from_mu,
    mu_from_e2,
    omega_fan,
    theta_special,
    xi_by_tracing,
)
from mulab.reals import from_rational
from mulab.sequences import PresentedSequence, mu_exact

flags = st.tuples(
    st.lists(st.integers(min_value=0, max_value=3), max_size=6).map(tuple),
    st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=4).map(tuple),
).map(lambda pt: PresentedSequence(pt[0], pt[1]))


def test_eval_traced_reports_value_and_queries():
    g = catalog_functional("ifz:0:1:2")
    value, trace = g.eval_traced(PresentedSequence((0, 7), (1,)))
    assert value == 7
    assert trace == frozenset({0, 1})
    value, trace = g.eval_traced(PresentedSequence((3, 7), (9,)))
    assert value == 9
    assert trace == frozenset({0, 2})
    assert g.last_trace == frozenset({0, 2})


def test_catalog_spot_values():
    ones = PresentedSequence((), (1,))
    ramp = PresentedSequence((0, 1, 2, 3, 4), (0,))
    assert catalog_functional("const:5")(ones) == 5
    assert catalog_functional("proj:3")(ramp) == 3
    assert catalog_functional("sum:4")(ramp) == 6
    assert catalog_functional("max:3")(ramp) == 2
    assert catalog_functional("f0+f1+1")(ramp) == 2
    assert catalog_functional("f0+f1")(ramp) == 1


@pytest.mark.parametrize("bad", ["", "max:0", "bogus", "proj:x", "sum",
                                 "f0+g1", "const:1:2", "ifz:1:2"])
def test_catalog_rejects_bad_specs(bad):
    with pytest.raises(ParseError):
        catalog_functional(bad)


def test_catalog_names_all_instantiate():
    for name in catalog_names():
        spec = (name.replace("N", "2").replace("I", "0")
                .replace("J", "1").replace("K", "2"))
        catalog_functional(spec)(PresentedSequence((), (1,)))


@pytest.mark.parametrize("spec,expected", [
    ("const:5", 0),
    ("proj:0", 1),
    ("proj:3", 4),
    ("sum:4", 4),
    ("max:3", 3),
    ("ifz:3:1:2", 4),
    ("f0+f1+1", 2),
])
def test_fan_modulus_known_values(spec, expected):
    assert omega_fan(catalog_functional(spec)) == expected


@pytest.mark.parametrize("spec", ["proj:2", "sum:3", "max:2", "ifz:2:0:1"])
def test_fan_modulus_is_sound_on_binary_inputs(spec):
    g = catalog_functional(spec)
    n = omega_fan(g)
    for prefix in product((0, 1), repeat=n):
        outputs = {g(PresentedSequence(prefix, tail))
                   for tail in [(0,), (1,), (0, 1)]}
        assert len(outputs) == 1


def test_single_run_trace_is_not_a_modulus_for_adaptive_bodies():
    g = TracedFunctional("gate", lambda view: view(5) if view(0) == 1 else 0)
    _, trace = g.eval_traced(PresentedSequence((), (0,)))
    naive = max(trace) + 1
    assert naive == 1
    assert omega_fan(g) == 6
    a = PresentedSequence((1, 0, 0, 0, 0, 0), (0,))
    b = PresentedSequence((1, 0, 0, 0, 0, 1), (1,))
    assert a.values(naive) == b.values(naive)
    assert g(a) != g(b)


def test_fan_modulus_rejects_unbounded_search():
    def hunt(view):
        i = 0
        while view(i) != 0:
            i += 1
        return i

    with pytest.raises(BudgetExceeded):
        omega_fan(TracedFunctional("hunt", hunt), node_budget=50)


def test_fan_modulus_rejects_negative_queries():
    with pytest.raises(ValueError):
        omega_fan(TracedFunctional("neg", lambda view: view(-1)))


@pytest.mark.parametrize("spec,bound,cover_size", [
    ("const:0", 0, 1),
    ("max:3", 1, 2),
    ("sum:3", 3, 8),
    ("ifz:3:1:2", 1, 2),
])
def test_theta_bound_and_cover(spec, bound, cover_size):
    result = theta_special(catalog_functional(spec))
    assert result.bound == bound
    assert len(result.cover) == cover_size
    for member in result.cover:
        assert len(member.values(result.bound + 3)) == result.bound + 3


def test_theta_cover_dominates_the_functional():
    g = catalog_functional("sum:4")
    result = theta_special(g)
    for prefix in product((0, 1), repeat=omega_fan(g)):
        assert g(PresentedSequence(prefix, (0,))) <= result.bound


def test_theta_refuses_an_oversized_cover():
    with pytest.raises(BudgetExceeded):
        theta_special(TracedFunctional("big", lambda view: 10), node_budget=100)


def test_seq_view_traces_and_budgets():
    view = TracedSeqView(PresentedSequence((4, 5), (6,)), budget=3)
    assert view.query(1) == 5
    assert view.query(1) == 5
    assert view.trace == {1}
    view.query(0)
    view.query(2)
    with pytest.raises(BudgetExceeded):
        view.query(9)
    view.reset()
    assert view.trace == set()
    assert view.query(9) == 6


def test_real_view_codes_its_answers():
    view = TracedRealView(from_rational(Fraction(2, 3)))
    assert view.rational(4) == Fraction(2, 3)
    assert view.query(4) == rational_code(Fraction(2, 3))
    assert view.trace == {4}
    assert view.real.exact_value() == Fraction(2, 3)


def test_xi_by_tracing_counts_both_runs():
    def phi(view, k):
        return [view.query(i) for i in range(k)]

    a = TracedSeqView(PresentedSequence((), (1,)))
    b = TracedSeqView(PresentedSequence((2,), (1,)))
    assert xi_by_tracing(phi, a, b, 5) == 5
    assert xi_by_tracing(phi, a, b, 0) == 0

    def lopsided(view, k):
        if view.query(0) == 2:
            return [view.query(7)]
        return [0]

    assert xi_by_tracing(lopsided, a, b, 1) == 8


@given(flags)
def test_zero_existence_round_trip(f):
    phi = e2_from_mu(mu_exact)
    assert phi(f) == (0 if mu_exact(f) is not None else 1)
    assert mu_from_e2(phi)(f) == mu_exact(f)


@settings(max_examples=60)
@given(flags, flags)
def test_traced_functional_accepts_views_and_sequences(f, g):
    func = catalog_functional("f0+f1+1")
    assert func(f.value) == func(f)
    assert func(g) == g.value(0) + g.value(1) + 1
