"""Type-two functionals, query tracing, and derived moduli.

A TracedFunctional wraps a deterministic body that sees its input only
through a query view (index -> natural).  Everything else here is built
on replaying such bodies:

* omega_fan computes a fan modulus by branch-on-demand replay over
  binary answers: fork the partial answer map at the first unanswered
  query, rerun from scratch, and take 1 + the largest index queried
  anywhere in the completed tree.  A single run's trace would not be a
  sound modulus for adaptive bodies; the whole tree is.
* theta_special turns the fan modulus into a bound plus a finite cover
  of zero-padded prefixes.
* xi_by_tracing instruments two evaluations of a sequence-to-sequence
  functional and reports 1 + the largest input index either one touched.

Budgets make divergence on discontinuous inputs an error, not a hang.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .coding import rational_code
from .errors import BudgetExceeded, ParseError
from .reals import FastCauchyReal
from .sequences import DEFAULT_BUDGET, PresentedSequence

__all__ = [
    "TracedFunctional",
    "ThetaResult",
    "omega_fan",
    "theta_special",
    "TracedView",
    "TracedSeqView",
    "TracedRealView",
    "xi_by_tracing",
    "catalog_functional",
    "catalog_names",
    "e2_from_mu",
    "mu_from_e2",
]

View = Callable[[int], int]


@dataclass(eq=False)
class TracedFunctional:
    """A deterministic body over a query view, with per-evaluation tracing."""

    name: str
    body: Callable[[View], int]
    last_trace: frozenset[int] | None = None

    def eval_traced(self, view: View | PresentedSequence) -> tuple[int, frozenset[int]]:
        if isinstance(view, PresentedSequence):
            view = view.value
        queried: set[int] = set()

        def probe(i: int) -> int:
            queried.add(i)
            return view(i)

        value = int(self.body(probe))
        trace = frozenset(queried)
        self.last_trace = trace
        return value, trace

    def __call__(self, view: View | PresentedSequence) -> int:
        return self.eval_traced(view)[0]


class _Unanswered(Exception):
    def __init__(self, index: int):
        self.index = index


def omega_fan(g: TracedFunctional, node_budget: int = DEFAULT_BUDGET) -> int:
    """Fan modulus on Cantor space: inputs agreeing below it get equal values.

    Explores the complete binary decision tree of g by replay.  Raises
    BudgetExceeded once more than node_budget reruns are needed, which is
    the fate of genuinely discontinuous bodies.
    """
    jobs: list[dict[int, int]] = [{}]
    nodes = 0
    max_index = -1
    while jobs:
        answers = jobs.pop()
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"omega_fan: over {node_budget} replay nodes")

        def probe(i: int) -> int:
            if i < 0:
                raise ValueError("negative index queried")
            if i in answers:
                return answers[i]
            raise _Unanswered(i)

        try:
            g.body(probe)
        except _Unanswered as stop:
            jobs.append({**answers, stop.index: 0})
            jobs.append({**answers, stop.index: 1})
            continue
        if answers:
            max_index = max(max_index, max(answers))
    return max_index + 1


@dataclass(frozen=True)
class ThetaResult:
    """Bound plus finite cover of zero-padded prefixes at that bound."""

    bound: int
    cover: tuple[PresentedSequence, ...]


def theta_special(g: TracedFunctional,
                  node_budget: int = DEFAULT_BUDGET) -> ThetaResult:
    """Special-fan data for g: bound = max of g over the zero-padded
    prefixes at the fan modulus, cover = every prefix of that bound length.
    """
    n = omega_fan(g, node_budget)
    bound = 0
    for bits in product((0, 1), repeat=n):
        bound = max(bound, g(PresentedSequence(bits, (0,))))
    if 1 << bound > node_budget:
        raise BudgetExceeded(f"theta cover of size 2^{bound} over budget")
    cover = tuple(PresentedSequence(bits, (0,))
                  for bits in product((0, 1), repeat=bound))
    return ThetaResult(bound, cover)


class TracedView:
    """Query view that records the set of indices touched."""

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.trace: set[int] = set()
        self.budget = budget

    def _record(self, i: int) -> None:
        self.trace.add(i)
        if len(self.trace) > self.budget:
            raise BudgetExceeded(f"view queried more than {self.budget} indices")

    def reset(self) -> None:
        self.trace.clear()

    def query(self, i: int) -> int:
        raise NotImplementedError


class TracedSeqView(TracedView):
    def __init__(self, seq: PresentedSequence | View, budget: int = DEFAULT_BUDGET):
        super().__init__(budget)
        self._answer = seq.value if isinstance(seq, PresentedSequence) else seq

    def query(self, i: int) -> int:
        self._record(i)
        return int(self._answer(i))


class TracedRealView(TracedView):
    """View of a real as its approximation column.

    query returns coded rationals to keep the view integer valued;
    rational(n) is the decoded convenience used by functional bodies.
    The underlying real stays reachable for exactness escapes, which is
    how the concrete functionals stay total at their tie points.
    """

    def __init__(self, x: FastCauchyReal, budget: int = DEFAULT_BUDGET):
        super().__init__(budget)
        self.real = x

    def rational(self, n: int) -> Fraction:
        self._record(n)
        return self.real.approx(n)

    def query(self, i: int) -> int:
        return rational_code(self.rational(i))


TwinPhi = Callable[[TracedView, int], list]


def xi_by_tracing(phi: TwinPhi, f_view: TracedView, g_view: TracedView,
                  k: int) -> int:
    """1 + the largest index queried while producing the first k outputs
    of phi on each view; 0 when nothing is queried.

    For deterministic phi whose negative decisions are certified by the
    queried values alone, inputs agreeing below the returned bound get
    agreeing first k outputs.
    """
    f_view.reset()
    g_view.reset()
    phi(f_view, k)
    phi(g_view, k)
    top = max(f_view.trace | g_view.trace, default=-1)
    return top + 1


# ---------------------------------------------------------------------------
# named catalog

def _sum_expression(spec: str) -> Callable[[View], int] | None:
    terms = spec.split("+")
    projections: list[int] = []
    constant = 0
    for term in terms:
        term = term.strip()
        if not term:
            return None
        if term.startswith("f") and term[1:].isdigit():
            projections.append(int(term[1:]))
        elif term.isdigit():
            constant += int(term)
        else:
            return None
    if not projections:
        return None

    def body(view: View, _p=tuple(projections), _c=constant) -> int:
        return sum(view(i) for i in _p) + _c

    return body


def catalog_functional(spec: str) -> TracedFunctional:
    """Build a functional from its catalog name.

    Grammar: const:N | proj:N | sum:N | max:N | ifz:I:J:K, or a
    '+'-joined mix of projections fI and constants such as f0+f1+1.
    """
    spec = spec.strip()
    parts = spec.split(":")
    try:
        if parts[0] == "const" and len(parts) == 2:
            c = int(parts[1])
            return TracedFunctional(spec, lambda view, _c=c: _c)
        if parts[0] == "proj" and len(parts) == 2:
            i = int(parts[1])
            return TracedFunctional(spec, lambda view, _i=i: view(_i))
        if parts[0] == "sum" and len(parts) == 2:
            n = int(parts[1])
            return TracedFunctional(
                spec, lambda view, _n=n: sum(view(i) for i in range(_n)))
        if parts[0] == "max" and len(parts) == 2:
            n = int(parts[1])
            if n <= 0:
                raise ParseError("max:N needs N >= 1")
            return TracedFunctional(
                spec, lambda view, _n=n: max(view(i) for i in range(_n)))
        if parts[0] == "ifz" and len(parts) == 4:
            i, j, k = (int(p) for p in parts[1:])
            return TracedFunctional(
                spec,
                lambda view, _i=i, _j=j, _k=k: view(_j) if view(_i) == 0 else view(_k))
    except ParseError:
        raise
    except ValueError:
        raise ParseError(f"bad functional spec {spec!r}") from None
    body = _sum_expression(spec)
    if body is None:
        raise ParseError(f"unknown functional {spec!r}")
    return TracedFunctional(spec, body)


def catalog_names() -> list[str]:
    return ["const:N", "proj:N", "sum:N", "max:N", "ifz:I:J:K", "f0+f1", "f0+f1+1"]


# ---------------------------------------------------------------------------
# interconversion with the zero-existence functional

def e2_from_mu(mu) -> Callable[[PresentedSequence], int]:
    """Zero-existence decision: 0 when f hits zero somewhere, else 1."""

    def phi(f: PresentedSequence) -> int:
        return 0 if mu(f) is not None else 1

    return phi


def mu_from_e2(phi: Callable[[PresentedSequence], int]):
    """Least-zero search driven by a zero-existence decision."""

    def mu(f: PresentedSequence) -> int | None:
        if phi(f) != 0:
            return None
        for n in range(f.horizon):
            if f.value(n) == 0:
                return n
        raise AssertionError("existence functional contradicted the scan")

    return mu
