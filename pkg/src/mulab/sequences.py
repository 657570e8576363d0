"""Eventually periodic natural-number sequences with decidable search.

A PresentedSequence is a finite prefix plus a repeating tail.  On this
class the search operator mu is exactly computable: scanning the prefix
and a single period settles whether the sequence ever hits zero.  The
class is closed under pointwise arithmetic and shifts, with the period
of a combination dividing the lcm of the input periods.

Canonical form is minimal period first, then minimal prefix: the tail is
reduced to its shortest generating word, after which trailing prefix
elements that merely repeat the tail are absorbed into it.  Construction
canonicalizes, so extensional equality of sequences coincides with
structural equality of objects.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Callable, Iterable

from .errors import ParseError

__all__ = [
    "PresentedSequence",
    "OpaqueSequence",
    "Found",
    "NoneBelowBudget",
    "mu_exact",
    "mu_budgeted",
    "first_nonzero",
    "pointwise_combine",
    "shift",
    "parse_sequence",
    "format_sequence",
    "POINTWISE_OPS",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 2**20


def _minimal_period(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


@dataclass(frozen=True)
class PresentedSequence:
    """An infinite sequence given by prefix then tail repeated forever."""

    prefix: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self) -> None:
        prefix = tuple(int(v) for v in self.prefix)
        tail = tuple(int(v) for v in self.tail)
        if not tail:
            raise ValueError("tail must be nonempty")
        if any(v < 0 for v in prefix + tail):
            raise ValueError("values must be natural numbers")
        tail = _minimal_period(tail)
        # absorb prefix elements that already follow the periodic pattern
        while prefix and prefix[-1] == tail[-1]:
            prefix = prefix[:-1]
            tail = (tail[-1],) + tail[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", tail)

    @staticmethod
    def make(prefix: Iterable[int], tail: Iterable[int]) -> "PresentedSequence":
        return PresentedSequence(tuple(prefix), tuple(tail))

    @property
    def horizon(self) -> int:
        """Indices below this determine the whole sequence."""
        return len(self.prefix) + len(self.tail)

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative index")
        if n < len(self.prefix):
            return self.prefix[n]
        return self.tail[(n - len(self.prefix)) % len(self.tail)]

    def values(self, count: int) -> list[int]:
        return [self.value(n) for n in range(count)]

    def view(self) -> Callable[[int], int]:
        return self.value

    def as_opaque(self) -> "OpaqueSequence":
        return OpaqueSequence(self.value)

    def __str__(self) -> str:
        return format_sequence(self)


@dataclass(frozen=True)
class OpaqueSequence:
    """A sequence known only through evaluation, no structure attached."""

    evaluator: Callable[[int], int]

    def value(self, n: int) -> int:
        return int(self.evaluator(n))


@dataclass(frozen=True)
class Found:
    """mu_budgeted found the least zero at .index."""

    index: int


@dataclass(frozen=True)
class NoneBelowBudget:
    """No zero below the budget.  Explicitly not a proof of nonexistence."""

    budget: int


def mu_exact(f: PresentedSequence) -> int | None:
    """Least n with f(n) = 0, or None if the sequence never hits zero.

    Exact: one period past the prefix decides the search.
    """
    for n in range(f.horizon):
        if f.value(n) == 0:
            return n
    return None


def first_nonzero(f: PresentedSequence) -> int | None:
    """Least n with f(n) != 0, or None.  Dual scan used by the dq route."""
    for n in range(f.horizon):
        if f.value(n) != 0:
            return n
    return None


def mu_budgeted(f: OpaqueSequence | PresentedSequence,
                budget: int = DEFAULT_BUDGET) -> Found | NoneBelowBudget:
    """Bounded search on an opaque view: scan indices below budget."""
    if isinstance(f, PresentedSequence):
        f = f.as_opaque()
    for n in range(budget):
        if f.value(n) == 0:
            return Found(n)
    return NoneBelowBudget(budget)


POINTWISE_OPS: dict[str, Callable[[int, int], int]] = {
    "add": lambda a, b: a + b,
    "mul": lambda a, b: a * b,
    "max": max,
    "min": min,
    "eq-indicator": lambda a, b: 1 if a == b else 0,
    "neq-indicator": lambda a, b: 1 if a != b else 0,
}


def pointwise_combine(op: str, a: PresentedSequence,
                      b: PresentedSequence) -> PresentedSequence:
    """Combine two presented sequences pointwise; the result is presented.

    The raw result has prefix length max of the inputs and period the lcm
    of the input periods; canonicalization may shrink both.
    """
    try:
        fn = POINTWISE_OPS[op]
    except KeyError:
        raise ValueError(f"unknown pointwise op {op!r}") from None
    np = max(len(a.prefix), len(b.prefix))
    nt = lcm(len(a.tail), len(b.tail))
    vals = [fn(a.value(i), b.value(i)) for i in range(np + nt)]
    return PresentedSequence(tuple(vals[:np]), tuple(vals[np:]))


def shift(s: PresentedSequence, k: int) -> PresentedSequence:
    """Drop the first k values."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if k <= len(s.prefix):
        rest = s.prefix[k:]
        return PresentedSequence(rest, s.tail)
    r = (k - len(s.prefix)) % len(s.tail)
    return PresentedSequence((), s.tail[r:] + s.tail[:r])


_SEQ_RE = re.compile(r"^prefix=\[([0-9,]*)\];tail=\[([0-9,]*)\]$")


def parse_sequence(text: str) -> PresentedSequence:
    """Parse 'prefix=[a,b,...];tail=[c,...]'.  Whitespace is ignored."""
    compact = "".join(text.split())
    m = _SEQ_RE.match(compact)
    if not m:
        raise ParseError(f"bad sequence syntax: {text!r}")

    def ints(group: str) -> tuple[int, ...]:
        if not group:
            return ()
        if group.startswith(",") or group.endswith(",") or ",," in group:
            raise ParseError(f"bad number list in {text!r}")
        return tuple(int(v) for v in group.split(","))

    prefix, tail = ints(m.group(1)), ints(m.group(2))
    if not tail:
        raise ParseError("tail must be nonempty")
    return PresentedSequence(prefix, tail)


def format_sequence(s: PresentedSequence) -> str:
    p = ",".join(str(v) for v in s.prefix)
    t = ",".join(str(v) for v in s.tail)
    return f"prefix=[{p}];tail=[{t}]"
