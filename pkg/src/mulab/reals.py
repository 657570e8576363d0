"""Fast-converging Cauchy reals with symbolic presentations.

A real here is an approximation rule n -> q_n (exact rationals, with
|q_n - q_{n+i}| < 2^-n) together with a presentation: a symbolic
descriptor from a small closed algebra (rational constants, flag-driven
dyadic series, sums, scalings).  Comparisons are decided exactly from
presentations; the flag-driven cases reduce to a mu search on the
presented flag sequence, which is the whole point of the class.

Flag convention, used artifact-wide except where a construction says
otherwise: a flag event at m means f(m) = 0, so flag searches line up
with mu.  The dq series is the documented exception (it fires on the
first nonzero value).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import UnsupportedPresentation
from .sequences import PresentedSequence, mu_exact, pointwise_combine

__all__ = [
    "Presentation",
    "PRational",
    "PCumFlagSeries",
    "PDqSeries",
    "PSum",
    "PScale",
    "FastCauchyReal",
    "MuOp",
    "from_rational",
    "dyadic_flag_real",
    "counterexample_pair",
    "dq_real",
    "presented_sum",
    "presented_scale",
    "approx",
    "real_eq",
    "real_lt",
    "real_sign",
    "to_decimal",
]

MuOp = Callable[[PresentedSequence], "int | None"]

_ZERO_SEQ = PresentedSequence((), (0,))


def _first_nonzero_via(mu: MuOp, f: PresentedSequence) -> int | None:
    # eq-indicator against the zero sequence is 0 exactly where f is nonzero
    return mu(pointwise_combine("eq-indicator", f, _ZERO_SEQ))


class Presentation:
    """Base class for symbolic presentations."""

    def approx(self, n: int) -> Fraction:
        raise NotImplementedError

    def exact_value(self, mu: MuOp) -> Fraction:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class PRational(Presentation):
    value: Fraction

    def approx(self, n: int) -> Fraction:
        return self.value

    def exact_value(self, mu: MuOp) -> Fraction:
        return self.value

    def describe(self) -> str:
        return f"rational({self.value})"


@dataclass(frozen=True)
class PCumFlagSeries(Presentation):
    """delta(f) = sum over n >= 1 of c_n 2^-n, c_n = 1 iff f hits 0 at or below n.

    Closed form: 0 when f never hits zero, else 2^(1 - max(m0, 1)) where
    m0 is the first zero.  Approximations scan two indices past n, so the
    value is emitted exactly as soon as the flag's fate is visible.
    """

    flag: PresentedSequence

    def _closed_form(self, m0: int | None) -> Fraction:
        if m0 is None:
            return Fraction(0)
        return Fraction(1, 1 << (max(m0, 1) - 1))

    def approx(self, n: int) -> Fraction:
        for m in range(n + 2):
            if self.flag.value(m) == 0:
                return self._closed_form(m)
        return Fraction(0)

    def exact_value(self, mu: MuOp) -> Fraction:
        return self._closed_form(mu(self.flag))

    def describe(self) -> str:
        return f"flagdelta({self.flag})"


@dataclass(frozen=True)
class PDqSeries(Presentation):
    """sum over n >= 1 of h(n) 2^-n with h(n) = 1 iff f is zero below n.

    Equals 1 when f is never nonzero and 1 - 2^-m0 when the first nonzero
    sits at m0 (so a nonzero at position 0 gives exactly 0).
    """

    flag: PresentedSequence

    def _closed_form(self, m0: int | None) -> Fraction:
        if m0 is None:
            return Fraction(1)
        return 1 - Fraction(1, 1 << m0)

    def approx(self, n: int) -> Fraction:
        for m in range(n + 2):
            if self.flag.value(m) != 0:
                return self._closed_form(m)
        return 1 - Fraction(1, 1 << (n + 2))

    def exact_value(self, mu: MuOp) -> Fraction:
        return self._closed_form(_first_nonzero_via(mu, self.flag))

    def describe(self) -> str:
        return f"dqseries({self.flag})"


@dataclass(frozen=True)
class PSum(Presentation):
    left: Presentation
    right: Presentation

    def approx(self, n: int) -> Fraction:
        return self.left.approx(n + 2) + self.right.approx(n + 2)

    def exact_value(self, mu: MuOp) -> Fraction:
        return self.left.exact_value(mu) + self.right.exact_value(mu)

    def describe(self) -> str:
        return f"sum({self.left.describe()}, {self.right.describe()})"


@dataclass(frozen=True)
class PScale(Presentation):
    factor: Fraction
    arg: Presentation

    def _shift(self) -> int:
        k = 0
        c = abs(self.factor)
        while c > (1 << k):
            k += 1
        return k

    def approx(self, n: int) -> Fraction:
        return self.factor * self.arg.approx(n + self._shift())

    def exact_value(self, mu: MuOp) -> Fraction:
        return self.factor * self.arg.exact_value(mu)

    def describe(self) -> str:
        return f"scale({self.factor}, {self.arg.describe()})"


@dataclass(frozen=True, eq=False)
class FastCauchyReal:
    """approx rule plus optional presentation.

    Use real_eq / real_lt for comparisons; == is object identity on
    purpose, extensional equality of reals is not structural.
    """

    presentation: Presentation | None
    approx_override: Callable[[int], Fraction] | None = None
    label: str = ""

    def approx(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("negative precision index")
        if self.approx_override is not None:
            return self.approx_override(n)
        if self.presentation is None:
            raise UnsupportedPresentation("real has neither rule nor presentation")
        return self.presentation.approx(n)

    def exact_value(self, mu: MuOp = mu_exact) -> Fraction:
        if self.presentation is None:
            raise UnsupportedPresentation(
                f"no presentation for exact decision on {self.label or 'real'}")
        return self.presentation.exact_value(mu)

    def describe(self) -> str:
        if self.presentation is None:
            return self.label or "opaque-real"
        return self.presentation.describe()


def from_rational(q: Fraction | int | str) -> FastCauchyReal:
    return FastCauchyReal(PRational(Fraction(q)))


def dyadic_flag_real(f: PresentedSequence, mode: str) -> FastCauchyReal:
    """1/2 + delta(f) for mode '+', 1/2 - delta(f) for mode '-'."""
    if mode in ("+", "plus"):
        sign = Fraction(1)
    elif mode in ("-", "minus"):
        sign = Fraction(-1)
    else:
        raise ValueError(f"mode must be '+' or '-', got {mode!r}")
    pres = PSum(PRational(Fraction(1, 2)), PScale(sign, PCumFlagSeries(f)))
    return FastCauchyReal(pres)


def counterexample_pair(f: PresentedSequence) -> tuple[FastCauchyReal, FastCauchyReal]:
    """(1/2 - delta(f), 1/2 + delta(f)): equal iff f never hits zero."""
    return dyadic_flag_real(f, "-"), dyadic_flag_real(f, "+")


def dq_real(f: PresentedSequence) -> FastCauchyReal:
    return FastCauchyReal(PDqSeries(f))


def _require_presentation(x: FastCauchyReal) -> Presentation:
    if x.presentation is None:
        raise UnsupportedPresentation(
            f"operation needs a presentation, got {x.label or 'opaque real'}")
    return x.presentation


def presented_sum(x: FastCauchyReal, y: FastCauchyReal) -> FastCauchyReal:
    return FastCauchyReal(PSum(_require_presentation(x), _require_presentation(y)))


def presented_scale(c: Fraction | int, x: FastCauchyReal) -> FastCauchyReal:
    return FastCauchyReal(PScale(Fraction(c), _require_presentation(x)))


def approx(x: FastCauchyReal, k: int) -> Fraction:
    return x.approx(k)


def real_eq(x: FastCauchyReal, y: FastCauchyReal, mu: MuOp = mu_exact) -> bool:
    """Exact equality via the symbolic difference of presentations."""
    diff = PSum(_require_presentation(x), PScale(Fraction(-1), _require_presentation(y)))
    return diff.exact_value(mu) == 0


def real_lt(x: FastCauchyReal, y: FastCauchyReal, mu: MuOp = mu_exact) -> bool:
    """Exact strict order; when it holds, a strict-gap witness is located."""
    xv = x.exact_value(mu)
    yv = y.exact_value(mu)
    if xv >= yv:
        return False
    n = 1
    while not (x.approx(n) + Fraction(1, 1 << (n - 1)) < y.approx(n)):
        n += 1
        if n > 4 * (yv - xv).denominator.bit_length() + 64:
            raise AssertionError("gap witness search overran its bound")
    return True


def real_sign(x: FastCauchyReal, mu: MuOp = mu_exact) -> int:
    v = x.exact_value(mu)
    return (v > 0) - (v < 0)


def to_decimal(x: FastCauchyReal, digits: int = 8) -> str:
    """Decimal rendering at the requested precision (round half up)."""
    bits = int(digits * 3.33) + 4
    q = x.approx(bits)
    scaled = q * 10**digits
    whole = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if whole < 0 else ""
    whole = abs(whole)
    return f"{sign}{whole // 10**digits}.{whole % 10**digits:0{digits}d}"
