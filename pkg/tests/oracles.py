"""Independent recomputations backing the expected values in the tests.

Everything here works on plain lists and Fractions, deliberately
avoiding the library's own closed forms, so a test comparing against
these functions checks the implementation rather than echoing it.
"""

from __future__ import annotations

from fractions import Fraction


def unroll(prefix, tail, count):
    """Literal expansion of prefix-then-repeated-tail."""
    out = []
    i = 0
    while len(out) < count:
        if i < len(prefix):
            out.append(prefix[i])
        else:
            out.append(tail[(i - len(prefix)) % len(tail)])
        i += 1
    return out


def scan_first_zero(values):
    for i, v in enumerate(values):
        if v == 0:
            return i
    return None


def scan_first_nonzero(values):
    for i, v in enumerate(values):
        if v != 0:
            return i
    return None


def delta_sum(values, terms=64):
    """Sum over n >= 1 of c_n 2^-n, c_n = 1 iff the list has a zero at or
    below n.  The list must decide its fate within `terms` entries."""
    first_zero = scan_first_zero(values[: terms + 1])
    total = Fraction(0)
    for n in range(1, terms + 1):
        if first_zero is not None and first_zero <= n:
            total += Fraction(1, 2 ** n)
    if first_zero is not None:
        total += Fraction(1, 2 ** terms)  # ones continue forever
    return total


def dq_sum(values, terms=64):
    """Sum over n >= 1 of h_n 2^-n, h_n = 1 iff every entry below n is
    zero."""
    first_nz = scan_first_nonzero(values[: terms + 1])
    total = Fraction(0)
    for n in range(1, terms + 1):
        if first_nz is None or first_nz >= n:
            total += Fraction(1, 2 ** n)
    if first_nz is None:
        total += Fraction(1, 2 ** terms)
    return total


def binary_digits(q: Fraction, k: int) -> list[int]:
    """Greedy binary digits by doubling, ties rounding up."""
    x = Fraction(q)
    digits = []
    for _ in range(k):
        x *= 2
        d = 1 if x >= 1 else 0
        x -= d
        digits.append(d)
    return digits


def level_set(tree, n: int) -> set[int]:
    """Brute enumeration of one tree level by membership queries."""
    return {v for v in range(1 << n) if tree.member(n, v)}
