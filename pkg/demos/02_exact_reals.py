"""Fast-converging reals whose equality hides a search problem.

The pair (1/2 - delta, 1/2 + delta) built from a flag sequence is the
package's favorite gadget: the two reals are equal exactly when the
flag never hits zero, and strictly ordered as soon as it does.  Both
facts are decided exactly, never by floating point.
"""

from __future__ import annotations

from mulab import (
    PresentedSequence,
    counterexample_pair,
    format_sequence,
    real_eq,
    real_lt,
    to_decimal,
)


def show(f: PresentedSequence) -> None:
    lo, hi = counterexample_pair(f)
    print("flag          :", format_sequence(f))
    print("  x-          :", to_decimal(lo), f"(exactly {lo.exact_value()})")
    print("  x+          :", to_decimal(hi), f"(exactly {hi.exact_value()})")
    print("  x- equals x+:", real_eq(lo, hi))
    print("  x- below x+ :", real_lt(lo, hi))


def main() -> None:
    show(PresentedSequence((), (3,)))          # never fires
    print()
    show(PresentedSequence((1, 1, 1), (0,)))   # fires at 3
    print()
    show(PresentedSequence((1,) * 10, (0,)))   # fires at 10

    # approximations are exact rationals obeying |q_n - q_m| < 2^-n
    _, hi = counterexample_pair(PresentedSequence((1,) * 6 + (0,), (1,)))
    print("\napproximation column of x+ for a flag firing at 6:")
    for n in (0, 2, 4, 6, 8):
        print(f"  q_{n} = {hi.approx(n)}")


if __name__ == "__main__":
    main()
