"""Recovering the least-zero search from discontinuous functionals.

Each route feeds a flag-dependent counterexample pair to a functional
that could not exist continuously (a binary expander, an infinite path
finder, a root finder, a rational/irrational decider), watches how far
the instrumented run looked, and recovers the flag's zero below that
bound.  The point is quantitative: the witness is small and certified.
"""

from __future__ import annotations

from mulab import (
    PresentedSequence,
    format_sequence,
    ubin_extraction,
    udq_extraction,
    uivt_extraction,
    uwwkl_extraction,
    weierstrass_counterexample,
)


def show(f: PresentedSequence) -> None:
    # ubin/wwkl/ivt hunt the first zero; dq decodes the first nonzero
    # from the rational value of its series, so its witness differs
    print("flag:", format_sequence(f))
    for run in (ubin_extraction, uwwkl_extraction, uivt_extraction,
                udq_extraction):
        rep = run(f)
        bound = "-" if rep.search_bound is None else rep.search_bound
        witness = "-" if rep.witness is None else rep.witness
        print(f"  {rep.route:<5} fired={str(rep.fired):<5} "
              f"witness={witness:<4} bound={bound}")


def main() -> None:
    show(PresentedSequence((1, 1, 1), (0,)))       # zero at 3
    print()
    show(PresentedSequence((1,) * 7 + (0,), (1,)))  # zero at 7
    print()
    show(PresentedSequence((), (2,)))               # no zero, nonzero at 0

    # the maximum-location pair tells the same story without a bound:
    # the two argmax answers split exactly when the flag fires
    f = PresentedSequence((1, 1, 1), (0,))
    plus, minus = weierstrass_counterexample(f)
    print("\ntwo-bump argmax locations for a firing flag:",
          plus.argmax(), "versus", minus.argmax())
    plus, minus = weierstrass_counterexample(PresentedSequence((), (2,)))
    print("and for a quiet flag:", plus.argmax(), "versus", minus.argmax())


if __name__ == "__main__":
    main()
