"""Presented sequences and the least-zero search.

A presented sequence is a finite prefix followed by a repeating tail.
Because the tail repeats, asking "is there a zero anywhere?" is
decidable: scan the prefix and one full period.  Everything else in
this package leans on that one decidable search.
"""

from __future__ import annotations

from mulab import (
    Found,
    NoneBelowBudget,
    OpaqueSequence,
    PresentedSequence,
    format_sequence,
    mu_budgeted,
    mu_exact,
)


def main() -> None:
    f = PresentedSequence((5, 1, 2, 2), (7, 0, 3))
    print("sequence      :", format_sequence(f))
    print("first values  :", f.values(12))
    print("first zero    :", mu_exact(f))

    # canonicalization: tails reduce to their shortest period, and
    # prefix entries that merely repeat the tail get absorbed into it
    g = PresentedSequence((9, 4, 4), (4, 4))
    print("\nraw form      : prefix=[9,4,4];tail=[4,4]")
    print("canonical     :", format_sequence(g))

    quiet = PresentedSequence((), (1,))
    print("\nno-zero tail  :", format_sequence(quiet), "->", mu_exact(quiet))

    # a sequence given only as a black-box rule gets a budgeted search
    opaque = OpaqueSequence(lambda n: 1 if n != 90 else 0)
    for budget in (50, 200):
        answer = mu_budgeted(opaque, budget=budget)
        if isinstance(answer, Found):
            print(f"budget {budget:>3}    : found zero at {answer.index}")
        elif isinstance(answer, NoneBelowBudget):
            print(f"budget {budget:>3}    : nothing below {answer.budget}")


if __name__ == "__main__":
    main()
