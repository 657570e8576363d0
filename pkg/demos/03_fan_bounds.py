"""Moduli for type-two functionals by branch-on-demand replay.

A single traced run of a functional is not a sound modulus: a body can
branch on an early query and only reach its deep queries on the other
branch.  Replaying over all binary answer maps closes that gap, and the
resulting bound feeds the special-cover check against presented trees.
"""

from __future__ import annotations

from mulab import (
    PresentedSequence,
    TracedFunctional,
    catalog_functional,
    omega_fan,
    scf_check,
    theta_special,
    parse_tree,
)


def main() -> None:
    for spec in ("const:5", "proj:3", "sum:4", "ifz:3:1:2", "f0+f1+1"):
        g = catalog_functional(spec)
        print(f"{spec:<10} fan bound = {omega_fan(g)}")

    # the adaptive trap: on all-zeros this body touches only index 0
    gate = TracedFunctional("gate", lambda view: view(5) if view(0) == 1 else 0)
    _, trace = gate.eval_traced(PresentedSequence((), (0,)))
    print("\nadaptive body, single-run trace :", sorted(trace))
    print("adaptive body, replayed bound   :", omega_fan(gate))
    a = PresentedSequence((1, 0, 0, 0, 0, 0), (0,))
    b = PresentedSequence((1, 0, 0, 0, 0, 1), (1,))
    print("inputs equal below the naive bound give",
          gate(a), "versus", gate(b))

    theta = theta_special(catalog_functional("sum:3"))
    print("\nsum:3 cover bound", theta.bound,
          "with", len(theta.cover), "prefixes")

    tree = parse_tree("truncate:1:full")
    report = scf_check(catalog_functional("const:2"), tree)
    print("\nspecial cover versus truncate:1:full")
    print("  antecedent :", report.antecedent)
    print("  consequent :", report.consequent)
    print("  implication:", report.implication)


if __name__ == "__main__":
    main()
