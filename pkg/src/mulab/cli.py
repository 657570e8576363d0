"""Command line front end.

Every subcommand prints a RunReport: a flat block of ``key: value``
lines (or the same fields as JSON under ``--json``) that the module can
parse back.  Exit codes: 0 on success, 1 when a stated property fails
on the given input (bound violations, malformed witnesses, exhausted
budgets, measure-zero trees), 2 on unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import corpus_stats, flag_corpus
from .errors import (
    BoundViolation,
    BudgetExceeded,
    MalformedWitness,
    MeasureZero,
    MulabError,
    NotNormalizable,
    ParseError,
)
from .extractors import (
    flag_epsilon,
    udq_extraction,
    ubin_extraction,
    uivt_extraction,
    uwwkl_extraction,
    weierstrass_counterexample,
)
from .formulas import (
    extraction_obligation,
    format_formula,
    format_type,
    parse_formula,
    relativize_st,
    to_normal_form,
)
from .functionals import catalog_functional, omega_fan
from .reals import counterexample_pair
from .sequences import format_sequence, mu_exact, parse_sequence
from .trees import format_tree, parse_tree, scf_check

__all__ = ["RunReport", "main", "console_main"]

_INPUT_ERRORS = (ParseError, ValueError)
_PROPERTY_ERRORS = (BoundViolation, MalformedWitness, BudgetExceeded,
                    MeasureZero, NotNormalizable)


class RunReport:
    """Ordered key/value lines; every field is a string."""

    def __init__(self, command: str, fields: tuple[tuple[str, str], ...]):
        self.command = command
        self.fields = fields

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, RunReport)
                and self.command == other.command
                and self.fields == other.fields)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"{k}: {v}" for k, v in self.fields]
        return "\n".join(lines)

    def to_json(self) -> str:
        data = {"command": self.command}
        data.update({k: v for k, v in self.fields})
        return json.dumps(data, indent=2)

    @classmethod
    def parse(cls, text: str) -> "RunReport":
        command = None
        fields = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            key, sep, value = line.partition(": ")
            if not sep:
                raise ParseError(f"not a report line: {raw!r}")
            if key == "command" and command is None:
                command = value
            else:
                fields.append((key, value))
        if command is None:
            raise ParseError("report has no command line")
        return cls(command, tuple(fields))


def _report(command: str, *fields: tuple[str, object]) -> RunReport:
    return RunReport(command, tuple((k, str(v)) for k, v in fields))


def _fmt_witness(w: int | None) -> str:
    return "none" if w is None else str(w)


def _run_ubin(args: argparse.Namespace) -> RunReport:
    f = parse_sequence(args.flag)
    rep = ubin_extraction(f)
    x_minus, x_plus = counterexample_pair(f)
    return _report(
        "ubin",
        ("flag", format_sequence(f)),
        ("x_minus", x_minus.exact_value()),
        ("x_plus", x_plus.exact_value()),
        ("digit_minus", rep.details.get("digit_minus", "skipped")),
        ("digit_plus", rep.details.get("digit_plus", "skipped")),
        ("fired", rep.fired),
        ("xi_bound", _fmt_witness(rep.xi_bound)),
        ("search_bound", _fmt_witness(rep.search_bound)),
        ("witness", _fmt_witness(rep.witness)),
        ("mu_exact", _fmt_witness(mu_exact(f))),
        ("agrees_with_direct_search", rep.witness == mu_exact(f)),
    )


def _run_wwkl(args: argparse.Namespace) -> RunReport:
    f = parse_sequence(args.flag)
    rep = uwwkl_extraction(f)
    fields = [("flag", format_sequence(f)), ("fired", rep.fired)]
    if "path0" in rep.details:
        fields.append(("path0", format_sequence(rep.details["path0"])))
        fields.append(("path1", format_sequence(rep.details["path1"])))
    fields += [
        ("xi_bound", _fmt_witness(rep.xi_bound)),
        ("search_bound", _fmt_witness(rep.search_bound)),
        ("witness", _fmt_witness(rep.witness)),
        ("mu_exact", _fmt_witness(mu_exact(f))),
        ("agrees_with_direct_search", rep.witness == mu_exact(f)),
    ]
    return _report("wwkl", *fields)


def _run_ivt(args: argparse.Namespace) -> RunReport:
    f = parse_sequence(args.flag)
    rep = uivt_extraction(f)
    eps = flag_epsilon(f)
    fields = [("flag", format_sequence(f)), ("epsilon", eps)]
    if "root_plus" in rep.details:
        fields.append(("root_plus_approx", rep.details["root_plus"]))
        fields.append(("root_minus_approx", rep.details["root_minus"]))
    fields += [
        ("fired", rep.fired),
        ("xi_bound", _fmt_witness(rep.xi_bound)),
        ("search_bound", _fmt_witness(rep.search_bound)),
        ("witness", _fmt_witness(rep.witness)),
        ("mu_exact", _fmt_witness(mu_exact(f))),
        ("agrees_with_direct_search", rep.witness == mu_exact(f)),
    ]
    return _report("ivt", *fields)


def _run_dq(args: argparse.Namespace) -> RunReport:
    f = parse_sequence(args.flag)
    rep = udq_extraction(f)
    return _report(
        "dq",
        ("flag", format_sequence(f)),
        ("value", rep.details["witness_value"]),
        ("certificate", rep.details["certificate"]),
        ("fired", rep.fired),
        ("witness", _fmt_witness(rep.witness)),
    )


def _run_weier(args: argparse.Namespace) -> RunReport:
    f = parse_sequence(args.flag)
    plus, minus = weierstrass_counterexample(f)
    a_plus = plus.argmax()
    a_minus = minus.argmax()
    return _report(
        "weier",
        ("flag", format_sequence(f)),
        ("epsilon", flag_epsilon(f)),
        ("argmax_plus", a_plus),
        ("argmax_minus", a_minus),
        ("argmaxes_equal", a_plus == a_minus),
        ("event", mu_exact(f) is not None),
    )


def _run_fan(args: argparse.Namespace) -> RunReport:
    g = catalog_functional(args.functional)
    bound = omega_fan(g, node_budget=args.budget)
    fields = [("functional", args.functional), ("fan_bound", bound),
              ("node_budget", args.budget)]
    if args.tree is not None:
        tree = parse_tree(args.tree)
        scf = scf_check(g, tree, node_budget=args.budget)
        fields += [
            ("tree", format_tree(tree)),
            ("cover_bound", scf.bound),
            ("cover_size", scf.cover_size),
            ("antecedent", scf.antecedent),
            ("consequent", scf.consequent),
            ("implication", scf.implication),
        ]
        if not scf.implication:
            raise BoundViolation("special cover implication failed")
    return _report("fan", *fields)


def _run_normalize(args: argparse.Namespace) -> RunReport:
    text = args.formula
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            text = fh.read()
    formula = parse_formula(text)
    if args.relativize:
        formula = relativize_st(formula)
    nf, trace = to_normal_form(formula)
    return _report(
        "normalize",
        ("source", format_formula(formula)),
        ("steps", " ".join(trace.rules()) if trace.steps else "none"),
        ("certificate", trace.certificate),
        ("foralls", " ".join(f"{v}:{format_type(t)}"
                             for v, t in nf.foralls) or "none"),
        ("exists", " ".join(f"{v}:{format_type(t)}"
                            for v, t in nf.exists) or "none"),
        ("matrix", format_formula(nf.matrix)),
        ("normal_form", format_formula(nf.to_formula())),
        ("obligation", format_formula(extraction_obligation(nf))),
    )


def _run_corpus(args: argparse.Namespace) -> RunReport:
    corpus = flag_corpus(seed=args.seed, size=args.size)
    stats = corpus_stats(corpus)
    return _report("corpus", ("seed", args.seed),
                   *sorted(stats.items()))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mulab",
        description="search operators, counterexample pairs, and the "
                    "normal form engine behind them")
    parser.add_argument("--json", action="store_true",
                        help="emit the report as JSON")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for anything randomized (default 0)")
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # subcommand default from overwriting a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
            ("ubin", "binary expansion route"),
            ("wwkl", "tree path route"),
            ("ivt", "intermediate value route"),
            ("dq", "rational witness route"),
            ("weier", "maximum location pair")):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("--flag", required=True,
                       help="flag sequence, e.g. 'prefix=[1,1,1,0];tail=[1]'")

    p = sub.add_parser("fan", help="branch-on-demand bounds", parents=[common])
    p.add_argument("--functional", required=True,
                   help="catalog name, e.g. max:4 or ifz:3:1:2 or f0+f1")
    p.add_argument("--tree", default=None,
                   help="optional tree for the special cover check")
    p.add_argument("--budget", type=int, default=1 << 20)

    p = sub.add_parser("normalize", help="drive a formula to normal form",
                       parents=[common])
    p.add_argument("--formula", required=True,
                   help="formula text or a path to a file holding one")
    p.add_argument("--relativize", action="store_true",
                   help="mark quantifiers standard before normalizing")

    p = sub.add_parser("corpus", help="describe the seeded flag corpus",
                       parents=[common])
    p.add_argument("--size", type=int, default=120)

    return parser


_RUNNERS = {
    "ubin": _run_ubin,
    "wwkl": _run_wwkl,
    "ivt": _run_ivt,
    "dq": _run_dq,
    "weier": _run_weier,
    "fan": _run_fan,
    "normalize": _run_normalize,
    "corpus": _run_corpus,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = _RUNNERS[args.command](args)
    except _PROPERTY_ERRORS as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except MulabError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
