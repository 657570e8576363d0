"""A small formula language with a standardness marker and the rewrite
engine that drives marked formulas into a two-block normal form.

Formulas are S-expressions over typed quantifiers.  Types are the base
number type 0, arrow types, and finite-sequence types tau*; a bare digit
n abbreviates the pure type n -> (n-1 -> (... -> 0)).  Quantifiers may
carry the marker ``st`` restricting them to standard objects, and the
bounded form ``(ex-in x w body)`` ranges over entries of the sequence w.

``to_normal_form`` repeatedly applies local rewrites, highest priority
first and outermost first within a priority, until the formula reads as
a block of marked universals, then a block of marked existentials, then
a marker-free matrix.  Every step records the path it fired at together
with the exact subformula before and after, so a trace can be replayed
against the source formula.  Steps are equivalences except for the
marker-dropping rule, which only preserves truth top-down; a trace's
certificate says which kind the whole run is.
"""

from __future__ import annotations

from dataclasses import dataclass, replace as _dc_replace
from typing import Callable, Iterator, Union

from .errors import FormulaScopeError, NotNormalizable, ParseError

__all__ = [
    "Base", "Arrow", "Seq", "Type", "parse_type", "format_type",
    "App", "Term", "Atom", "Not", "And", "Or", "Implies", "Quant", "ExIn",
    "Formula", "parse_formula", "format_formula", "free_names",
    "is_internal", "relativize_st", "alpha_equal",
    "RuleStep", "RuleTrace", "NormalForm", "to_normal_form", "replay",
    "extraction_obligation", "subformula_at", "replace_at",
]


# ---------------------------------------------------------------------------
# types

@dataclass(frozen=True)
class Base:
    pass


@dataclass(frozen=True)
class Arrow:
    left: "Type"
    right: "Type"


@dataclass(frozen=True)
class Seq:
    inner: "Type"


Type = Union[Base, Arrow, Seq]


def _pure_degree(t: Type) -> int | None:
    if isinstance(t, Base):
        return 0
    if isinstance(t, Arrow) and isinstance(t.right, Base):
        d = _pure_degree(t.left)
        if d is not None:
            return d + 1
    return None


def format_type(t: Type) -> str:
    d = _pure_degree(t)
    if d is not None:
        return str(d)
    if isinstance(t, Seq):
        inner = format_type(t.inner)
        return f"({inner})*" if isinstance(t.inner, Arrow) and _pure_degree(t.inner) is None else f"{inner}*"
    if isinstance(t, Arrow):
        return f"({format_type(t.left)}->{format_type(t.right)})"
    raise AssertionError(f"unknown type {t!r}")


def _pure(n: int) -> Type:
    return Base() if n == 0 else Arrow(_pure(n - 1), Base())


def parse_type(text: str, where: str = "") -> Type:
    pos = 0

    def fail(msg: str) -> ParseError:
        ctx = f" in {where}" if where else ""
        return ParseError(f"bad type {text!r}{ctx}: {msg}")

    def unit() -> Type:
        nonlocal pos
        if pos >= len(text):
            raise fail("unexpected end")
        if text[pos] == "(":
            pos += 1
            t = arrow()
            if pos >= len(text) or text[pos] != ")":
                raise fail("missing ')'")
            pos += 1
        elif text[pos].isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            t = _pure(int(text[start:pos]))
        else:
            raise fail(f"unexpected {text[pos]!r}")
        while pos < len(text) and text[pos] == "*":
            pos += 1
            t = Seq(t)
        return t

    def arrow() -> Type:
        nonlocal pos
        left = unit()
        if text[pos:pos + 2] == "->":
            pos += 2
            return Arrow(left, arrow())
        return left

    t = arrow()
    if pos != len(text):
        raise fail(f"trailing {text[pos:]!r}")
    return t


# ---------------------------------------------------------------------------
# terms and formulas

@dataclass(frozen=True)
class App:
    head: str
    args: tuple["Term", ...]


Term = Union[str, App]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Quant:
    kind: str          # "all" or "ex"
    st: bool
    var: str
    vtype: Type
    body: "Formula"
    mono: bool = False  # marks bound variables the engine already bounded

    def __post_init__(self) -> None:
        if self.kind not in ("all", "ex"):
            raise ValueError(f"bad quantifier kind {self.kind!r}")


@dataclass(frozen=True)
class ExIn:
    var: str
    bound: Term
    body: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Quant, ExIn]


def _children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, Not):
        return (f.body,)
    if isinstance(f, (And, Or, Implies)):
        return (f.left, f.right)
    if isinstance(f, (Quant, ExIn)):
        return (f.body,)
    raise AssertionError(f"unknown node {f!r}")


def _with_children(f: Formula, kids: tuple[Formula, ...]) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(kids[0])
    if isinstance(f, (And, Or, Implies)):
        return type(f)(kids[0], kids[1])
    if isinstance(f, Quant):
        return _dc_replace(f, body=kids[0])
    if isinstance(f, ExIn):
        return _dc_replace(f, body=kids[0])
    raise AssertionError


def subformula_at(f: Formula, path: tuple[int, ...]) -> Formula:
    for i in path:
        kids = _children(f)
        if i >= len(kids):
            raise ValueError(f"path {path} leaves {type(f).__name__}")
        f = kids[i]
    return f


def replace_at(f: Formula, path: tuple[int, ...], new: Formula) -> Formula:
    if not path:
        return new
    kids = list(_children(f))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return _with_children(f, tuple(kids))


# ---------------------------------------------------------------------------
# parsing

@dataclass(frozen=True)
class _Tok:
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            col += 1
            i += 1
        elif c == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif c in "()":
            toks.append(_Tok(c, line, col))
            col += 1
            i += 1
        else:
            start = i
            startcol = col
            while i < len(text) and text[i] not in " \t\r\n();":
                i += 1
                col += 1
            toks.append(_Tok(text[start:i], line, startcol))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def fail(self, msg: str) -> ParseError:
        if self.pos < len(self.toks):
            t = self.toks[self.pos]
            return ParseError(f"line {t.line} col {t.col}: {msg} (at {t.text!r})")
        return ParseError(f"end of input: {msg}")

    def peek(self) -> _Tok | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> _Tok:
        t = self.peek()
        if t is None:
            raise self.fail("unexpected end")
        self.pos += 1
        return t

    def expect(self, text: str) -> None:
        t = self.next()
        if t.text != text:
            self.pos -= 1
            raise self.fail(f"expected {text!r}")

    def symbol(self) -> str:
        t = self.next()
        if t.text in ("(", ")"):
            self.pos -= 1
            raise self.fail("expected a symbol")
        return t.text

    def term(self) -> Term:
        t = self.next()
        if t.text == ")":
            self.pos -= 1
            raise self.fail("expected a term")
        if t.text != "(":
            return t.text
        self.expect("app")
        head = self.symbol()
        args: list[Term] = []
        while self.peek() and self.peek().text != ")":
            args.append(self.term())
        self.expect(")")
        if not args:
            raise self.fail("app needs at least one argument")
        return App(head, tuple(args))

    def binder(self) -> tuple[str, Type]:
        t = self.next()
        if ":" not in t.text:
            self.pos -= 1
            raise self.fail("expected var:type")
        var, _, ann = t.text.partition(":")
        if not var or not ann:
            self.pos -= 1
            raise self.fail("expected var:type")
        return var, parse_type(ann, where=t.text)

    def formula(self, scope: frozenset[str]) -> Formula:
        self.expect("(")
        head = self.symbol()
        if head == "atom":
            pred = self.symbol()
            args: list[Term] = []
            while self.peek() and self.peek().text != ")":
                args.append(self.term())
            self.expect(")")
            return Atom(pred, tuple(args))
        if head == "not":
            body = self.formula(scope)
            self.expect(")")
            return Not(body)
        if head in ("and", "or", "imp"):
            left = self.formula(scope)
            right = self.formula(scope)
            self.expect(")")
            cls = {"and": And, "or": Or, "imp": Implies}[head]
            return cls(left, right)
        if head in ("all", "ex"):
            st = False
            if self.peek() and self.peek().text == "st":
                st = True
                self.next()
            var, vtype = self.binder()
            if var in scope:
                raise FormulaScopeError(f"variable {var!r} rebound")
            body = self.formula(scope | {var})
            self.expect(")")
            return Quant(head, st, var, vtype, body)
        if head == "ex-in":
            var = self.symbol()
            if var in scope:
                raise FormulaScopeError(f"variable {var!r} rebound")
            bound = self.term()
            body = self.formula(scope | {var})
            self.expect(")")
            return ExIn(var, bound, body)
        self.pos -= 1
        raise self.fail(f"unknown form {head!r}")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula(frozenset())
    if p.peek() is not None:
        raise p.fail("trailing input")
    return f


def _term_str(t: Term) -> str:
    if isinstance(t, str):
        return t
    return "(app " + t.head + "".join(" " + _term_str(a) for a in t.args) + ")"


def format_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        return "(atom " + f.pred + "".join(" " + _term_str(a) for a in f.args) + ")"
    if isinstance(f, Not):
        return f"(not {format_formula(f.body)})"
    if isinstance(f, And):
        return f"(and {format_formula(f.left)} {format_formula(f.right)})"
    if isinstance(f, Or):
        return f"(or {format_formula(f.left)} {format_formula(f.right)})"
    if isinstance(f, Implies):
        return f"(imp {format_formula(f.left)} {format_formula(f.right)})"
    if isinstance(f, Quant):
        marker = "st " if f.st else ""
        return (f"({f.kind} {marker}{f.var}:{format_type(f.vtype)} "
                f"{format_formula(f.body)})")
    if isinstance(f, ExIn):
        return f"(ex-in {f.var} {_term_str(f.bound)} {format_formula(f.body)})"
    raise AssertionError


# ---------------------------------------------------------------------------
# basic queries

def _term_names(t: Term) -> Iterator[str]:
    if isinstance(t, str):
        yield t
    else:
        yield t.head
        for a in t.args:
            yield from _term_names(a)


def free_names(f: Formula) -> frozenset[str]:
    """Every symbol occurring in terms and not bound above its use."""

    def go(f: Formula, bound: frozenset[str]) -> Iterator[str]:
        if isinstance(f, Atom):
            for a in f.args:
                for n in _term_names(a):
                    if n not in bound:
                        yield n
        elif isinstance(f, Quant):
            yield from go(f.body, bound | {f.var})
        elif isinstance(f, ExIn):
            for n in _term_names(f.bound):
                if n not in bound:
                    yield n
            yield from go(f.body, bound | {f.var})
        else:
            for kid in _children(f):
                yield from go(kid, bound)

    return frozenset(go(f, frozenset()))


def _all_names(f: Formula) -> set[str]:
    names: set[str] = set()

    def go(f: Formula) -> None:
        if isinstance(f, Atom):
            names.add(f.pred)
            for a in f.args:
                names.update(_term_names(a))
        elif isinstance(f, Quant):
            names.add(f.var)
            go(f.body)
        elif isinstance(f, ExIn):
            names.add(f.var)
            names.update(_term_names(f.bound))
            go(f.body)
        else:
            for kid in _children(f):
                go(kid)

    go(f)
    return names


def is_internal(f: Formula) -> bool:
    """True when no quantifier carries the standardness marker."""
    if isinstance(f, Quant) and f.st:
        return False
    return all(is_internal(kid) for kid in _children(f))


def _term_mentions(t: Term, var: str) -> bool:
    return var in set(_term_names(t))


def _is_bounded_number_quant(q: Quant) -> bool:
    """Guarded number quantifiers that stay unmarked under relativization:
    (all n:0 (imp (atom leq n t) ...)) and (ex n:0 (and (atom leq n t) ...))."""
    if not isinstance(q.vtype, Base):
        return False
    b = q.body
    if q.kind == "all" and isinstance(b, Implies):
        guard = b.left
    elif q.kind == "ex" and isinstance(b, And):
        guard = b.left
    else:
        return False
    return (isinstance(guard, Atom) and guard.pred == "leq"
            and len(guard.args) == 2 and guard.args[0] == q.var
            and not _term_mentions(guard.args[1], q.var))


def relativize_st(f: Formula) -> Formula:
    """Mark every quantifier standard except guarded number quantifiers
    and sequence-entry quantifiers, which are bounded already."""
    if isinstance(f, Quant):
        body = relativize_st(f.body)
        st = not _is_bounded_number_quant(f)
        return Quant(f.kind, st, f.var, f.vtype, body, f.mono)
    kids = tuple(relativize_st(k) for k in _children(f))
    return _with_children(f, kids)


# ---------------------------------------------------------------------------
# substitution

def _subst_term(t: Term, var: str, rep: Term) -> Term:
    if isinstance(t, str):
        return rep if t == var else t
    head: str = t.head
    if head == var:
        if not isinstance(rep, str):
            raise NotNormalizable(
                f"cannot substitute applied term for head position {var!r}")
        head = rep
    return App(head, tuple(_subst_term(a, var, rep) for a in t.args))


def _subst(f: Formula, var: str, rep: Term) -> Formula:
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(_subst_term(a, var, rep) for a in f.args))
    if isinstance(f, Quant):
        if f.var == var:
            return f
        return _dc_replace(f, body=_subst(f.body, var, rep))
    if isinstance(f, ExIn):
        bound = _subst_term(f.bound, var, rep)
        body = f.body if f.var == var else _subst(f.body, var, rep)
        return ExIn(f.var, bound, body)
    return _with_children(f, tuple(_subst(k, var, rep) for k in _children(f)))


class _Names:
    def __init__(self, taken: set[str]):
        self.taken = set(taken)

    def fresh(self, base: str) -> str:
        name = base
        k = 2
        while name in self.taken:
            name = f"{base}{k}"
            k += 1
        self.taken.add(name)
        return name


# ---------------------------------------------------------------------------
# the rewrite rules

@dataclass(frozen=True)
class RuleStep:
    rule: str
    tag: str                      # "equivalence" or "implication"
    path: tuple[int, ...]
    before: Formula
    after: Formula


@dataclass(frozen=True)
class RuleTrace:
    steps: tuple[RuleStep, ...]

    @property
    def certificate(self) -> str:
        """"equivalence" when every step is invertible, else
        "implication": the source formula implies the result."""
        if any(s.tag == "implication" for s in self.steps):
            return "implication"
        return "equivalence"

    def rules(self) -> tuple[str, ...]:
        return tuple(s.rule for s in self.steps)


_EQ = "equivalence"
_IMP = "implication"


def _r1a(node: Formula, pol: int, names: _Names):
    """Marked existential antecedent becomes a marked universal outside."""
    if (isinstance(node, Implies) and isinstance(node.left, Quant)
            and node.left.kind == "ex" and node.left.st):
        q = node.left
        return Quant("all", True, q.var, q.vtype,
                     Implies(q.body, node.right)), _EQ
    return None


def _r2(node: Formula, pol: int, names: _Names):
    """Herbrandize: a marked forall-exists antecedent trades its inner
    existential for a fresh functional quantified outside."""
    if not isinstance(node, Implies):
        return None
    chain: list[tuple[str, Type]] = []
    cur = node.left
    while isinstance(cur, Quant) and cur.kind == "all" and cur.st:
        chain.append((cur.var, cur.vtype))
        cur = cur.body
    if not chain or not (isinstance(cur, Quant) and cur.kind == "ex" and cur.st):
        return None
    witness = cur
    ftype: Type = witness.vtype
    for _, vt in reversed(chain):
        ftype = Arrow(vt, ftype)
    base = witness.var.upper()
    fname = names.fresh(base if base != witness.var else "F" + witness.var)
    applied: Term = App(fname, tuple(v for v, _ in chain))
    inner: Formula = _subst(witness.body, witness.var, applied)
    for v, vt in reversed(chain):
        inner = Quant("all", True, v, vt, inner)
    return Quant("all", True, fname, ftype,
                 Implies(inner, node.right)), _EQ


def _r3(node: Formula, pol: int, names: _Names):
    """Drop the marker on a higher-type universal in antecedent position.
    The result is implied by the source but not equivalent to it."""
    if (pol < 0 and isinstance(node, Quant) and node.kind == "all"
            and node.st and not isinstance(node.vtype, Base)):
        return _dc_replace(node, st=False), _IMP
    return None


def _p4(node: Formula, pol: int, names: _Names):
    """Pull a marked universal out of a consequent."""
    if (isinstance(node, Implies) and isinstance(node.right, Quant)
            and node.right.kind == "all" and node.right.st):
        q = node.right
        return Quant("all", True, q.var, q.vtype,
                     Implies(node.left, q.body), mono=q.mono), _EQ
    return None


def _r1b(node: Formula, pol: int, names: _Names):
    """An antecedent block of marked number universals over an internal
    body collapses to one marked existential bound outside the
    implication, guarding the block with leq."""
    if not isinstance(node, Implies):
        return None
    chain: list[str] = []
    cur = node.left
    while (isinstance(cur, Quant) and cur.kind == "all" and cur.st
           and isinstance(cur.vtype, Base)):
        chain.append(cur.var)
        cur = cur.body
    if not chain or not is_internal(cur):
        return None
    bound = names.fresh("N")
    guarded = cur
    for v in reversed(chain):
        guarded = Quant("all", False, v, Base(),
                        Implies(Atom("leq", (v, bound)), guarded))
    return Quant("ex", True, bound, Base(),
                 Implies(guarded, node.right), mono=True), _EQ


def _r1c(node: Formula, pol: int, names: _Names):
    """A marked number existential in a consequent becomes a plain
    bounded search below a fresh marked bound outside the implication.
    The fresh bound is monotone, so it is never re-bounded."""
    if not (isinstance(node, Implies) and isinstance(node.right, Quant)):
        return None
    q = node.right
    if (q.kind != "ex" or not q.st or not isinstance(q.vtype, Base)
            or q.mono or not is_internal(q.body)):
        return None
    bound = names.fresh("i")
    inner = Quant("ex", False, q.var, Base(),
                  And(Atom("leq", (q.var, bound)), q.body))
    return Quant("ex", True, bound, Base(),
                 Implies(node.left, inner), mono=True), _EQ


def _p7(node: Formula, pol: int, names: _Names):
    """Pull a marked existential out of a consequent when it is higher
    type or already carries a monotone bound."""
    if not (isinstance(node, Implies) and isinstance(node.right, Quant)):
        return None
    q = node.right
    if q.kind != "ex" or not q.st:
        return None
    if isinstance(q.vtype, Base) and not q.mono:
        return None
    return Quant("ex", True, q.var, q.vtype,
                 Implies(node.left, q.body), mono=q.mono), _EQ


def _r4(node: Formula, pol: int, names: _Names):
    """Idealize: a plain universal over a block of marked existentials
    becomes marked existential sequences outside, with the block turned
    into entry-bounded searches.  Tuples are handled componentwise."""
    if not (isinstance(node, Quant) and node.kind == "all" and not node.st):
        return None
    block: list[tuple[str, Type]] = []
    cur = node.body
    while isinstance(cur, Quant) and cur.kind == "ex" and cur.st:
        block.append((cur.var, cur.vtype))
        cur = cur.body
    if not block or not is_internal(cur):
        return None
    seq_names = [names.fresh("w") for _ in block]
    inner: Formula = cur
    for (v, _vt), w in zip(reversed(block), reversed(seq_names)):
        inner = ExIn(v, w, inner)
    result: Formula = Quant("all", False, node.var, node.vtype, inner)
    for (v, vt), w in zip(reversed(block), reversed(seq_names)):
        result = Quant("ex", True, w, Seq(vt), result)
    return result, _EQ


def _p9(node: Formula, pol: int, names: _Names):
    """Push negation through marked quantifiers."""
    if isinstance(node, Not) and isinstance(node.body, Quant) and node.body.st:
        q = node.body
        dual = "all" if q.kind == "ex" else "ex"
        return Quant(dual, True, q.var, q.vtype, Not(q.body)), _EQ
    return None


_RULES: tuple[tuple[str, Callable], ...] = (
    ("R1a-flip-antecedent", _r1a),
    ("R2-herbrandize", _r2),
    ("R3-drop-st", _r3),
    ("forall-pull", _p4),
    ("R1b-bound-antecedent", _r1b),
    ("R1c-bound-consequent", _r1c),
    ("exists-pull", _p7),
    ("R4-idealize", _r4),
    ("not-push", _p9),
)


def _positions(f: Formula) -> Iterator[tuple[tuple[int, ...], Formula, int]]:
    def go(node: Formula, path: tuple[int, ...], pol: int):
        yield path, node, pol
        if isinstance(node, Implies):
            yield from go(node.left, path + (0,), -pol)
            yield from go(node.right, path + (1,), pol)
        elif isinstance(node, Not):
            yield from go(node.body, path + (0,), -pol)
        else:
            for i, kid in enumerate(_children(node)):
                yield from go(kid, path + (i,), pol)

    yield from go(f, (), 1)


@dataclass(frozen=True)
class NormalForm:
    foralls: tuple[tuple[str, Type], ...]
    exists: tuple[tuple[str, Type], ...]
    matrix: Formula

    def to_formula(self) -> Formula:
        f = self.matrix
        for v, t in reversed(self.exists):
            f = Quant("ex", True, v, t, f)
        for v, t in reversed(self.foralls):
            f = Quant("all", True, v, t, f)
        return f


_MAX_STEPS = 400


def to_normal_form(f: Formula) -> tuple[NormalForm, RuleTrace]:
    names = _Names(_all_names(f))
    steps: list[RuleStep] = []
    current = f
    for _ in range(_MAX_STEPS):
        fired = False
        for rule_name, rule in _RULES:
            for path, node, pol in _positions(current):
                hit = rule(node, pol, names)
                if hit is None:
                    continue
                after, tag = hit
                steps.append(RuleStep(rule_name, tag, path, node, after))
                current = replace_at(current, path, after)
                fired = True
                break
            if fired:
                break
        if not fired:
            break
    else:
        raise NotNormalizable(f"no fixed point within {_MAX_STEPS} steps")

    foralls: list[tuple[str, Type]] = []
    cur = current
    while isinstance(cur, Quant) and cur.kind == "all" and cur.st:
        foralls.append((cur.var, cur.vtype))
        cur = cur.body
    exists: list[tuple[str, Type]] = []
    while isinstance(cur, Quant) and cur.kind == "ex" and cur.st:
        exists.append((cur.var, cur.vtype))
        cur = cur.body
    if not is_internal(cur):
        raise NotNormalizable(
            "markers remain outside a forall-exists prefix: "
            + format_formula(cur))
    nf = NormalForm(tuple(foralls), tuple(exists), cur)
    return nf, RuleTrace(tuple(steps))


def replay(f: Formula, trace: RuleTrace) -> Formula:
    """Re-run a recorded trace against a source formula, checking each
    step's before-state exactly."""
    current = f
    for k, step in enumerate(trace.steps):
        found = subformula_at(current, step.path)
        if found != step.before:
            raise ValueError(
                f"replay step {k} ({step.rule}) expected "
                f"{format_formula(step.before)} at {step.path}, found "
                f"{format_formula(found)}")
        current = replace_at(current, step.path, step.after)
    return current


# ---------------------------------------------------------------------------
# alpha equality

def alpha_equal(f: Formula, g: Formula) -> bool:
    """Structural equality up to bound-variable names (the engine's
    monotone bookkeeping marker is ignored)."""

    def terms(a: Term, b: Term, ea: dict, eb: dict) -> bool:
        if isinstance(a, str) and isinstance(b, str):
            ia, ib = ea.get(a), eb.get(b)
            if (ia is None) != (ib is None):
                return False
            return ia == ib if ia is not None else a == b
        if isinstance(a, App) and isinstance(b, App):
            ha, hb = ea.get(a.head), eb.get(b.head)
            if (ha is None) != (hb is None):
                return False
            if ha is not None:
                if ha != hb:
                    return False
            elif a.head != b.head:
                return False
            return (len(a.args) == len(b.args)
                    and all(terms(x, y, ea, eb)
                            for x, y in zip(a.args, b.args)))
        return False

    def go(a: Formula, b: Formula, ea: dict, eb: dict, depth: int) -> bool:
        if type(a) is not type(b):
            return False
        if isinstance(a, Atom):
            return (a.pred == b.pred and len(a.args) == len(b.args)
                    and all(terms(x, y, ea, eb)
                            for x, y in zip(a.args, b.args)))
        if isinstance(a, Not):
            return go(a.body, b.body, ea, eb, depth)
        if isinstance(a, (And, Or, Implies)):
            return (go(a.left, b.left, ea, eb, depth)
                    and go(a.right, b.right, ea, eb, depth))
        if isinstance(a, Quant):
            if a.kind != b.kind or a.st != b.st or a.vtype != b.vtype:
                return False
            return go(a.body, b.body, {**ea, a.var: depth},
                      {**eb, b.var: depth}, depth + 1)
        if isinstance(a, ExIn):
            if not terms(a.bound, b.bound, ea, eb):
                return False
            return go(a.body, b.body, {**ea, a.var: depth},
                      {**eb, b.var: depth}, depth + 1)
        raise AssertionError

    return go(f, g, {}, {}, 0)


# ---------------------------------------------------------------------------
# extraction obligations

def extraction_obligation(nf: NormalForm) -> Formula:
    """The internal statement that realizes a normal form: plain
    universals over the forall block, then each existential witnessed
    inside a fresh term applied to the universals."""
    names = _Names(_all_names(nf.matrix)
                   | {v for v, _ in nf.foralls}
                   | {v for v, _ in nf.exists})
    single = len(nf.exists) == 1
    body = nf.matrix
    witness_names = [names.fresh("t" if single else f"t{j + 1}")
                     for j in range(len(nf.exists))]
    for (v, _t), w in zip(reversed(nf.exists), reversed(witness_names)):
        bound: Term = (App(w, tuple(x for x, _ in nf.foralls))
                       if nf.foralls else w)
        body = ExIn(v, bound, body)
    for v, t in reversed(nf.foralls):
        body = Quant("all", False, v, t, body)
    return body
