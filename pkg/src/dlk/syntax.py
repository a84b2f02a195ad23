"""Core syntax: justification terms, formulas, an ASCII grammar, and
size-ordered enumeration.

Grammar::

    term     t ::= NAME SIGN? | '[' t '.' t ']' | '[' t '+' t ']'
                 | '[' t '&' t ']' | '!' t
    formula  F ::= '_|_' | PROPVAR | '~' F | F '/\\' F | F '\\/' F
                 | F '->' F | t ':' F | '(' F ')'

Leaf names starting with a lowercase letter are justification symbols
(``a``-``e`` constants, ``f``-``z`` variables); names starting with an
uppercase letter are propositional variables.  ``:`` binds tighter than
the connectives, ``~`` tighter than the binary ones, ``/\\`` tighter
than ``\\/``, and ``->`` (right associative) binds loosest.  Signs are
``+``/``-`` suffixes on leaf names and appear only in signed syntax;
compound signs are computed, never stored.  A ``+``/``-`` after a leaf
is read as a sign exactly when an operator, ``]``, ``)``, ``:`` or the
end of input follows, so ``[x+y]`` is a sum while ``[x+ . y-]`` is an
application of signed leaves.

Identity of terms and formulas is structural: ``P /\\ P`` is a different
formula from ``P`` and ``t:P`` never coincides with ``t:(P /\\ P)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian

POSITIVE = "+"
NEGATIVE = "-"
UNSIGNED = ""


class ParseError(ValueError):
    """Malformed input; carries the offending character position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class SignViolation(ParseError):
    """Well-formed shape, but a sign constraint is broken."""


class SignDisciplineError(ValueError):
    """A compound term was built from incompatibly signed parts."""


# ---------------------------------------------------------------------------
# terms


class Term:
    __slots__ = ()


def _part_signs(what: str, left: Term, right: Term) -> tuple[str, str] | None:
    ls, rs = term_sign(left), term_sign(right)
    if ls is None or rs is None:  # schematic template, checked at instantiation
        return None
    if ls != rs:
        raise SignDisciplineError(f"{what} mixes signs {ls or 'none'!r} and {rs or 'none'!r}")
    return ls, rs


@dataclass(frozen=True)
class Const(Term):
    name: str
    sign: str = UNSIGNED


@dataclass(frozen=True)
class Var(Term):
    name: str
    sign: str = UNSIGNED


@dataclass(frozen=True)
class App(Term):
    left: Term
    right: Term

    def __post_init__(self):
        _part_signs("application", self.left, self.right)


@dataclass(frozen=True)
class Sum(Term):
    left: Term
    right: Term

    def __post_init__(self):
        _part_signs("sum", self.left, self.right)


@dataclass(frozen=True)
class Pair(Term):
    left: Term
    right: Term

    def __post_init__(self):
        signs = _part_signs("pairing", self.left, self.right)
        if signs is not None and signs[0] == POSITIVE:
            raise SignDisciplineError("pairing takes negative terms")


@dataclass(frozen=True)
class Bang(Term):
    inner: Term

    def __post_init__(self):
        if term_sign(self.inner) == NEGATIVE:
            raise SignDisciplineError("'!' takes a positive term")


@dataclass(frozen=True)
class TMeta(Term):
    """Term metavariable for axiom schemas; polarity constrains bindings."""

    name: str
    polarity: str = "any"  # any | pos | neg | sigma


def term_sign(t: Term) -> str | None:
    """Sign of a term, computed from its leaves; None for schematic terms."""
    match t:
        case Const(_, s) | Var(_, s):
            return s
        case App(l, _) | Sum(l, _):
            return term_sign(l)
        case Pair(l, _):
            s = term_sign(l)
            return s if s is None else (NEGATIVE if s == NEGATIVE else UNSIGNED)
        case Bang(i):
            s = term_sign(i)
            return s if s is None else (POSITIVE if s == POSITIVE else UNSIGNED)
        case TMeta():
            return None
    raise TypeError(f"not a term: {t!r}")


def term_size(t: Term) -> int:
    match t:
        case Const() | Var() | TMeta():
            return 1
        case Bang(i):
            return 1 + term_size(i)
        case App(l, r) | Sum(l, r) | Pair(l, r):
            return 1 + term_size(l) + term_size(r)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# formulas


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class PropVar(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Just(Formula):
    """A justified formula ``t:F``."""

    term: Term
    body: Formula


@dataclass(frozen=True)
class FMeta(Formula):
    """Formula metavariable for axiom schemas."""

    name: str


BOTTOM = Bottom()


def formula_size(f: Formula) -> int:
    match f:
        case Bottom() | PropVar() | FMeta():
            return 1
        case Not(b):
            return 1 + formula_size(b)
        case And(l, r) | Or(l, r) | Implies(l, r):
            return 1 + formula_size(l) + formula_size(r)
        case Just(t, b):
            return 1 + term_size(t) + formula_size(b)
    raise TypeError(f"not a formula: {f!r}")


def subterms(t: Term):
    """All subterms of t, t included."""
    yield t
    match t:
        case App(l, r) | Sum(l, r) | Pair(l, r):
            yield from subterms(l)
            yield from subterms(r)
        case Bang(i):
            yield from subterms(i)


def subformulas(f: Formula):
    """All subformulas of f, f included (terms are not descended into)."""
    yield f
    match f:
        case Not(b):
            yield from subformulas(b)
        case And(l, r) | Or(l, r) | Implies(l, r):
            yield from subformulas(l)
            yield from subformulas(r)
        case Just(_, b):
            yield from subformulas(b)


def formula_terms(f: Formula):
    """All terms occurring in justification position within f, with subterms."""
    for sub in subformulas(f):
        if isinstance(sub, Just):
            yield from subterms(sub.term)


# ---------------------------------------------------------------------------
# printing

_LVL_IMPLIES, _LVL_OR, _LVL_AND, _LVL_NOT, _LVL_JUST, _LVL_ATOM = 1, 2, 3, 4, 5, 6


def print_term(t: Term) -> str:
    match t:
        case Const(n, s) | Var(n, s):
            return n + s
        case App(l, r):
            return f"[{print_term(l)}.{print_term(r)}]"
        case Sum(l, r):
            return f"[{print_term(l)}+{print_term(r)}]"
        case Pair(l, r):
            return f"[{print_term(l)} & {print_term(r)}]"
        case Bang(i):
            return "!" + print_term(i)
        case TMeta(n, _):
            return n
    raise TypeError(f"not a term: {t!r}")


def _flevel(f: Formula) -> int:
    match f:
        case Implies():
            return _LVL_IMPLIES
        case Or():
            return _LVL_OR
        case And():
            return _LVL_AND
        case Not():
            return _LVL_NOT
        case Just():
            return _LVL_JUST
        case _:
            return _LVL_ATOM


def _pf(f: Formula, floor: int) -> str:
    match f:
        case Bottom():
            s = "_|_"
        case PropVar(n) | FMeta(n):
            s = n
        case Not(b):
            s = "~" + _pf(b, _LVL_NOT)
        case And(l, r):
            s = _pf(l, _LVL_AND) + " /\\ " + _pf(r, _LVL_NOT)
        case Or(l, r):
            s = _pf(l, _LVL_OR) + " \\/ " + _pf(r, _LVL_AND)
        case Implies(l, r):
            s = _pf(l, _LVL_OR) + " -> " + _pf(r, _LVL_IMPLIES)
        case Just(t, b):
            s = print_term(t) + ":" + _pf(b, _LVL_JUST)
        case _:
            raise TypeError(f"not a formula: {f!r}")
    return "(" + s + ")" if _flevel(f) < floor else s


def print_formula(f: Formula) -> str:
    return _pf(f, 0)


def to_text(item) -> str:
    """Print a term or a formula."""
    return print_term(item) if isinstance(item, Term) else print_formula(item)


def item_size(item) -> int:
    return term_size(item) if isinstance(item, Term) else formula_size(item)


# ---------------------------------------------------------------------------
# tokenizer / parser

_PUNCT = set("~:()[].+-&!")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if text.startswith("_|_", i):
            tokens.append(("BOT", "_|_", i))
            i += 3
        elif text.startswith("/\\", i):
            tokens.append(("AND", "/\\", i))
            i += 2
        elif text.startswith("\\/", i):
            tokens.append(("OR", "\\/", i))
            i += 2
        elif text.startswith("->", i):
            tokens.append(("ARROW", "->", i))
            i += 2
        elif c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
        elif c.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            # an identifier glued to '[' is one bracketed name (X[s-:E] style)
            if j < n and text[j] == "[":
                depth = 0
                k = j
                while k < n:
                    if text[k] == "[":
                        depth += 1
                    elif text[k] == "]":
                        depth -= 1
                        if depth == 0:
                            break
                    k += 1
                if depth != 0:
                    raise ParseError("unbalanced '[' in bracketed name", j)
                j = k + 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("EOF", "", n))
    return tokens


_SIGN_FOLLOWERS = {".", "+", "&", "]", ")", ":", "EOF"}


class _Parser:
    def __init__(self, text: str, signed: bool):
        self.tokens = _tokenize(text)
        self.signed = signed
        self.pos = 0

    def peek(self, ahead: int = 0) -> tuple[str, str, int]:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return tok

    def expect_eof(self):
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])

    # formulas ----------------------------------------------------------

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek()[0] == "ARROW":
            self.next()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek()[0] == "OR":
            self.next()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "AND":
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek()[0] == "~":
            self.next()
            return Not(self.unary())
        return self.justified()

    def _starts_term(self) -> bool:
        kind, value, _ = self.peek()
        if kind in ("[", "!"):
            return True
        return kind == "NAME" and value[0].islower()

    def justified(self) -> Formula:
        if self._starts_term():
            t = self.term()
            self.expect(":", "':' after a justification term")
            return Just(t, self.justified())
        return self.atom()

    def atom(self) -> Formula:
        kind, value, pos = self.next()
        if kind == "BOT":
            return BOTTOM
        if kind == "NAME" and value[0].isupper():
            return PropVar(value)
        if kind == "(":
            f = self.formula()
            self.expect(")", "')'")
            return f
        raise ParseError("expected a formula", pos)

    # terms --------------------------------------------------------------

    def term(self) -> Term:
        kind, value, pos = self.peek()
        if kind == "[":
            self.next()
            left = self.term()
            op_kind, op_value, op_pos = self.next()
            if op_kind not in (".", "+", "&"):
                raise ParseError("expected a term operator '.', '+' or '&'", op_pos)
            right = self.term()
            self.expect("]", "']'")
            ctor = {".": App, "+": Sum, "&": Pair}[op_kind]
            try:
                return ctor(left, right)
            except SignDisciplineError as exc:
                raise SignViolation(str(exc), op_pos) from None
        if kind == "!":
            self.next()
            inner = self.term()
            try:
                return Bang(inner)
            except SignDisciplineError as exc:
                raise SignViolation(str(exc), pos) from None
        if kind == "NAME" and value[0].islower():
            self.next()
            sign = self._maybe_sign()
            if self.signed and sign == UNSIGNED:
                raise SignViolation(f"leaf {value!r} requires a sign in signed syntax", pos)
            if not self.signed and sign != UNSIGNED:
                raise SignViolation("signs are only allowed in signed syntax", pos)
            ctor = Const if value[0] in "abcde" else Var
            return ctor(value, sign)
        raise ParseError("expected a justification term", pos)

    def _maybe_sign(self) -> str:
        kind, value, _ = self.peek()
        if kind in ("+", "-") and self.peek(1)[0] in _SIGN_FOLLOWERS:
            self.next()
            return value
        return UNSIGNED


def parse_formula(text: str, signed: bool = False) -> Formula:
    p = _Parser(text, signed)
    f = p.formula()
    p.expect_eof()
    return f


def parse_term(text: str, signed: bool = False) -> Term:
    p = _Parser(text, signed)
    t = p.term()
    p.expect_eof()
    return t


# ---------------------------------------------------------------------------
# enumeration

_TERM_RANK = {Const: 0, Var: 1, App: 2, Sum: 3, Pair: 4, Bang: 5, TMeta: 6}
_FORMULA_RANK = {Bottom: 0, PropVar: 1, Not: 2, And: 3, Or: 4, Implies: 5, Just: 6, FMeta: 7}


def term_sort_key(t: Term):
    match t:
        case Const(n, s) | Var(n, s):
            tail = (n, s)
        case App(l, r) | Sum(l, r) | Pair(l, r):
            tail = (term_sort_key(l), term_sort_key(r))
        case Bang(i):
            tail = (term_sort_key(i),)
        case TMeta(n, _):
            tail = (n,)
    return (term_size(t), _TERM_RANK[type(t)], tail)


def formula_sort_key(f: Formula):
    match f:
        case Bottom():
            tail = ()
        case PropVar(n) | FMeta(n):
            tail = (n,)
        case Not(b):
            tail = (formula_sort_key(b),)
        case And(l, r) | Or(l, r) | Implies(l, r):
            tail = (formula_sort_key(l), formula_sort_key(r))
        case Just(t, b):
            tail = (term_sort_key(t), formula_sort_key(b))
    return (formula_size(f), _FORMULA_RANK[type(f)], tail)


@dataclass(frozen=True)
class Alphabet:
    """Symbol inventory for enumeration.

    With ``signed`` set, every term leaf is generated in both signs.
    """

    prop_vars: tuple[str, ...] = ()
    term_vars: tuple[str, ...] = ()
    term_consts: tuple[str, ...] = ()
    signed: bool = False

    def leaves(self) -> list[Term]:
        signs = (POSITIVE, NEGATIVE) if self.signed else (UNSIGNED,)
        out: list[Term] = [Const(n, s) for n in self.term_consts for s in signs]
        out += [Var(n, s) for n in self.term_vars for s in signs]
        return out


ALL_TERM_OPS = frozenset({"app", "sum", "pair", "bang"})


def enumerate_terms(alphabet: Alphabet, size_bound: int,
                    ops: frozenset[str] = frozenset({"app", "sum"})) -> list[Term]:
    """All terms of size <= size_bound over the alphabet, enumeration order.

    The order is total: by size, then by a fixed rank of the head symbol,
    then lexicographically; every proper subterm precedes its compound.
    """
    by_size: dict[int, list[Term]] = {1: sorted(alphabet.leaves(), key=term_sort_key)}
    for n in range(2, size_bound + 1):
        items: list[Term] = []
        if "bang" in ops:
            for inner in by_size.get(n - 1, ()):
                try:
                    items.append(Bang(inner))
                except SignDisciplineError:
                    pass
        for lsize in range(1, n - 1):
            rsize = n - 1 - lsize
            for left, right in _cartesian(by_size.get(lsize, ()), by_size.get(rsize, ())):
                for opname, ctor in (("app", App), ("sum", Sum), ("pair", Pair)):
                    if opname not in ops:
                        continue
                    try:
                        items.append(ctor(left, right))
                    except SignDisciplineError:
                        pass
        by_size[n] = sorted(items, key=term_sort_key)
    return [t for n in range(1, size_bound + 1) for t in by_size.get(n, ())]


def enumerate_formulas(alphabet: Alphabet, size_bound: int,
                       terms: list[Term] | None = None,
                       term_ops: frozenset[str] = frozenset({"app", "sum"})) -> list[Formula]:
    """All formulas of size <= size_bound, enumeration order.

    Justified formulas draw their terms from ``terms`` when given
    (a prebuilt term enumeration), otherwise from the alphabet.
    """
    if terms is None:
        terms = enumerate_terms(alphabet, max(size_bound - 2, 0), term_ops)
    terms_by_size: dict[int, list[Term]] = {}
    for t in terms:
        terms_by_size.setdefault(term_size(t), []).append(t)

    base: list[Formula] = [BOTTOM] + [PropVar(v) for v in alphabet.prop_vars]
    by_size: dict[int, list[Formula]] = {1: sorted(base, key=formula_sort_key)}
    for n in range(2, size_bound + 1):
        items: list[Formula] = [Not(b) for b in by_size.get(n - 1, ())]
        for lsize in range(1, n - 1):
            rsize = n - 1 - lsize
            for left, right in _cartesian(by_size.get(lsize, ()), by_size.get(rsize, ())):
                items.append(And(left, right))
                items.append(Or(left, right))
                items.append(Implies(left, right))
        for tsize in range(1, n - 1):
            bsize = n - 1 - tsize
            for t in terms_by_size.get(tsize, ()):
                for b in by_size.get(bsize, ()):
                    items.append(Just(t, b))
        by_size[n] = sorted(items, key=formula_sort_key)
    return [f for n in range(1, size_bound + 1) for f in by_size.get(n, ())]


@dataclass(frozen=True)
class Enumeration:
    """A term and formula enumeration with per-item index lookup."""

    terms: tuple[Term, ...]
    formulas: tuple[Formula, ...]
    term_index: dict
    formula_index: dict

    @classmethod
    def build(cls, alphabet: Alphabet, fm_size: int, tm_size: int,
              term_ops: frozenset[str]) -> "Enumeration":
        terms = enumerate_terms(alphabet, tm_size, term_ops)
        formulas = enumerate_formulas(alphabet, fm_size, terms=terms)
        return cls(tuple(terms), tuple(formulas),
                   {t: i for i, t in enumerate(terms)},
                   {f: i for i, f in enumerate(formulas)})
