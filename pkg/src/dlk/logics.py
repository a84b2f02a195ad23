"""Axiom schemas, logic profiles, schema matching, and the embedding
translation that turns signed justified formulas into unsigned ones.

A profile names a logic by its schema inventory and term operations:

* ``jl``    -- application and sum only (the common core)
* ``dl``    -- jl plus denial and evidence pairing
* ``dl0``   -- jl plus denial, without pairing
* ``lp``    -- jl plus factivity and introspection
* ``fused`` -- signed syntax; denial/pairing on negative terms,
  factivity/introspection on positive ones, in one system

Schemas are templates over metavariables (``FMeta``/``TMeta``); a
``Binding`` instantiates them.  Term metavariables carry a polarity that
is enforced only in signed profiles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .syntax import (
    BOTTOM, NEGATIVE, POSITIVE, UNSIGNED,
    Alphabet, And, App, Bang, Bottom, Const, FMeta, Formula, Implies, Just,
    Not, Or, Pair, PropVar, SignDisciplineError, Sum, Term, TMeta, Var,
    formula_terms, print_formula, print_term, subformulas, term_sign,
)


class InstantiationError(ValueError):
    """A schema instance could not be formed from the given binding."""


@dataclass(frozen=True)
class AxiomSchema:
    id: str
    template: Formula
    kind: str               # "classical" | "modal"
    note: str = ""


def _schemas() -> dict[str, AxiomSchema]:
    P, Q, R = FMeta("P"), FMeta("Q"), FMeta("R")
    s, t = TMeta("s"), TMeta("t")
    s_neg, t_neg = TMeta("s", "neg"), TMeta("t", "neg")
    t_pos = TMeta("t", "pos")
    table = [
        AxiomSchema("k", Implies(P, Implies(Q, P)), "classical",
                    "weakening"),
        AxiomSchema("s", Implies(Implies(P, Implies(Q, R)),
                                 Implies(Implies(P, Q), Implies(P, R))),
                    "classical", "distribution"),
        AxiomSchema("and-elim-left", Implies(And(P, Q), P), "classical"),
        AxiomSchema("and-elim-right", Implies(And(P, Q), Q), "classical"),
        AxiomSchema("and-intro", Implies(P, Implies(Q, And(P, Q))), "classical"),
        AxiomSchema("or-intro-left", Implies(P, Or(P, Q)), "classical"),
        AxiomSchema("or-intro-right", Implies(Q, Or(P, Q)), "classical"),
        AxiomSchema("or-elim", Implies(Implies(P, R),
                                       Implies(Implies(Q, R),
                                               Implies(Or(P, Q), R))),
                    "classical"),
        AxiomSchema("ex-falso", Implies(BOTTOM, P), "classical"),
        AxiomSchema("classical-negation", Implies(Implies(Not(P), BOTTOM), P),
                    "classical"),
        AxiomSchema("neg-intro", Implies(Implies(P, BOTTOM), Not(P)), "classical"),
        AxiomSchema("neg-elim", Implies(Not(P), Implies(P, BOTTOM)), "classical"),
        AxiomSchema("application",
                    Implies(Just(s, Implies(P, Q)),
                            Implies(Just(t, P), Just(App(s, t), Q))),
                    "modal", "evidence application"),
        AxiomSchema("sum-left", Implies(Just(s, P), Just(Sum(s, t), P)), "modal"),
        AxiomSchema("sum-right", Implies(Just(t, P), Just(Sum(s, t), P)), "modal"),
        AxiomSchema("denial", Implies(Just(t_neg, P), Not(P)), "modal",
                    "denial evidence refutes"),
        AxiomSchema("pairing",
                    Implies(And(Just(s_neg, P), Just(t_neg, Q)),
                            Just(Pair(s_neg, t_neg), And(P, Q))),
                    "modal", "evidence pairing"),
        AxiomSchema("factivity", Implies(Just(t_pos, P), P), "modal"),
        AxiomSchema("introspection",
                    Implies(Just(t_pos, P), Just(Bang(t_pos), Just(t_pos, P))),
                    "modal", "positive introspection"),
    ]
    return {sch.id: sch for sch in table}


SCHEMAS: dict[str, AxiomSchema] = _schemas()

_CLASSICAL_IDS = tuple(sid for sid, sch in SCHEMAS.items() if sch.kind == "classical")
_CORE_MODAL = ("application", "sum-left", "sum-right")


@dataclass(frozen=True)
class LogicProfile:
    name: str
    signed: bool
    schema_ids: tuple[str, ...]
    term_ops: frozenset[str]
    description: str = ""

    def schemas(self) -> list[AxiomSchema]:
        return [SCHEMAS[sid] for sid in self.schema_ids]

    def has_schema(self, schema_id: str) -> bool:
        return schema_id in self.schema_ids


PROFILES: dict[str, LogicProfile] = {
    "jl": LogicProfile(
        "jl", False, _CLASSICAL_IDS + _CORE_MODAL,
        frozenset({"app", "sum"}),
        "application and sum core"),
    "dl": LogicProfile(
        "dl", False, _CLASSICAL_IDS + _CORE_MODAL + ("denial", "pairing"),
        frozenset({"app", "sum", "pair"}),
        "denial with evidence pairing"),
    "dl0": LogicProfile(
        "dl0", False, _CLASSICAL_IDS + _CORE_MODAL + ("denial",),
        frozenset({"app", "sum"}),
        "denial without pairing"),
    "lp": LogicProfile(
        "lp", False, _CLASSICAL_IDS + _CORE_MODAL + ("factivity", "introspection"),
        frozenset({"app", "sum", "bang"}),
        "factive evidence with introspection"),
    "fused": LogicProfile(
        "fused", True,
        _CLASSICAL_IDS + _CORE_MODAL + ("denial", "pairing", "factivity",
                                        "introspection"),
        frozenset({"app", "sum", "pair", "bang"}),
        "signed terms; denial-side and factive-side evidence together"),
}


def get_profile(name: str) -> LogicProfile:
    try:
        return PROFILES[name]
    except KeyError:
        raise KeyError(f"unknown logic profile {name!r}; "
                       f"expected one of {', '.join(sorted(PROFILES))}") from None


# ---------------------------------------------------------------------------
# instantiation and matching


@dataclass(frozen=True)
class Binding:
    """Assignment of metavariables for one schema instance."""

    formulas: dict[str, Formula] = field(default_factory=dict)
    terms: dict[str, Term] = field(default_factory=dict)

    def __hash__(self):
        return hash((tuple(sorted(self.formulas.items(), key=lambda kv: kv[0])),
                     tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))


def _polarity_ok(polarity: str, term: Term, signed: bool) -> bool:
    if not signed or polarity in ("any", "sigma"):
        return True
    sign = term_sign(term)
    return sign == (POSITIVE if polarity == "pos" else NEGATIVE)


def _subst_term(t: Term, binding: Binding, signed: bool) -> Term:
    match t:
        case TMeta(name, polarity):
            if name not in binding.terms:
                raise InstantiationError(f"unbound term metavariable {name!r}")
            bound = binding.terms[name]
            if not _polarity_ok(polarity, bound, signed):
                raise InstantiationError(
                    f"term {print_term(bound)!r} has the wrong sign for "
                    f"metavariable {name!r} ({polarity})")
            return bound
        case Const() | Var():
            return t
        case App(l, r):
            return App(_subst_term(l, binding, signed), _subst_term(r, binding, signed))
        case Sum(l, r):
            return Sum(_subst_term(l, binding, signed), _subst_term(r, binding, signed))
        case Pair(l, r):
            return Pair(_subst_term(l, binding, signed), _subst_term(r, binding, signed))
        case Bang(i):
            return Bang(_subst_term(i, binding, signed))
    raise TypeError(f"not a term: {t!r}")


def instantiate(template: Formula, binding: Binding, signed: bool = False) -> Formula:
    """Fill a schema template; raises InstantiationError on bad bindings."""
    try:
        return _subst_formula(template, binding, signed)
    except SignDisciplineError as exc:
        raise InstantiationError(str(exc)) from None


def _subst_formula(f: Formula, binding: Binding, signed: bool) -> Formula:
    match f:
        case FMeta(name):
            if name not in binding.formulas:
                raise InstantiationError(f"unbound formula metavariable {name!r}")
            return binding.formulas[name]
        case Bottom() | PropVar():
            return f
        case Not(b):
            return Not(_subst_formula(b, binding, signed))
        case And(l, r):
            return And(_subst_formula(l, binding, signed),
                       _subst_formula(r, binding, signed))
        case Or(l, r):
            return Or(_subst_formula(l, binding, signed),
                      _subst_formula(r, binding, signed))
        case Implies(l, r):
            return Implies(_subst_formula(l, binding, signed),
                           _subst_formula(r, binding, signed))
        case Just(t, b):
            return Just(_subst_term(t, binding, signed),
                        _subst_formula(b, binding, signed))
    raise TypeError(f"not a formula: {f!r}")


def _match_term(pattern: Term, term: Term, fm: dict, tm: dict, signed: bool) -> bool:
    match pattern:
        case TMeta(name, polarity):
            if name in tm:
                return tm[name] == term
            if not _polarity_ok(polarity, term, signed):
                return False
            tm[name] = term
            return True
        case Const() | Var():
            return pattern == term
        case App(pl, pr):
            return (isinstance(term, App)
                    and _match_term(pl, term.left, fm, tm, signed)
                    and _match_term(pr, term.right, fm, tm, signed))
        case Sum(pl, pr):
            return (isinstance(term, Sum)
                    and _match_term(pl, term.left, fm, tm, signed)
                    and _match_term(pr, term.right, fm, tm, signed))
        case Pair(pl, pr):
            return (isinstance(term, Pair)
                    and _match_term(pl, term.left, fm, tm, signed)
                    and _match_term(pr, term.right, fm, tm, signed))
        case Bang(pi):
            return isinstance(term, Bang) and _match_term(pi, term.inner, fm, tm, signed)
    return False


def _match_formula(pattern: Formula, formula: Formula, fm: dict, tm: dict,
                   signed: bool) -> bool:
    match pattern:
        case FMeta(name):
            if name in fm:
                return fm[name] == formula
            fm[name] = formula
            return True
        case Bottom():
            return isinstance(formula, Bottom)
        case PropVar():
            return pattern == formula
        case Not(pb):
            return isinstance(formula, Not) and _match_formula(pb, formula.body,
                                                               fm, tm, signed)
        case And(pl, pr):
            return (isinstance(formula, And)
                    and _match_formula(pl, formula.left, fm, tm, signed)
                    and _match_formula(pr, formula.right, fm, tm, signed))
        case Or(pl, pr):
            return (isinstance(formula, Or)
                    and _match_formula(pl, formula.left, fm, tm, signed)
                    and _match_formula(pr, formula.right, fm, tm, signed))
        case Implies(pl, pr):
            return (isinstance(formula, Implies)
                    and _match_formula(pl, formula.left, fm, tm, signed)
                    and _match_formula(pr, formula.right, fm, tm, signed))
        case Just(pt, pb):
            return (isinstance(formula, Just)
                    and _match_term(pt, formula.term, fm, tm, signed)
                    and _match_formula(pb, formula.body, fm, tm, signed))
    return False


def match_template(template: Formula, formula: Formula,
                   signed: bool = False) -> Binding | None:
    """Match a formula against one template; None when it does not fit."""
    fm: dict[str, Formula] = {}
    tm: dict[str, Term] = {}
    if _match_formula(template, formula, fm, tm, signed):
        return Binding(fm, tm)
    return None


def match_axiom(formula: Formula, profile: LogicProfile) -> list[tuple[str, Binding]]:
    """Every profile schema the formula instantiates, with the binding.

    First-order matching of a ground formula yields at most one binding
    per schema, so the list holds one pair per matching schema, in the
    profile's fixed schema order.
    """
    hits: list[tuple[str, Binding]] = []
    for sid in profile.schema_ids:
        binding = match_template(SCHEMAS[sid].template, formula, profile.signed)
        if binding is not None:
            hits.append((sid, binding))
    return hits


# ---------------------------------------------------------------------------
# profile conformance


def check_in_profile(formula: Formula, profile: LogicProfile) -> list[str]:
    """Problems that make the formula fall outside the profile's language."""
    problems: list[str] = []
    op_name = {App: ("app", "'.'"), Sum: ("sum", "'+'"),
               Pair: ("pair", "'&'"), Bang: ("bang", "'!'")}
    seen_ops: set[str] = set()
    for t in formula_terms(formula):
        match t:
            case Const(name, sign) | Var(name, sign):
                if profile.signed and sign == UNSIGNED:
                    problems.append(f"leaf {name!r} is unsigned in a signed profile")
                elif not profile.signed and sign != UNSIGNED:
                    problems.append(f"leaf {name}{sign} is signed in an unsigned profile")
            case _:
                op, label = op_name[type(t)]
                if op not in profile.term_ops and op not in seen_ops:
                    seen_ops.add(op)
                    problems.append(f"term operation {label} is not part of "
                                    f"profile {profile.name!r}")
    return problems


def alphabet_from(formulas, profile: LogicProfile,
                  extra_prop_vars=(), extra_term_vars=()) -> Alphabet:
    """Smallest alphabet covering the symbols the formulas use."""
    prop_vars: set[str] = set(extra_prop_vars)
    consts: set[str] = set()
    term_vars: set[str] = set(extra_term_vars)
    for f in formulas:
        for sub in subformulas(f):
            if isinstance(sub, PropVar):
                prop_vars.add(sub.name)
        for t in formula_terms(f):
            if isinstance(t, Const):
                consts.add(t.name)
            elif isinstance(t, Var):
                term_vars.add(t.name)
    if not consts and not term_vars:
        term_vars.add("x")
    return Alphabet(tuple(sorted(prop_vars)), tuple(sorted(term_vars)),
                    tuple(sorted(consts)), signed=profile.signed)


# ---------------------------------------------------------------------------
# the unsigning translation


def _fresh_atom(negative_part: Formula) -> PropVar:
    return PropVar("X[" + print_formula(negative_part) + "]")


def translate(f: Formula) -> Formula:
    """Rewrite negatively justified subformulas into fresh atoms.

    Positive justifications are kept; every subformula ``t:E`` with a
    negative ``t`` becomes an atom whose name spells the (recursively
    translated) original, so distinct denials stay distinct and repeated
    ones collapse to the same atom.  The image uses only positive terms
    and is a formula of the factive profile once signs are dropped.
    """
    match f:
        case Bottom() | PropVar():
            return f
        case Not(b):
            return Not(translate(b))
        case And(l, r):
            return And(translate(l), translate(r))
        case Or(l, r):
            return Or(translate(l), translate(r))
        case Implies(l, r):
            return Implies(translate(l), translate(r))
        case Just(t, b):
            sign = term_sign(t)
            if sign == POSITIVE:
                return Just(t, translate(b))
            if sign == NEGATIVE:
                return _fresh_atom(Just(t, translate(b)))
            raise ValueError(
                f"cannot translate {print_formula(f)!r}: term has no sign")
    raise TypeError(f"not a translatable formula: {f!r}")


def translation_table(f: Formula) -> dict[str, str]:
    """Printed negative justified subformulas -> their fresh atom names."""
    table: dict[str, str] = {}

    def walk(g: Formula):
        match g:
            case Not(b) | Just(_, b):
                walk(b)
            case And(l, r) | Or(l, r) | Implies(l, r):
                walk(l)
                walk(r)
        if isinstance(g, Just) and term_sign(g.term) == NEGATIVE:
            translated = Just(g.term, translate(g.body))
            table[print_formula(g)] = _fresh_atom(translated).name

    walk(f)
    return table
