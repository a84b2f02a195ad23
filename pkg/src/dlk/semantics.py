"""Modular models: a propositional valuation plus an evidence
interpretation mapping terms to sets of formulas, with an audit that
checks the closure conditions a profile demands.

``t:F`` is true in a model exactly when ``F`` is a member of the set the
interpretation assigns to ``t``; truth of ``F`` itself is not required,
which is what lets evidence be denial-flavoured.

The audit distinguishes hand-written models from bounded constructions.
A model carrying a ``formula_universe`` (the formula prefix it was built
over) is audited relative to that universe: required members outside it
are ignored, and compounds outside the interpretation's key set are
reported as warnings rather than violations.  A model without a
universe is audited exactly; a compound the interpretation does not
mention is treated as having the empty set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .logics import LogicProfile, get_profile
from .syntax import (
    NEGATIVE, POSITIVE,
    And, App, Bang, Bottom, Formula, Implies, Just, Not, Or, Pair, PropVar,
    SignDisciplineError, Sum, Term,
    formula_sort_key, parse_formula, parse_term, print_formula, print_term,
    subterms, term_sign, term_size, term_sort_key,
)


class ModelFormatError(ValueError):
    """A model document does not describe a model of its profile."""


EMPTY: frozenset[Formula] = frozenset()


@dataclass(frozen=True)
class ModularModel:
    profile: LogicProfile
    valuation: dict[str, bool]
    interp: dict[Term, frozenset[Formula]]
    provenance: str = "hand"
    formula_universe: frozenset[Formula] | None = None

    def evidence(self, term: Term) -> frozenset[Formula]:
        return self.interp.get(term, EMPTY)


def evaluate(model: ModularModel, f: Formula) -> bool:
    match f:
        case Bottom():
            return False
        case PropVar(name):
            return model.valuation.get(name, False)
        case Not(b):
            return not evaluate(model, b)
        case And(l, r):
            return evaluate(model, l) and evaluate(model, r)
        case Or(l, r):
            return evaluate(model, l) or evaluate(model, r)
        case Implies(l, r):
            return (not evaluate(model, l)) or evaluate(model, r)
        case Just(t, b):
            return b in model.evidence(t)
    raise TypeError(f"cannot evaluate {f!r}")


def set_product(xs: frozenset[Formula], ys: frozenset[Formula]) -> frozenset[Formula]:
    """Application on evidence sets: conclusions of implications in xs
    whose antecedent lies in ys."""
    return frozenset(x.right for x in xs
                     if isinstance(x, Implies) and x.left in ys)


def set_pairing(xs: frozenset[Formula], ys: frozenset[Formula]) -> frozenset[Formula]:
    """Pairing on evidence sets: all conjunctions across the two sets."""
    return frozenset(And(x, y) for x in xs for y in ys)


def occurring_terms(model: ModularModel) -> list[Term]:
    """Interpretation keys and their subterms, enumeration order."""
    seen: set[Term] = set()
    for key in model.interp:
        seen.update(subterms(key))
    return sorted(seen, key=term_sort_key)


def default_universe(model: ModularModel) -> list[Term]:
    """Occurring terms plus their depth-1 compounds, enumeration order.

    This is the audit universe a caller should use for a hand-written
    model: it surfaces closure gaps at compounds nobody bothered to
    mention.  Bounded constructions audit over their own key set instead.
    """
    base = occurring_terms(model)
    out: set[Term] = set(base)
    ops = model.profile.term_ops
    for s in base:
        if "bang" in ops:
            try:
                out.add(Bang(s))
            except SignDisciplineError:
                pass
        for t in base:
            for op, ctor in (("app", App), ("sum", Sum), ("pair", Pair)):
                if op in ops:
                    try:
                        out.add(ctor(s, t))
                    except SignDisciplineError:
                        pass
    return sorted(out, key=term_sort_key)


def respects(model: ModularModel, formulas) -> bool:
    """True when every formula of the set holds in the model."""
    return all(evaluate(model, f) for f in formulas)


def falsified(model: ModularModel, formulas) -> list[Formula]:
    """The subset of the formulas the model falsifies."""
    return [f for f in formulas if not evaluate(model, f)]


# ---------------------------------------------------------------------------
# audit


@dataclass(frozen=True)
class Violation:
    condition: str
    terms: tuple[str, ...]
    formula: str
    note: str = ""

    def describe(self) -> str:
        where = ", ".join(self.terms)
        tail = f" ({self.note})" if self.note else ""
        return f"{self.condition}: {where} misses {self.formula}{tail}"


@dataclass
class ConditionReport:
    name: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class AuditReport:
    profile: str
    conditions: list[ConditionReport]
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.conditions)

    def condition(self, name: str) -> ConditionReport:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "profile": self.profile,
            "ok": self.ok,
            "conditions": [
                {"name": c.name, "ok": c.ok, "checked": c.checked,
                 "violations": [
                     {"condition": v.condition, "terms": list(v.terms),
                      "formula": v.formula, "note": v.note}
                     for v in c.violations]}
                for c in self.conditions],
            "warnings": self.warnings,
        }


def _sign_admits(profile: LogicProfile, term: Term, wanted: str) -> bool:
    """In signed profiles a condition applies only to terms of its sign."""
    if not profile.signed:
        return True
    return term_sign(term) == wanted


def audit(model: ModularModel,
          term_universe: list[Term] | None = None) -> AuditReport:
    """Check every closure condition of the model's profile over a
    finite term universe.

    The universe defaults to the terms occurring in the model (see
    ``default_universe`` for the roomier choice).  A compound a pair of
    universe terms demands something of, but which lies outside the
    universe, is reported as a universe-not-closed warning rather than a
    violation; a compound inside the universe is held to its evidence
    set, with the empty set as the default.  When the model carries a
    ``formula_universe``, required members outside it are ignored.
    """
    profile = model.profile
    universe = model.formula_universe
    bounded = universe is not None
    terms = term_universe if term_universe is not None else occurring_terms(model)
    term_set = set(terms)
    warnings: list[str] = []
    not_closed: set[str] = set()
    universe_conjunctions: list[And] | None = None
    if bounded:
        universe_conjunctions = [f for f in universe if isinstance(f, And)]

    reports: dict[str, ConditionReport] = {}

    def report(name: str) -> ConditionReport:
        if name not in reports:
            reports[name] = ConditionReport(name)
        return reports[name]

    def require(name: str, parts: tuple[Term, ...], compound: Term,
                required) -> None:
        """required ⊆ evidence(compound), relative to the universes."""
        rep = report(name)
        rep.checked += 1
        if bounded:
            required = [f for f in required if f in universe]
        if not required:
            return
        if compound not in term_set:
            key = print_term(compound)
            if key not in not_closed:
                not_closed.add(key)
                warnings.append(f"universe not closed: {key} is missing "
                                f"({name} has members to check there)")
            return
        have = model.evidence(compound)
        parts_printed = tuple(print_term(p) for p in parts)
        for f in sorted((g for g in required if g not in have),
                        key=formula_sort_key):
            rep.violations.append(Violation(
                name, parts_printed + (print_term(compound),),
                print_formula(f)))

    # conditions applicable to this profile
    do_app = "app" in profile.term_ops
    do_sum = "sum" in profile.term_ops
    do_pair = profile.has_schema("pairing")
    do_denial = profile.has_schema("denial")
    do_fact = profile.has_schema("factivity")
    do_intro = (profile.has_schema("introspection")
                and any(isinstance(t, Bang) for t in terms))

    for name, enabled in (("application-closure", do_app),
                          ("sum-closure", do_sum),
                          ("pairing-closure", do_pair),
                          ("denial-falsity", do_denial),
                          ("factivity-truth", do_fact),
                          ("introspection-closure", do_intro)):
        if enabled:
            report(name)

    for s in terms:
        es = model.evidence(s)
        for t in terms:
            et = model.evidence(t)
            if do_app and (es or et):
                try:
                    require("application-closure", (s, t), App(s, t),
                            set_product(es, et))
                except SignDisciplineError:
                    pass
            if do_sum and (es or et):
                try:
                    compound = Sum(s, t)
                except SignDisciplineError:
                    compound = None
                if compound is not None:
                    # each part is reported on its own
                    require("sum-closure", (s,), compound, es)
                    require("sum-closure", (t,), compound, et)
            if do_pair and es and et:
                try:
                    pair = Pair(s, t)
                except SignDisciplineError:
                    pair = None
                if pair is not None:
                    if universe_conjunctions is not None:
                        needed = [c for c in universe_conjunctions
                                  if c.left in es and c.right in et]
                    else:
                        needed = set_pairing(es, et)
                    require("pairing-closure", (s, t), pair, needed)

    for t in terms:
        ev = model.evidence(t)
        if do_denial and _sign_admits(profile, t, NEGATIVE):
            rep = report("denial-falsity")
            rep.checked += 1
            for f in sorted(ev, key=formula_sort_key):
                if evaluate(model, f):
                    rep.violations.append(Violation(
                        "denial-falsity", (print_term(t),), print_formula(f),
                        "member evaluates true"))
        if do_fact and _sign_admits(profile, t, POSITIVE):
            rep = report("factivity-truth")
            rep.checked += 1
            for f in sorted(ev, key=formula_sort_key):
                if not evaluate(model, f):
                    rep.violations.append(Violation(
                        "factivity-truth", (print_term(t),), print_formula(f),
                        "member evaluates false"))
        if do_intro and ev and _sign_admits(profile, t, POSITIVE):
            try:
                bang = Bang(t)
            except SignDisciplineError:
                bang = None
            if bang is not None:
                require("introspection-closure", (t,), bang,
                        [Just(t, f) for f in ev])

    ordered = [reports[n] for n in ("application-closure", "sum-closure",
                                    "pairing-closure", "denial-falsity",
                                    "factivity-truth", "introspection-closure")
               if n in reports]
    return AuditReport(profile.name, ordered, warnings)


# ---------------------------------------------------------------------------
# documents


def model_to_dict(model: ModularModel) -> dict:
    doc: dict = {
        "profile": model.profile.name,
        "valuation": {name: bool(v) for name, v in sorted(model.valuation.items())},
        "interp": {
            print_term(t): [print_formula(f)
                            for f in sorted(fs, key=formula_sort_key)]
            for t in sorted(model.interp, key=term_sort_key)
            for fs in (model.interp[t],)
        },
        "provenance": model.provenance,
    }
    if model.formula_universe is not None:
        doc["formula_universe"] = [print_formula(f) for f in
                                   sorted(model.formula_universe, key=formula_sort_key)]
    return doc


def model_from_dict(doc: dict) -> ModularModel:
    if not isinstance(doc, dict):
        raise ModelFormatError("model document must be an object")
    try:
        profile = get_profile(doc.get("profile", "dl"))
    except KeyError as exc:
        raise ModelFormatError(str(exc)) from None
    valuation_doc = doc.get("valuation", {})
    if not isinstance(valuation_doc, dict):
        raise ModelFormatError("'valuation' must map variable names to booleans")
    valuation = {str(k): bool(v) for k, v in valuation_doc.items()}
    interp_doc = doc.get("interp", {})
    if not isinstance(interp_doc, dict):
        raise ModelFormatError("'interp' must map terms to formula lists")
    interp: dict[Term, frozenset[Formula]] = {}
    for term_text, formulas in interp_doc.items():
        try:
            term = parse_term(term_text, signed=profile.signed)
        except ValueError as exc:
            raise ModelFormatError(f"bad term {term_text!r}: {exc}") from None
        if not isinstance(formulas, list):
            raise ModelFormatError(f"evidence for {term_text!r} must be a list")
        parsed = []
        for ftext in formulas:
            try:
                parsed.append(parse_formula(str(ftext), signed=profile.signed))
            except ValueError as exc:
                raise ModelFormatError(f"bad formula {ftext!r}: {exc}") from None
        interp[term] = frozenset(parsed)
    universe = None
    if "formula_universe" in doc:
        universe = frozenset(parse_formula(str(ftext), signed=profile.signed)
                             for ftext in doc["formula_universe"])
    return ModularModel(profile, valuation, interp,
                        provenance=str(doc.get("provenance", "hand")),
                        formula_universe=universe)
