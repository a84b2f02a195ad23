"""Constant specifications: closure, consistency, extraction, search.

A constant specification is the stock of evidence assertions an agent
reasons from.  Closing it propagates what each assertion commits the
agent to -- denial-style evidence forces the asserted body's negation
into the set, and in the signed profile positive and negative evidence
push the body in opposite directions.  A closure that produces both a
formula and its negation is a clash and the specification is rejected
outright.

``ok_extract`` collects every formula some term provably justifies
within bounds, with a reconstructed proof as witness.  ``blue_pill``
then looks for a plain justification-logic model (no denial link
between evidence and truth) that makes all of these formulas true at
once: the agent's denial-backed conclusions survive transplanting into
a logic that does not treat evidence as falsifying.  A first pass tries
the empty interpretation with an exhaustive valuation search; failing
that, small interpretation sets are grown over the justified
subformulas, gated by the application/sum closure audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .builder import BoundsError, RealizationError, realize_spec
from .logics import LogicProfile, get_profile
from .proofs import DerivedSet, Proof, derive_forward
from .semantics import ModularModel, audit, evaluate
from .syntax import (
    NEGATIVE, POSITIVE,
    And, Const, Formula, Just, Not, PropVar, Term, Var,
    formula_sort_key, parse_formula, print_formula, print_term, subformulas,
    term_sign,
)


class SpecFormatError(ValueError):
    """A specification document does not describe a specification."""


class SpecShapeError(ValueError):
    """A formula does not have the evidence-assertion shape."""


class SpecClashError(ValueError):
    """Closure produced a formula together with its negation."""

    def __init__(self, pair: tuple[Formula, Formula]):
        self.pair = pair
        pos, neg = pair
        super().__init__(f"closure yields both {print_formula(pos)!r} "
                         f"and {print_formula(neg)!r}")


@dataclass(frozen=True)
class ConstantSpec:
    profile: LogicProfile
    formulas: tuple[Formula, ...]
    closed: bool = False

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __contains__(self, f: Formula) -> bool:
        return f in self.formulas


def _check_shape(f: Formula) -> None:
    """Members are evidence chains over a formula, or negations of one.

    The chain justifiers must be leaves; what they assert is arbitrary.
    """
    g = f.body if isinstance(f, Not) else f
    while isinstance(g, Just):
        if not isinstance(g.term, (Const, Var)):
            raise SpecShapeError(
                f"{print_formula(f)!r} uses the compound justifier "
                f"{print_term(g.term)!r}; specification entries assert "
                f"evidence for leaf terms only")
        g = g.body


def _closure_extensions(f: Formula, profile: LogicProfile) -> list[Formula]:
    """What the closure rules add for one member."""
    if profile.name in ("dl", "dl0"):
        match f:
            case Just(_, body):
                return [Not(body)]
            case Not(Just(_, body)):
                return [body]
    elif profile.name == "fused":
        match f:
            case Just(term, body):
                return [body] if term_sign(term) == POSITIVE else [Not(body)]
            case Not(Just(term, body)):
                return [Not(body)] if term_sign(term) == POSITIVE else [body]
    return []


def close_spec(raw, profile: LogicProfile) -> ConstantSpec:
    """Least superset of the raw formulas closed under the profile's rules.

    Denial-flavoured profiles push each asserted body's negation in;
    the signed profile splits by the evidence sign.  A complementary
    pair anywhere in the closure raises SpecClashError with the pair.
    """
    ordered: list[Formula] = []
    present: set[Formula] = set()

    def note(f: Formula):
        if f in present:
            return
        if isinstance(f, Not) and f.body in present:
            raise SpecClashError((f.body, f))
        if Not(f) in present:
            raise SpecClashError((f, Not(f)))
        present.add(f)
        ordered.append(f)

    for f in raw:
        _check_shape(f)
        note(f)
    cursor = 0
    while cursor < len(ordered):
        for g in _closure_extensions(ordered[cursor], profile):
            note(g)
        cursor += 1
    return ConstantSpec(profile, tuple(ordered), closed=True)


def is_closed(formulas, profile: LogicProfile) -> bool:
    """True when the closure rules add nothing (and nothing clashes)."""
    have = set(formulas)
    try:
        spec = close_spec(formulas, profile)
    except SpecClashError:
        return False
    return set(spec.formulas) == have


@dataclass
class ProbeResult:
    status: str                 # model | clash | unknown
    model: ModularModel | None = None
    pair: tuple[Formula, Formula] | None = None
    note: str = ""


def probe_consistency(spec: ConstantSpec, *,
                      fm_size: int | None = None,
                      tm_size: int | None = None) -> ProbeResult:
    """Certify the specification consistent, refute it, or give up.

    A realized model respecting every member is a consistency
    certificate.  A complementary pair is a refutation.  Anything else
    (unbuildable profile, bounds too small) is unknown -- the question
    is only semidecidable and every verdict here is a bounded one.
    """
    present = set(spec.formulas)
    for f in spec.formulas:
        if isinstance(f, Not) and f.body in present:
            return ProbeResult("clash", pair=(f.body, f))
    if spec.profile.name not in ("dl", "dl0"):
        return ProbeResult(
            "unknown",
            note=f"no staged model construction for profile "
                 f"{spec.profile.name!r}")
    try:
        model, _ = realize_spec(spec.profile, spec.formulas,
                                fm_size=fm_size, tm_size=tm_size)
    except (RealizationError, BoundsError) as exc:
        return ProbeResult("unknown", note=str(exc))
    return ProbeResult("model", model=model,
                       note="built model respects every member")


# ---------------------------------------------------------------------------
# extraction


@dataclass
class OKSet:
    """Formulas some term provably justifies, in witness order."""

    members: tuple[Formula, ...]
    witnesses: dict[Formula, tuple[Term, Proof]]
    bounded: bool = True
    hit_limit: bool = False

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f: Formula) -> bool:
        return f in self.witnesses


def ok_extract(spec: ConstantSpec, profile: LogicProfile | None = None, *,
               depth: int = 3, size: int = 4, term_size: int = 2,
               limit: int | None = 50000) -> OKSet:
    """Bodies of the justified formulas derivable from the specification.

    A bounded under-approximation: each member carries the first term
    found justifying it and a checkable proof of that justified formula.
    Schema instances bind terms up to ``term_size`` -- small by default,
    since compound evidence terms arise inside instance conclusions
    anyway and a wide term pool mostly buys duplicate bodies.
    """
    profile = profile or spec.profile
    derived: DerivedSet = derive_forward(
        profile, spec.formulas, size_bound=size, rounds=depth,
        term_size_bound=term_size, limit=limit)
    members: list[Formula] = []
    witnesses: dict[Formula, tuple[Term, Proof]] = {}
    for f in derived.justified():
        if f.body not in witnesses:
            witnesses[f.body] = (f.term, derived.proof_of(f))
            members.append(f.body)
    return OKSet(tuple(members), witnesses, bounded=True,
                 hit_limit=derived.hit_limit)


def conjunction_fold(formulas) -> Formula:
    """Left-nested conjunction of the given formulas, in order."""
    items = list(formulas)
    if not items:
        raise ValueError("nothing to conjoin")
    out = items[0]
    for f in items[1:]:
        out = And(out, f)
    return out


# ---------------------------------------------------------------------------
# model search


_GATE_CONDITIONS = ("application-closure", "sum-closure")


def _passes_gate(model: ModularModel) -> bool:
    report = audit(model)
    return all(not c.violations for c in report.conditions
               if c.name in _GATE_CONDITIONS)


def search_jl_model(targets, profile: LogicProfile | None = None, *,
                    max_candidates: int = 12, max_combo: int = 3,
                    max_per_term: int = 2,
                    max_vars: int = 14) -> ModularModel | None:
    """Deterministic bounded search for a model satisfying the targets.

    Tries the empty interpretation first, over valuations in
    lexicographic order (all-false first, sorted variable names), so a
    purely propositional win is found with the least valuation.  Then
    interpretation sets are grown over the justified subformulas of the
    targets, smallest combinations first, each candidate gated by the
    application/sum closure audit.  Returns None when the bounded space
    is exhausted.
    """
    wanted = list(targets)
    profile = profile or get_profile("jl")
    names = sorted({sub.name for f in wanted for sub in subformulas(f)
                    if isinstance(sub, PropVar)})
    if len(names) > max_vars:
        return None

    def valuations():
        for bits in product((False, True), repeat=len(names)):
            yield dict(zip(names, bits))

    for valuation in valuations():
        model = ModularModel(profile, valuation, {}, provenance="search")
        if all(evaluate(model, f) for f in wanted):
            return model

    candidates: list[Just] = []
    seen: set[Formula] = set()
    for f in wanted:
        for sub in subformulas(f):
            if isinstance(sub, Just) and sub not in seen:
                seen.add(sub)
                candidates.append(sub)
    candidates.sort(key=formula_sort_key)
    candidates = candidates[:max_candidates]

    for r in range(1, min(max_combo, len(candidates)) + 1):
        for combo in combinations(candidates, r):
            interp: dict[Term, set[Formula]] = {}
            for j in combo:
                interp.setdefault(j.term, set()).add(j.body)
            if any(len(v) > max_per_term for v in interp.values()):
                continue
            frozen = {t: frozenset(v) for t, v in interp.items()}
            for valuation in valuations():
                model = ModularModel(profile, valuation, frozen,
                                     provenance="search")
                if all(evaluate(model, f) for f in wanted) \
                        and _passes_gate(model):
                    return model
    return None


@dataclass
class BluePillResult:
    status: str                 # model | failure
    ok: OKSet
    model: ModularModel | None = None
    note: str = ""

    @property
    def found(self) -> bool:
        return self.status == "model"


def blue_pill(spec: ConstantSpec, *,
              depth: int = 3, size: int = 4,
              term_size: int = 2,
              limit: int | None = 50000) -> BluePillResult:
    """Transplant the extracted conclusions into a denial-free model.

    Extracts the bounded OK set of the specification, then searches for
    a plain justification-logic model satisfying every member.  The
    evidence relation there carries no falsifying force, so success
    means the agent's denial-backed knowledge is jointly tenable on
    neutral ground.  Failure is a bounded report, not an error.
    """
    if spec.profile.name not in ("dl", "fused"):
        raise ValueError(f"the model transplant is defined for profiles "
                         f"'dl' and 'fused', not {spec.profile.name!r}")
    ok = ok_extract(spec, depth=depth, size=size, term_size=term_size,
                    limit=limit)
    have = set(ok.members)
    for f in ok.members:
        mate = f.body if isinstance(f, Not) else Not(f)
        if mate in have:
            return BluePillResult(
                "failure", ok,
                note=f"the extracted set contains both "
                     f"{print_formula(f)!r} and {print_formula(mate)!r}; "
                     f"no model can satisfy it")
    model_profile = spec.profile if spec.profile.signed else get_profile("jl")
    model = search_jl_model(ok.members, model_profile)
    if model is None:
        return BluePillResult(
            "failure", ok,
            note="no model found within the search bounds")
    return BluePillResult("model", ok, model=model,
                          note="every extracted formula holds; "
                               "application/sum closure audited")


@dataclass
class CoherenceReport:
    status: str                 # coherent-within-bounds | counterexample
    members: tuple[Formula, ...]
    counterexample: Formula | None = None

    @property
    def coherent(self) -> bool:
        return self.status == "coherent-within-bounds"


def check_coherence(spec: ConstantSpec, *,
                    depth: int = 3, size: int = 4,
                    term_size: int = 2,
                    limit: int | None = 50000) -> CoherenceReport:
    """Each extracted formula must be satisfiable on its own.

    Walks the bounded OK set member by member and reports the first one
    no searched model satisfies.  An empty extraction is vacuously
    coherent.
    """
    ok = ok_extract(spec, depth=depth, size=size, term_size=term_size,
                    limit=limit)
    model_profile = spec.profile if spec.profile.signed else get_profile("jl")
    for member in ok.members:
        if search_jl_model([member], model_profile) is None:
            return CoherenceReport("counterexample", ok.members,
                                   counterexample=member)
    return CoherenceReport("coherent-within-bounds", ok.members)


# ---------------------------------------------------------------------------
# documents


def spec_to_dict(spec: ConstantSpec) -> dict:
    return {"profile": spec.profile.name,
            "formulas": [print_formula(f) for f in spec.formulas],
            "closed": spec.closed}


def spec_from_dict(doc, default_profile: LogicProfile | None = None,
                   ) -> ConstantSpec:
    """Read a specification document: an object or a bare formula array."""
    if isinstance(doc, list):
        if default_profile is None:
            raise SpecFormatError(
                "a bare formula array needs a profile from the caller")
        profile, texts, closed = default_profile, doc, False
    elif isinstance(doc, dict):
        try:
            profile = get_profile(doc["profile"]) if "profile" in doc \
                else default_profile
        except KeyError as exc:
            raise SpecFormatError(str(exc))
        if profile is None:
            raise SpecFormatError("specification document names no profile")
        texts = doc.get("formulas")
        closed = bool(doc.get("closed", False))
        if not isinstance(texts, list):
            raise SpecFormatError("'formulas' must be an array")
    else:
        raise SpecFormatError("specification document must be an object "
                              "or an array of formulas")
    out: list[Formula] = []
    for i, text in enumerate(texts):
        try:
            out.append(parse_formula(str(text), signed=profile.signed))
        except ValueError as exc:
            raise SpecFormatError(f"formula {i}: {exc}")
    return ConstantSpec(profile, tuple(out), closed=closed)
