"""Bundled worked examples, stored as data and replayed on demand.

Each scenario file pairs inputs (formulas, proofs, bounds) with the
verdicts they must produce; running one re-executes every step against
the live modules and reports line by line.  They double as regression
fixtures and as documentation of what the toolkit is for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .logics import get_profile
from .proofs import check_nonderivability, check_proof, proof_from_dict
from .semantics import evaluate
from .specifications import SpecClashError, blue_pill, close_spec
from .syntax import parse_formula, print_formula, print_term


class ScenarioError(ValueError):
    """A scenario name or file is no good."""


@dataclass
class ScenarioResult:
    name: str
    ok: bool
    lines: list[str] = field(default_factory=list)
    report: dict = field(default_factory=dict)


def available() -> list[str]:
    root = resources.files("dlk") / "scenarios"
    return sorted(p.name[:-5] for p in root.iterdir()
                  if p.name.endswith(".json"))


def load(name: str) -> dict:
    path = resources.files("dlk") / "scenarios" / f"{name}.json"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise ScenarioError(
            f"no scenario named {name!r}; available: "
            + ", ".join(available()))
    return json.loads(text)


def _parse_all(texts, profile):
    return [parse_formula(t, signed=profile.signed) for t in texts]


def _step_check_proof(step, profile, ctx):
    proof = proof_from_dict(step["proof"])
    result = check_proof(proof)
    expect = step.get("expect", "accepted")
    verdict = "accepted" if result.ok else "rejected"
    lines = [f"  proof of {print_formula(proof.conclusion)}: {verdict}"]
    if not result.ok:
        lines += [f"    {msg}" for msg in result.describe()]
    ok = verdict == expect
    want = step.get("expect_conclusion")
    if ok and want is not None:
        stated = parse_formula(want, signed=profile.signed)
        ok = proof.conclusion == stated
        if not ok:
            lines.append(f"    expected conclusion {want}")
    return ok, lines, {"verdict": verdict,
                       "conclusion": print_formula(proof.conclusion)}


def _step_close_spec(step, profile, ctx):
    formulas = _parse_all(step["formulas"], profile)
    try:
        spec = close_spec(formulas, profile)
    except SpecClashError as exc:
        expect = step.get("expect", "closed")
        ok = expect == "clash"
        return ok, [f"  closure clash: {exc}"], {"verdict": "clash"}
    ctx["spec"] = spec
    members = [print_formula(f) for f in spec.formulas]
    lines = ["  closed specification: " + ", ".join(members)]
    ok = True
    want = step.get("expect_members")
    if want is not None:
        have = set(members)
        missing = [w for w in want if w not in have]
        ok = not missing and len(want) == len(members)
        if missing:
            lines.append("    missing expected members: " + ", ".join(missing))
    return ok, lines, {"members": members}


def _step_realize(step, profile, ctx):
    from .builder import realize_spec   # heavier import, only on demand
    formulas = _parse_all(step["formulas"], profile)
    model, _ = realize_spec(profile, formulas)
    ctx["model"] = model
    lines = []
    for term in sorted(model.interp, key=print_term):
        ev = sorted(print_formula(f) for f in model.interp[term])
        if ev:
            lines.append(f"  interp({print_term(term)}) = {{{', '.join(ev)}}}")
    ok = all(evaluate(model, f) for f in formulas)
    within = step.get("expect_interp_within")
    if within is not None:
        allowed = set(within)
        stray = sorted({print_formula(f) for ev in model.interp.values()
                        for f in ev} - allowed)
        if stray:
            ok = False
            lines.append("    evidence outside "
                         f"{{{', '.join(sorted(allowed))}}}: "
                         + ", ".join(stray))
    lines.append("  model realizes every member" if ok
                 else "  realization check failed")
    return ok, lines, {"respects": ok}


def _step_nonderivability(step, profile, ctx):
    if step.get("hypotheses_from") == "closed":
        hyps = list(ctx["spec"].formulas)
    else:
        hyps = _parse_all(step["hypotheses"], profile)
    body = parse_formula(step["body"], signed=profile.signed)
    bounds = step.get("bounds", {})
    countermodel = ctx.get("model") if step.get("countermodel") == "realized" \
        else None
    report = check_nonderivability(
        profile, hyps, body,
        exists_term=bool(step.get("exists", False)),
        positive_only=bool(step.get("positive_only", False)),
        size_bound=int(bounds.get("size", 4)),
        rounds=int(bounds.get("depth", 3)),
        term_size_bound=bounds.get("term_size"),
        limit=bounds.get("limit"),
        countermodel=countermodel)
    lines = []
    if step.get("exists") and report.status != "derivable":
        sign = "positive " if step.get("positive_only") else ""
        lines.append(f"  no {sign}justifier for {print_formula(body)} "
                     f"within bounds")
    lines.append(f"  {report.status}: {report.note}")
    if report.contradiction:
        pair = " and ".join(print_formula(f) for f in report.contradiction)
        lines.append(f"  complementary pair: {pair}")
    ok = report.status == step.get("expect", "open")
    return ok, lines, {"status": report.status, "note": report.note}


def _step_blue_pill(step, profile, ctx):
    formulas = _parse_all(step["formulas"], profile)
    spec = close_spec(formulas, profile)
    bounds = step.get("bounds", {})
    result = blue_pill(spec,
                       depth=int(bounds.get("depth", 3)),
                       size=int(bounds.get("size", 4)),
                       limit=int(bounds.get("limit", 50000)))
    lines = [f"  extracted: "
             + ", ".join(print_formula(f) for f in result.ok.members[:8])
             + (", ..." if len(result.ok.members) > 8 else "")]
    if not result.found:
        lines.append(f"  no model: {result.note}")
        return step.get("expect") == "failure", lines, {"status": result.status}
    vals = {name: val for name, val in sorted(result.model.valuation.items())}
    lines.append("  model found; valuation "
                 + ", ".join(f"{k}={int(v)}" for k, v in vals.items()))
    ok = True
    for text in step.get("expect_true", []):
        f = parse_formula(text, signed=profile.signed)
        if not evaluate(result.model, f):
            ok = False
            lines.append(f"    expected {text} to come out true")
        else:
            lines.append(f"  {text} comes out true")
    return ok, lines, {"status": result.status, "valuation": vals}


_STEPS = {
    "check-proof": _step_check_proof,
    "close-spec": _step_close_spec,
    "realize": _step_realize,
    "nonderivability": _step_nonderivability,
    "blue-pill": _step_blue_pill,
}


def run(name: str) -> ScenarioResult:
    doc = load(name)
    profile = get_profile(doc["profile"])
    result = ScenarioResult(name, ok=True)
    result.lines.append(f"scenario {name} ({profile.name}): {doc['title']}")
    steps_report = []
    for i, step in enumerate(doc["steps"], start=1):
        kind = step["kind"]
        runner = _STEPS.get(kind)
        if runner is None:
            raise ScenarioError(f"scenario step {i} has unknown kind {kind!r}")
        result.lines.append(f"step {i}: {step.get('title', kind)}")
        ok, lines, fragment = runner(step, profile, ctx=result.report
                                     .setdefault("_ctx", {}))
        result.lines += lines
        steps_report.append({"kind": kind, "ok": ok, **fragment})
        result.ok = result.ok and ok
    result.report.pop("_ctx", None)
    result.report.update({"scenario": name, "ok": result.ok,
                          "steps": steps_report})
    result.lines.append("scenario verdict: "
                        + ("accepted" if result.ok else "FAILED"))
    return result
