"""Proof checking, bounded forward chaining, internalization, and the
nonderivability reports."""

from itertools import product

import pytest

from dlk.builder import realize_spec
from dlk.logics import Binding, SCHEMAS, get_profile, instantiate
from dlk.proofs import (
    MissingConstantError, Proof, ProofFormatError, axiom_line,
    check_nonderivability, check_proof, derive_forward, hyp_line,
    internalize, mp_line, proof_from_dict, proof_to_dict,
)
from dlk.syntax import (
    Alphabet, Bottom, Const, FMeta, Implies, Just, Not, Var,
    enumerate_terms, formula_terms, parse_formula, parse_term,
    print_formula, subformulas,
)

jl = get_profile("jl")
dl = get_profile("dl")
dl0 = get_profile("dl0")
fused = get_profile("fused")


def fm(text, signed=False):
    return parse_formula(text, signed=signed)


def tm(text, signed=False):
    return parse_term(text, signed=signed)


def denial_replay() -> Proof:
    """Three lines: from s:(t:P -> ~P) conclude ~(t:P -> ~P)."""
    hyp = fm("s:(t:P -> ~P)")
    inst = fm("s:(t:P -> ~P) -> ~(t:P -> ~P)")
    binding = Binding({"P": fm("t:P -> ~P")}, {"t": tm("s")})
    return Proof(dl, (
        hyp_line(hyp, 0),
        axiom_line("denial", binding, inst),
        mp_line(1, 0, fm("~(t:P -> ~P)")),
    ), (hyp,))


# ---------------------------------------------------------------------------
# checking


def test_denial_replay_accepted():
    result = check_proof(denial_replay())
    assert result.ok, result.describe()
    assert result.conclusion == fm("~(t:P -> ~P)")


def test_signed_factivity_denial_chain():
    # t+:(s-:E) |- ~E
    hyp = fm("t+:(s-:E)", signed=True)
    proof = Proof(fused, (
        hyp_line(hyp, 0),
        axiom_line("factivity",
                   Binding({"P": fm("s-:E", signed=True)},
                           {"t": tm("t+", signed=True)}),
                   fm("t+:(s-:E) -> s-:E", signed=True)),
        mp_line(1, 0, fm("s-:E", signed=True)),
        axiom_line("denial",
                   Binding({"P": fm("E")}, {"t": tm("s-", signed=True)}),
                   fm("s-:E -> ~E", signed=True)),
        mp_line(3, 2, fm("~E")),
    ), (hyp,))
    result = check_proof(proof)
    assert result.ok, result.describe()
    assert result.conclusion == fm("~E")


def test_mp_citing_later_line_rejected():
    hyp = fm("P")
    proof = Proof(dl, (
        mp_line(1, 2, fm("Q")),
        hyp_line(hyp, 0),
        hyp_line(hyp, 0),
    ), (hyp,))
    result = check_proof(proof)
    assert not result.ok
    assert result.problems[0][0] == 0


def test_axiom_line_must_restate_its_instance():
    binding = Binding({"P": fm("P")}, {"t": tm("t")})
    proof = Proof(dl, (
        axiom_line("denial", binding, fm("t:P -> ~Q")),
    ))
    assert not check_proof(proof).ok


def test_hypothesis_must_be_on_the_list():
    proof = Proof(dl, (hyp_line(fm("P"), 0),), (fm("Q"),))
    assert not check_proof(proof).ok


def test_schema_must_belong_to_profile():
    binding = Binding({"P": fm("P")}, {"t": tm("t")})
    inst = fm("t:P -> ~P")
    proof = Proof(jl, (axiom_line("denial", binding, inst),))
    assert not check_proof(proof).ok


def test_positive_denial_axiom_rejected_in_fused():
    binding = Binding({"P": fm("P")}, {"t": tm("t+", signed=True)})
    inst = fm("t+:P -> ~P", signed=True)
    proof = Proof(fused, (axiom_line("denial", binding, inst),))
    result = check_proof(proof)
    assert not result.ok


def test_mp_shape_checked():
    h1, h2 = fm("P -> Q"), fm("R")
    proof = Proof(dl, (
        hyp_line(h1, 0), hyp_line(h2, 1), mp_line(0, 1, fm("Q")),
    ), (h1, h2))
    assert not check_proof(proof).ok


def test_proof_json_round_trip():
    proof = denial_replay()
    back = proof_from_dict(proof_to_dict(proof))
    assert back == proof
    assert check_proof(back).ok


@pytest.mark.parametrize("doc", [
    [],
    {"profile": "dl"},
    {"profile": "dl", "lines": [{"kind": "axiom"}]},
    {"profile": "dl", "lines": [{"kind": "mp", "formula": "P"}]},
    {"profile": "dl", "lines": [{"kind": "zig", "formula": "P"}]},
    {"profile": "dl", "hypotheses": ["P ->"], "lines": []},
])
def test_proof_format_errors(doc):
    with pytest.raises(ProofFormatError):
        proof_from_dict(doc)


# ---------------------------------------------------------------------------
# forward chaining


def _template_metas(template):
    fnames = sorted({m.name for m in subformulas(template)
                     if isinstance(m, FMeta)})
    tnames = sorted({m.name for m in formula_terms(template)
                     if hasattr(m, "polarity")})
    return fnames, tnames


def brute_instances(profile, pool, terms):
    out = set()
    for sid in profile.schema_ids:
        template = SCHEMAS[sid].template
        fnames, tnames = _template_metas(template)
        for fvals in product(pool, repeat=len(fnames)):
            for tvals in product(terms, repeat=len(tnames)):
                try:
                    out.add(instantiate(
                        template,
                        Binding(dict(zip(fnames, fvals)),
                                dict(zip(tnames, tvals))),
                        signed=profile.signed))
                except ValueError:
                    continue
    return out


def test_single_round_is_exactly_the_instance_set():
    derived = derive_forward(jl, [], size_bound=2, rounds=1)
    terms = enumerate_terms(Alphabet((), ("x", "y"), (), signed=False),
                            2, jl.term_ops)
    assert set(derived.order) == brute_instances(jl, [Bottom()], terms)
    assert {derived.provenance[f][0] for f in derived.order} == {"axiom"}


def test_derive_from_negative_entry():
    derived = derive_forward(dl, [fm("s:E"), fm("~E")],
                             size_bound=3, rounds=2, term_size_bound=2)
    assert fm("s:E") in derived
    assert fm("~E") in derived
    # sums inherit the justification
    assert fm("[s+x]:E") in derived
    assert fm("[x+s]:E") in derived
    assert any(j.body == fm("E") for j in derived.justified())


def test_derive_the_denial_replay_conclusion():
    goal = fm("~(t:P -> ~P)")
    derived = derive_forward(dl, [fm("s:(t:P -> ~P)")],
                             size_bound=6, rounds=2, term_size_bound=2,
                             goal=goal)
    assert goal in derived
    proof = derived.proof_of(goal)
    result = check_proof(proof)
    assert result.ok and result.conclusion == goal


def test_every_derived_formula_has_a_checking_proof():
    derived = derive_forward(dl, [fm("s:E"), fm("~E")],
                             size_bound=2, rounds=2, term_size_bound=2)
    assert len(derived) > 50
    for f in derived.order:
        result = check_proof(derived.proof_of(f))
        assert result.ok, print_formula(f)
        assert result.conclusion == f


def test_monotone_in_both_bounds():
    hyps = [fm("s:E"), fm("~E")]
    base = set(derive_forward(dl, hyps, size_bound=2, rounds=2,
                              term_size_bound=2).order)
    wider = set(derive_forward(dl, hyps, size_bound=3, rounds=2,
                               term_size_bound=2).order)
    deeper = set(derive_forward(dl, hyps, size_bound=2, rounds=3,
                                term_size_bound=2).order)
    assert base <= wider
    assert base <= deeper


def test_goal_stops_the_search():
    goal = fm("~(t:P -> ~P)")
    derived = derive_forward(dl, [fm("s:(t:P -> ~P)")], size_bound=6,
                             rounds=3, term_size_bound=2, goal=goal)
    assert goal in derived


def test_limit_truncates_deterministically():
    hyps = [fm("s:E"), fm("~E")]
    full = derive_forward(dl, hyps, size_bound=3, rounds=2,
                          term_size_bound=2)
    capped = derive_forward(dl, hyps, size_bound=3, rounds=2,
                            term_size_bound=2, limit=40)
    assert capped.hit_limit and not full.hit_limit
    assert capped.order == full.order[:len(capped.order)]
    assert len(capped.order) >= 40


def test_contradiction_watch():
    derived = derive_forward(dl, [fm("P"), fm("~P")], size_bound=2,
                             rounds=1, watch_contradiction=True)
    assert derived.contradiction is not None
    a, b = derived.contradiction
    assert Not(a) == b or Not(b) == a


# ---------------------------------------------------------------------------
# internalization


def test_internalize_single_axiom_line():
    inst = fm("c+:P -> P", signed=True)
    proof = Proof(fused, (
        axiom_line("factivity",
                   Binding({"P": fm("P")}, {"t": tm("c+", signed=True)}),
                   inst),
    ))
    entry = Just(Const("e", "+"), inst)
    lifted = internalize(proof, [entry])
    assert lifted.term == Const("e", "+")
    assert lifted.conclusion == Just(Const("e", "+"), inst)
    assert check_proof(lifted.proof).ok


def test_internalize_mp_builds_application():
    h1, h2 = fm("P -> Q"), fm("P")
    proof = Proof(fused, (
        hyp_line(h1, 0), hyp_line(h2, 1), mp_line(0, 1, fm("Q")),
    ), (h1, h2))
    entries = [Just(Const("a", "+"), h1), Just(Const("b", "+"), h2)]
    lifted = internalize(proof, entries)
    assert print_formula(lifted.conclusion) == "[a+.b+]:Q"
    result = check_proof(lifted.proof)
    assert result.ok, result.describe()


def test_internalize_reports_uncovered_line():
    h = fm("P")
    proof = Proof(fused, (hyp_line(h, 0),), (h,))
    with pytest.raises(MissingConstantError):
        internalize(proof, [])


def test_internalize_refuses_broken_proofs():
    proof = Proof(fused, (mp_line(0, 0, fm("P")),))
    with pytest.raises(ValueError):
        internalize(proof, [])


# ---------------------------------------------------------------------------
# nonderivability


def test_axiom_goal_is_derivable():
    report = check_nonderivability(dl, [], fm("t:P -> ~P"),
                                   size_bound=6, rounds=1,
                                   term_size_bound=2)
    assert report.status == "derivable"
    assert check_proof(report.proof).ok


def test_signed_spec_refutes_a_positive_justifier():
    hyps = [fm("s+:C", signed=True), fm("t-:E", signed=True),
            fm("C"), fm("~E")]
    report = check_nonderivability(
        fused, hyps, fm("C -> E"), exists_term=True, positive_only=True,
        size_bound=3, rounds=2, term_size_bound=2, limit=60000)
    assert report.status == "refuted"
    assert report.contradiction is not None
    for proof in report.refutation_proofs:
        assert check_proof(proof).ok


def test_countermodel_closes_the_question():
    hyps = [fm("a:A"), fm("~A"), fm("b:B"), fm("~B")]
    model, _ = realize_spec(dl0, hyps)
    report = check_nonderivability(
        dl0, hyps, fm("A /\\ B"), exists_term=True,
        size_bound=3, rounds=2, term_size_bound=4, countermodel=model)
    assert report.status == "countermodeled"
    assert "size 4" in report.note


def test_open_when_nothing_decides():
    hyps = [fm("a:A"), fm("~A"), fm("b:B"), fm("~B")]
    report = check_nonderivability(
        dl0, hyps, fm("A /\\ B"), exists_term=True,
        size_bound=3, rounds=2, term_size_bound=2, limit=60000)
    assert report.status == "open"
    assert not report.established
