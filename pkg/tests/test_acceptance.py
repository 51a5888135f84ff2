"""Acceptance suite: one test per criterion, each printing a PASS line.

Run as `pytest tests/test_acceptance.py -v -s` to see the lines; any
assertion failure marks the corresponding criterion red.
"""
import time
from random import Random

from fcakit import (
    Accept,
    Counterexample,
    answer,
    canonical_base,
    closed_sets,
    enumerate_concepts,
    lectic_less,
    lin_closure,
    load_session,
    new_session,
    run_with_oracle,
    save_session,
)
from fcakit.cli import main
from fcakit.io import read_context, write_context
from fcakit.lattice import build_lattice

from conftest import fixture_path, from_ref, names, obj_names, to_ref
from oracle import powerset, random_context, transitive_reduction

NUM_ATTRS = ("even", "prime", "divided_by_three", "odd", "factorial")

GOLDEN_BASE = {
    (frozenset({"factorial", "odd"}), frozenset({"prime"})),
    (frozenset({"factorial", "divided_by_three"}), frozenset({"even"})),
    (frozenset({"prime", "divided_by_three"}), frozenset({"odd"})),
    (frozenset({"even", "odd"}), frozenset({"factorial", "prime", "divided_by_three"})),
    (frozenset({"even", "prime"}), frozenset({"factorial"})),
}

# the golden numbers dialogue rendered under declaration attribute order
DIALOGUE = [
    ("→ even, prime, divided_by_three, odd, factorial",
     ("2", ("even", "factorial", "prime"))),
    ("→ even, prime, factorial", ("5", ("odd", "prime"))),
    ("→ prime", ("6", ("even", "factorial", "divided_by_three"))),
    ("factorial → even", ("1", ("factorial", "odd", "prime"))),
    ("odd → prime", ("9", ("divided_by_three", "odd"))),
    ("odd, factorial → prime", None),
    ("divided_by_three, factorial → even", None),
    ("prime, divided_by_three → even, odd, factorial",
     ("3", ("prime", "divided_by_three", "odd"))),
    ("prime, divided_by_three → odd", None),
    ("even → factorial", ("8", ("even",))),
    ("even, odd → prime, divided_by_three, factorial", None),
    ("even, divided_by_three → factorial", ("12", ("even", "divided_by_three"))),
    ("even, prime → factorial", None),
]


def report(criterion: int, message: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS — {message}")


def base_names(ctx, impls):
    return {(names(ctx, i.premise), names(ctx, i.conclusion)) for i in impls}


def test_criterion_1_numbers_canonical_base(num):
    start = time.perf_counter()
    base = canonical_base(num)
    elapsed = time.perf_counter() - start
    assert base_names(num, base) == GOLDEN_BASE
    assert elapsed < 1.0
    report(1, f"numbers base equals the golden 5 implications in {elapsed * 1000:.1f} ms")


def test_criterion_2_numbers_transcript(num):
    session = new_session(attributes=NUM_ATTRS)
    seen = []
    for expected_question, reply in DIALOGUE:
        seen.append(session.question_text())
        assert session.question_text() == expected_question, (
            f"question mismatch at step {len(seen)}"
        )
        if reply is None:
            session = answer(session, Accept())
        else:
            name, attrs = reply
            session = answer(
                session, Counterexample(name, session.working_context.attr_set(attrs))
            )
    assert session.done
    base, final = session.results()
    assert base_names(final, base) == GOLDEN_BASE
    assert set(final.objects) == set(num.objects)
    for g in final.objects:
        assert names(final, final.row(final.object_index(g))) == names(
            num, num.row(num.object_index(g))
        )
    report(2, "golden dialogue replays question-for-question to the final context and base")


def test_criterion_3_oracle_exploration_contract():
    rng = Random(20260808)
    start = time.perf_counter()
    failures = 0
    for _ in range(200):
        hidden = from_ref(random_context(rng, max_objects=8, max_attributes=6))
        base, explored = run_with_oracle(new_session(attributes=hidden.attributes), hidden)
        if base.as_set() != canonical_base(hidden).as_set():
            failures += 1
        elif canonical_base(explored).as_set() != base.as_set():
            failures += 1
    elapsed = time.perf_counter() - start
    assert failures == 0
    assert elapsed < 30.0
    report(3, f"200 oracle explorations reproduced their hidden bases in {elapsed:.2f} s")


def test_criterion_4_geotargeting_soundness(capsys):
    start = time.perf_counter()
    code = main([
        "check",
        "--context", fixture_path("geo.cxt"),
        "--implications", fixture_path("geo_implications.txt"),
        "--dichotomize",
    ])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0
    assert "27/27 implications hold" in out
    assert elapsed < 1.0
    with capsys.disabled():
        report(4, f"all 27 geotargeting implications hold; cmd_check exit 0 in {elapsed * 1000:.0f} ms")


def test_criterion_5_next_closure_vs_brute_force():
    rng = Random(55)
    start = time.perf_counter()
    for _ in range(500):
        ref = random_context(rng, max_objects=8, max_attributes=8)
        ctx = from_ref(ref)
        emitted = list(closed_sets(ctx.close_attrs, ctx.attribute_count))
        assert [names(ctx, s) for s in emitted] == [frozenset(s) for s in ref.intents()]
        for a, b in zip(emitted, emitted[1:]):
            assert lectic_less(a, b)
    elapsed = time.perf_counter() - start
    report(5, f"500 random contexts: Next Closure equals brute force, strictly lectic ({elapsed:.2f} s)")


def test_criterion_6_completeness_equation():
    rng = Random(66)
    checked = 0
    for _ in range(200):
        ref = random_context(rng, max_objects=8, max_attributes=6)
        ctx = from_ref(ref)
        base = canonical_base(ctx)
        for sub in powerset(ref.attributes):
            attrs = ctx.attr_set(sub)
            assert lin_closure(base, attrs) == ctx.close_attrs(attrs)
            checked += 1
    report(6, f"completeness equation exhaustive over {checked} subset/context pairs")


def test_criterion_7_figures_fixtures(fig):
    concepts = list(enumerate_concepts(fig))
    assert len(concepts) == 9
    pairs = {(obj_names(fig, c.extent), names(fig, c.intent)) for c in concepts}
    assert (frozenset({"3", "4"}), frozenset({"b", "c"})) in pairs
    lat = build_lattice(fig)
    assert lat.covers == transitive_reduction(to_ref(fig).concepts())
    report(7, "figures context: 9 concepts incl. ({3,4},{b,c}); covers equal brute-force reduction")


def test_criterion_8_failure_report(tst):
    from fcakit import failure_report

    rep = failure_report(tst, "failed", depth=1)
    clusters = [(set(c.shared_attrs), set(c.tests)) for c in rep.clusters]
    assert clusters == [({"login"}, {"1", "3"}), ({"https", "login"}, {"1"})]
    report(8, "failed-test report: {login} covers tests 1,3; {https,login} covers test 1")


def test_criterion_9_round_trips(fig, num, tst, fea):
    for ctx in (fig, num, tst, fea):
        for fmt in ("cxt", "csv", "json"):
            assert read_context(write_context(ctx, fmt), fmt) == ctx
    session = new_session(attributes=NUM_ATTRS)
    for expected_question, reply in DIALOGUE[:5]:
        name, attrs = reply
        session = answer(
            session, Counterexample(name, session.working_context.attr_set(attrs))
        )
    restored = load_session(save_session(session))
    assert restored == session
    assert restored.question_text() == session.question_text()
    report(9, "cxt/csv/json round-trips on all four fixtures; session save/load identity mid-run")
