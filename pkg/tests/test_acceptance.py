"""Acceptance gate: the package's headline guarantees, one test each.

Every test prints one PASS/FAIL line with its measurements (run pytest -s
to see them as they happen; they also appear in captured output).
The corpus checks sweep every formula over {p, q} with degree up to five
plus a seeded random sample of deeper three-atom formulas.
"""

import statistics
import time

import pytest

from tableaux import (
    Model,
    Not,
    build_tableau,
    check_satisfiable,
    check_valid,
    complete_dnf,
    dnf_from_tableau,
    dnf_to_formula,
    equivalent,
    is_satisfiable_tt,
    make_clause,
    make_dnf,
    model_from_valuation,
    parse,
    rewrite_to_dnf,
    satisfies,
    truth_table,
)
from tableaux.generate import enumerate_formulas, random_corpus

EXHAUSTIVE_ATOMS = ("p", "q")
EXHAUSTIVE_DEGREE = 5
RANDOM_SUITE = random_corpus(20260817, ("p", "q", "r"), 10, 1000)

STUDY = parse("(p|q)&(~p|r)")
STUDY_DNF_TEXT = "(p ∧ r) ∨ (¬p ∧ q) ∨ (q ∧ r)"


def _exhaustive():
    return enumerate_formulas(EXHAUSTIVE_ATOMS, EXHAUSTIVE_DEGREE)


def _both_corpora():
    yield from _exhaustive()
    yield from RANDOM_SUITE


def _report(number: int, ok: bool, text: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] acceptance {number:02d}: {text}")
    assert ok, text


def test_accept_01_branching_conjunction_end_to_end():
    started = time.perf_counter()
    sat, model, t = check_satisfiable([STUDY])
    leaves = t.leaves()
    checks = (
        sat is True,
        len(leaves) == 4,
        t.branch_status(leaves[0]) == "closed",
        t.branch_literals(leaves[0]) == (("p", True), ("p", False)),
        t.open_branches()
        == [
            (2, (("p", True), ("r", True))),
            (3, (("p", False), ("q", True))),
            (4, (("q", True), ("r", True))),
        ],
        model
        == Model(
            universe={2, 3, 4},
            valuation={"p": {2}, "q": {3, 4}, "r": {2, 4}},
        ),
        dnf_from_tableau(t).to_text() == STUDY_DNF_TEXT,
        [bits for bits, value in truth_table(STUDY).rows if value]
        == [(1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 1, 0)],
    )
    elapsed = time.perf_counter() - started
    _report(
        1,
        all(checks) and elapsed < 1.0,
        f"branching conjunction reproduced exactly in {elapsed:.3f}s",
    )


def test_accept_02_complete_dnf_of_the_branching_conjunction():
    started = time.perf_counter()
    d = complete_dnf(STUDY)
    expected = make_dnf(
        [
            make_clause([("p", True), ("q", True), ("r", True)]),
            make_clause([("p", True), ("q", False), ("r", True)]),
            make_clause([("p", False), ("q", True), ("r", True)]),
            make_clause([("p", False), ("q", True), ("r", False)]),
        ]
    )
    agrees = equivalent(
        dnf_to_formula(d), dnf_to_formula(dnf_from_tableau(build_tableau([STUDY])))
    )
    elapsed = time.perf_counter() - started
    _report(
        2,
        d == expected and agrees and elapsed < 1.0,
        f"complete DNF has the four expected clauses and matches the "
        f"tableau DNF ({elapsed:.3f}s)",
    )


def test_accept_03_complete_dnf_of_a_disjunction():
    started = time.perf_counter()
    f = parse("~p | q")
    d = complete_dnf(f)
    expected = make_dnf(
        [
            make_clause([("p", False), ("q", False)]),
            make_clause([("p", False), ("q", True)]),
            make_clause([("p", True), ("q", True)]),
        ]
    )
    elapsed = time.perf_counter() - started
    _report(
        3,
        d == expected and equivalent(dnf_to_formula(d), f) and elapsed < 1.0,
        f"two-atom complete DNF is canonical and equivalent ({elapsed:.3f}s)",
    )


def test_accept_04_validity_by_refutation():
    started = time.perf_counter()
    f = parse("(p & q) -> (p | q)")
    valid, counter = check_valid(f)
    refutation = build_tableau([Not(f)])
    direct = build_tableau([f])
    checks = (
        valid is True,
        counter is None,
        all(refutation.branch_status(l) == "closed" for l in refutation.leaves()),
        [number for number, _ in direct.open_branches()] == [1, 2, 3, 4],
        [literals for _, literals in direct.open_branches()]
        == [
            (("p", False),),
            (("q", False),),
            (("p", True),),
            (("q", True),),
        ],
    )
    elapsed = time.perf_counter() - started
    _report(
        4,
        all(checks) and elapsed < 1.0,
        f"validity verdict with fully closed refutation in {elapsed:.3f}s",
    )


def test_accept_05_openness_equals_truth_table_satisfiability():
    started = time.perf_counter()
    disagreements = 0
    total = 0
    for f in _both_corpora():
        total += 1
        if build_tableau([f]).is_open() != is_satisfiable_tt(f):
            disagreements += 1
    elapsed = time.perf_counter() - started
    _report(
        5,
        disagreements == 0 and elapsed < 60.0,
        f"{total} formulas, {disagreements} disagreements, {elapsed:.1f}s",
    )


@pytest.fixture(scope="module")
def corpus_sweep():
    """One pass over both corpora collecting the model-extraction and DNF
    facts, plus a single-state-witness pass over the exhaustive corpus."""
    extraction_violations = 0
    dnf_violations = 0
    trace_violations = 0
    total = 0
    for f in _both_corpora():
        total += 1
        sat, model, t = check_satisfiable([f])
        if sat and not all(satisfies(model, s, f) for s in model.universe):
            extraction_violations += 1
        branch_dnf = dnf_from_tableau(t)
        rewrite_dnf, steps = rewrite_to_dnf(f)
        if sat:
            if not (
                equivalent(dnf_to_formula(branch_dnf), f)
                and equivalent(dnf_to_formula(rewrite_dnf), f)
            ):
                dnf_violations += 1
        elif not (branch_dnf.is_empty() and rewrite_dnf.is_empty()):
            dnf_violations += 1
        for step in steps:
            if not equivalent(step.before, step.after):
                trace_violations += 1
                break

    assignments = [{"p": a, "q": b} for a in (1, 0) for b in (1, 0)]
    witness_disagreements = 0
    exhaustive_total = 0
    for f in _exhaustive():
        exhaustive_total += 1
        witnessed = any(
            satisfies(model_from_valuation(v), 1, f) for v in assignments
        )
        if witnessed != is_satisfiable_tt(f):
            witness_disagreements += 1

    return {
        "total": total,
        "extraction_violations": extraction_violations,
        "dnf_violations": dnf_violations,
        "trace_violations": trace_violations,
        "exhaustive_total": exhaustive_total,
        "witness_disagreements": witness_disagreements,
    }


def test_accept_06_extracted_models_are_sound(corpus_sweep):
    _report(
        6,
        corpus_sweep["extraction_violations"] == 0,
        f"{corpus_sweep['total']} formulas, "
        f"{corpus_sweep['extraction_violations']} states failing their input",
    )


def test_accept_07_satisfiability_agrees_with_state_witnesses(corpus_sweep):
    _report(
        7,
        corpus_sweep["witness_disagreements"] == 0,
        f"{corpus_sweep['exhaustive_total']} exhaustive formulas, "
        f"{corpus_sweep['witness_disagreements']} witness disagreements",
    )


def test_accept_08_dnf_routes_preserve_equivalence(corpus_sweep):
    _report(
        8,
        corpus_sweep["dnf_violations"] == 0
        and corpus_sweep["trace_violations"] == 0,
        f"{corpus_sweep['total']} formulas, "
        f"{corpus_sweep['dnf_violations']} inequivalent DNFs, "
        f"{corpus_sweep['trace_violations']} bad rewrite steps",
    )


def test_accept_09_construction_is_fast_and_deterministic():
    corpus = random_corpus(1409, ("p", "q", "r"), 14, 200)
    worst = 0.0
    stable = True
    for f in corpus:
        started = time.perf_counter()
        first = build_tableau([f])
        worst = max(worst, time.perf_counter() - started)
        if first.to_canonical_json() != build_tableau([f]).to_canonical_json():
            stable = False
    _report(
        9,
        worst < 2.0 and stable,
        f"200 deep tableaux, worst build {worst * 1000:.1f}ms, "
        f"serialization {'stable' if stable else 'UNSTABLE'}",
    )


def test_accept_10_tableaux_decide_faster_than_building_tables():
    corpus = random_corpus(2010, tuple("abcdefghij"), 20, 100)
    tableau_times = []
    table_times = []
    for f in corpus:
        started = time.perf_counter()
        build_tableau([f]).is_open()
        tableau_times.append(time.perf_counter() - started)
        started = time.perf_counter()
        truth_table(f)
        table_times.append(time.perf_counter() - started)
    ratio = statistics.median(tableau_times) / statistics.median(table_times)
    _report(
        10,
        ratio < 1.0,
        f"median tableau decision time / median table construction time "
        f"= {ratio:.3f} over 100 ten-atom formulas",
    )
