import random

import pytest

from tableaux import (
    CapacityError,
    DomainError,
    EvaluationError,
    InterpretationError,
    Model,
    SemanticsError,
    equivalent,
    eval_standard,
    interpret,
    is_satisfiable_tt,
    is_valid_tt,
    model_from_valuation,
    parse,
    satisfies,
    truth_table,
    valuation_from_state,
)

STUDY = parse("(p | q) & (~p | r)")

# the model the tableau of STUDY extracts: states for its three open branches
STAR = Model(
    universe=frozenset({2, 3, 4}),
    valuation={
        "p": frozenset({2}),
        "q": frozenset({3, 4}),
        "r": frozenset({2, 4}),
    },
)


def test_eval_standard_basics():
    assert eval_standard(parse("p -> q"), {"p": 1, "q": 0}) == 0
    assert eval_standard(parse("p -> q"), {"p": 0, "q": 0}) == 1
    assert eval_standard(parse("~p"), {"p": 1}) == 0
    assert eval_standard(STUDY, {"p": 1, "q": 0, "r": 1}) == 1
    assert eval_standard(STUDY, {"p": 1, "q": 1, "r": 0}) == 0


def test_eval_standard_missing_atom():
    with pytest.raises(EvaluationError):
        eval_standard(parse("p & q"), {"p": 1})


def test_truth_table_rows_descend_from_all_true():
    tt = truth_table(STUDY)
    assert tt.atoms == ["p", "q", "r"]
    assert len(tt.rows) == 8
    assert tt.rows[0][0] == (1, 1, 1)
    assert tt.rows[-1][0] == (0, 0, 0)
    true_rows = [bits for bits, value in tt.rows if value]
    assert true_rows == [(1, 1, 1), (1, 0, 1), (0, 1, 1), (0, 1, 0)]


def test_truth_table_text():
    text = truth_table(STUDY).to_text()
    lines = text.splitlines()
    assert lines[0] == "p q r | (p ∨ q) ∧ (¬p ∨ r)"
    assert lines[1] == "------+--------------------"
    assert lines[2] == "1 1 1 | 1"
    assert lines[-1] == "0 0 0 | 0"


def test_truth_table_csv():
    csv = truth_table(parse("p & q")).to_csv()
    assert csv == "p,q,p ∧ q\n1,1,1\n1,0,0\n0,1,0\n0,0,0\n"


def test_truth_table_json():
    obj = truth_table(parse("~p")).to_json()
    assert obj["formula"] == "¬p"
    assert obj["atoms"] == ["p"]
    assert obj["rows"] == [
        {"assignment": [1], "value": 0},
        {"assignment": [0], "value": 1},
    ]


def test_truth_table_capacity_bound():
    wide = parse(" | ".join(f"a{i}" for i in range(21)))
    with pytest.raises(CapacityError):
        truth_table(wide)
    with pytest.raises(CapacityError):
        is_satisfiable_tt(wide)
    # the bound is a SemanticsError like the rest, so one handler covers all
    assert issubclass(CapacityError, SemanticsError)


def test_model_validates_inputs():
    with pytest.raises(ValueError):
        Model(universe=frozenset(), valuation={})
    with pytest.raises(ValueError):
        Model(universe=frozenset({0}), valuation={})
    with pytest.raises(ValueError):
        Model(universe=frozenset({1}), valuation={"p": frozenset({2})})


def test_model_normalizes_collections():
    m = Model(universe={1, 2}, valuation={"p": [1]})
    assert m.universe == frozenset({1, 2})
    assert m.valuation["p"] == frozenset({1})


def test_model_json_round_trip():
    obj = STAR.to_json()
    assert obj == {
        "universe": [2, 3, 4],
        "valuation": {"p": [2], "q": [3, 4], "r": [2, 4]},
    }
    assert Model.from_json(obj) == STAR


def test_model_text():
    assert STAR.to_text() == "U = {2, 3, 4}\nv(p) = {2}\nv(q) = {3, 4}\nv(r) = {2, 4}"


def test_interpret_connectives():
    m = Model(universe={1, 2}, valuation={"p": {1}})
    assert interpret(m, parse("p")) == {1}
    assert interpret(m, parse("~p")) == {2}

    m2 = Model(
        universe={1, 2, 3},
        valuation={"p": {1, 2}, "q": {2}, "r": {2, 3}},
    )
    assert interpret(m2, parse("p & q")) == {2}
    assert interpret(m2, parse("p | r")) == {1, 2, 3}
    assert interpret(m2, parse("p & q -> r")) == {1, 2, 3}


def test_interpret_study_model():
    assert interpret(STAR, STUDY) == {2, 3, 4}
    assert interpret(STAR, parse("p & r")) == {2}
    assert interpret(STAR, parse("q & r")) == {4}


def test_interpret_missing_atom():
    with pytest.raises(InterpretationError):
        interpret(Model(universe={1}, valuation={}), parse("p"))


def test_satisfies_matches_interpret():
    for f in (STUDY, parse("p -> q"), parse("~(q & r)")):
        region = interpret(STAR, f)
        for s in STAR.universe:
            assert satisfies(STAR, s, f) == (s in region)


def test_satisfies_outside_universe():
    with pytest.raises(DomainError):
        satisfies(STAR, 1, parse("p"))


def test_model_from_valuation():
    m = model_from_valuation({"p": 1, "q": 0})
    assert m.universe == {1}
    assert m.valuation == {"p": frozenset({1}), "q": frozenset()}
    assert satisfies(m, 1, parse("p & ~q"))


def test_valuation_from_state():
    assert valuation_from_state(STAR, 2, ["p", "q", "r"]) == {"p": 1, "q": 0, "r": 1}
    assert valuation_from_state(STAR, 4, ["p", "q", "r"]) == {"p": 0, "q": 1, "r": 1}
    with pytest.raises(DomainError):
        valuation_from_state(STAR, 9, ["p"])
    with pytest.raises(InterpretationError):
        valuation_from_state(STAR, 2, ["s"])


def test_single_state_models_mirror_valuations(pq_corpus):
    """A formula holds under a valuation exactly when the one-state model
    built from that valuation satisfies it."""
    for f in pq_corpus[::17]:
        for p_bit in (0, 1):
            for q_bit in (0, 1):
                valuation = {"p": p_bit, "q": q_bit}
                m = model_from_valuation(valuation)
                assert satisfies(m, 1, f) == bool(eval_standard(f, valuation))


def _random_models(seed, count):
    rng = random.Random(seed)
    models = []
    for _ in range(count):
        size = rng.randint(1, 6)
        universe = frozenset(range(1, size + 1))
        valuation = {
            name: frozenset(s for s in universe if rng.random() < 0.5)
            for name in ("p", "q", "r")
        }
        models.append(Model(universe=universe, valuation=valuation))
    return models


def test_interpret_is_compositional(pqr_corpus):
    models = _random_models(7021, 5)
    for f in pqr_corpus[:120]:
        for m in models:
            region = interpret(m, f)
            for s in m.universe:
                assert satisfies(m, s, f) == (s in region)


def test_connectives_act_on_state_sets():
    f = parse("p | ~q")
    g = parse("q -> r & p")
    for m in _random_models(90210, 8):
        fs, gs = interpret(m, f), interpret(m, g)
        assert interpret(m, parse(f"({f}) & ({g})")) == fs & gs
        assert interpret(m, parse(f"({f}) | ({g})")) == fs | gs
        assert interpret(m, parse(f"~({f})")) == m.universe - fs
        assert interpret(m, parse(f"({f}) -> ({g})")) == (m.universe - fs) | gs


def test_de_morgan_at_the_set_level():
    f = parse("p -> q")
    g = parse("q & ~r")
    for m in _random_models(5150, 8):
        assert interpret(m, parse(f"~(({f}) & ({g}))")) == interpret(
            m, parse(f"~({f}) | ~({g})")
        )
        assert interpret(m, parse(f"~(({f}) | ({g}))")) == interpret(
            m, parse(f"~({f}) & ~({g})")
        )


def test_satisfiability_agrees_across_semantics(pq_corpus):
    """Truth-table satisfiability coincides with having a satisfying
    model and state, witnessed by one-state models."""
    assignments = [{"p": a, "q": b} for a in (1, 0) for b in (1, 0)]
    for f in pq_corpus[::13]:
        witnessed = any(
            satisfies(model_from_valuation(v), 1, f) for v in assignments
        )
        assert witnessed == is_satisfiable_tt(f)


def test_satisfiable_and_valid_shortcuts():
    assert is_satisfiable_tt(parse("p & q"))
    assert not is_satisfiable_tt(parse("p & ~p"))
    assert is_valid_tt(parse("p | ~p"))
    assert not is_valid_tt(parse("p"))


def test_equivalent():
    assert equivalent(parse("p -> q"), parse("~p | q"))
    assert not equivalent(parse("p"), parse("q"))
    assert equivalent(parse("p"), parse("p & (q | ~q)"))
    assert not equivalent(parse("p & ~p"), parse("p | ~p"))
