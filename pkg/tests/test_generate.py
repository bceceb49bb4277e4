import random

from tableaux import Atom, Not, degree
from tableaux.generate import (
    count_formulas,
    enumerate_formulas,
    formula_layers,
    random_corpus,
    random_formula,
)


def test_layers_by_degree():
    layers = formula_layers(("p", "q"), 2)
    assert layers[0] == [Atom("p"), Atom("q")]
    assert layers[1][:2] == [Not(Atom("p")), Not(Atom("q"))]
    for d, layer in enumerate(layers):
        assert all(degree(f) == d for f in layer)


def test_layer_sizes_match_the_count():
    # degree d formulas: one negation per degree d-1 formula, plus three
    # binary connectives over every split of d-1
    assert len(formula_layers(("p",), 3)[3]) == count_formulas(1, 3) - count_formulas(1, 2)
    assert count_formulas(2, 0) == 2
    assert count_formulas(2, 1) == 2 + (2 + 3 * 4)


def test_enumeration_is_exhaustive_and_unique():
    seen = list(enumerate_formulas(("p", "q"), 3))
    assert len(seen) == count_formulas(2, 3)
    assert len(set(seen)) == len(seen)


def test_enumeration_streams_the_top_layer():
    gen = enumerate_formulas(("p", "q"), 4)
    first = next(gen)
    assert first == Atom("p")
    total = 1 + sum(1 for _ in gen)
    assert total == count_formulas(2, 4) == 56842


def test_random_formula_hits_the_requested_degree():
    rng = random.Random(99)
    for d in (0, 1, 5, 12):
        for _ in range(20):
            assert degree(random_formula(rng, ("p", "q", "r"), d)) == d


def test_random_corpus_is_reproducible():
    a = random_corpus(20260817, ("p", "q", "r"), 10, 50)
    b = random_corpus(20260817, ("p", "q", "r"), 10, 50)
    assert a == b
    assert len(a) == 50
    assert random_corpus(1, ("p", "q"), 4, 10) != random_corpus(2, ("p", "q"), 4, 10)
