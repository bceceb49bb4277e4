"""Shared corpora, built once per test run."""

import pytest

from tableaux.generate import enumerate_formulas, random_corpus


@pytest.fixture(scope="session")
def pq_corpus():
    """Every formula over {p, q} with at most four connectives."""
    return list(enumerate_formulas(("p", "q"), 4))


@pytest.fixture(scope="session")
def pqr_corpus():
    """A reproducible random sample over three atoms, degrees up to ten."""
    return random_corpus(20260817, ("p", "q", "r"), 10, 1000)
