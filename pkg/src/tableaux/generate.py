"""Formula corpora for tests and benchmarks: exhaustive layers by degree,
counting, and seeded random sampling.  Everything here is deterministic."""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .formula import And, Atom, Formula, Implies, Not, Or

__all__ = [
    "formula_layers",
    "enumerate_formulas",
    "count_formulas",
    "random_formula",
    "random_corpus",
]

_BINARY = (And, Or, Implies)


def formula_layers(atom_names: Sequence[str], max_degree: int) -> list[list[Formula]]:
    """layers[d] lists every formula over the atoms with exactly d
    connectives, in a fixed order.  Subtrees are shared across layers."""
    layers = [[Atom(name) for name in atom_names]]
    for d in range(1, max_degree + 1):
        layer = [Not(f) for f in layers[d - 1]]
        for op in _BINARY:
            for left_degree in range(d):
                for left in layers[left_degree]:
                    for right in layers[d - 1 - left_degree]:
                        layer.append(op(left, right))
        layers.append(layer)
    return layers


def enumerate_formulas(atom_names: Sequence[str], max_degree: int) -> Iterator[Formula]:
    """Every formula up to max_degree, lowest degree first.

    Layers below the top are built once and shared; the top layer streams
    without being stored, which keeps memory flat for large corpora.
    """
    layers = formula_layers(atom_names, max(max_degree - 1, 0))
    for d in range(min(max_degree, len(layers) - 1) + 1):
        yield from layers[d]
    if max_degree >= len(layers):
        d = max_degree
        for f in layers[d - 1]:
            yield Not(f)
        for op in _BINARY:
            for left_degree in range(d):
                for left in layers[left_degree]:
                    for right in layers[d - 1 - left_degree]:
                        yield op(left, right)


def count_formulas(num_atoms: int, max_degree: int) -> int:
    """How many formulas enumerate_formulas yields, without enumerating."""
    per_degree = [num_atoms]
    for d in range(1, max_degree + 1):
        total = per_degree[d - 1]
        total += 3 * sum(
            per_degree[a] * per_degree[d - 1 - a] for a in range(d)
        )
        per_degree.append(total)
    return sum(per_degree)


def random_formula(rng: random.Random, atom_names: Sequence[str], degree: int) -> Formula:
    """A uniform-ish random formula with exactly the given degree."""
    if degree == 0:
        return Atom(rng.choice(atom_names))
    if rng.random() < 0.25:
        return Not(random_formula(rng, atom_names, degree - 1))
    op = _BINARY[rng.randrange(3)]
    left_degree = rng.randrange(degree)
    return op(
        random_formula(rng, atom_names, left_degree),
        random_formula(rng, atom_names, degree - 1 - left_degree),
    )


def random_corpus(
    seed: int, atom_names: Sequence[str], max_degree: int, count: int
) -> list[Formula]:
    """count formulas with degrees spread over 0..max_degree, from a seed."""
    rng = random.Random(seed)
    return [
        random_formula(rng, atom_names, rng.randint(0, max_degree))
        for _ in range(count)
    ]
