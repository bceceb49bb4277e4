"""Two semantics for propositional formulas and the bridge between them.

The standard semantics assigns 0/1 truth values through a valuation.
The set-based semantics interprets each formula as the set of states of a
model in which it holds; a formula is satisfiable exactly when some state
of some model lies in its interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .formula import And, Atom, Formula, Implies, Not, Or, atoms, format_formula

__all__ = [
    "SemanticsError",
    "EvaluationError",
    "InterpretationError",
    "DomainError",
    "CapacityError",
    "MAX_TABLE_ATOMS",
    "Model",
    "TruthTable",
    "eval_standard",
    "truth_table",
    "interpret",
    "satisfies",
    "model_from_valuation",
    "valuation_from_state",
    "is_satisfiable_tt",
    "is_valid_tt",
    "equivalent",
]

MAX_TABLE_ATOMS = 20


class SemanticsError(Exception):
    """Base class for semantic evaluation failures."""

    code = "SEMANTICS_ERROR"


class EvaluationError(SemanticsError):
    """An atom has no truth value in the given valuation."""

    code = "EVALUATION_ERROR"


class InterpretationError(SemanticsError):
    """An atom has no state set in the given model."""

    code = "INTERPRETATION_ERROR"


class DomainError(SemanticsError):
    """A state id lies outside the model's universe."""

    code = "DOMAIN_ERROR"


class CapacityError(SemanticsError):
    """The request would enumerate more rows than the supported bound."""

    code = "CAPACITY_ERROR"


def eval_standard(f: Formula, valuation: Mapping[str, int]) -> int:
    """Truth value (0 or 1) of f under a valuation of its atoms."""
    cls = type(f)
    if cls is Atom:
        try:
            return 1 if valuation[f.name] else 0
        except KeyError:
            raise EvaluationError(
                f"atom '{f.name}' has no truth value in the valuation"
            ) from None
    if cls is Not:
        return 1 - eval_standard(f.inner, valuation)
    if cls is And:
        return eval_standard(f.left, valuation) and eval_standard(f.right, valuation)
    if cls is Or:
        return eval_standard(f.left, valuation) or eval_standard(f.right, valuation)
    # implication: false only when the antecedent holds and the consequent fails
    if eval_standard(f.left, valuation):
        return eval_standard(f.right, valuation)
    return 1


@dataclass
class Model:
    """A set-based model: a finite non-empty universe of positive integer
    states and, per atom, the set of states where that atom holds."""

    universe: frozenset[int]
    valuation: dict[str, frozenset[int]]

    def __post_init__(self):
        self.universe = frozenset(self.universe)
        if not self.universe:
            raise ValueError("model universe must be non-empty")
        for s in self.universe:
            if not isinstance(s, int) or isinstance(s, bool) or s < 1:
                raise ValueError(f"state ids must be positive integers, got {s!r}")
        cleaned = {}
        for name, states in self.valuation.items():
            states = frozenset(states)
            if not states <= self.universe:
                extra = sorted(states - self.universe)
                raise ValueError(
                    f"v({name}) contains states outside the universe: {extra}"
                )
            cleaned[name] = states
        self.valuation = cleaned

    def to_json(self) -> dict:
        return {
            "universe": sorted(self.universe),
            "valuation": {
                name: sorted(states) for name, states in sorted(self.valuation.items())
            },
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Model":
        return cls(
            universe=frozenset(obj["universe"]),
            valuation={
                name: frozenset(states) for name, states in obj["valuation"].items()
            },
        )

    def to_text(self) -> str:
        lines = ["U = {" + ", ".join(str(s) for s in sorted(self.universe)) + "}"]
        for name, states in sorted(self.valuation.items()):
            inner = ", ".join(str(s) for s in sorted(states))
            lines.append(f"v({name}) = {{{inner}}}")
        return "\n".join(lines)


def interpret(model: Model, f: Formula) -> frozenset[int]:
    """The set of states of the model in which f holds."""
    cls = type(f)
    if cls is Atom:
        try:
            return model.valuation[f.name]
        except KeyError:
            raise InterpretationError(
                f"atom '{f.name}' has no state set in the model"
            ) from None
    if cls is Not:
        return model.universe - interpret(model, f.inner)
    if cls is And:
        return interpret(model, f.left) & interpret(model, f.right)
    if cls is Or:
        return interpret(model, f.left) | interpret(model, f.right)
    return (model.universe - interpret(model, f.left)) | interpret(model, f.right)


def satisfies(model: Model, state: int, f: Formula) -> bool:
    """Whether f holds at the given state of the model.

    Defined by recursion on f, independently of interpret; the two agree
    (state in interpret(model, f) iff satisfies(model, state, f)).
    """
    if state not in model.universe:
        raise DomainError(f"state {state!r} is not in the universe")
    return _sat(model, state, f)


def _sat(model: Model, state: int, f: Formula) -> bool:
    cls = type(f)
    if cls is Atom:
        try:
            return state in model.valuation[f.name]
        except KeyError:
            raise InterpretationError(
                f"atom '{f.name}' has no state set in the model"
            ) from None
    if cls is Not:
        return not _sat(model, state, f.inner)
    if cls is And:
        return _sat(model, state, f.left) and _sat(model, state, f.right)
    if cls is Or:
        return _sat(model, state, f.left) or _sat(model, state, f.right)
    return not _sat(model, state, f.left) or _sat(model, state, f.right)


def model_from_valuation(valuation: Mapping[str, int]) -> Model:
    """A one-state model whose single state agrees with the 0/1 valuation."""
    return Model(
        universe=frozenset({1}),
        valuation={
            name: frozenset({1}) if value else frozenset()
            for name, value in valuation.items()
        },
    )


def valuation_from_state(
    model: Model, state: int, atom_names: Iterable[str]
) -> dict[str, int]:
    """The 0/1 valuation that the given state induces on the listed atoms."""
    if state not in model.universe:
        raise DomainError(f"state {state!r} is not in the universe")
    out = {}
    for name in atom_names:
        try:
            out[name] = 1 if state in model.valuation[name] else 0
        except KeyError:
            raise InterpretationError(
                f"atom '{name}' has no state set in the model"
            ) from None
    return out


@dataclass
class TruthTable:
    """Exhaustive rows for a formula: atom columns then the result bit.

    Rows run from the all-true assignment down to all-false, with the first
    atom as the most significant bit.
    """

    formula: Formula
    atoms: list[str]
    rows: list[tuple[tuple[int, ...], int]] = field(repr=False)

    def to_text(self) -> str:
        header = " ".join(self.atoms) + " | " + format_formula(self.formula)
        rule = "-" * (len(" ".join(self.atoms)) + 1) + "+" + "-" * (
            len(format_formula(self.formula)) + 2
        )
        lines = [header, rule]
        for bits, value in self.rows:
            cells = " ".join(
                str(bit).ljust(len(name)) for name, bit in zip(self.atoms, bits)
            )
            lines.append(cells.rstrip().ljust(len(" ".join(self.atoms))) + " | " + str(value))
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = [",".join(self.atoms + [format_formula(self.formula)])]
        for bits, value in self.rows:
            lines.append(",".join(str(b) for b in bits) + "," + str(value))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "formula": format_formula(self.formula),
            "atoms": list(self.atoms),
            "rows": [
                {"assignment": list(bits), "value": value}
                for bits, value in self.rows
            ],
        }


def _row_assignments(names: list[str]):
    """Assignments from all-true down to all-false, first atom most significant."""
    n = len(names)
    for mask in range(2**n - 1, -1, -1):
        bits = tuple((mask >> (n - 1 - i)) & 1 for i in range(n))
        yield bits, dict(zip(names, bits))


def _check_capacity(names: list[str]) -> None:
    if len(names) > MAX_TABLE_ATOMS:
        raise CapacityError(
            f"{len(names)} atoms would need {2**len(names)} rows; "
            f"the supported bound is {MAX_TABLE_ATOMS} atoms"
        )


def truth_table(f: Formula) -> TruthTable:
    """The full truth table of f; rejects formulas with too many atoms."""
    names = atoms(f)
    _check_capacity(names)
    rows = []
    for bits, valuation in _row_assignments(names):
        rows.append((bits, eval_standard(f, valuation)))
    return TruthTable(formula=f, atoms=names, rows=rows)


def is_satisfiable_tt(f: Formula) -> bool:
    """Brute-force satisfiability: some truth-table row comes out true."""
    names = atoms(f)
    _check_capacity(names)
    for _, valuation in _row_assignments(names):
        if eval_standard(f, valuation):
            return True
    return False


def is_valid_tt(f: Formula) -> bool:
    """Brute-force validity: every truth-table row comes out true."""
    names = atoms(f)
    _check_capacity(names)
    for _, valuation in _row_assignments(names):
        if not eval_standard(f, valuation):
            return False
    return True


def equivalent(f: Formula, g: Formula) -> bool:
    """Whether f and g agree under every assignment to their shared atoms."""
    names = sorted(set(atoms(f)) | set(atoms(g)))
    _check_capacity(names)
    for _, valuation in _row_assignments(names):
        if eval_standard(f, valuation) != eval_standard(g, valuation):
            return False
    return True
