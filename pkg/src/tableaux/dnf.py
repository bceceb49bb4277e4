"""Disjunctive normal form: canonical clauses plus three ways to get there.

A clause is a consistent set of literals read as their conjunction; a DNF
value is a set of clauses read as their disjunction.  Clauses keep their
literals sorted by atom name with the positive literal first on ties, and a
DNF keeps its clauses deduplicated and sorted, so equal values print alike.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import And, Atom, Formula, Implies, Not, Or, format_formula
from .semantics import truth_table
from .tableau import Tableau

__all__ = [
    "EmptyBranchError",
    "EmptyDnfError",
    "Clause",
    "Dnf",
    "RewriteStep",
    "make_clause",
    "make_dnf",
    "clause_from_branch",
    "dnf_from_tableau",
    "complete_dnf",
    "rewrite_to_dnf",
    "dnf_to_formula",
]


class EmptyBranchError(ValueError):
    code = "EMPTY_BRANCH"


class EmptyDnfError(ValueError):
    code = "EMPTY_DNF"


def _literal_key(literal: tuple[str, bool]):
    return (literal[0], not literal[1])


@dataclass(frozen=True)
class Clause:
    """Literals, as (atom, positive) pairs, in canonical order."""

    literals: tuple[tuple[str, bool], ...]

    def is_consistent(self) -> bool:
        names = {}
        for name, positive in self.literals:
            if names.setdefault(name, positive) != positive:
                return False
        return True

    def to_text(self) -> str:
        return " ∧ ".join(
            name if positive else "¬" + name for name, positive in self.literals
        )

    def to_json(self) -> list:
        return [[name, "+" if positive else "-"] for name, positive in self.literals]


def make_clause(literals) -> Clause:
    """Canonical clause: duplicates dropped, literals sorted."""
    unique = set(literals)
    return Clause(tuple(sorted(unique, key=_literal_key)))


@dataclass(frozen=True)
class Dnf:
    """Clauses in canonical order, read as their disjunction."""

    clauses: tuple[Clause, ...]

    def is_empty(self) -> bool:
        return not self.clauses

    def to_text(self) -> str:
        if not self.clauses:
            return "⊥"
        wrap = len(self.clauses) > 1
        parts = []
        for clause in self.clauses:
            text = clause.to_text()
            if wrap and len(clause.literals) > 1:
                text = "(" + text + ")"
            parts.append(text)
        return " ∨ ".join(parts)

    def to_json(self) -> list:
        return [clause.to_json() for clause in self.clauses]


def make_dnf(clauses) -> Dnf:
    """Canonical DNF: duplicate clauses dropped, clauses sorted."""
    unique = set(clauses)
    return Dnf(
        tuple(
            sorted(unique, key=lambda c: tuple(_literal_key(l) for l in c.literals))
        )
    )


def clause_from_branch(literals) -> Clause:
    """The clause recording one open branch's literal set."""
    items = list(literals)
    if not items:
        raise EmptyBranchError("an open branch always carries at least one literal")
    return make_clause(items)


def dnf_from_tableau(t: Tableau) -> Dnf:
    """Clauses from the open branches; empty when the tableau is closed.

    Raises UnfinishedTableau while expansion work remains.
    """
    return make_dnf(
        clause_from_branch(literals) for _, literals in t.open_branches()
    )


def complete_dnf(f: Formula) -> Dnf:
    """One full-width clause per satisfying truth-table row."""
    table = truth_table(f)
    clauses = []
    for bits, value in table.rows:
        if value:
            clauses.append(
                make_clause(
                    (name, bool(bit)) for name, bit in zip(table.atoms, bits)
                )
            )
    return make_dnf(clauses)


@dataclass(frozen=True)
class RewriteStep:
    """One rewrite of the whole formula: which rule fired, and the formula
    before and after."""

    rule: str
    before: Formula
    after: Formula

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "before": format_formula(self.before),
            "after": format_formula(self.after),
        }


def _rewrite_implications(f: Formula):
    """Leftmost-outermost: remove one implication."""
    cls = type(f)
    if cls is Atom:
        return None
    if cls is Implies:
        return Or(Not(f.left), f.right), "eliminate-implication"
    if cls is Not:
        if type(f.inner) is Implies:
            return And(f.inner.left, Not(f.inner.right)), "negate-implication"
        step = _rewrite_implications(f.inner)
        if step:
            return Not(step[0]), step[1]
        return None
    step = _rewrite_implications(f.left)
    if step:
        return cls(step[0], f.right), step[1]
    step = _rewrite_implications(f.right)
    if step:
        return cls(f.left, step[0]), step[1]
    return None


def _rewrite_negations(f: Formula):
    """Leftmost-outermost: push one negation inward or cancel a double one."""
    cls = type(f)
    if cls is Atom:
        return None
    if cls is Not:
        inner = f.inner
        icls = type(inner)
        if icls is Not:
            return inner.inner, "double-negation"
        if icls is And:
            return Or(Not(inner.left), Not(inner.right)), "de-morgan-and"
        if icls is Or:
            return And(Not(inner.left), Not(inner.right)), "de-morgan-or"
        return None
    step = _rewrite_negations(f.left)
    if step:
        return cls(step[0], f.right), step[1]
    step = _rewrite_negations(f.right)
    if step:
        return cls(f.left, step[0]), step[1]
    return None


def _rewrite_distribution(f: Formula):
    """Leftmost-outermost: distribute one conjunction over a disjunction."""
    cls = type(f)
    if cls is Atom or cls is Not:
        return None
    if cls is And:
        if type(f.left) is Or:
            return (
                Or(And(f.left.left, f.right), And(f.left.right, f.right)),
                "distribute",
            )
        if type(f.right) is Or:
            return (
                Or(And(f.left, f.right.left), And(f.left, f.right.right)),
                "distribute",
            )
    step = _rewrite_distribution(f.left)
    if step:
        return cls(step[0], f.right), step[1]
    step = _rewrite_distribution(f.right)
    if step:
        return cls(f.left, step[0]), step[1]
    return None


def _apply_fixpoint(f, rewriter, steps):
    while True:
        step = rewriter(f)
        if step is None:
            return f
        after, rule = step
        steps.append(RewriteStep(rule, f, after))
        f = after


def _clause_terms(f: Formula) -> list[Formula]:
    """Flatten a ∨-tree into its non-∨ subtrees, left to right."""
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if type(g) is Or:
            stack.append(g.right)
            stack.append(g.left)
        else:
            out.append(g)
    return out


def _clause_literals(f: Formula) -> list[tuple[str, bool]]:
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if type(g) is And:
            stack.append(g.right)
            stack.append(g.left)
        elif type(g) is Atom:
            out.append((g.name, True))
        else:
            out.append((g.inner.name, False))
    return out


def rewrite_to_dnf(f: Formula) -> tuple[Dnf, list[RewriteStep]]:
    """Turn f into canonical DNF by rewriting, keeping the step trace.

    Implications go first, then negations move onto atoms, then conjunction
    distributes over disjunction; finally contradictory clauses are pruned
    and the rest are canonicalized.  Every step records the whole formula
    before and after, so each step can be checked for equivalence.
    """
    steps: list[RewriteStep] = []
    g = _apply_fixpoint(f, _rewrite_implications, steps)
    g = _apply_fixpoint(g, _rewrite_negations, steps)
    g = _apply_fixpoint(g, _rewrite_distribution, steps)
    terms = _clause_terms(g)
    clauses = [make_clause(_clause_literals(term)) for term in terms]
    kept = [c for c in clauses if c.is_consistent()]
    if len(kept) < len(clauses) and kept:
        pruned = make_dnf(kept)
        steps.append(RewriteStep("prune-inconsistent", g, dnf_to_formula(pruned)))
        return pruned, steps
    return make_dnf(kept), steps


def dnf_to_formula(d: Dnf) -> Formula:
    """The DNF as a plain formula: a right-nested disjunction of right-nested
    conjunctions.  An empty DNF has no formula."""
    if not d.clauses:
        raise EmptyDnfError(
            "an empty DNF denotes an unsatisfiable formula and has no "
            "formula form; use a contradiction such as p ∧ ¬p"
        )
    clause_formulas = []
    for clause in d.clauses:
        lit_formulas = [
            Atom(name) if positive else Not(Atom(name))
            for name, positive in clause.literals
        ]
        g = lit_formulas[-1]
        for lit in reversed(lit_formulas[:-1]):
            g = And(lit, g)
        clause_formulas.append(g)
    out = clause_formulas[-1]
    for clause_formula in reversed(clause_formulas[:-1]):
        out = Or(clause_formula, out)
    return out
