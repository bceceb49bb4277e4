"""Semantic tableaux: rule classification, tree construction, decision procedures.

A tableau starts as a chain of initial formulas and grows by expanding one
non-literal formula at a time on one branch.  Conjunctive rules stack both
components on the branch; disjunctive rules fork it.  A branch containing
complementary literals is closed; a fully expanded branch without them is
open, and open branches yield models.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .formula import And, Atom, Formula, Implies, Not, Or, atoms, format_formula
from .semantics import Model

__all__ = [
    "DOUBLE_NEGATION",
    "ALPHA_AND",
    "ALPHA_NOT_OR",
    "ALPHA_NOT_IMPLIES",
    "BETA_OR",
    "BETA_NOT_AND",
    "BETA_IMPLIES",
    "OPEN",
    "CLOSED",
    "UNFINISHED",
    "Literal",
    "DoubleNegation",
    "Alpha",
    "Beta",
    "classify",
    "TableauError",
    "NodeNotOnBranch",
    "AlreadyExpanded",
    "BranchClosed",
    "NotApplicable",
    "UnfinishedTableau",
    "TableauNode",
    "Tableau",
    "start_tableau",
    "build_tableau",
    "check_satisfiable",
    "check_valid",
    "check_entails",
]

DOUBLE_NEGATION = "double-negation"
ALPHA_AND = "alpha-and"
ALPHA_NOT_OR = "alpha-not-or"
ALPHA_NOT_IMPLIES = "alpha-not-implies"
BETA_OR = "beta-or"
BETA_NOT_AND = "beta-not-and"
BETA_IMPLIES = "beta-implies"

OPEN = "open"
CLOSED = "closed"
UNFINISHED = "unfinished"


@dataclass(frozen=True)
class Literal:
    """An atom or negated atom; never expanded."""

    atom: str
    positive: bool


@dataclass(frozen=True)
class DoubleNegation:
    """¬¬φ expands to φ on the same branch."""

    result: Formula


@dataclass(frozen=True)
class Alpha:
    """A conjunctive formula; both components go onto the same branch."""

    kind: str
    first: Formula
    second: Formula


@dataclass(frozen=True)
class Beta:
    """A disjunctive formula; the branch forks, one component per side."""

    kind: str
    left: Formula
    right: Formula


# Expansion priority: double negation before alphas before betas.
_RANK = {DoubleNegation: 0, Alpha: 1, Beta: 2, Literal: 3}


def classify(f: Formula):
    """Sort a formula into Literal, DoubleNegation, Alpha, or Beta."""
    cls = type(f)
    if cls is Atom:
        return Literal(f.name, True)
    if cls is And:
        return Alpha(ALPHA_AND, f.left, f.right)
    if cls is Or:
        return Beta(BETA_OR, f.left, f.right)
    if cls is Implies:
        return Beta(BETA_IMPLIES, Not(f.left), f.right)
    inner = f.inner
    icls = type(inner)
    if icls is Atom:
        return Literal(inner.name, False)
    if icls is Not:
        return DoubleNegation(inner.inner)
    if icls is And:
        return Beta(BETA_NOT_AND, Not(inner.left), Not(inner.right))
    if icls is Or:
        return Alpha(ALPHA_NOT_OR, Not(inner.left), Not(inner.right))
    return Alpha(ALPHA_NOT_IMPLIES, inner.left, Not(inner.right))


class TableauError(Exception):
    code = "TABLEAU_ERROR"


class NodeNotOnBranch(TableauError):
    code = "NODE_NOT_ON_BRANCH"


class AlreadyExpanded(TableauError):
    code = "ALREADY_EXPANDED"


class BranchClosed(TableauError):
    code = "BRANCH_CLOSED"


class NotApplicable(TableauError):
    code = "NOT_APPLICABLE"


class UnfinishedTableau(TableauError):
    code = "UNFINISHED_TABLEAU"


class TableauNode:
    """One formula occurrence in the tree."""

    __slots__ = ("id", "formula", "parent", "children", "produced_by", "rule_class", "rank")

    def __init__(self, node_id, formula, parent, produced_by):
        self.id = node_id
        self.formula = formula
        self.parent = parent
        self.children = []
        self.produced_by = produced_by
        self.rule_class = classify(formula)
        self.rank = _RANK[type(self.rule_class)]


def _literal_set(lits: dict) -> tuple:
    """Sorted (atom, positive) pairs from a polarity-mask dict."""
    out = []
    for name in sorted(lits):
        mask = lits[name]
        if mask & 1:
            out.append((name, True))
        if mask & 2:
            out.append((name, False))
    return tuple(out)


class Tableau:
    """A tableau under construction or finished.

    Nodes are stored in creation order and node ids index into that list,
    so two runs that apply the same steps produce identical trees.
    """

    __slots__ = ("nodes", "initial", "_status", "_literals", "_expandable", "_leaf_list")

    def __init__(self):
        self.nodes: list[TableauNode] = []
        self.initial: list[int] = []
        self._status = None
        self._literals = None
        self._expandable = None
        self._leaf_list = None

    # -- construction ------------------------------------------------------

    def _new_node(self, formula, parent, produced_by) -> int:
        node_id = len(self.nodes)
        node = TableauNode(node_id, formula, parent, produced_by)
        self.nodes.append(node)
        if parent is not None:
            self.nodes[parent].children.append(node_id)
        return node_id

    def _extend(self, node_id: int, leaf_id: int, rule_class) -> list[int]:
        """Grow the tree at a leaf; callers have already validated the step."""
        self._status = None
        self._literals = None
        self._expandable = None
        self._leaf_list = None
        cls = type(rule_class)
        if cls is DoubleNegation:
            tag = (node_id, DOUBLE_NEGATION)
            return [self._new_node(rule_class.result, leaf_id, tag)]
        if cls is Alpha:
            tag = (node_id, rule_class.kind)
            first = self._new_node(rule_class.first, leaf_id, tag)
            second = self._new_node(rule_class.second, first, tag)
            return [first, second]
        tag = (node_id, rule_class.kind)
        left = self._new_node(rule_class.left, leaf_id, tag)
        right = self._new_node(rule_class.right, leaf_id, tag)
        return [left, right]

    def apply_rule(self, node_id: int, leaf_id: int) -> "Tableau":
        """Expand the formula at node_id on the branch ending at leaf_id.

        The expansion must be legal: the node lies on that branch, is not a
        literal, has not been expanded on it, and the branch is still open.
        Returns the tableau itself, now extended.
        """
        nodes = self.nodes
        for ident, label in ((node_id, "node"), (leaf_id, "leaf")):
            if not isinstance(ident, int) or not 0 <= ident < len(nodes):
                raise NodeNotOnBranch(f"there is no {label} with id {ident!r}")
        if nodes[leaf_id].children:
            raise NodeNotOnBranch(
                f"node {leaf_id} is not a leaf; pick the end of a branch"
            )
        lits: dict[str, int] = {}
        on_branch = False
        applied = False
        cursor = leaf_id
        while cursor is not None:
            node = nodes[cursor]
            if cursor == node_id:
                on_branch = True
            if node.rank == 3:
                lit = node.rule_class
                lits[lit.atom] = lits.get(lit.atom, 0) | (1 if lit.positive else 2)
            if node.produced_by is not None and node.produced_by[0] == node_id:
                applied = True
            cursor = node.parent
        if not on_branch:
            raise NodeNotOnBranch(
                f"node {node_id} does not lie on the branch ending at leaf {leaf_id}; "
                "choose a formula between the root and that leaf"
            )
        if any(mask == 3 for mask in lits.values()):
            pair = next(name for name, mask in lits.items() if mask == 3)
            raise BranchClosed(
                f"the branch ending at leaf {leaf_id} already contains both "
                f"{pair} and ¬{pair}, so it is closed and is never extended"
            )
        rule_class = nodes[node_id].rule_class
        if type(rule_class) is Literal:
            raise NotApplicable(
                f"{format_formula(nodes[node_id].formula)} is a literal; literals "
                "are never expanded, a branch finishes when only literals remain"
            )
        if applied:
            raise AlreadyExpanded(
                f"the rule for node {node_id} was already applied on this branch; "
                "applying it again would only repeat its components"
            )
        self._extend(node_id, leaf_id, rule_class)
        return self

    def _branch_frame(self, leaf_id: int):
        """Current (literals, pending, closed) state of one branch."""
        lits: dict[str, int] = {}
        pending = []
        closed = False
        applied: set[int] = set()
        path = []
        cursor = leaf_id
        nodes = self.nodes
        while cursor is not None:
            node = nodes[cursor]
            path.append(node)
            if node.produced_by is not None:
                applied.add(node.produced_by[0])
            cursor = node.parent
        for node in path:
            if node.rank == 3:
                lit = node.rule_class
                mask = lits.get(lit.atom, 0) | (1 if lit.positive else 2)
                lits[lit.atom] = mask
                if mask == 3:
                    closed = True
            elif node.id not in applied:
                pending.append((node.rank, node.id))
        return lits, pending, closed

    def _auto_extend(self, record: list | None = None) -> None:
        """Expand until every branch is open or closed.

        Strategy: work on the leftmost unfinished branch; on it, expand
        double negations first, then stacking rules, then forking rules,
        oldest formula first.  The result is deterministic.
        """
        nodes = self.nodes
        status: dict[int, str] = {}
        branch_lits: dict[int, dict] = {}
        frames = []
        for leaf_id in reversed(self.leaves()):
            lits, pending, closed = self._branch_frame(leaf_id)
            if closed:
                status[leaf_id] = CLOSED
                branch_lits[leaf_id] = lits
            elif not pending:
                status[leaf_id] = OPEN
                branch_lits[leaf_id] = lits
            else:
                frames.append((leaf_id, lits, pending))
        while frames:
            leaf_id, lits, pending = frames.pop()
            rank, node_id = min(pending)
            pending.remove((rank, node_id))
            rule_class = nodes[node_id].rule_class
            new_ids = self._extend(node_id, leaf_id, rule_class)
            if record is not None:
                record.append((node_id, leaf_id, rule_class.kind if rank else DOUBLE_NEGATION))
            if type(rule_class) is Beta:
                right_lits = lits.copy()
                right_pending = pending.copy()
                left, right = new_ids
                self._settle(right, right_lits, right_pending, frames, status, branch_lits)
                self._settle(left, lits, pending, frames, status, branch_lits)
            else:
                tip = new_ids[-1]
                closed = False
                for new_id in new_ids:
                    node = nodes[new_id]
                    if node.rank == 3:
                        lit = node.rule_class
                        mask = lits.get(lit.atom, 0) | (1 if lit.positive else 2)
                        lits[lit.atom] = mask
                        if mask == 3:
                            closed = True
                    else:
                        pending.append((node.rank, new_id))
                if closed:
                    status[tip] = CLOSED
                    branch_lits[tip] = lits
                elif not pending:
                    status[tip] = OPEN
                    branch_lits[tip] = lits
                else:
                    frames.append((tip, lits, pending))
        self._status = status
        self._literals = branch_lits
        self._expandable = set()
        self._leaf_list = None

    def _settle(self, leaf_id, lits, pending, frames, status, branch_lits) -> None:
        """File a fresh single-node branch tip as closed, open, or still to do."""
        node = self.nodes[leaf_id]
        if node.rank == 3:
            lit = node.rule_class
            mask = lits.get(lit.atom, 0) | (1 if lit.positive else 2)
            lits[lit.atom] = mask
            if mask == 3:
                status[leaf_id] = CLOSED
                branch_lits[leaf_id] = lits
                return
        else:
            pending.append((node.rank, leaf_id))
        if pending:
            frames.append((leaf_id, lits, pending))
        else:
            status[leaf_id] = OPEN
            branch_lits[leaf_id] = lits

    # -- inspection --------------------------------------------------------

    def leaves(self) -> list[int]:
        """Leaf ids in left-to-right order."""
        if self._leaf_list is None:
            out = []
            stack = [self.initial[0]] if self.nodes else []
            nodes = self.nodes
            while stack:
                node = nodes[stack.pop()]
                if node.children:
                    stack.extend(reversed(node.children))
                else:
                    out.append(node.id)
            self._leaf_list = out
        return self._leaf_list

    def leaf_numbers(self) -> dict[int, int]:
        """Map from leaf id to its 1-based left-to-right number."""
        return {leaf_id: i + 1 for i, leaf_id in enumerate(self.leaves())}

    def _recompute(self) -> None:
        """Derive branch statuses and literal sets from the stored tree."""
        status: dict[int, str] = {}
        branch_lits: dict[int, dict] = {}
        expandable: set[int] = set()
        nodes = self.nodes
        if not nodes:
            self._status, self._literals, self._expandable = status, branch_lits, expandable
            return
        stack = [(self.initial[0], {}, {})]
        while stack:
            node_id, lits, pending = stack.pop()
            node = nodes[node_id]
            if node.produced_by is not None:
                pending.pop(node.produced_by[0], None)
            if node.rank == 3:
                lit = node.rule_class
                lits[lit.atom] = lits.get(lit.atom, 0) | (1 if lit.positive else 2)
            else:
                pending[node_id] = node.rank
            children = node.children
            if not children:
                if any(mask == 3 for mask in lits.values()):
                    status[node_id] = CLOSED
                elif pending:
                    status[node_id] = UNFINISHED
                    expandable.update(pending)
                else:
                    status[node_id] = OPEN
                branch_lits[node_id] = lits
            elif len(children) == 1:
                stack.append((children[0], lits, pending))
            else:
                stack.append((children[1], lits.copy(), pending.copy()))
                stack.append((children[0], lits, pending))
        self._status = status
        self._literals = branch_lits
        self._expandable = expandable

    def _ensure_state(self) -> None:
        if self._status is None:
            self._recompute()

    def branch_status(self, leaf_id: int) -> str:
        self._ensure_state()
        try:
            return self._status[leaf_id]
        except KeyError:
            raise NodeNotOnBranch(f"node {leaf_id!r} is not a leaf of this tableau") from None

    def branch_literals(self, leaf_id: int) -> tuple:
        """Sorted (atom, positive) pairs on the branch ending at this leaf."""
        self._ensure_state()
        try:
            return _literal_set(self._literals[leaf_id])
        except KeyError:
            raise NodeNotOnBranch(f"node {leaf_id!r} is not a leaf of this tableau") from None

    def is_finished(self) -> bool:
        self._ensure_state()
        status = self._status
        return all(status[leaf] != UNFINISHED for leaf in self.leaves())

    def is_open(self) -> bool:
        """Whether some branch is open; only meaningful once finished."""
        self._ensure_state()
        status = self._status
        unfinished = [leaf for leaf in self.leaves() if status[leaf] == UNFINISHED]
        if unfinished:
            numbers = self.leaf_numbers()
            raise UnfinishedTableau(
                f"branch {numbers[unfinished[0]]} can still be extended; "
                "finish the tableau before asking for its verdict"
            )
        return any(status[leaf] == OPEN for leaf in self.leaves())

    def open_branches(self) -> list[tuple[int, tuple]]:
        """(leaf number, literal set) for each open branch, left to right."""
        if not self.is_open():
            return []
        status = self._status
        numbers = self.leaf_numbers()
        return [
            (numbers[leaf], _literal_set(self._literals[leaf]))
            for leaf in self.leaves()
            if status[leaf] == OPEN
        ]

    def extract_model(self) -> Model | None:
        """A model read off the open branches: states are the open leaf
        numbers, and an atom holds in a state when its branch asserts it."""
        branches = self.open_branches()
        if not branches:
            return None
        names = set()
        for node_id in self.initial:
            names.update(atoms(self.nodes[node_id].formula))
        valuation = {name: set() for name in sorted(names)}
        for number, literals in branches:
            for name, positive in literals:
                if positive:
                    valuation[name].add(number)
        return Model(
            universe=frozenset(number for number, _ in branches),
            valuation={name: frozenset(states) for name, states in valuation.items()},
        )

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        self._ensure_state()
        expandable = self._expandable
        node_objs = []
        for node in self.nodes:
            if node.produced_by is None:
                rule = None
            else:
                rule = {"source": node.produced_by[0], "kind": node.produced_by[1]}
            node_objs.append(
                {
                    "id": node.id,
                    "formula": format_formula(node.formula),
                    "parent": node.parent,
                    "children": list(node.children),
                    "rule": rule,
                    "expanded": node.rank != 3 and node.id not in expandable,
                }
            )
        status = self._status
        numbers = self.leaf_numbers()
        leaf_objs = [
            {
                "id": leaf,
                "number": numbers[leaf],
                "status": status[leaf],
                "literals": [
                    name if positive else "¬" + name
                    for name, positive in _literal_set(self._literals[leaf])
                ],
            }
            for leaf in self.leaves()
        ]
        return {"nodes": node_objs, "leaves": leaf_objs}

    def to_canonical_json(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, sort_keys=True,
                          separators=(",", ":"))


def start_tableau(formulas: Sequence[Formula]) -> Tableau:
    """A tableau holding just the initial chain, nothing expanded yet."""
    items = list(formulas)
    if not items:
        raise ValueError("a tableau needs at least one initial formula")
    for f in items:
        if not isinstance(f, Formula):
            raise TypeError(f"expected a Formula, got {type(f).__name__}")
    t = Tableau()
    parent = None
    for f in items:
        parent = t._new_node(f, parent, None)
        t.initial.append(parent)
    return t


def build_tableau(formulas: Sequence[Formula]) -> Tableau:
    """Fully expand a tableau for the given formulas, deterministically."""
    t = start_tableau(formulas)
    t._auto_extend()
    return t


def check_satisfiable(
    formulas: Sequence[Formula],
) -> tuple[bool, Model | None, Tableau]:
    """Tableau decision: satisfiable iff the finished tableau has an open
    branch, in which case a witnessing model comes along with the tree."""
    t = build_tableau(formulas)
    if t.is_open():
        return True, t.extract_model(), t
    return False, None, t


def check_valid(f: Formula) -> tuple[bool, Model | None]:
    """Valid iff the tableau for the negation closes; otherwise an open
    branch yields a counter-model."""
    t = build_tableau([Not(f)])
    if t.is_open():
        return False, t.extract_model()
    return True, None


def check_entails(premises: Sequence[Formula], conclusion: Formula) -> bool:
    """Entailment via refutation: premises plus the negated conclusion
    must close."""
    t = build_tableau([*premises, Not(conclusion)])
    return not t.is_open()
