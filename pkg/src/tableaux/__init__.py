"""Propositional logic workbench: formulas, two semantics, semantic
tableaux, and disjunctive normal forms, with a CLI and an HTTP service."""

from .formula import (
    And,
    Atom,
    Formula,
    FormulaError,
    Implies,
    LexError,
    Not,
    Or,
    ParseError,
    atoms,
    degree,
    format_formula,
    parse,
)
from .semantics import (
    CapacityError,
    DomainError,
    EvaluationError,
    InterpretationError,
    Model,
    SemanticsError,
    TruthTable,
    equivalent,
    eval_standard,
    interpret,
    is_satisfiable_tt,
    is_valid_tt,
    model_from_valuation,
    satisfies,
    truth_table,
    valuation_from_state,
)
from .tableau import (
    ALPHA_AND,
    ALPHA_NOT_IMPLIES,
    ALPHA_NOT_OR,
    BETA_IMPLIES,
    BETA_NOT_AND,
    BETA_OR,
    CLOSED,
    DOUBLE_NEGATION,
    OPEN,
    UNFINISHED,
    Alpha,
    AlreadyExpanded,
    Beta,
    BranchClosed,
    DoubleNegation,
    Literal,
    NodeNotOnBranch,
    NotApplicable,
    Tableau,
    TableauError,
    UnfinishedTableau,
    build_tableau,
    check_entails,
    check_satisfiable,
    check_valid,
    classify,
    start_tableau,
)
from .dnf import (
    Clause,
    Dnf,
    RewriteStep,
    clause_from_branch,
    complete_dnf,
    dnf_from_tableau,
    dnf_to_formula,
    make_clause,
    make_dnf,
    rewrite_to_dnf,
)
from .render import VennRegions, render_ascii, render_dot, venn_regions

__version__ = "0.1.0"
