"""Stepwise tableau sessions for teaching.

A session fixes a goal (satisfiability, validity, or entailment), holds the
growing tableau, and records every applied step.  Students expand formulas
one at a time with full validation; auto-finish completes the tableau with
the deterministic strategy; analysis reads off the verdict, model, and DNF
once the tableau is finished.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .dnf import Dnf, dnf_from_tableau
from .formula import And, Formula, Implies, Not, atoms, format_formula, parse
from .render import venn_regions
from .semantics import Model, eval_standard, truth_table
from .tableau import Tableau, start_tableau

__all__ = [
    "SessionError",
    "UnknownSession",
    "SessionFinished",
    "SessionNotFinished",
    "SatMode",
    "ValidMode",
    "EntailsMode",
    "initial_formulas",
    "subject_formula",
    "Step",
    "StepDelta",
    "Analysis",
    "Session",
    "SessionStore",
]

TABLE_ATOM_LIMIT = 10


class SessionError(Exception):
    code = "SESSION_ERROR"


class UnknownSession(SessionError):
    code = "UNKNOWN_SESSION"


class SessionFinished(SessionError):
    code = "SESSION_FINISHED"


class SessionNotFinished(SessionError):
    code = "SESSION_NOT_FINISHED"


@dataclass(frozen=True)
class SatMode:
    """Decide whether the formulas are jointly satisfiable."""

    formulas: tuple[Formula, ...]


@dataclass(frozen=True)
class ValidMode:
    """Decide whether the formula is valid, by refuting its negation."""

    formula: Formula


@dataclass(frozen=True)
class EntailsMode:
    """Decide whether the premises entail the conclusion."""

    premises: tuple[Formula, ...]
    conclusion: Formula


Mode = SatMode | ValidMode | EntailsMode


def initial_formulas(mode: Mode) -> list[Formula]:
    """The chain the tableau starts from."""
    if isinstance(mode, SatMode):
        return list(mode.formulas)
    if isinstance(mode, ValidMode):
        return [Not(mode.formula)]
    return [*mode.premises, Not(mode.conclusion)]


def _conjoin(formulas: Sequence[Formula]) -> Formula:
    out = formulas[0]
    for f in formulas[1:]:
        out = And(out, f)
    return out


def subject_formula(mode: Mode) -> Formula:
    """The single formula the analysis tables and diagrams describe."""
    if isinstance(mode, SatMode):
        return _conjoin(mode.formulas)
    if isinstance(mode, ValidMode):
        return mode.formula
    if not mode.premises:
        return mode.conclusion
    return Implies(_conjoin(mode.premises), mode.conclusion)


def mode_to_json(mode: Mode) -> dict:
    if isinstance(mode, SatMode):
        return {"kind": "sat", "formulas": [format_formula(f) for f in mode.formulas]}
    if isinstance(mode, ValidMode):
        return {"kind": "valid", "formula": format_formula(mode.formula)}
    return {
        "kind": "entails",
        "premises": [format_formula(f) for f in mode.premises],
        "conclusion": format_formula(mode.conclusion),
    }


def mode_from_json(obj: Mapping) -> Mode:
    kind = obj.get("kind")
    if kind == "sat":
        formulas = [parse(text) for text in obj["formulas"]]
        if not formulas:
            raise ValueError("sat mode needs at least one formula")
        return SatMode(tuple(formulas))
    if kind == "valid":
        return ValidMode(parse(obj["formula"]))
    if kind == "entails":
        return EntailsMode(
            tuple(parse(text) for text in obj.get("premises", [])),
            parse(obj["conclusion"]),
        )
    raise ValueError(f"unknown session kind {kind!r}; use sat, valid, or entails")


def mode_from_request(body: Mapping) -> Mode:
    """Read a mode from an API payload.

    The flat form is {"mode": "sat"|"valid"|"entails", "formulas": [...]};
    for entails the last formula is the conclusion.  The structured form
    used in snapshots ({"kind": ...}) is accepted too.
    """
    if "kind" in body:
        return mode_from_json(body)
    kind = body.get("mode")
    if not isinstance(kind, str):
        raise ValueError("the request needs a 'mode' of sat, valid, or entails")
    texts = body.get("formulas")
    if not isinstance(texts, list) or not texts:
        raise ValueError("'formulas' must be a non-empty list of formula strings")
    formulas = [parse(text) for text in texts]
    if kind == "sat":
        return SatMode(tuple(formulas))
    if kind == "valid":
        if len(formulas) != 1:
            raise ValueError("valid mode takes exactly one formula")
        return ValidMode(formulas[0])
    if kind == "entails":
        return EntailsMode(tuple(formulas[:-1]), formulas[-1])
    raise ValueError(f"unknown mode {kind!r}; use sat, valid, or entails")


@dataclass(frozen=True)
class Step:
    """One applied expansion, as the student or the auto strategy made it."""

    node: int
    leaf: int
    rule: str
    at: float

    def to_json(self) -> dict:
        return {
            "nodeId": self.node,
            "leafId": self.leaf,
            "rule": self.rule,
            "timestamp": self.at,
        }


@dataclass(frozen=True)
class StepDelta:
    """What one step changed: the rule fired and the nodes it added."""

    source: int
    leaf: int
    rule: str
    added: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "nodeId": self.source,
            "leafId": self.leaf,
            "rule": self.rule,
            "added": list(self.added),
        }


@dataclass
class Analysis:
    """Everything the finished tableau supports: the verdict, the open
    branches, and when open, the extracted model and branch DNF."""

    verdict: str
    subject: Formula
    open_branches: list
    model: Model | None
    dnf: Dnf | None

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "subject": format_formula(self.subject),
            "openBranches": [
                {
                    "number": number,
                    "literals": [
                        name if positive else "¬" + name for name, positive in literals
                    ],
                }
                for number, literals in self.open_branches
            ],
            "model": self.model.to_json() if self.model is not None else None,
            "dnf": None
            if self.dnf is None
            else {"text": self.dnf.to_text(), "clauses": self.dnf.to_json()},
        }
        names = atoms(self.subject)
        if len(names) <= TABLE_ATOM_LIMIT:
            table = truth_table(self.subject)
            rows = []
            for bits, value in table.rows:
                assignment = dict(zip(table.atoms, bits))
                states = [
                    number
                    for number, literals in self.open_branches
                    if all(
                        bool(assignment[name]) == positive
                        for name, positive in literals
                    )
                ]
                rows.append(
                    {"assignment": list(bits), "value": value, "states": states}
                )
            out["truthTable"] = {"atoms": table.atoms, "rows": rows}
        else:
            out["truthTable"] = None
        out["vennRegions"] = (
            venn_regions(self.subject).to_json() if len(names) <= 3 else None
        )
        return out


class Session:
    """One tableau under construction, with its goal and step history."""

    def __init__(self, mode: Mode, session_id: str | None = None):
        self.id = session_id if session_id is not None else secrets.token_hex(16)
        self.mode = mode
        self.tableau: Tableau = start_tableau(initial_formulas(mode))
        self.history: list[Step] = []

    @property
    def status(self) -> str:
        return "finished" if self.tableau.is_finished() else "in-progress"

    def step(self, node_id: int, leaf_id: int) -> StepDelta:
        """Apply one expansion chosen by the student."""
        if self.tableau.is_finished():
            raise SessionFinished(
                "every branch is already open or closed; start a new session "
                "or ask for the analysis"
            )
        before = len(self.tableau.nodes)
        self.tableau.apply_rule(node_id, leaf_id)
        node = self.tableau.nodes[before]
        rule = node.produced_by[1]
        added = tuple(range(before, len(self.tableau.nodes)))
        self.history.append(Step(node_id, leaf_id, rule, time.time()))
        return StepDelta(source=node_id, leaf=leaf_id, rule=rule, added=added)

    def auto_finish(self) -> list[StepDelta]:
        """Finish the tableau with the deterministic strategy; a no-op when
        the tableau is already finished."""
        record: list = []
        before = len(self.tableau.nodes)
        self.tableau._auto_extend(record)
        deltas = []
        cursor = before
        now = time.time()
        for node_id, leaf_id, rule in record:
            node = self.tableau.nodes[cursor]
            count = 1 if rule == "double-negation" else 2
            added = tuple(range(cursor, cursor + count))
            cursor += count
            self.history.append(Step(node_id, leaf_id, rule, now))
            deltas.append(
                StepDelta(source=node_id, leaf=leaf_id, rule=rule, added=added)
            )
        return deltas

    def analyze(self) -> Analysis:
        """Verdict plus model and DNF; only meaningful once finished."""
        if not self.tableau.is_finished():
            raise SessionNotFinished(
                "the tableau still has an unfinished branch; expand it or "
                "auto-finish before asking for the analysis"
            )
        open_branches = self.tableau.open_branches()
        is_open = bool(open_branches)
        if isinstance(self.mode, SatMode):
            verdict = "satisfiable" if is_open else "unsatisfiable"
        elif isinstance(self.mode, ValidMode):
            verdict = "not-valid" if is_open else "valid"
        else:
            verdict = "does-not-entail" if is_open else "entails"
        return Analysis(
            verdict=verdict,
            subject=subject_formula(self.mode),
            open_branches=open_branches,
            model=self.tableau.extract_model() if is_open else None,
            dnf=dnf_from_tableau(self.tableau) if is_open else None,
        )

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "mode": mode_to_json(self.mode),
            "status": self.status,
            "history": [step.to_json() for step in self.history],
            "tableau": self.tableau.to_json(),
        }

    def snapshot(self) -> dict:
        return self.to_json()

    @classmethod
    def from_snapshot(cls, obj: Mapping) -> "Session":
        """Rebuild a session by replaying its recorded steps."""
        session = cls(mode_from_json(obj["mode"]), session_id=obj["id"])
        for entry in obj.get("history", []):
            session.tableau.apply_rule(entry["nodeId"], entry["leafId"])
            session.history.append(
                Step(entry["nodeId"], entry["leafId"], entry["rule"], entry["timestamp"])
            )
        return session


class SessionStore:
    """Thread-safe registry of sessions, with optional snapshot files."""

    def __init__(self, snapshot_dir: str | os.PathLike | None = None):
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir is not None else None
        if self.snapshot_dir is not None:
            self.snapshot_dir.mkdir(parents=True, exist_ok=True)

    def create(self, mode: Mode) -> Session:
        session = Session(mode)
        with self._registry_lock:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        self._save(session)
        return session

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            lock = self._locks.get(session_id)
            if lock is None:
                lock = self._locks[session_id] = threading.Lock()
            return lock

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is not None:
            return session
        session = self._load(session_id)
        if session is None:
            raise UnknownSession(
                f"no session with id {session_id!r}; it may have expired when "
                "the service restarted"
            )
        with self._registry_lock:
            self._sessions.setdefault(session_id, session)
            self._locks.setdefault(session_id, threading.Lock())
        return session

    def step(self, session_id: str, node_id: int, leaf_id: int) -> tuple[Session, StepDelta]:
        session = self.get(session_id)
        with self._lock_for(session_id):
            delta = session.step(node_id, leaf_id)
            self._save(session)
        return session, delta

    def auto_finish(self, session_id: str) -> tuple[Session, list[StepDelta]]:
        session = self.get(session_id)
        with self._lock_for(session_id):
            deltas = session.auto_finish()
            self._save(session)
        return session, deltas

    def analyze(self, session_id: str) -> tuple[Session, Analysis]:
        session = self.get(session_id)
        with self._lock_for(session_id):
            return session, session.analyze()

    def _snapshot_path(self, session_id: str) -> Path | None:
        if self.snapshot_dir is None:
            return None
        if not all(c in "0123456789abcdef" for c in session_id):
            return None
        return self.snapshot_dir / f"{session_id}.json"

    def _save(self, session: Session) -> None:
        path = self._snapshot_path(session.id)
        if path is None:
            return
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(session.snapshot(), ensure_ascii=False), "utf-8")
        tmp.replace(path)

    def _load(self, session_id: str) -> Session | None:
        path = self._snapshot_path(session_id)
        if path is None or not path.exists():
            return None
        obj = json.loads(path.read_text("utf-8"))
        return Session.from_snapshot(obj)
