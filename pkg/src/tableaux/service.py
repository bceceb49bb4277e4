"""HTTP service exposing checks and stepwise tableau sessions.

Error responses share one shape: {"code", "message", "detail"}, with the
code drawn from the underlying error.  Malformed JSON is 400, an unknown
session is 404, a session in the wrong state is 409, and every other
rejected input is 422.
"""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .dnf import complete_dnf, dnf_from_tableau, dnf_to_formula, rewrite_to_dnf
from .formula import Formula, FormulaError, parse
from .semantics import SemanticsError, truth_table
from .session import (
    SessionError,
    SessionFinished,
    SessionNotFinished,
    SessionStore,
    UnknownSession,
    mode_from_request,
)
from .tableau import TableauError, build_tableau

__all__ = ["create_app"]


class _BadRequest(ValueError):
    code = "INVALID_REQUEST"


def _error_json(exc: Exception, detail=None) -> dict:
    if isinstance(exc, json.JSONDecodeError):
        code = "MALFORMED_JSON"
    else:
        code = getattr(exc, "code", "INVALID_REQUEST")
    return {"code": code, "message": str(exc), "detail": detail}


def _field(body: Mapping, name: str, kind, required: bool = True):
    value = body.get(name)
    if value is None:
        if required:
            raise _BadRequest(f"the request body needs a '{name}' field")
        return None
    if not isinstance(value, kind):
        raise _BadRequest(f"'{name}' must be a {kind.__name__}")
    return value


def _parse_formula(text) -> Formula:
    if not isinstance(text, str):
        raise _BadRequest("formulas must be strings")
    return parse(text)


def _parse_formulas(items) -> list[Formula]:
    if not isinstance(items, list) or not items:
        raise _BadRequest("'formulas' must be a non-empty list of strings")
    return [_parse_formula(text) for text in items]


def _model_json(model) -> dict | None:
    return model.to_json() if model is not None else None


def _dnf_json(d) -> dict:
    return {"text": d.to_text(), "clauses": d.to_json()}


def create_app(
    store: SessionStore | None = None,
    ui_dir: str | None = None,
    cors_origins: Sequence[str] = (),
) -> FastAPI:
    """Build the application; pass a snapshot-persisting store to keep
    sessions across restarts, and a directory to also serve the web UI."""
    app = FastAPI(title="tableaux", docs_url=None, redoc_url=None)
    sessions = store if store is not None else SessionStore()

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def _handler(status: int):
        def handle(request: Request, exc: Exception):
            detail = None
            if isinstance(exc, FormulaError):
                detail = {"position": exc.position}
            return JSONResponse(status_code=status, content=_error_json(exc, detail))

        return handle

    app.add_exception_handler(json.JSONDecodeError, _handler(400))
    app.add_exception_handler(UnknownSession, _handler(404))
    app.add_exception_handler(SessionFinished, _handler(409))
    app.add_exception_handler(SessionNotFinished, _handler(409))
    app.add_exception_handler(SessionError, _handler(409))
    app.add_exception_handler(FormulaError, _handler(422))
    app.add_exception_handler(SemanticsError, _handler(422))
    app.add_exception_handler(TableauError, _handler(422))
    app.add_exception_handler(ValueError, _handler(422))

    async def _body(request: Request) -> dict:
        raw = await request.body()
        try:
            body = json.loads(raw if raw else b"null")
        except json.JSONDecodeError:
            raise
        if body is None:
            body = {}
        if not isinstance(body, dict):
            raise _BadRequest("the request body must be a JSON object")
        return body

    @app.get("/api/health")
    async def health():
        return {"status": "ok"}

    @app.post("/api/sessions", status_code=201)
    async def create_session(request: Request):
        body = await _body(request)
        mode = mode_from_request(body)
        session = sessions.create(mode)
        return session.to_json()

    @app.get("/api/sessions/{session_id}")
    async def get_session(session_id: str):
        return sessions.get(session_id).to_json()

    @app.post("/api/sessions/{session_id}/step")
    async def step_session(session_id: str, request: Request):
        body = await _body(request)
        node_id = _field(body, "nodeId", int)
        leaf_id = _field(body, "leafId", int)
        session, delta = sessions.step(session_id, node_id, leaf_id)
        return {"session": session.to_json(), "delta": delta.to_json()}

    @app.post("/api/sessions/{session_id}/auto")
    async def auto_session(session_id: str):
        session, _ = sessions.auto_finish(session_id)
        return {"session": session.to_json()}

    @app.get("/api/sessions/{session_id}/analysis")
    async def analyze_session(session_id: str):
        _, analysis = sessions.analyze(session_id)
        return analysis.to_json()

    def _check_formulas(body) -> list[Formula]:
        if "formulas" in body:
            return _parse_formulas(body["formulas"])
        return [_parse_formula(_field(body, "formula", str))]

    @app.post("/api/check")
    async def check(request: Request):
        body = await _body(request)
        kind = _field(body, "kind", str)
        if kind == "sat":
            t = build_tableau(_check_formulas(body))
            if t.is_open():
                return {
                    "satisfiable": True,
                    "model": _model_json(t.extract_model()),
                    "dnf": dnf_from_tableau(t).to_text(),
                }
            return {"satisfiable": False, "model": None, "dnf": None}
        if kind == "valid":
            formulas = _check_formulas(body)
            if len(formulas) != 1:
                raise _BadRequest("a validity check takes exactly one formula")
            from .tableau import check_valid

            ok, counter = check_valid(formulas[0])
            return {"valid": ok, "counterModel": _model_json(counter)}
        if kind == "entails":
            if "conclusion" in body:
                conclusion = _parse_formula(body["conclusion"])
                texts = body.get("premises", body.get("formulas", []))
                if not isinstance(texts, list):
                    raise _BadRequest("'premises' must be a list of strings")
                premises = [_parse_formula(text) for text in texts]
            else:
                # The last formula is the conclusion; the rest are premises.
                formulas = _check_formulas(body)
                conclusion = formulas[-1]
                premises = formulas[:-1]
            from .formula import Not

            t = build_tableau([*premises, Not(conclusion)])
            if t.is_open():
                return {"entails": False, "counterModel": _model_json(t.extract_model())}
            return {"entails": True, "counterModel": None}
        if kind == "dnf":
            formulas = _check_formulas(body)
            if len(formulas) != 1:
                raise _BadRequest("a dnf request takes exactly one formula")
            f = formulas[0]
            method = _field(body, "method", str, required=False) or "tableau"
            if method == "tableau":
                return {"dnf": _dnf_json(dnf_from_tableau(build_tableau([f]))), "trace": None}
            if method == "rewrite":
                d, steps = rewrite_to_dnf(f)
                return {"dnf": _dnf_json(d), "trace": [step.to_json() for step in steps]}
            if method == "complete":
                return {"dnf": _dnf_json(complete_dnf(f)), "trace": None}
            raise _BadRequest(
                f"unknown dnf method {method!r}; use tableau, rewrite, or complete"
            )
        if kind == "truthtable":
            formulas = _check_formulas(body)
            if len(formulas) != 1:
                raise _BadRequest("a truth-table request takes exactly one formula")
            table = truth_table(formulas[0])
            return {"truthTable": table.to_json(), "text": table.to_text()}
        raise _BadRequest(
            f"unknown check kind {kind!r}; use sat, valid, entails, dnf, or truthtable"
        )

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
