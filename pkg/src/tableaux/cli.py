"""Command-line interface.

Exit codes: 0 when the asked property holds (or the command just prints),
1 when it does not hold, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dnf import complete_dnf, dnf_from_tableau, rewrite_to_dnf
from .formula import Formula, FormulaError, Not, parse
from .render import render_ascii, render_dot, venn_regions
from .semantics import SemanticsError, truth_table
from .tableau import build_tableau
from . import report as report_mod

__all__ = ["main"]


def _read_formula(text: str) -> Formula:
    if text == "-":
        text = sys.stdin.read()
    return parse(text)


def _model_lines(model, indent="  ") -> list[str]:
    return [indent + line for line in model.to_text().splitlines()]


def _cmd_sat(args) -> int:
    f = _read_formula(args.formula)
    t = build_tableau([f])
    satisfiable = t.is_open()
    if satisfiable:
        model = t.extract_model()
        d = dnf_from_tableau(t)
        if args.json:
            print(json.dumps(
                {
                    "satisfiable": True,
                    "model": model.to_json(),
                    "dnf": {"text": d.to_text(), "clauses": d.to_json()},
                },
                ensure_ascii=False,
            ))
        else:
            print("satisfiable")
            print("model:")
            print("\n".join(_model_lines(model)))
            print(f"dnf: {d.to_text()}")
        return 0
    if args.json:
        print(json.dumps({"satisfiable": False, "model": None, "dnf": None}))
    else:
        print("unsatisfiable")
    return 1


def _cmd_valid(args) -> int:
    f = _read_formula(args.formula)
    t = build_tableau([Not(f)])
    if not t.is_open():
        if args.json:
            print(json.dumps({"valid": True, "counterModel": None}))
        else:
            print("valid")
        return 0
    model = t.extract_model()
    if args.json:
        print(json.dumps({"valid": False, "counterModel": model.to_json()},
                         ensure_ascii=False))
    else:
        print("not valid")
        print("counter-model:")
        print("\n".join(_model_lines(model)))
    return 1


def _cmd_entails(args) -> int:
    premises = [_read_formula(text) for text in args.premises]
    conclusion = _read_formula(args.conclusion)
    t = build_tableau([*premises, Not(conclusion)])
    if not t.is_open():
        if args.json:
            print(json.dumps({"entails": True, "counterModel": None}))
        else:
            print("entails")
        return 0
    model = t.extract_model()
    if args.json:
        print(json.dumps({"entails": False, "counterModel": model.to_json()},
                         ensure_ascii=False))
    else:
        print("does not entail")
        print("counter-model:")
        print("\n".join(_model_lines(model)))
    return 1


def _cmd_dnf(args) -> int:
    f = _read_formula(args.formula)
    trace = None
    if args.complete:
        d = complete_dnf(f)
    elif args.trace:
        d, trace = rewrite_to_dnf(f)
    else:
        d = dnf_from_tableau(build_tableau([f]))
    if args.json:
        out = {"dnf": {"text": d.to_text(), "clauses": d.to_json()}}
        if trace is not None:
            out["trace"] = [step.to_json() for step in trace]
        print(json.dumps(out, ensure_ascii=False))
        return 0
    if trace is not None:
        for step in trace:
            print(f"[{step.rule}] {step.before}  ⇒  {step.after}")
    print(d.to_text())
    return 0


def _cmd_truthtable(args) -> int:
    f = _read_formula(args.formula)
    table = truth_table(f)
    if args.json:
        print(json.dumps(table.to_json(), ensure_ascii=False))
    elif args.csv:
        sys.stdout.write(table.to_csv())
    else:
        print(table.to_text())
    return 0


def _cmd_render(args) -> int:
    f = _read_formula(args.formula)
    t = build_tableau([Not(f)] if args.negated else [f])
    print(render_dot(t) if args.dot else render_ascii(t))
    return 0


def _cmd_venn(args) -> int:
    f = _read_formula(args.formula)
    print(json.dumps(venn_regions(f).to_json(), ensure_ascii=False))
    return 0


def _cmd_report(args) -> int:
    f = _read_formula(args.formula)
    written = report_mod.write_report(f, args.out, dpi=args.dpi)
    for path in written:
        print(path)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    from .session import SessionStore

    host = args.host or os.environ.get("TABLEAUX_HOST", "127.0.0.1")
    port = args.port if args.port is not None else int(
        os.environ.get("TABLEAUX_PORT", "7070")
    )
    session_dir = args.session_dir or os.environ.get("TABLEAUX_SESSION_DIR")
    cors = list(args.cors_origin or [])
    env_cors = os.environ.get("TABLEAUX_CORS_ORIGINS")
    if env_cors:
        cors.extend(origin.strip() for origin in env_cors.split(",") if origin.strip())
    app = create_app(
        store=SessionStore(session_dir),
        ui_dir=args.ui_dir,
        cors_origins=cors,
    )
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tableaux",
        description="Decide propositional formulas with semantic tableaux; "
        "print models, truth tables, and normal forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def formula_arg(p):
        p.add_argument("formula", help="formula text, or - to read stdin")

    p = sub.add_parser("sat", help="is the formula satisfiable?")
    formula_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sat)

    p = sub.add_parser("valid", help="is the formula valid?")
    formula_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_valid)

    p = sub.add_parser("entails", help="do the premises entail the conclusion?")
    p.add_argument("premises", nargs="*", help="premise formulas")
    p.add_argument("--then", dest="conclusion", required=True, metavar="FORMULA")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_entails)

    p = sub.add_parser("dnf", help="disjunctive normal form")
    formula_arg(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--complete", action="store_true", help="one clause per satisfying row"
    )
    group.add_argument(
        "--trace", action="store_true", help="derive by rewriting and show each step"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dnf)

    p = sub.add_parser("truthtable", help="print the truth table")
    formula_arg(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--csv", action="store_true")
    group.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_truthtable)

    p = sub.add_parser("render", help="print the finished tableau as a tree")
    formula_arg(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true", help="Graphviz DOT output")
    group.add_argument("--ascii", action="store_true", help="indented text (default)")
    p.add_argument(
        "--negated", action="store_true", help="build the tableau for the negation"
    )
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("venn", help="Venn region map as JSON (up to 3 atoms)")
    formula_arg(p)
    p.set_defaults(func=_cmd_venn)

    p = sub.add_parser("report", help="write CSV, summary, and figures to a directory")
    formula_arg(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--dpi", type=int, default=150)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default=None)
    p.add_argument("--port", type=int, default=None)
    p.add_argument("--ui-dir", default=None, help="directory with the built web UI")
    p.add_argument(
        "--cors-origin",
        action="append",
        default=None,
        metavar="ORIGIN",
        help="allowed CORS origin (repeatable)",
    )
    p.add_argument("--session-dir", default=None, help="persist sessions here")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SemanticsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
