"""Command-line batch runner: ``eqsw run <path>|-``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from pydantic import ValidationError

from .grouptheory import DEFAULT_MAX_ORDER
from .jobs import DOCUMENT, SCHEMA_VERSION, STATUS_INCONSISTENT, STATUS_INVALID, run_jobs
from .verify import run_self_checks


def _location(loc: Sequence[Any]) -> str:
    out = ""
    for part in loc:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out


def _render_text(report: dict[str, Any]) -> str:
    lines = [f"schema_version {report['schema_version']}"]
    for rec in report["results"]:
        head = f"[{rec['index']}] {rec['task']}:"
        if not rec["ok"]:
            lines.append(f"{head} error {rec['error']['kind']}: {rec['error']['message']}")
            continue
        res = rec["result"]
        if "verdict" in res:
            v = res["verdict"]
            lines.append(f"{head} {v['conclusion']} ({v['statement']})")
        elif "chambers" in res:
            lines.append(head + " " + ", ".join(f"{k}={val}" for k, val in sorted(res["chambers"].items())))
        elif "value" in res:
            lines.append(f"{head} {res['value']}")
        else:
            lines.append(f"{head} {json.dumps(res, sort_keys=True)}")
    return "\n".join(lines)


def _emit(report: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(report) + "\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _fail(message: str, diagnostics: list[dict[str, str]], fmt: str) -> int:
    report = {"schema_version": SCHEMA_VERSION, "results": [], "status": STATUS_INVALID,
              "error": {"message": message, "diagnostics": diagnostics}}
    if fmt == "json":
        _emit(report, fmt)
    else:
        sys.stderr.write(message + "\n")
        for diag in diagnostics:
            sys.stderr.write(f"  {diag['location']}: {diag['message']}\n")
    return STATUS_INVALID


def cmd_run(args: argparse.Namespace) -> int:
    if args.verify:
        failed = [(name, detail) for name, ok, detail in run_self_checks() if not ok]
        if failed:
            for name, detail in failed:
                sys.stderr.write(f"self-check failed: {name} ({detail})\n")
            return STATUS_INCONSISTENT
    try:
        text = _read(args.path)
    except OSError as exc:
        return _fail(f"cannot read {args.path}: {exc}", [], args.output)
    try:
        doc = DOCUMENT.validate_json(text)
    except ValidationError as exc:
        diags = [{"location": _location(e["loc"]), "message": e["msg"]} for e in exc.errors()]
        return _fail("job document failed validation", diags, args.output)
    too_big = [
        {"location": f"jobs[{i}]", "message": f"group order {job.group_size()} exceeds {args.max_group_order}"}
        for i, job in enumerate(doc.jobs)
        if job.group_size() > args.max_group_order
    ]
    if too_big:
        return _fail("group order bound exceeded", too_big, args.output)
    report, status = run_jobs(doc)
    _emit(report, args.output)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqsw", description="Exact equivariant Seiberg-Witten calculator")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="evaluate a job document")
    run.add_argument("path", help="job document, or - for standard input")
    run.add_argument("--output", choices=("json", "text"), default="json")
    run.add_argument("--verify", action="store_true", help="run the built-in cross-checks first")
    run.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_ORDER)
    run.set_defaults(func=cmd_run)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
