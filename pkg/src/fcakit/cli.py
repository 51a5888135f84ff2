"""Command-line front end: concepts, base, check, explore, report, serve.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .closure import FormalConcept, enumerate_concepts
from .errors import FcaError, InvalidCounterexample
from .exploration import (
    Accept,
    Counterexample,
    answer,
    load_session,
    new_session,
    save_session,
)
from .implications import (
    canonical_base,
    bind_implications,
    holds,
    implications_to_json,
    parse_implications_file,
    violating_objects,
)
from .io import load_context, render_cxt
from .lattice import build_lattice, export_lattice, top_part
from .testlab import export_pict, failure_report, feature_neighbors


def _concept_line(c: FormalConcept, objects: Sequence[str], attributes: Sequence[str]) -> str:
    ext = ", ".join(objects[g] for g in c.extent)
    intent = ", ".join(attributes[m] for m in c.intent)
    return f"({{{ext}}}, {{{intent}}})"


def _styled(text: str) -> str:
    if sys.stdout.isatty() and os.environ.get("FCA_COLOR") != "0":
        return f"\033[1m{text}\033[0m"
    return text


def _imp_text(imp, names, dichotomized=False) -> str:
    def tok(i: int) -> str:
        name = names[i]
        return "!" + name[4:] if dichotomized and name.startswith("not_") else name

    left = ", ".join(tok(i) for i in imp.premise)
    right = ", ".join(tok(i) for i in imp.conclusion)
    return f"{left} → {right}".strip()


def _cmd_concepts(args) -> int:
    ctx = load_context(args.context)
    if args.top is not None:
        lat = top_part(ctx, args.top)
    elif args.format in ("json", "dot"):
        lat = build_lattice(ctx)
    else:
        lat = None
    if args.format == "text":
        concepts = lat.concepts if lat is not None else enumerate_concepts(ctx)
        for c in concepts:
            print(_concept_line(c, ctx.objects, ctx.attributes))
    else:
        sys.stdout.write(export_lattice(lat, args.format))
    return 0


def _cmd_base(args) -> int:
    ctx = load_context(args.context)
    base = canonical_base(ctx)
    if args.format == "text":
        for imp in base:
            print(_imp_text(imp, ctx.attributes))
    elif args.format == "json":
        print(json.dumps(implications_to_json(base), indent=2))
    else:
        sys.stdout.write(export_pict(base, ctx.attributes).render())
    return 0


def _cmd_check(args) -> int:
    ctx = load_context(args.context)
    with open(args.implications, "r", encoding="utf-8") as fh:
        parsed = parse_implications_file(fh.read())
    dicho = args.dichotomize or parsed.dichotomized
    target = ctx.dichotomize() if dicho else ctx
    impls = bind_implications(parsed, target.attributes)
    failures = 0
    for imp in impls:
        text = _imp_text(imp, target.attributes, dicho)
        if holds(target, imp):
            print(f"OK    {text}")
        else:
            failures += 1
            witnesses = ", ".join(violating_objects(target, imp))
            print(f"FAIL  {text}  (violated by: {witnesses})")
    print(f"{len(impls) - failures}/{len(impls)} implications hold")
    return 1 if failures else 0


def _print_results(session) -> None:
    base, ctx = session.results()
    print("Exploration finished.")
    print(f"Canonical base ({len(base)} implications):")
    for imp in base:
        print("  " + _imp_text(imp, ctx.attributes))
    print(f"Final context ({ctx.object_count} objects):")
    sys.stdout.write(render_cxt(ctx))


def _cmd_explore(args) -> int:
    if args.resume:
        with open(args.resume, "r", encoding="utf-8") as fh:
            session = load_session(fh.read())
    elif args.context:
        session = new_session(initial=load_context(args.context))
    elif args.attributes:
        names = [a.strip() for a in args.attributes.split(",") if a.strip()]
        session = new_session(attributes=names)
    else:
        print("explore needs --attributes, --context, or --resume", file=sys.stderr)
        return 2

    def persist() -> None:
        if args.save:
            with open(args.save, "w", encoding="utf-8") as fh:
                fh.write(save_session(session))

    if args.oracle:
        hidden = load_context(args.oracle)
        while not session.done:
            question = session.question
            if holds(hidden, question):
                session = answer(session, Accept())
            else:
                g = next(
                    i for i in range(hidden.object_count)
                    if question.violated_by(hidden.row(i))
                )
                session = answer(session, Counterexample(hidden.objects[g], hidden.row(g)))
            persist()
        _print_results(session)
        return 0

    while not session.done:
        print(_styled("Is the following implication valid?"))
        print("  " + session.question_text())
        if sys.stdin.isatty():
            print("answer: y | n <name> <attrs,comma,separated>")
        line = sys.stdin.readline()
        if not line:
            persist()
            print("no more input; session paused" + (f" (saved to {args.save})" if args.save else ""))
            return 0
        line = line.strip()
        if line == "y":
            session = answer(session, Accept())
        elif line.startswith("n"):
            parts = line.split(None, 2)
            if len(parts) < 2:
                print("counterexample needs a name: n <name> <attrs>", file=sys.stderr)
                continue
            name = parts[1]
            attr_names = [a.strip() for a in parts[2].split(",") if a.strip()] if len(parts) > 2 else []
            try:
                attrs = session.working_context.attr_set(attr_names)
                session = answer(session, Counterexample(name, attrs))
            except (InvalidCounterexample, FcaError) as exc:
                print(f"rejected: {exc}", file=sys.stderr)
                continue
        else:
            print(f"unrecognized answer {line!r} (want y or n <name> <attrs>)", file=sys.stderr)
            continue
        persist()
    _print_results(session)
    persist()
    return 0


def _cmd_report(args) -> int:
    ctx = load_context(args.context)
    if args.report_kind == "failures":
        report = failure_report(ctx, args.failure_attr, args.depth)
        if args.format == "json":
            print(json.dumps(report.to_json(), indent=2))
        else:
            sys.stdout.write(report.render())
    else:
        tags = [t.strip() for t in args.tags.split(",") if t.strip()]
        hood = feature_neighbors(ctx, tags)
        if args.format == "json":
            print(json.dumps(hood.to_json(), indent=2))
        else:
            sys.stdout.write(hood.render())
    return 0


def _cmd_serve(args) -> int:
    from .service import run_server

    run_server(port=args.port, data_dir=args.data_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcakit", description="Formal concept analysis toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("concepts", help="list concepts or export the concept lattice")
    p.add_argument("--context", required=True, help="context file (.cxt/.csv/.json)")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--top", type=int, default=None, help="keep only N cover levels below the top")
    p.set_defaults(func=_cmd_concepts)

    p = sub.add_parser("base", help="canonical implication base of a context")
    p.add_argument("--context", required=True)
    p.add_argument("--format", choices=("text", "json", "pict"), default="text")
    p.set_defaults(func=_cmd_base)

    p = sub.add_parser("check", help="check an implication file against a context")
    p.add_argument("--context", required=True)
    p.add_argument("--implications", required=True)
    p.add_argument("--dichotomize", action="store_true",
                   help="evaluate !x tokens against the dichotomized context")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("explore", help="interactive attribute exploration")
    p.add_argument("--attributes", help="comma-separated attribute universe")
    p.add_argument("--context", help="start from an existing context")
    p.add_argument("--resume", help="resume a saved session")
    p.add_argument("--save", help="persist the session after every answer")
    p.add_argument("--oracle", help="answer automatically from this hidden context")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("report", help="failure clusters or feature neighborhoods")
    rsub = p.add_subparsers(dest="report_kind", required=True)
    pf = rsub.add_parser("failures")
    pf.add_argument("--context", required=True)
    pf.add_argument("--failure-attr", required=True)
    pf.add_argument("--depth", type=int, default=1)
    pf.add_argument("--format", choices=("text", "json"), default="text")
    pf.set_defaults(func=_cmd_report)
    pt = rsub.add_parser("features")
    pt.add_argument("--context", required=True)
    pt.add_argument("--tags", required=True, help="comma-separated tag list")
    pt.add_argument("--format", choices=("text", "json"), default="text")
    pt.set_defaults(func=_cmd_report)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=7878)
    p.add_argument("--data-dir", default=None)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FcaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
