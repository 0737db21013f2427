"""``subint`` command line.

Objects are named by corpus entry (``cusp``, ``node``, ...), by ``stem.ring`` for a ring
of a corpus script (``node.A``), or by plain names of a script given with ``--script``.

Exit codes: 0 all pass, 1 a check or suite failed, 2 usage or parse error, 3 a
computation was refused (cutoff or unsupported search).
"""
from __future__ import annotations

import argparse
import os
import sys

from .dsl import Directive, CHECKS, COMPUTES, SEQUENCES, parse
from .errors import ParseError, SubintError
from .report import exit_code, render_structured, render_text
from .workspace import Result, Workspace

USAGE_ERROR = 2


def _workspace_for(names, args) -> tuple[Workspace, list[str]]:
    from .corpus import SCRIPTS, _corpus, script_text

    if args.script:
        with open(args.script, encoding="utf-8") as fh:
            ws = Workspace(parse(fh.read()), field=args.field, trunc=args.trunc,
                           cutoff=args.cutoff)
        return ws, list(names)
    stems, local = set(), []
    entries = {e.name: e.stem for e in _corpus()}
    for n in names:
        if n in entries:
            stems.add(entries[n])
            local.append(n)
        elif "." in n and n.split(".", 1)[0] in SCRIPTS:
            stem, ring = n.split(".", 1)
            stems.add(stem)
            local.append(ring)
        else:
            raise ParseError(f"unknown object {n!r}; use a corpus entry, stem.ring, or --script")
    if len(stems) != 1:
        raise ParseError("all objects of one command must come from the same corpus script")
    (stem,) = stems
    ws = Workspace(parse(script_text(stem)), field=args.field, trunc=args.trunc,
                   cutoff=args.cutoff)
    return ws, local


def _options(args) -> tuple:
    opts = []
    if args.trunc:
        opts.append(("trunc", str(args.trunc)))
    if getattr(args, "all", False):
        opts.append(("all", None))
    if getattr(args, "route", None):
        opts.append(("route", args.route))
    return tuple(opts)


def _run(args) -> list[Result]:
    verb = args.verb
    if verb == "run":
        with open(args.file, encoding="utf-8") as fh:
            ws = Workspace(parse(fh.read()), field=args.field, trunc=args.trunc,
                           cutoff=args.cutoff)
        return ws.run()
    if verb == "suite":
        from .suites import SUITES, run_suite

        names = list(SUITES) if args.name == "all" else [args.name]
        out = []
        for n in names:
            rep = run_suite(n, truncs=[args.trunc] if args.trunc else None)
            out.append(Result(f"suite {n}", rep.ok, rep.ok, rep.to_dict(), rep.render()))
        return out
    if verb == "corpus":
        from .corpus import corpus

        out = []
        for e in corpus():
            if args.verify:
                res = e.verify()
                bad = [r.directive for r in res if r.ok is False]
                out.append(Result(f"corpus {e.name}", not bad, len(res),
                                  {"failed": bad}, f"{e.name} ({e.field}): "
                                  f"{len(res) - len(bad)}/{len(res)} expectations"))
            else:
                out.append(Result(f"corpus {e.name}", None, e.field,
                                  {"construction": e.construction},
                                  f"{e.name} ({e.field})\n{e.construction}"))
        return out
    if verb == "check":
        targets = [args.name]
        d = Directive("check", args.what, "", (), _options(args))
    elif verb == "compute":
        if args.what == "sequence":
            if not args.names or args.names[0].lower() not in SEQUENCES:
                raise ParseError(f"compute sequence needs a kind: {', '.join(SEQUENCES)}")
            kind, targets = args.names[0], args.names[1:]
        else:
            kind, targets = "", args.names
        if not targets:
            raise ParseError("compute needs an object name")
        d = Directive("compute", args.what, kind, (), _options(args))
    elif verb == "map":
        targets = [args.A, args.C, args.B]
        d = Directive("map", "phi", "", (), _options(args))
    else:  # pragma: no cover
        raise ParseError(f"unknown verb {verb!r}")
    ws, local = _workspace_for(targets, args)
    d.targets = tuple(local)
    return [ws.run_directive(d)]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, default=None, help="truncation degree d >= 1")
    common.add_argument("--field", default=None, help="override the field (Q, F2, F3, F5, ...)")
    common.add_argument("--cutoff", type=int, default=None,
                        help="enumeration cutoff (also SUBINT_CUTOFF)")
    common.add_argument("--report", choices=("text", "structured"), default="text")
    common.add_argument("--script", default=None, help="resolve names in this .sub file")

    p = argparse.ArgumentParser(prog="subint", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)
    r = sub.add_parser("run", parents=[common], help="run a .sub script")
    r.add_argument("file")
    c = sub.add_parser("check", parents=[common], help="decide a predicate")
    c.add_argument("what", choices=CHECKS)
    c.add_argument("name")
    m = sub.add_parser("compute", parents=[common], help="compute a group or sequence")
    m.add_argument("what", choices=COMPUTES)
    m.add_argument("names", nargs="*")
    m.add_argument("--route", choices=("H", "Q", "E"), default=None)
    f = sub.add_parser("map", parents=[common], help="phi(A, C, B) on invertible modules")
    f.add_argument("which", choices=("phi",))
    f.add_argument("A")
    f.add_argument("C")
    f.add_argument("B")
    f.add_argument("--all", action="store_true", help="list the image of every class")
    s = sub.add_parser("suite", parents=[common], help="run a theorem suite")
    s.add_argument("name")
    k = sub.add_parser("corpus", parents=[common], help="list or verify the corpus")
    k.add_argument("--verify", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trunc is not None and args.trunc < 1:
        parser.error("--trunc must be at least 1")
    saved = os.environ.get("SUBINT_CUTOFF")
    if args.cutoff is not None:
        os.environ["SUBINT_CUTOFF"] = str(args.cutoff)
    try:
        results = _run(args)
    except (ParseError, KeyError, OSError) as exc:
        print(f"subint: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SubintError as exc:
        print(f"subint: {type(exc).__name__}: {exc}", file=sys.stderr)
        return getattr(exc, "exit_code", 1)
    finally:
        # do not leak the cutoff into later in-process calls
        if args.cutoff is not None:
            if saved is None:
                os.environ.pop("SUBINT_CUTOFF", None)
            else:
                os.environ["SUBINT_CUTOFF"] = saved
    if args.report == "structured":
        meta = {"argv": list(argv if argv is not None else sys.argv[1:]),
                "trunc": args.trunc, "field": args.field}
        print(render_structured(results, meta))
    else:
        print(render_text(results))
    return exit_code(results)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
