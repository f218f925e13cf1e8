"""Command-line front end.

Exit codes: 0 success/PASS, 1 a structure fails its axioms, 2 usage, I/O or
parse errors (including unknown link names).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .algebra import NotAUnit, failing_relation, iter_modules
from .birack import AxiomViolation
from .diagram import MalformedPD, NonOrientable, NonPlanar, mirror
from .invariants import shadow_module_invariant
from .table import resolve_link, select

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _structures(args, want_module=True):
    _need(args, "birack", "shadow", *(["module"] if want_module else []))
    b = io.load_birack(args.birack)
    sh = io.load_shadow(args.shadow, b)
    ms = io.load_module(args.module) if want_module else None
    if ms is not None and (ms.m, ms.n) != (sh.m, b.n):
        raise UsageError(f"module is {ms.m}x{ms.n}, birack/shadow need {sh.m}x{b.n}")
    return b, sh, ms


def cmd_check(args, out) -> int:
    _need(args, "birack")
    try:
        b = io.load_birack(args.birack)
        if args.what in ("shadow", "module"):
            _need(args, "shadow")
            sh = io.load_shadow(args.shadow, b)
        if args.what == "module":
            _need(args, "module")
            ms = io.load_module(args.module)
            if (ms.m, ms.n) != (sh.m, b.n):
                raise UsageError(f"module is {ms.m}x{ms.n}, birack/shadow need {sh.m}x{b.n}")
            bad = failing_relation(ms, b, sh)
            if bad is not None:
                print(f"FAIL {bad}", file=out)
                return EXIT_FAIL
    except AxiomViolation as exc:
        print(f"FAIL {exc}", file=out)
        return EXIT_FAIL
    except NotAUnit as exc:
        print(f"FAIL {exc}", file=out)
        return EXIT_FAIL
    print("PASS", file=out)
    return EXIT_OK


def cmd_rank(args, out) -> int:
    _need(args, "birack")
    b = io.load_birack(args.birack)
    alpha, pi, N = b.kink_maps()
    if args.format == "json":
        print(json.dumps({"alpha": alpha.one_based(), "pi": pi.one_based(), "rank": N}), file=out)
    else:
        print(f"alpha: {alpha.one_based()}", file=out)
        print(f"pi: {pi.one_based()}", file=out)
        print(f"rank: {N}", file=out)
    return EXIT_OK


def cmd_search_modules(args, out) -> int:
    _need(args, "ring")
    b, sh, _ = _structures(args, want_module=False)
    count = 0
    for ms in iter_modules(b, sh, args.ring):
        print(io.dump(io.module_to_json(ms)), file=out)
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    print(f"count: {count}", file=out)
    return EXIT_OK


def _link(args):
    if args.pd is not None:
        d = io.load_link(args.pd)
    elif args.link is not None:
        try:
            d = resolve_link(args.link)
        except KeyError:
            raise UsageError(f"unknown link name {args.link!r}")
    else:
        raise UsageError("give --link NAME or --pd PATH")
    return mirror(d) if args.mirror and d.crossings else d


def cmd_invariant(args, out) -> int:
    b, sh, ms = _structures(args)
    d = _link(args)
    value = shadow_module_invariant(d, b, sh, ms)
    if args.format == "json":
        print(json.dumps(value.to_json()), file=out)
    else:
        print(value, file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    _need(args, "max_crossings")
    b, sh, ms = _structures(args)
    entries = select(args.max_crossings, links=args.links,
                     max_link_crossings=args.max_link_crossings, extra=tuple(args.also))
    values = []
    for e in entries:
        values.append((e.name, shadow_module_invariant(e.diagram(args.mirror), b, sh, ms)))
    groups: dict[str, list[str]] = {}
    for name, v in values:
        groups.setdefault(str(v), []).append(name)
    if args.format == "json":
        print(json.dumps({
            "values": {name: v.to_json() for name, v in values},
            "groups": [{"value": k, "names": names} for k, names in groups.items()],
        }), file=out)
    elif groups:
        width = max(len(k) for k in groups)
        for k, names in groups.items():
            print(f"{k.ljust(width)} | {', '.join(names)}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shadow-invar",
                                description="Shadow module enhanced birack counting invariants.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--birack", metavar="PATH")
    common.add_argument("--shadow", metavar="PATH")
    common.add_argument("--module", metavar="PATH")
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="verify a birack, shadow or module structure")
    c.add_argument("what", choices=("birack", "shadow", "module"))
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("rank", parents=[common], help="print the kink maps and birack rank")
    c.set_defaults(func=cmd_rank)

    c = sub.add_parser("search-modules", parents=[common], help="list all module structures on Z_K")
    c.add_argument("--ring", type=int, metavar="K")
    c.add_argument("--limit", type=int, metavar="N")
    c.set_defaults(func=cmd_search_modules)

    for name, func, helptext in (("invariant", cmd_invariant, "invariant of one knot or link"),
                                 ("table", cmd_table, "invariants of bundled knots and links, grouped")):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument("--mirror", action="store_true", help="use the mirror image")
        c.set_defaults(func=func)
        if name == "invariant":
            c.add_argument("--link", metavar="NAME")
            c.add_argument("--pd", metavar="PATH")
        else:
            c.add_argument("--max-crossings", type=int, metavar="N")
            c.add_argument("--links", action="store_true", help="include multi-component links")
            c.add_argument("--max-link-crossings", type=int, metavar="N")
            c.add_argument("--also", action="append", default=[], metavar="NAME",
                           help="include a named entry regardless of crossing bound")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, io.StructureFileError, MalformedPD, NonOrientable, NonPlanar) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AxiomViolation, NotAUnit) as exc:
        print(f"FAIL {exc}", file=out)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
