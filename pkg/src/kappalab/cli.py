"""Command-line frontend: load data, run suites, emit reports.

Exit status: 0 when every reported check passes, 1 on a check failure,
2 on load/validation/usage errors.  ``--format json`` emits a single
machine-readable document on stdout; reports are schema-stable across
runs except for wall time.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import builtin, list_builtins, UnknownNameError
from .enrich import HomBasis, build_enriched, verify_dagger_enriched, \
    DegenerateBasisError
from .fusion import FusionData, verify_fusion
from .io import LoadError, resolve_source, save_file
from .modulecat import ModuleData, as_module, verify_module
from .monoidal import build_monoidal_enriched, verify_monoidal
from .report import Report
from .roundtrip import action_dagger_test, build_roundtrip, two_adjoint_test, \
    verify_roundtrip
from .semicat import Tol
from .util import thread_count

USAGE_STATUS = 2
FAIL_STATUS = 1


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--abs-eps", type=float, default=1e-9,
                        help="absolute residual threshold (default 1e-9)")
    common.add_argument("--rel-eps", type=float, default=1e-12,
                        help="relative residual threshold (default 1e-12)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, action="append", default=None,
                        help="seed (repeatable; two-adjoint needs exactly two)")
    common.add_argument("--checks", type=str, default=None,
                        help="comma-separated list of check ids to report")
    p = argparse.ArgumentParser(
        prog="kappalab", parents=[common],
        description="Verify dagger-enriched monoidal category structures "
                    "as numerical residual checks.")
    sub = p.add_subparsers(dest="command")

    pv = sub.add_parser("verify", parents=[common],
                        help="verify fusion or module data")
    pv.add_argument("what", choices=("fusion", "module"))
    pv.add_argument("src")

    pe = sub.add_parser("enrich", parents=[common],
                        help="build + verify the dagger enrichment")
    pe.add_argument("src")

    pr = sub.add_parser("roundtrip", parents=[common],
                        help="reconstruct the action and verify the lemmas")
    pr.add_argument("src")

    pt = sub.add_parser("two-adjoint", parents=[common],
                        help="compare two seeded left adjoints")
    pt.add_argument("src")

    pm = sub.add_parser("monoidal", parents=[common],
                        help="verify a central structure")
    pm.add_argument("src")

    px = sub.add_parser("export", parents=[common],
                        help="write a builtin to a data file")
    px.add_argument("name")
    px.add_argument("path")

    sub.add_parser("list", parents=[common], help="list builtin entries")
    return p


def _emit(reports, args) -> int:
    if args.checks is not None:
        wanted = [c.strip() for c in args.checks.split(",") if c.strip()]
        known = {c.check_id for r in reports for c in r.checks}
        unknown = [w for w in wanted if w not in known]
        if unknown:
            print(f"error: unknown check id(s): {', '.join(unknown)}; "
                  f"available: {', '.join(sorted(known))}", file=sys.stderr)
            return USAGE_STATUS
        reports = [Report(r.suite, [c for c in r.checks if c.check_id in wanted],
                          r.wall_time, r.seed) for r in reports]
        reports = [r for r in reports if r.checks]
    if args.format == "json":
        doc = reports[0].to_dict() if len(reports) == 1 else \
            {"reports": [r.to_dict() for r in reports]}
        print(json.dumps(doc, indent=2))
    else:
        for r in reports:
            print(r.format_text())
    return 0 if all(r.overall for r in reports) else FAIL_STATUS


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command is None:
        _parser().print_usage(sys.stderr)
        return USAGE_STATUS
    try:
        thread_count()
        tol = Tol(abs_eps=args.abs_eps, rel_eps=args.rel_eps)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_STATUS
    seeds = args.seed or []

    try:
        if args.command == "list":
            entries = list_builtins()
            if args.format == "json":
                print(json.dumps(
                    [{"name": n, "kind": k} for n, k in entries], indent=2))
            else:
                for n, k in entries:
                    print(f"{k:<8} {n}")
            return 0

        if args.command == "export":
            try:
                entry = builtin(args.name)
            except UnknownNameError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return USAGE_STATUS
            save_file(args.path, entry.payload)
            print(f"wrote {entry.kind} data {entry.name!r} to {args.path}")
            return 0

        if args.command == "verify":
            if args.what == "fusion":
                fd = resolve_source(args.src, "fusion")
                reports = [verify_fusion(fd, tol, seed=seeds[0] if seeds else 7)]
            else:
                md = resolve_source(args.src, "module")
                reports = [verify_module(md, tol,
                                         seed=seeds[0] if seeds else 11)]
            return _emit(reports, args)

        if args.command == "enrich":
            md = resolve_source(args.src, "module")
            mod = as_module(md)
            basis = (HomBasis.random_orthonormal(mod, seeds[0])
                     if seeds else None)
            e = build_enriched(mod, basis)
            reports = [verify_dagger_enriched(
                e, tol, seed=seeds[0] if seeds else 5)]
            return _emit(reports, args)

        if args.command == "roundtrip":
            md = resolve_source(args.src, "module")
            mod = as_module(md)
            basis = (HomBasis.random_orthonormal(mod, seeds[0])
                     if seeds else None)
            rt = build_roundtrip(mod, basis=basis)
            reports = [verify_roundtrip(rt, tol),
                       action_dagger_test(mod, rt.enriched, tol)]
            return _emit(reports, args)

        if args.command == "two-adjoint":
            if len(seeds) != 2:
                print("error: two-adjoint needs exactly two --seed values",
                      file=sys.stderr)
                return USAGE_STATUS
            md = resolve_source(args.src, "module")
            reports = [two_adjoint_test(as_module(md), seeds[0], seeds[1], tol)]
            return _emit(reports, args)

        if args.command == "monoidal":
            cs = resolve_source(args.src, "central")
            me = build_monoidal_enriched(cs)
            reports = [verify_monoidal(me, tol,
                                       seed=seeds[0] if seeds else 29)]
            return _emit(reports, args)
    except (LoadError, DegenerateBasisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_STATUS
    print("error: unknown command", file=sys.stderr)
    return USAGE_STATUS


if __name__ == "__main__":
    sys.exit(main())
