"""Command-line surface.

Exit codes: 0 success, 1 axiom violation or failed check, 2 parse error,
64 usage error.  DIRING_JOBS sets the default for --jobs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .census import (
    census_all_dirings,
    default_jobs,
    enumerate_diring_homs,
    enumerate_left_dirings,
    enumerate_modules,
    enumerate_module_homs,
)
from .diring import DiringTable
from .fileformat import (
    ParseError,
    load_diring,
    load_file,
    load_structure,
    serialize_diring,
    serialize_module,
)
from .groups import abelian_groups_of_order, mask_from
from .ideals import IdealHandle, quotient_diring
from .modules import LeftModuleTable
from .radical import rad3
from .report import (
    build_diring_analysis,
    build_module_analysis,
    radical_dict,
    render_diring_analysis,
    render_module_analysis,
    to_json,
)
from .suites import run_census_suites, run_diring_suite
from .validation import ValidationReport

USAGE_ERROR = 64


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _group_specs(spec: str):
    """Resolve a census group spec: 'all', 'order<=N', a tag like 'z2xz2'
    (alias 'v4'), or a path to a diring/group file."""
    spec = spec.lower()
    if spec == "v4":
        spec = "z2xz2"
    if spec == "all":
        spec = "order<=4"
    if spec.startswith("order<="):
        top = int(spec.split("<=", 1)[1])
        out = []
        for n in range(1, top + 1):
            out.extend(abelian_groups_of_order(n))
        return out
    for n in range(1, 25):
        for tag, G in abelian_groups_of_order(n):
            if tag == spec:
                return [(tag, G)]
        if spec == f"z{n}":
            break
    raise ValueError(f"unknown group spec {spec!r}")


def _load_or_exit(path, ring):
    try:
        kind, name, got = load_structure(path, ring_path=ring)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        raise SystemExit(2)
    except (FileNotFoundError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)
    return kind, name, got


def cmd_verify(args) -> int:
    kind, name, got = _load_or_exit(args.file, args.ring)
    if isinstance(got, ValidationReport):
        print(got.summary())
        return 1
    print(f"{kind} {name}: valid")
    return 0


def cmd_analyze(args) -> int:
    kind, name, got = _load_or_exit(args.file, args.ring)
    if isinstance(got, ValidationReport):
        print(got.summary())
        return 1
    if kind == "diring":
        rep = build_diring_analysis(got, name)
        text = render_diring_analysis(rep)
    else:
        sf = load_file(args.file)
        rep = build_module_analysis(got, name, sf.over)
        text = render_module_analysis(rep)
    if args.json:
        payload = to_json(rep)
        if args.json == "-":
            sys.stdout.write(payload)
        else:
            Path(args.json).write_text(payload, encoding="utf-8")
            print(f"json report written to {args.json}")
    if args.json != "-":
        print(text)
    return 0


def cmd_radical(args) -> int:
    kind, name, got = _load_or_exit(args.file, None)
    if kind != "diring":
        print("error: radical applies to diring files", file=sys.stderr)
        return USAGE_ERROR
    if isinstance(got, ValidationReport):
        print(got.summary())
        return 1
    rep = rad3(got)
    info = radical_dict(got, rep)
    print(f"diring {name}:")
    print(f"  3-maximal left ideals: "
          + (", ".join("{" + ", ".join(s) + "}"
                       for s in info["three_maximal_left_ideals"]) or "none"))
    print(f"  3-primitive ideals: "
          + (", ".join("{" + ", ".join(s) + "}"
                       for s in info["primitive_ideals"]) or "none"))
    print(f"  rad3 via module annihilators: "
          "{" + ", ".join(info["via_module_annihilators"]) + "}")
    print(f"  rad3 via primitive ideals:    "
          "{" + ", ".join(info["via_primitive_ideals"]) + "}")
    print(f"  agrees: {rep.agrees}, family_empty: {rep.family_empty}")
    return 0 if rep.agrees else 1


def cmd_quotient(args) -> int:
    kind, name, got = _load_or_exit(args.file, None)
    if kind != "diring":
        print("error: quotient applies to diring files", file=sys.stderr)
        return USAGE_ERROR
    if isinstance(got, ValidationReport):
        print(got.summary())
        return 1
    at = {lab: i for i, lab in enumerate(got.names)}
    missing = [lab for lab in args.ideal if lab not in at]
    if missing:
        print(f"error: unknown element label(s) {missing}", file=sys.stderr)
        return USAGE_ERROR
    mask = mask_from(at[lab] for lab in args.ideal) | 1
    try:
        Q, _ = quotient_diring(got, IdealHandle(mask, "two_sided"))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = serialize_diring(Q, f"{name}_mod_{'_'.join(args.ideal)}")
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"quotient written to {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def _record_summary(rec) -> str:
    inv = rec.invariants
    parts = [f"record {rec.name}"]
    parts.extend(f"{k}={inv[k]}" for k in sorted(inv))
    return " ".join(parts)


def cmd_census(args) -> int:
    try:
        groups = _group_specs(args.group)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    for tag, G in groups:
        recs = enumerate_left_dirings(G, jobs=args.jobs, force=args.force)
        for rec in recs:
            rec.name = f"{tag}-{rec.name.split('-')[-1]}"
            rec.invariants["group"] = tag
            print(_record_summary(rec))
            sys.stdout.write(serialize_diring(rec.structure, rec.name))
            print()
    return 0


def cmd_modules(args) -> int:
    kind, name, got = _load_or_exit(args.file, None)
    if kind != "diring" or isinstance(got, ValidationReport):
        print("error: modules requires a valid diring file", file=sys.stderr)
        return 1
    for m in range(1, args.max_order + 1):
        for rec in enumerate_modules(got, m, jobs=args.jobs, force=args.force):
            print(_record_summary(rec))
            sys.stdout.write(serialize_module(rec.structure,
                                              rec.name, name))
            print()
    return 0


def cmd_hom(args) -> int:
    kind1, name1, s1 = _load_or_exit(args.file1, args.ring)
    kind2, name2, s2 = _load_or_exit(args.file2, args.ring)
    if isinstance(s1, ValidationReport) or isinstance(s2, ValidationReport):
        print("error: both structures must validate", file=sys.stderr)
        return 1
    if kind1 != kind2:
        print("error: cannot mix diring and module files", file=sys.stderr)
        return USAGE_ERROR
    if kind1 == "diring":
        homs = enumerate_diring_homs(s1, s2, iso_only=args.iso)
        names1 = s1.names
        names2 = s2.names
    else:
        homs = enumerate_module_homs(s1, s2, iso_only=args.iso)
        names1 = s1.carrier.names
        names2 = s2.carrier.names
    what = "isomorphism" if args.iso else "homomorphism"
    print(f"{len(homs)} {what}(s) {name1} -> {name2}")
    for k, phi in enumerate(homs):
        body = " ".join(f"{names1[i]}->{names2[int(v)]}"
                        for i, v in enumerate(phi.map))
        print(f"  [{k}] {body}")
    return 0


def cmd_props(args) -> int:
    target = args.target
    if Path(target).exists():
        kind, name, got = _load_or_exit(target, args.ring)
        if isinstance(got, ValidationReport):
            print(got.summary())
            return 1
        if kind != "diring":
            print("error: props runs on diring files or census specs",
                  file=sys.stderr)
            return USAGE_ERROR
        res = run_diring_suite(got, name, module_max=args.module_max,
                               jobs=args.jobs)
    else:
        try:
            top = int(target.split("<=", 1)[1]) if "<=" in target \
                else (4 if target == "all" else int(target))
        except ValueError:
            print(f"error: unknown props target {target!r}", file=sys.stderr)
            return USAGE_ERROR
        res = run_census_suites(max_order=top, module_max=args.module_max,
                                jobs=args.jobs)
    print(res.render())
    return 0 if res.ok else 1


def make_parser() -> Parser:
    p = Parser(prog="dirings",
               description="finite one-sided dirings: validation, analysis, "
                           "census, and radical theory")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="validate a structure file")
    sp.add_argument("file")
    sp.add_argument("--ring", help="diring file for module inputs")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("analyze", help="full analysis report")
    sp.add_argument("file")
    sp.add_argument("--ring")
    sp.add_argument("--json", help="write the JSON report here ('-' = stdout)")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("radical", help="the 3-radical by both formulas")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_radical)

    sp = sub.add_parser("quotient", help="quotient diring by a two-sided ideal")
    sp.add_argument("file")
    sp.add_argument("--ideal", nargs="+", required=True,
                    help="element labels of the ideal")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("census", help="enumerate left dirings up to isomorphism")
    sp.add_argument("--group", required=True,
                    help="group spec: all, order<=N, z4, z2xz2/v4, ...")
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--force", action="store_true",
                    help="override the order cap")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("modules", help="enumerate modules over a diring")
    sp.add_argument("file")
    sp.add_argument("--max-order", type=int, default=4)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_modules)

    sp = sub.add_parser("hom", help="enumerate homomorphisms between structures")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--iso", action="store_true", help="isomorphisms only")
    sp.add_argument("--ring", help="diring file for module inputs")
    sp.set_defaults(func=cmd_hom)

    sp = sub.add_parser("props", help="run every property suite")
    sp.add_argument("target", help="diring file, 'all', or order<=N")
    sp.add_argument("--module-max", type=int, default=4)
    sp.add_argument("--jobs", type=int, default=None)
    sp.add_argument("--ring")
    sp.set_defaults(func=cmd_props)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
