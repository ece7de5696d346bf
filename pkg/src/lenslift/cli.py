"""Command-line interface: ``lenslift <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .braid import BraidWord, parse_braid
from .diagram import DiskDiagram, LensSpace, PlanarDiagram, from_braid, lens_link
from .errors import NotStandardError, ResourceLimitError
from .invariants import (
    alexander,
    braid_fingerprint,
    build_catalog,
    closure,
    default_catalog,
    fingerprint,
    jones,
    kauffman_bracket,
)
from .lift import lift_braid, lift_component_count, lift_diagram, lift_diagram_reduced
from .search import build_cable_pair, collision_search, separator, solve_lift_equation


class UsageError(Exception):
    pass


def _emit(data: dict | list, fmt: str, table: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(table))


def _identification(fp) -> str:
    cat = default_catalog()
    name = cat.name(fp)
    if name is None:
        return "not in catalog (equivalent fingerprints only)"
    note = cat.note(name)
    return f"{name} ({note})" if note else name


def _lens(args) -> LensSpace:
    try:
        return LensSpace(args.p, args.q)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _braid(text: str) -> BraidWord:
    try:
        return parse_braid(text)
    except ValueError as e:
        raise UsageError(f"braid {text!r}: {e}") from None


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read diagram file {path}: {e}") from None


def cmd_lift(args) -> int:
    lens = _lens(args)
    if args.braid is not None:
        b = _braid(args.braid)
        d = from_braid(b, lens)
        literal, reduced = lift_braid(b, lens)
        res = lift_diagram_reduced(d) if args.construction == "reduced" else lift_diagram(d)
        fp = braid_fingerprint(reduced)
    else:
        data = _read_json(args.diagram)
        data.setdefault("p", lens.p)
        data.setdefault("q", lens.q)
        try:
            d = DiskDiagram.from_dict(data)
            res = lift_diagram_reduced(d) if args.construction == "reduced" else lift_diagram(d)
        except NotStandardError as e:
            raise UsageError(str(e)) from None
        literal = reduced = None
        fp = fingerprint(res.diagram)
    link = lens_link(d)
    count = res.component_count()
    ident = _identification(fp)
    data = {
        "lens": [lens.p, lens.q],
        "construction": res.construction,
        "lift_braid": str(reduced) if reduced is not None else None,
        "literal_braid": str(literal) if literal is not None else None,
        "pd": res.to_dict(),
        "components": count,
        "expected_components": lift_component_count(link),
        "fingerprint": fp.to_dict(),
        "identification": ident,
    }
    table = []
    if reduced is not None:
        table.append(f"lift braid: {reduced}")
    table += [
        f"pd: {res.diagram.to_json()}",
        f"components: {count}",
        f"identification: {ident}",
    ]
    _emit(data, args.format, table)
    return 0


def _planar_input(args) -> tuple[PlanarDiagram, BraidWord | None]:
    if args.braid is not None:
        b = _braid(args.braid)
        return closure(b), b
    data = _read_json(args.diagram)
    try:
        return PlanarDiagram.from_dict(data), None
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"bad PD diagram: {e}") from None


def cmd_invariants(args) -> int:
    pd, b = _planar_input(args)
    br = kauffman_bracket(b if b is not None else pd)
    fp = braid_fingerprint(b) if b is not None else fingerprint(pd, br)
    data = {
        "components": pd.component_count(),
        "crossings": pd.crossing_count,
        "writhe": pd.writhe(),
        "bracket": str(br),
        "jones": str(jones(br, pd.writhe())),
        "fingerprint": fp.to_dict(),
    }
    if b is not None:
        data["alexander"] = str(alexander(b))
    table = [f"{k}: {v}" for k, v in data.items() if k != "fingerprint"]
    table.append(f"fingerprint: {fp}")
    _emit(data, args.format, table)
    return 0


def cmd_identify(args) -> int:
    pd, b = _planar_input(args)
    fp = braid_fingerprint(b) if b is not None else fingerprint(pd)
    name = default_catalog().name(fp)
    ident = _identification(fp)
    _emit({"name": name, "identification": ident, "fingerprint": fp.to_dict()}, args.format, [ident])
    return 0


def cmd_solve(args) -> int:
    if args.pmax < 2:
        raise UsageError("-pmax must be at least 2")
    sols = solve_lift_equation(args.h, args.pmax)
    table = [f"h={args.h}: k*p + 2q - p = {args.h}, p <= {args.pmax}"]
    for s in sols:
        if s.is_family:
            bad = f"  non-coprime at p={list(s.non_coprime)}" if s.non_coprime else ""
            table.append(f"family  {s.family.describe()}{bad}")
    table.append(f"{'p':>4} {'q':>4} {'k':>4}  valid")
    for s in sols:
        if not s.is_family:
            table.append(f"{s.p:>4} {s.q:>4} {s.k:>4}  {'yes' if s.coprime_valid else 'no (gcd > 1)'}")
    _emit([s.to_dict() for s in sols], args.format, table)
    return 0


def cmd_search(args) -> int:
    reports = collision_search(args.strand_max, args.wordlen_max, args.pmax, threads=args.threads)
    if args.format == "json":
        for r in reports:
            print(r.to_json())
    else:
        print(f"{len(reports)} collision reports")
        for r in reports:
            print(r.row())
    return 0


def cmd_cable(args) -> int:
    if args.i < 1 or args.j < 0:
        raise UsageError("need -i >= 1 and -j >= 0")
    a, b, lens = build_cable_pair(args.i, args.j)
    rows = []
    table = [f"{lens}, i={args.i}, j={args.j}"]
    fps = []
    for label, w in (("A", a), ("B", b)):
        sep = separator(w, lens)
        fp = braid_fingerprint(lift_braid(w, lens)[1])
        fps.append(fp)
        rows.append({"link": label, "braid": str(w), "separator": sep.to_dict(), "lift_fingerprint": fp.to_dict()})
        table.append(f"{label}_{args.i},{args.j}: {w}")
        table.append(f"  separator: {sep}")
        table.append(f"  lift fingerprint: {fp}")
    same = fps[0] == fps[1]
    table.append("lift fingerprints: " + ("equal" if same else "different"))
    _emit({"lens": [lens.p, lens.q], "pair": rows, "equal_lift_fingerprints": same}, args.format, table)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "verify":
        cat = default_catalog()
        problems = cat.verify()
        fresh = build_catalog()
        for e, f in zip(sorted(cat, key=lambda e: e.name), sorted(fresh, key=lambda e: e.name)):
            if e.name != f.name or not e.fingerprint.same_oriented_class(f.fingerprint):
                problems.append(f"{e.name}: differs from the built-in definition")
        for line in problems:
            print(line, file=sys.stderr)
        _emit({"entries": len(cat), "problems": problems}, args.format,
              [f"{len(cat)} entries, " + ("all fingerprints verified" if not problems else f"{len(problems)} problems")])
        return 1 if problems else 0
    cat = default_catalog()
    if args.action == "write":
        if not args.path:
            raise UsageError("catalog write needs a path")
        Path(args.path).write_text(build_catalog().to_json(), encoding="utf-8")
        return 0
    if args.format == "json":
        sys.stdout.write(cat.to_json())
    else:
        for e in cat:
            print(f"{e.name:8} [{e.presentation}]  {e.fingerprint}")
    return 0


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lenslift", description="Links in lens spaces and their lifts to S³.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["table", "json"], default="table")

    def source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("-b", "--braid", help='braid word, e.g. "t=3 1 -2"')
        g.add_argument("--diagram", help="diagram JSON file")

    p = sub.add_parser("lift", help="lift a link from L(p,q) to S³")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    source(p)
    p.add_argument("--construction", choices=["reduced", "theorem"], default="reduced")
    fmt(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("invariants", help="invariants of a closed braid or PD diagram")
    source(p)
    fmt(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("identify", help="look a link up in the catalog")
    source(p)
    fmt(p)
    p.set_defaults(func=cmd_identify)

    # -h is the target exponent here, so help is only --help
    p = sub.add_parser("solve", help="solve k*p + 2q - p = h", add_help=False)
    p.add_argument("--help", action="help")
    p.add_argument("-h", type=int, required=True)
    p.add_argument("-pmax", "--pmax", type=int, default=20)
    fmt(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("search", help="search for distinct lens links with equal lift fingerprints")
    p.add_argument("--strand-max", type=int, default=3)
    p.add_argument("--wordlen-max", type=int, default=6)
    p.add_argument("-pmax", "--pmax", type=int, default=9)
    p.add_argument("--threads", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("cable", help="the cable pair A_{i,j}, B_{i,j} in L(4,1)")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-j", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("catalog", help="list, verify or write the link catalog")
    p.add_argument("action", choices=["list", "verify", "write"], nargs="?", default="list")
    p.add_argument("path", nargs="?")
    fmt(p)
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"lenslift {args.command}: {e}", file=sys.stderr)
        return 2
    except ResourceLimitError as e:
        print(f"lenslift {args.command}: refused: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
