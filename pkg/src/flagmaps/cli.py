"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .census import census_csv, census_summary, stability_census
from .core import (
    HYPERMAP,
    MAP,
    FlagSystem,
    export_diagram,
    surface_invariants,
)
from .covers import orientable_double_cover, quotient_by
from .errors import FlagmapsError
from .families import (
    glide_automorphism,
    hosohedron,
    icosahedron,
    k6_projective,
    nn2_map,
    reflection_automorphism,
    semi_star,
    symmetric_map,
    torus_44,
)
from .grouplevel import family_report
from .mapjson import parse, serialize
from .operations import dual, medial, petrie
from .perms import format_cycles, identity, parse_cycles
from .symmetry import automorphism_group, stability_report, symmetry_class
from .verify import run_all


def _read_system(path: str) -> FlagSystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _write_output(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build(args: argparse.Namespace) -> int:
    family = args.family
    if family == "hosohedron":
        fs = hosohedron(args.n)
    elif family == "semistar":
        fs = semi_star(args.n)
    elif family == "torus44":
        fs = torus_44(args.lattice, args.m)
    elif family == "nn2":
        fs = nn2_map(args.m).fs
    elif family == "icosahedron":
        fs = icosahedron()
    elif family == "k6p2":
        fs = k6_projective()
    elif family == "symmap":
        fs = symmetric_map(args.n, hypermap=args.hypermap).fs
    else:  # pragma: no cover - argparse restricts choices
        raise FlagmapsError(f"unknown family {family}")
    _write_output(serialize(fs), args.out)
    return 0


def _fraction_str(x: Fraction) -> str:
    return str(int(x)) if x.denominator == 1 else str(x)


def analysis_summary(fs: FlagSystem) -> dict:
    """Invariants, symmetry class, and the stability report when defined."""
    inv = surface_invariants(fs)
    aut = automorphism_group(fs)
    sym = symmetry_class(fs, aut)
    summary = {
        "kind": fs.kind,
        "flags": fs.flags,
        "vertices": inv.vertices,
        "edges": inv.edges,
        "faces": inv.faces,
        "chi": inv.chi,
        "orientable": inv.orientable,
        "boundaryComponents": inv.boundary_components or 0,
        "genus": str(inv.genus),
        "type": list(inv.type_signature),
        "faceSizes": list(inv.face_sizes),
        "vertexDegrees": list(inv.vertex_degrees),
        "baseAut": aut.order,
        "regular": sym.regular,
        "edgeTransitive": sym.edge_transitive,
        "edgeRegular": sym.edge_regular,
    }
    if not inv.orientable_no_boundary:
        rep = stability_report(fs)
        summary.update(
            coverAut=rep.cover_aut_order,
            index=_fraction_str(rep.instability_index),
            stable=rep.stable,
        )
    else:
        summary.update(coverAut=None, index=None, stable=None)
    return summary


def _analyze(args: argparse.Namespace) -> int:
    fs = _read_system(args.file)
    summary = analysis_summary(fs)
    if args.json:
        print(json.dumps(summary, indent=2))
        return 0
    print(f"kind: {summary['kind']}   flags: {summary['flags']}")
    print(
        f"cells: V={summary['vertices']} E={summary['edges']} "
        f"F={summary['faces']}   chi={summary['chi']}"
    )
    boundary = summary["boundaryComponents"]
    print(
        f"surface: {summary['genus']}, "
        + ("orientable" if summary["orientable"] else "non-orientable")
        + (f", {boundary} boundary component(s)" if boundary else ", closed")
    )
    print(f"type: {{{summary['type'][0]},{summary['type'][1]}}}"
          if len(summary["type"]) == 2 else f"type: {tuple(summary['type'])}")
    flagsline = [
        name
        for name, on in (
            ("regular", summary["regular"]),
            ("edge-transitive", summary["edgeTransitive"]),
            ("edge-regular", summary["edgeRegular"]),
        )
        if on
    ]
    print(f"aut order: {summary['baseAut']}"
          + (f"   ({', '.join(flagsline)})" if flagsline else ""))
    if summary["stable"] is None:
        print("stability: undefined (orientable with empty boundary)")
    else:
        verdict = "stable" if summary["stable"] else "unstable"
        print(
            f"stability: {verdict}; cover aut {summary['coverAut']}, "
            f"index {summary['index']}"
        )
    return 0


def _cover(args: argparse.Namespace) -> int:
    fs = _read_system(args.file)
    dc = orientable_double_cover(fs)
    _write_output(serialize(dc.cover), args.out)
    print(f"deck: {format_cycles(dc.deck)}", file=sys.stderr if not args.out else sys.stdout)
    return 0


def _quotient(args: argparse.Namespace) -> int:
    fs = _read_system(args.file)
    if args.auto:
        aut = parse_cycles(args.auto, degree=fs.flags)
    elif args.reflection:
        aut = reflection_automorphism(fs)
    elif args.glide:
        aut = glide_automorphism(fs)
    else:
        raise FlagmapsError("supply --auto CYCLES, --reflection or --glide")
    subgroup = {identity(fs.flags)}
    frontier = [identity(fs.flags)]
    while frontier:
        nxt = []
        for h in frontier:
            prod = tuple(aut[x] for x in h)
            if prod not in subgroup:
                subgroup.add(prod)
                nxt.append(prod)
        frontier = nxt
    _write_output(serialize(quotient_by(fs, subgroup)), args.out)
    return 0


def _op(args: argparse.Namespace) -> int:
    fs = _read_system(args.file)
    result = {"dual": dual, "petrie": petrie, "medial": medial}[args.operation](fs)
    _write_output(serialize(result), args.out)
    return 0


def _census(args: argparse.Namespace) -> int:
    records = stability_census(args.max_flags, args.kind)
    _write_output(census_csv(records), args.out)
    for flags, row in sorted(census_summary(records).items()):
        print(
            f"flags={flags}: {row['classes']} classes, "
            f"{row['stable']} stable, {row['unstable']} unstable, "
            f"{row['undefined']} undefined",
            file=sys.stderr if not args.out else sys.stdout,
        )
    return 0


def _sym(args: argparse.Namespace) -> int:
    reports = family_report(args.n, hypermap=args.hypermap)
    rows = []
    for r in reports:
        rows.append({
            "a": format_cycles(r.a),
            "m": sum(length * mult for length, mult in r.a_cycle_type if length == 2),
            "autOrder": r.aut_order,
            "boundary": r.boundary,
            "orientationReversing": r.orientation_reversing,
            "stable": r.stable,
            "coverCells": list(r.cover_cells),
            "coverChi": r.cover_chi,
            "quotientChi": r.quotient_chi,
            "type": list(r.type_signature),
            "genusNote": r.genus_note,
        })
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        header = list(rows[0].keys())
        print(",".join(header))
        for row in rows:
            print(",".join(json.dumps(row[k]) if isinstance(row[k], list)
                           else str(row[k]) for k in header))
    return 0


def _export_dot(args: argparse.Namespace) -> int:
    fs = _read_system(args.file)
    _write_output(export_diagram(fs), args.out)
    return 0


def _verify(args: argparse.Namespace) -> int:
    results = run_all(quick=args.quick)
    for res in results:
        print(res.line())
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagmaps",
        description="Maps and hypermaps as flag involution systems: "
        "covers, quotients, symmetry, stability, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a named family, emit map JSON")
    p.add_argument("family", choices=[
        "hosohedron", "semistar", "torus44", "nn2", "icosahedron", "k6p2", "symmap",
    ])
    p.add_argument("-n", type=int, default=5, help="size parameter (default 5)")
    p.add_argument("-m", type=int, default=1, help="lattice/group parameter (default 1)")
    p.add_argument("--lattice", choices=["diag", "rect"], default="diag")
    p.add_argument("--hypermap", action="store_true")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_build)

    p = sub.add_parser("analyze", help="surface invariants, symmetry, stability")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_analyze)

    p = sub.add_parser("cover", help="canonical orientable double cover")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=_cover)

    p = sub.add_parser("quotient", help="quotient by an automorphism")
    p.add_argument("file")
    p.add_argument("--auto", help="automorphism in 1-based flag cycles, e.g. '(1,2)(3,4)'")
    p.add_argument("--reflection", action="store_true",
                   help="edge reflection of a hosohedron/semi-star file")
    p.add_argument("--glide", action="store_true",
                   help="glide reflection of a torus44 file")
    p.add_argument("--out")
    p.set_defaults(func=_quotient)

    p = sub.add_parser("op", help="apply a map operation")
    p.add_argument("operation", choices=["dual", "petrie", "medial"])
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=_op)

    p = sub.add_parser("census", help="enumerate classes with stability")
    p.add_argument("--max-flags", type=int, required=True)
    p.add_argument("--kind", choices=[MAP, HYPERMAP], default=MAP)
    p.add_argument("--out")
    p.set_defaults(func=_census)

    p = sub.add_parser("sym", help="symmetric-group family quotient table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hypermap", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_sym)

    p = sub.add_parser("export-dot", help="edge-labelled flag diagram (DOT)")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=_export_dot)

    p = sub.add_parser("verify-paper",
                       help="run the built-in verification suite")
    p.add_argument("--quick", action="store_true",
                   help="smaller census bounds for a fast smoke run")
    p.set_defaults(func=_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FlagmapsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
