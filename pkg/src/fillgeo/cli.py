"""Command line front end.

Five subcommands: ``minlen`` tabulates the extremal filling-geodesic
length by genus, ``polygon`` evaluates one regular hyperbolic polygon,
``verify`` runs the numerical verification sweeps, ``gluing`` builds
and checks the canonical gluing (optionally emitting an SVG picture
or the map interchange file), and ``reduce`` runs the cutting-curve
reduction on a map file and prints the certificate.

Exit codes: 0 when every invoked check passes, 1 when a check ran and
failed (or an internal invariant broke), 2 for usage and input errors.
All numeric output is printed with repr so identical flags reproduce
identical bytes.
"""

import argparse
import json
import math
import sys

from . import isoperim, polygeom, reducer, surfmap
from .errors import DomainError, InternalInvariantError, ValidationError


VERIFY_SELECTORS = (
    "all",
    "lemma32",
    "lemma33",
    "lemma34",
    "prop35",
    "prop36",
    "thm31",
    "example312",
)


def _genus(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"genus must be an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"genus must be at least 2, got {value}")
    return value


def _genus_range(text: str) -> tuple:
    """Parse '3' or '2..5' into an inclusive tuple of genera."""
    lo, sep, hi = text.partition("..")
    try:
        first = int(lo)
        last = int(hi) if sep else first
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"genus must be an integer or a range like 2..5, got {text!r}"
        )
    if first < 2:
        raise argparse.ArgumentTypeError(f"genus must be at least 2, got {first}")
    if last < first:
        raise argparse.ArgumentTypeError(f"empty genus range {text!r}")
    return tuple(range(first, last + 1))


def _emit(text: str, out_path) -> None:
    if not text.endswith("\n"):
        text = text + "\n"
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_minlen(args) -> int:
    """One row per genus: g, side count, side, perimeter, half-perimeter."""
    rows = [polygeom.extremal_report(g) for g in args.genus]
    if args.json:
        text = json.dumps([r.as_dict() for r in rows], indent=2, sort_keys=True)
    else:
        lines = ["# genus  sides  side  perimeter  min_length"]
        for rep in rows:
            side = rep.polygon_perimeter / (8 * rep.genus - 4)
            lines.append(
                f"{rep.genus}  {8 * rep.genus - 4}  {side!r}  "
                f"{rep.polygon_perimeter!r}  {rep.min_filling_length!r}"
            )
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def cmd_polygon(args) -> int:
    if args.theta is not None:
        spec = polygeom.RegularPolygonSpec.from_angle(args.n, args.theta)
    else:
        spec = polygeom.RegularPolygonSpec.from_area(args.n, args.area)
    data = spec.as_dict()
    if args.json:
        text = json.dumps(data, indent=2, sort_keys=True)
    else:
        text = "\n".join(f"{key}={data[key]!r}" for key in
                         ("n", "theta", "area", "side", "perimeter", "circumradius"))
    _emit(text, args.out)
    return 0


def _verify_reports(which: str, args) -> list:
    grid = isoperim.GridSpec(
        a_steps=args.steps, x_steps=args.steps, samples=args.samples, seed=args.seed
    )
    reports = []

    def wanted(name):
        return which in ("all", name)

    if wanted("lemma32"):
        reports.append(isoperim.verify_lemma_3_2(grid))
    if wanted("lemma33"):
        ns = (args.n,) if args.n is not None else range(4, 21)
        for n in ns:
            reports.append(isoperim.verify_lemma_3_3(n, args.samples))
    if wanted("lemma34"):
        ns = (args.n,) if args.n is not None else range(7, 11)
        for n in ns:
            reports.append(isoperim.verify_lemma_3_4(n, args.samples))
    if wanted("prop35"):
        reports.append(isoperim.verify_prop_3_5(grid))
    if wanted("prop36"):
        reports.append(isoperim.verify_prop_3_6(grid))
    if wanted("thm31"):
        reports.append(isoperim.verify_theorem_3_1(args.count, args.seed))
    if which == "all":
        reports.append(isoperim.verify_merge_properties(args.count, args.seed))
    if wanted("example312"):
        reports.append(isoperim.verify_example_3_12())
    return reports


def cmd_verify(args) -> int:
    which = "all" if args.all else args.which
    reports = _verify_reports(which, args)
    if args.json:
        text = json.dumps(
            [r.as_dict() for r in reports], indent=2, sort_keys=True, default=repr
        )
    else:
        lines = []
        for rep in reports:
            lines.append(rep.summary())
            if rep.check_id == "example_3_12":
                lhs = rep.details["sum_plus_half"]
                rhs = rep.details["p5_of_5"]
                lines.append(f"  lhs = P_6(4.99) + P_3(0.01) + 1/2 = {lhs!r}")
                lines.append(f"  rhs = P_5(5) = {rhs!r}")
            if not rep.passed:
                for detail_line in rep.text().splitlines():
                    lines.append("  " + detail_line)
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_gluing(args) -> int:
    report = surfmap.verify_canonical(args.genus)
    word = surfmap.canonical_word(args.genus)
    lines = []
    if args.svg:
        svg = surfmap.gluing_svg(word, math.pi / 2.0)
        with open(args.svg, "w") as handle:
            handle.write(svg if svg.endswith("\n") else svg + "\n")
        lines.append(f"svg written to {args.svg}")
    if args.emit_map:
        data = surfmap.to_interchange(surfmap.build_map(word))
        with open(args.emit_map, "w") as handle:
            handle.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
        lines.append(f"map written to {args.emit_map}")
    if args.json:
        text = report.to_json()
    else:
        lines.append(report.summary())
        if not report.passed:
            for detail_line in report.text().splitlines():
                lines.append("  " + detail_line)
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if report.passed else 1


def cmd_reduce(args) -> int:
    try:
        with open(args.mapfile) as handle:
            data = json.load(handle)
    except OSError as err:
        raise DomainError(f"cannot read map file: {err}")
    except json.JSONDecodeError as err:
        raise ValidationError(f"map file is not valid JSON: {err}")
    filling = reducer.validate_input(data, args.genus)
    cert = reducer.reduce(filling)
    if args.json:
        text = cert.to_json()
    else:
        lines = list(cert.steps)
        lines.append(cert.summary())
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0 if cert.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fillgeo",
        description="Extremal filling geodesics: lengths, verification sweeps, "
        "canonical gluings and cutting-curve reduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_minlen = sub.add_parser(
        "minlen", help="tabulate the minimal filling-geodesic length by genus"
    )
    p_minlen.add_argument(
        "--genus", type=_genus_range, required=True,
        help="single genus (2) or inclusive range (2..5)",
    )
    p_minlen.add_argument("--json", action="store_true")
    p_minlen.add_argument("--out", default=None, help="write output to this file")
    p_minlen.set_defaults(func=cmd_minlen)

    p_poly = sub.add_parser(
        "polygon", help="evaluate one regular hyperbolic polygon"
    )
    p_poly.add_argument("--n", type=float, required=True, help="side count")
    given = p_poly.add_mutually_exclusive_group(required=True)
    given.add_argument("--theta", type=float, help="interior angle in radians")
    given.add_argument("--area", type=float, help="hyperbolic area")
    p_poly.add_argument("--json", action="store_true")
    p_poly.add_argument("--out", default=None)
    p_poly.set_defaults(func=cmd_polygon)

    p_verify = sub.add_parser("verify", help="run the verification sweeps")
    p_verify.add_argument(
        "which", nargs="?", default="all", choices=VERIFY_SELECTORS,
        help="which check to run (default: all)",
    )
    p_verify.add_argument("--all", action="store_true", help="run every check")
    p_verify.add_argument("--n", type=int, default=None,
                          help="restrict the per-n sweeps to one side count")
    p_verify.add_argument("--samples", type=int, default=10000,
                          help="sample count for the 1d sweeps")
    p_verify.add_argument("--steps", type=int, default=40,
                          help="grid steps per axis for the 2d sweeps")
    p_verify.add_argument("--count", type=int, default=10000,
                          help="random instance count")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="random seed for the instance suite")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_glue = sub.add_parser(
        "gluing", help="build and verify the canonical genus-g gluing"
    )
    p_glue.add_argument("--genus", type=_genus, required=True)
    p_glue.add_argument("--svg", default=None, help="write an SVG picture here")
    p_glue.add_argument("--emit-map", default=None,
                        help="write the map interchange file here")
    p_glue.add_argument("--json", action="store_true")
    p_glue.add_argument("--out", default=None)
    p_glue.set_defaults(func=cmd_gluing)

    p_reduce = sub.add_parser(
        "reduce", help="reduce a filling multi-curve map, print the certificate"
    )
    p_reduce.add_argument("mapfile", help="map interchange JSON file")
    p_reduce.add_argument("--genus", type=_genus, required=True)
    p_reduce.add_argument("--json", action="store_true")
    p_reduce.add_argument("--out", default=None)
    p_reduce.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValidationError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except InternalInvariantError as err:
        print(f"invariant failure: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
