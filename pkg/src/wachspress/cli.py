"""Command-line interface.

Subcommands: validate, gen, ideal, groebner, hilbert, betti, verify, eval,
deform, serve.  Exit codes: 0 success, 1 failed check, 2 unusable input.
Polygon files use {"vertices": [["p/q", "p/q"], ...]}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .combinatorics import (
    betti_formula,
    hilbert_polynomial_formula,
    hilbert_series_formula,
    render_betti,
)
from .coordinates import beta_matrix, deform
from .geometry import (
    Polygon,
    PolygonError,
    cone_data,
    polygon_from_json,
    polygon_to_json,
    random_convex_polygon,
    regular_polygon_approx,
)
from .ideals import build_ideal
from .polyring import ambient_ring, buchberger, initial_ideal
from .verify import VerifyOptions, verify_polygon


class InputError(Exception):
    """Unusable file, flag, or polygon input (exit code 2)."""


def _default_seed() -> int:
    raw = os.environ.get("WACHSPRESS_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wachspress",
        description="Exact Wachspress coordinate and surface-ideal toolkit.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_polygon_source(p):
        p.add_argument("--polygon", help="polygon JSON file")
        p.add_argument(
            "--regular-approx",
            type=int,
            metavar="D",
            help="use a rational approximation of the regular D-gon",
        )

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check a polygon file")
    add_polygon_source(p)
    add_format(p)

    p = sub.add_parser("gen", help="generate a random convex generic polygon")
    p.add_argument("-d", "--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--scale", type=int, default=1000)
    p.add_argument("-o", "--output", help="output file (default stdout)")

    p = sub.add_parser("ideal", help="print the surface ideal generators")
    add_polygon_source(p)
    add_format(p)

    p = sub.add_parser("groebner", help="reduced Groebner basis and initial ideal")
    add_polygon_source(p)
    add_format(p)

    p = sub.add_parser("hilbert", help="closed-form Hilbert series and polynomial")
    p.add_argument("-d", "--d", type=int, required=True)
    p.add_argument("--tmax", type=int, default=None)
    add_format(p)

    p = sub.add_parser("betti", help="closed-form betti table")
    p.add_argument("-d", "--d", type=int, required=True)
    add_format(p)

    p = sub.add_parser("verify", help="run the full certification battery")
    add_polygon_source(p)
    add_format(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--membership", choices=("auto", "on", "off"), default="auto")

    p = sub.add_parser("eval", help="evaluate barycentric coordinates at points")
    add_polygon_source(p)
    add_format(p)
    p.add_argument(
        "--point",
        action="append",
        default=[],
        metavar="X,Y",
        help="point to evaluate (repeatable)",
    )
    p.add_argument("--points", help="JSON file with a list of [x, y] pairs")

    p = sub.add_parser("deform", help="map points through a vertex deformation")
    add_polygon_source(p)
    add_format(p)
    p.add_argument("--target", required=True, help="JSON file with target vertices")
    p.add_argument("--points", required=True, help="JSON file with [x, y] pairs")

    p = sub.add_parser("serve", help="run the HTTP evaluation service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)

    return parser


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_polygon(args) -> Polygon:
    if getattr(args, "polygon", None) and getattr(args, "regular_approx", None):
        raise InputError("give either --polygon or --regular-approx, not both")
    if getattr(args, "regular_approx", None):
        d = args.regular_approx
        if d < 4:
            raise InputError("--regular-approx needs D >= 4")
        return regular_polygon_approx(d)
    if getattr(args, "polygon", None):
        data = _read_json(args.polygon)
        try:
            return polygon_from_json(data)
        except PolygonError as exc:
            raise InputError(f"{args.polygon}: {exc}") from exc
    raise InputError("a polygon is required: --polygon FILE or --regular-approx D")


def _load_points(args) -> list[tuple[float, float]]:
    points: list[tuple[float, float]] = []
    for raw in getattr(args, "point", []) or []:
        parts = raw.split(",")
        if len(parts) != 2:
            raise InputError(f"bad --point {raw!r}, expected X,Y")
        try:
            points.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise InputError(f"bad --point {raw!r}: {exc}") from exc
    if getattr(args, "points", None):
        data = _read_json(args.points)
        if not isinstance(data, list):
            raise InputError(f"{args.points} must contain a JSON list of pairs")
        for entry in data:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise InputError(f"bad point entry {entry!r}")
            points.append((float(entry[0]), float(entry[1])))
    if not points:
        raise InputError("no points given: use --point X,Y or --points FILE")
    return points


def _load_target(path: str) -> list[tuple[float, float]]:
    data = _read_json(path)
    if isinstance(data, dict) and "vertices" in data:
        data = data["vertices"]
    if not isinstance(data, list):
        raise InputError(f"{path} must contain a vertex list")
    from fractions import Fraction

    out = []
    for entry in data:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise InputError(f"bad vertex entry {entry!r}")
        try:
            out.append((float(Fraction(str(entry[0]))), float(Fraction(str(entry[1])))))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad vertex entry {entry!r}: {exc}") from exc
    return out


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_validate(args) -> int:
    try:
        polygon = _load_polygon(args)
    except InputError as exc:
        cause = exc.__cause__
        if isinstance(cause, PolygonError):
            _emit(
                args,
                {"valid": False, "error": str(cause)},
                f"invalid polygon: {cause}",
            )
            return 1
        raise
    shape = "convex" if polygon.convex else "non-convex"
    _emit(
        args,
        {"valid": True, "d": polygon.d, "convex": polygon.convex},
        f"valid generic {shape} polygon with {polygon.d} vertices",
    )
    return 0


def cmd_gen(args) -> int:
    if args.d < 4:
        raise InputError("need -d >= 4")
    seed = args.seed if args.seed is not None else _default_seed()
    polygon = random_convex_polygon(args.d, seed, args.scale)
    payload = polygon_to_json(polygon)
    text = json.dumps(payload, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_ideal(args) -> int:
    polygon = _load_polygon(args)
    ideal = build_ideal(cone_data(polygon))
    quad = [str(q) for q in ideal.quadric_basis]
    cubs = [str(w) for _, w in ideal.essential_cubics]
    payload = {
        "d": ideal.d,
        "quadrics": quad,
        "cubics": cubs,
        "redundant_cubic_triples": [list(t) for t in ideal.redundant_triples],
    }
    lines = [f"quadrics ({len(quad)}):"] + quad
    lines += [f"essential cubics ({len(cubs)}):"] + (cubs or ["(none)"])
    lines.append(f"redundant cubics: {len(ideal.redundant_triples)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_groebner(args) -> int:
    polygon = _load_polygon(args)
    ideal = build_ideal(cone_data(polygon))
    gb = buchberger(ideal.generators)
    init = initial_ideal(gb)
    basis = [str(g) for g in gb]
    leads = init.monomial_strings(ambient_ring(polygon.d))
    payload = {"basis": basis, "initial_ideal": leads}
    lines = [f"reduced Groebner basis ({len(basis)}):"] + basis
    lines += [f"initial ideal ({len(leads)}):"] + leads
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_hilbert(args) -> int:
    if args.d < 4:
        raise InputError("need -d >= 4")
    series = hilbert_series_formula(args.d)
    hp = hilbert_polynomial_formula(args.d)
    tmax = args.tmax if args.tmax is not None else args.d + 2
    values = {str(t): series.coefficient(t) for t in range(tmax + 1)}
    payload = {
        "d": args.d,
        "series_numerator": list(series.numerator),
        "series": str(series),
        "polynomial": str(hp),
        "values": values,
    }
    lines = [f"series:     {series}", f"polynomial: {hp}"]
    lines.append("t:  " + " ".join(str(t) for t in range(tmax + 1)))
    lines.append("HF: " + " ".join(str(values[str(t)]) for t in range(tmax + 1)))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_betti(args) -> int:
    if args.d < 4:
        raise InputError("need -d >= 4")
    table = betti_formula(args.d)
    _emit(args, table.to_json(), render_betti(table))
    return 0


def cmd_verify(args) -> int:
    polygon_file = getattr(args, "polygon", None)
    if polygon_file:
        data = _read_json(polygon_file)
        if not isinstance(data, dict) or "vertices" not in data:
            raise InputError(f"{polygon_file}: missing vertices")
        try:
            from fractions import Fraction

            vertices = [
                (Fraction(str(v[0])), Fraction(str(v[1]))) for v in data["vertices"]
            ]
        except (ValueError, ZeroDivisionError, IndexError, TypeError) as exc:
            raise InputError(f"{polygon_file}: {exc}") from exc
        target = vertices
    else:
        target = _load_polygon(args)
    seed = args.seed if args.seed is not None else _default_seed()
    options = VerifyOptions(seed=seed, samples=args.samples, membership=args.membership)
    report = verify_polygon(target, options)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        for check in report.checks:
            print(f"[{check.status}] {check.id} ({check.ms:.0f} ms)")
            if check.status == "fail":
                print(f"       {check.witness.get('error', check.witness)}")
        print(f"verdict: {report.verdict}")
    return 0 if report.verdict == "pass" else 1


def cmd_eval(args) -> int:
    polygon = _load_polygon(args)
    points = _load_points(args)
    vertices = [(float(x), float(y)) for x, y in polygon.vertices]
    rows, warnings = beta_matrix(vertices, points)
    payload = {"coords": rows, "warnings": warnings}
    lines = []
    for p, row, warn in zip(points, rows, warnings):
        tag = f"  [{warn}]" if warn else ""
        lines.append(
            f"({p[0]}, {p[1]}): " + " ".join(f"{v:.12g}" for v in row) + tag
        )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_deform(args) -> int:
    polygon = _load_polygon(args)
    target = _load_target(args.target)
    if len(target) != polygon.d:
        raise InputError(
            f"target has {len(target)} vertices, polygon has {polygon.d}"
        )
    points = _load_points(args)
    out, warnings = deform(polygon, target, points)
    payload = {"points": [list(p) for p in out], "warnings": warnings}
    lines = []
    for p, q, warn in zip(points, out, warnings):
        tag = f"  [{warn}]" if warn else ""
        lines.append(f"({p[0]}, {p[1]}) -> ({q[0]:.12g}, {q[1]:.12g}){tag}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    serve(args.host, args.port)
    return 0


_COMMANDS = {
    "validate": cmd_validate,
    "gen": cmd_gen,
    "ideal": cmd_ideal,
    "groebner": cmd_groebner,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "verify": cmd_verify,
    "eval": cmd_eval,
    "deform": cmd_deform,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolygonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
