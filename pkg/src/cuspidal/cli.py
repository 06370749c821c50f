"""Command-line front end with reproducible seeds and JSON reports.

Subcommands: construct, project-check, census, hyperelliptic, formulas.
Reports are deterministic for fixed (arguments, seed): keys are sorted
and wall-clock timing is only included on request.  Exit codes: 0 ok
(possibly with warnings), 2 parse error, 3 construction failure,
4 geometry precondition, 5 field precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .binform import P1Point
from .counting import count_points_quadric, count_points_cone, genus_window_check
from .errors import (FieldError, GeometryError, ParseError, RetriesExhausted,
                     WorkbenchError)
from .fields import parse_field_spec
from .formulas import FORMULAS
from .grammar import parse_polynomial
from .hyperell import (HDivisor, HyperellipticCurve, base_locus,
                       classify_series, h0_effective, h1_effective,
                       injective_series_pipeline, point_search, rr_space,
                       weierstrass_points)
from .linsys import (construct_cone_curve, construct_cuspidal_curve,
                     construct_smooth_tangent_curve, smoothness_certificate)
from .projection import (census_inner_sets, inner_membership_cone,
                         inner_membership_quadric, outer_injectivity_cone,
                         outer_injectivity_quadric)
from .surfaces import BiForm, ConeForm, SurfacePoint, parse_surface_point
from .unipoly import Poly

SCHEMA_VERSION = "1"


def _report(command, field_spec, seed, inputs, result, warnings=(),
            timing=None):
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "field": field_spec,
        "seed": seed,
        "inputs": inputs,
        "result": result,
        "warnings": list(warnings),
    }
    if timing is not None:
        rep["timing_seconds"] = timing
    return rep


def _emit(args, rep) -> None:
    print(json.dumps(rep, sort_keys=True, indent=None, default=str))


def _parse_unipoly(text, field):
    cm = parse_polynomial(text, ("x",))
    coeffs = {}
    for (e,), c in cm.items():
        coeffs[e] = field.element(c)
    n = max(coeffs) if coeffs else 0
    return Poly(field, [coeffs.get(i, field.zero()) for i in range(n + 1)])


def _parse_hdivisor(X, text):
    """Divisor grammar: ``2*(0,0) + 3*(7,y+)``; y+/y- select the branch
    with the smaller/larger canonical square root."""
    parts = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    from fractions import Fraction
    import re
    pairs = []
    for part in parts:
        part = part.strip()
        if not part:
            raise ParseError("empty divisor term")
        m = re.fullmatch(r"(?:(\d+)\s*\*\s*)?\(\s*(-?\d+(?:/\d+)?)\s*,\s*"
                         r"(y\+|y-|-?\d+(?:/\d+)?)\s*\)", part)
        if not m:
            raise ParseError("bad divisor term %r" % part)
        mult = int(m.group(1) or 1)
        xval = X.field.element(Fraction(m.group(2)))
        ysel = m.group(3)
        if ysel in ("y+", "y-"):
            pt = X.branch_point(xval, "+" if ysel == "y+" else "-")
        else:
            pt = X.point(xval, X.field.element(Fraction(ysel)))
        pairs.append((pt, mult))
    return HDivisor.of(*pairs)


def _cmd_construct(args) -> dict:
    field = parse_field_spec(args.field)
    warnings = []
    if args.quadric:
        d1, d2 = args.quadric
        if args.cusps:
            alpha, beta = args.cusps
            member, rep = construct_cuspidal_curve(
                d1, d2, alpha, beta, seed=args.seed, field=field,
                retries=args.retries)
            warnings.extend(rep.get("warnings", []))
        else:
            o = (parse_surface_point(args.point_o, field, "quadric")
                 if args.point_o else SurfacePoint.quadric(
                     P1Point(field, 1, 0), P1Point(field, 0, 1)))
            o2 = (parse_surface_point(args.point_o2, field, "quadric")
                  if args.point_o2 else SurfacePoint.quadric(
                      P1Point(field, 1, 1), P1Point(field, 1, 0)))
            member, rep = construct_smooth_tangent_curve(
                d1, d2, o, o2, seed=args.seed, retries=args.retries)
        if args.count_points and field.order is not None:
            n = count_points_quadric(member)
            claimed = rep.get("genus_arithmetic", rep.get("genus"))
            rep["point_count"] = genus_window_check(n, field.order, claimed)
    else:
        d = args.cone
        p = (parse_surface_point(args.cone_point, field, "cone")
             if args.cone_point else SurfacePoint.cone(field, [1, 1, 1, 1]))
        member, rep = construct_cone_curve(d, p, seed=args.seed,
                                           retries=args.retries)
        if args.count_points and field.order is not None:
            n = count_points_cone(member)
            rep["point_count"] = {"count": n, "field_order": field.order}
    return _report("construct", args.field, args.seed,
                   {"quadric": args.quadric, "cone": args.cone,
                    "cusps": args.cusps}, rep, warnings)


def _cmd_project_check(args) -> dict:
    field = parse_field_spec(args.field)
    if args.ambient == "quadric":
        curve = BiForm.from_string(args.curve, field)
        center = parse_surface_point(args.center, field, "quadric")
        if args.inner:
            in_a, in_b, rep = inner_membership_quadric(curve, center)
            result = rep
        else:
            result = outer_injectivity_quadric(curve, center).describe()
    else:
        curve = ConeForm.from_string(args.curve, field)
        center = parse_surface_point(args.center, field, "cone")
        if args.inner:
            in_a, in_b, rep = inner_membership_cone(curve, center)
            result = rep
        else:
            result = outer_injectivity_cone(curve, center).describe()
    return _report("project-check", args.field, None,
                   {"curve": args.curve, "center": args.center,
                    "ambient": args.ambient,
                    "mode": "inner" if args.inner else "outer"}, result)


def _cmd_census(args):
    field = parse_field_spec(args.field)
    if args.ambient == "quadric":
        curve = BiForm.from_string(args.curve, field)
    else:
        curve = ConeForm.from_string(args.curve, field)
    sets = census_inner_sets(curve, extension_cap=args.cap, seed=args.seed)
    if args.csv:
        lines = ["level,point,set"]
        for j, data in sets.levels.items():
            for p in data["A"]:
                lines.append("%d,%s,A" % (j, repr(p).replace(",", ";")))
            for p in data["B"]:
                lines.append("%d,%s,B" % (j, repr(p).replace(",", ";")))
            for p in data["full_tangency"]:
                lines.append("%d,%s,full_tangency"
                             % (j, repr(p).replace(",", ";")))
        return "\n".join(lines)
    return _report("census", args.field, args.seed,
                   {"curve": args.curve, "cap": args.cap,
                    "ambient": args.ambient},
                   sets.describe())


def _cmd_hyperelliptic(args) -> dict:
    field = parse_field_spec(args.field)
    f = _parse_unipoly(args.f, field)
    X = HyperellipticCurve(f)
    inputs = {"f": args.f, "divisor": args.divisor, "pipeline": args.pipeline}
    if args.pipeline:
        wpts, census = weierstrass_points(X)
        if not wpts:
            raise GeometryError("no rational ramification point on this model")
        o = wpts[0] if args.o is None else X.point(
            field.element(int(args.o)), field.zero())
        p = (point_search(X, seed=args.seed) if args.p is None
             else _parse_hdivisor(X, "(%s)" % args.p).support()[0])
        result = injective_series_pipeline(X, o, p, seed=args.seed)
        result["ramification_census"] = census
        return _report("hyperelliptic", args.field, args.seed, inputs, result)
    if not args.divisor:
        raise ParseError("need --divisor or --pipeline")
    D = _parse_hdivisor(X, args.divisor)
    space = rr_space(X, D)
    result = {
        "genus": X.genus,
        "h0": h0_effective(X, D),
        "h1": h1_effective(X, D),
        "riemann_roch_space": space.describe(),
        "base_locus": repr(base_locus(space)) if space.dimension else "0",
        "classification": classify_series(X, D),
    }
    return _report("hyperelliptic", args.field, args.seed, inputs, result)


def _cmd_formulas(args) -> dict:
    name = args.name
    if name not in FORMULAS:
        raise ParseError("unknown formula %r (have: %s)"
                         % (name, ", ".join(sorted(FORMULAS))))
    fn, arity = FORMULAS[name]
    if len(args.args) != arity:
        raise ParseError("%s takes %d arguments" % (name, arity))
    res = fn(*[int(a) for a in args.args])
    return _report("formulas", None, None,
                   {"name": name, "args": [int(a) for a in args.args]},
                   res.describe())


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cuspidal",
        description="Exact-arithmetic workbench for curves on quadrics "
                    "and cuspidal projections")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="curve constructions with certificates")
    grp = c.add_mutually_exclusive_group(required=True)
    grp.add_argument("--quadric", nargs=2, type=int, metavar=("D1", "D2"))
    grp.add_argument("--cone", type=int, metavar="D")
    c.add_argument("--cusps", nargs=2, type=int, metavar=("ALPHA", "BETA"))
    c.add_argument("--field", default="p:101")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--retries", type=int, default=32)
    c.add_argument("--point-o", default=None)
    c.add_argument("--point-o2", default=None)
    c.add_argument("--cone-point", default=None)
    c.add_argument("--count-points", action="store_true")
    c.add_argument("--timing", action="store_true")

    p = sub.add_parser("project-check", help="projection injectivity verdicts")
    p.add_argument("--ambient", choices=("quadric", "cone"), default="quadric")
    p.add_argument("--curve", required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--field", default="p:101")
    p.add_argument("--inner", action="store_true")

    n = sub.add_parser("census", help="inner-projection set census")
    n.add_argument("--ambient", choices=("quadric", "cone"), default="quadric")
    n.add_argument("--curve", required=True)
    n.add_argument("--field", default="p:7")
    n.add_argument("--cap", type=int, default=1)
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--csv", action="store_true")

    h = sub.add_parser("hyperelliptic", help="divisor calculus on y^2 = f(x)")
    h.add_argument("--f", required=True)
    h.add_argument("--field", default="p:101")
    h.add_argument("--divisor", default=None)
    h.add_argument("--pipeline", action="store_true")
    h.add_argument("--o", default=None, help="x-coordinate of a ramification point")
    h.add_argument("--p", default=None, help="generic point as x,y")
    h.add_argument("--seed", type=int, default=0)

    f = sub.add_parser("formulas", help="closed-form counts and bounds")
    f.add_argument("name")
    f.add_argument("args", nargs="*")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.time()
    try:
        if args.command == "construct":
            rep = _cmd_construct(args)
        elif args.command == "project-check":
            rep = _cmd_project_check(args)
        elif args.command == "census":
            rep = _cmd_census(args)
            if isinstance(rep, str):
                print(rep)
                return 0
        elif args.command == "hyperelliptic":
            rep = _cmd_hyperelliptic(args)
        else:
            rep = _cmd_formulas(args)
    except ParseError as e:
        print(json.dumps({"error": str(e), "kind": "parse"}), file=sys.stderr)
        return 2
    except RetriesExhausted as e:
        print(json.dumps({"error": str(e), "kind": "construction",
                          "draws": e.draws}, default=str), file=sys.stderr)
        return 3
    except GeometryError as e:
        print(json.dumps({"error": str(e), "kind": "geometry"}), file=sys.stderr)
        return 4
    except FieldError as e:
        print(json.dumps({"error": str(e), "kind": "field"}), file=sys.stderr)
        return 5
    except WorkbenchError as e:
        print(json.dumps({"error": str(e), "kind": "other"}), file=sys.stderr)
        return 3
    if getattr(args, "timing", False):
        rep["timing_seconds"] = round(time.time() - t0, 3)
    _emit(args, rep)
    return 0


if __name__ == "__main__":
    sys.exit(main())
