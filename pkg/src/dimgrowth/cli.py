"""dimgrowth command line.

Exit codes: 0 pass, 1 counterexample found, 2 input error, 3 resource cap hit.
Every JSON report carries ``"schema": "dimgrowth/1"``.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
import time

from dimgrowth import __version__
from dimgrowth.poly import BiHomPoly, PolyParseError, load_poly, load_poly_list

SCHEMA = "dimgrowth/1"
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

# resource caps; flags override
DEFAULT_MAX_B = 10 ** 6
DEFAULT_MAX_BIDEGREE = 8

log = logging.getLogger("dimgrowth")


class InputError(Exception):
    pass


class CapHit(Exception):
    pass


def _ints(text, what):
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise InputError(f"{what}: empty list")
    return vals


def _read(path):
    if path is None:
        raise InputError("--input is required")
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    return load_poly(_read(args.input))


def _load_bihom(args):
    f = _load(args)
    if f.nvars != 4:
        raise InputError("expected a bihomogeneous polynomial in 4 variables (vars: X,Y,U,V)")
    f = BiHomPoly.from_poly(f)
    if max(f.bidegree) > args.max_bidegree:
        raise CapHit(f"bidegree {f.bidegree} exceeds --max-bidegree {args.max_bidegree}")
    return f


def _box(args):
    """(B1, B2) from --B1/--B2 or --B."""
    B1 = args.B1 if args.B1 is not None else args.B
    B2 = args.B2 if args.B2 is not None else args.B
    if B1 is None or B2 is None:
        raise InputError("give --B or both --B1 and --B2")
    for B in (B1, B2):
        _check_B(args, B)
    return B1, B2


def _check_B(args, B):
    if B < 1:
        raise InputError("heights must be positive")
    if B > args.max_B:
        raise CapHit(f"B = {B} exceeds --max-B {args.max_B}")


def _ladder(args):
    if args.ladder:
        lad = _ints(args.ladder, "--ladder")
    elif args.B is not None:
        lad = [args.B]
    else:
        raise InputError("give --B or --ladder")
    for B in lad:
        _check_B(args, B)
    return lad


def _seed(args):
    return 0 if args.seed is None else args.seed


def _emit(args, obj):
    obj = dict(obj)
    obj.setdefault("schema", SCHEMA)
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


# ---------------------------------------------------------------------------
# commands


def _count_series(args, f, kind, ladder):
    """Exact counts (and points of the last ladder value when --csv is set)."""
    from dimgrowth.points import count_A1P1_brute, count_affine_brute, count_P1P1_brute

    counts, timing, pts = [], [], None
    for k, B in enumerate(ladder):
        keep = bool(args.csv) and k == len(ladder) - 1
        t = time.perf_counter()
        if kind == "p1p1":
            n, pts_B = count_P1P1_brute(f, B, B, retain=keep)
        elif kind == "a1p1":
            n, pts_B = count_A1P1_brute(f, B, B, retain=keep)
        else:
            n, pts_B = count_affine_brute(f, B, retain_points=keep)
        timing.append({"B": B, "seconds": round(time.perf_counter() - t, 6)})
        counts.append(n)
        if keep:
            pts = pts_B
    return counts, timing, pts


def cmd_count(args):
    from dimgrowth.pipeline import CountReport, fit_exponent
    from dimgrowth.points import count_A1P1_brute, count_P1P1_brute, schwartz_zippel_bound

    kind = args.kind
    meta = {"seed": _seed(args), "version": __version__}
    bounds = []
    if kind == "p1p1":
        f = _load_bihom(args)
        poly = f.base
        if args.ladder:
            ladder = _ladder(args)
            pairs = [(B, B) for B in ladder]
        else:
            pairs = [_box(args)]
            ladder = [list(p) for p in pairs]
        counts, timing, pts = [], [], None
        for B1, B2 in pairs:
            t = time.perf_counter()
            n, pts = count_P1P1_brute(f, B1, B2, retain=bool(args.csv))
            timing.append({"B": [B1, B2], "seconds": round(time.perf_counter() - t, 6)})
            counts.append(n)
            if args.bounds:
                bounds.append(_p1p1_bounds(args, f, B1, B2))
        dim, deg = 1, f.absdeg
        if args.csv:
            _write_csv(args.csv, ["x", "y", "u", "v"], [P.coords() for P in pts])
    elif kind == "a1p1":
        from dimgrowth.detmethod import count_A1P1

        poly = _load(args)
        if poly.nvars != 2:
            raise InputError("a1p1 expects f(x, t) in two variables")
        bideg = tuple(_ints(args.bidegree, "--bidegree")) if args.bidegree else None
        if args.ladder:
            pairs = [(B, B) for B in _ladder(args)]
            ladder = [B for B, _ in pairs]
        else:
            pairs = [_box(args)]
            ladder = [list(p) for p in pairs]
        counts, timing = [], []
        branches = []
        for B1, B2 in pairs:
            t = time.perf_counter()
            if args.bounds:
                r = count_A1P1(poly, B1, B2, bidegree=bideg)
                n = r.count
                bounds.append({"affine_curve": r.bound, "ok": r.ok})
                branches.append({"branch": r.branch, "prime": r.prime, "H": r.H, "FH_height": r.FH_height})
            else:
                n, _ = count_A1P1_brute(poly, B1, B2, retain=False)
            timing.append({"B": [B1, B2], "seconds": round(time.perf_counter() - t, 6)})
            counts.append(n)
        if branches:
            meta["branches"] = branches
        dim, deg = 1, poly.total_degree()
        if args.csv:
            _, pts = count_A1P1_brute(poly, pairs[-1][0], pairs[-1][1], retain=True)
            _write_csv(args.csv, ["x", "t"], [(x, str(t)) for x, t in pts])
    else:
        poly = _load(args)
        ladder = _ladder(args)
        dim, deg = poly.nvars - 1, poly.total_degree()
        counts, timing, pts = _count_series(args, poly, "affine", ladder)
        if args.bounds:
            for B in ladder:
                bounds.append({"schwartz_zippel": schwartz_zippel_bound(deg, dim, B), "dimension_growth_exponent": _dg_exponent(dim, deg)})
        if args.csv:
            _write_csv(args.csv, [f"x{i + 1}" for i in range(poly.nvars)], pts)
    fit = None
    flat = [B if isinstance(B, int) else None for B in ladder]
    if len(counts) >= 3 and all(flat):
        fit = fit_exponent(flat, counts).to_json()
    rep = CountReport(kind, poly.to_json(), dim, deg, ladder, counts, bounds, fit, meta, timing)
    _emit(args, rep.to_json(with_timing=args.timing))
    return EXIT_OK


def _dg_exponent(dim, deg):
    """Exponent (up to epsilon) expected for integral points of bounded height."""
    if dim == 2 and deg == 3:
        return 2 / math.sqrt(3)
    if deg >= 4:
        return dim - 1
    return None


def _p1p1_bounds(args, f, B1, B2):
    from dimgrowth.calibration import constant
    from dimgrowth.density import compute_b
    from dimgrowth.detmethod import CurveBoundConstants, envelope_bound, theorem32_bound

    c = constant("curve_bound_C")
    b = compute_b(f, args.cap_prime or 10 ** 4).b
    return {
        "envelope": envelope_bound(f, B1, B2, constant("envelope_C")),
        "theorem32": theorem32_bound(f, B1, B2, CurveBoundConstants(c, c, c), b),
        "b": b,
    }


def cmd_fit(args):
    from dimgrowth.pipeline import fit_exponent

    ladder = _ints(args.ladder, "--ladder") if args.ladder else None
    if ladder is None:
        raise InputError("--ladder is required")
    if args.counts:
        counts = _ints(args.counts, "--counts")
        if len(counts) != len(ladder):
            raise InputError("--counts and --ladder differ in length")
        poly = None
    else:
        poly = _load(args)
        for B in ladder:
            _check_B(args, B)
        if args.kind == "affine":
            counts, _, _ = _count_series(args, poly, "affine", ladder)
        elif args.kind == "p1p1":
            poly = _load_bihom(args)
            counts, _, _ = _count_series(args, poly, "p1p1", ladder)
            poly = poly.base
        else:
            counts, _, _ = _count_series(args, poly, "a1p1", ladder)
    try:
        fit = fit_exponent(ladder, counts)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = {"kind": "fit", "poly": poly.to_json() if poly is not None else None}
    out.update(fit.to_json())
    _emit(args, out)
    return EXIT_OK


def cmd_aux(args):
    from dimgrowth.detmethod import AuxPolyError, aux_polynomial

    f = _load_bihom(args)
    B1, B2 = _box(args)
    try:
        res = aux_polynomial(f, B1, B2, M_max=args.cap_M)
    except AuxPolyError as exc:
        raise CapHit(str(exc)) from None
    out = {"kind": "aux", "B1": B1, "B2": B2}
    out.update(res.to_json())
    _emit(args, out)
    return EXIT_OK


def cmd_b_of_f(args):
    from dimgrowth.density import compute_b, default_b_cap

    f = _load_bihom(args)
    cap = args.cap_prime or default_b_cap(f)
    rep = compute_b(f, cap)
    out = {"kind": "b-of-f"}
    out.update(rep.to_json())
    _emit(args, out)
    return EXIT_OK


def cmd_cylinder(args):
    from dimgrowth.surfaces import cylinder_test

    f = _load(args)
    w = cylinder_test(f)
    _emit(args, {"kind": "cylinder", "poly": f.to_json(), "cylindrical": w is not None, "witness": w.to_json() if w else None})
    return EXIT_OK


def cmd_lines(args):
    from dimgrowth.surfaces import count_lines_union

    f = _load(args)
    if f.nvars != 3:
        raise InputError("lines expects a surface in 3 variables")
    if args.B is None:
        raise InputError("--B is required")
    _check_B(args, args.B)
    rep = count_lines_union(f, args.H, args.B)
    out = {"kind": "lines", "poly": f.to_json(), "B": args.B, "H": args.H}
    out.update(rep.to_json())
    _emit(args, out)
    return EXIT_OK


def cmd_slice(args):
    from dimgrowth.pipeline import choose_good_linear_form, slice_hyperplane

    f = _load(args)
    if args.form:
        ell = _ints(args.form, "--form")
        if args.b is None:
            raise InputError("--b is required with --form")
        from fractions import Fraction

        try:
            b = Fraction(args.b)
        except ValueError:
            raise InputError(f"--b: not a rational number: {args.b!r}") from None
        s = slice_hyperplane(f, ell, b)
        _emit(args, {"kind": "slice", "poly": f.to_json(), "form": ell, "b": str(b), "slice": s.to_json()})
        return EXIT_OK
    try:
        cert = choose_good_linear_form(f, trials=args.trials, B_b=args.B if args.B is not None else 10, seed=_seed(args))
    except RuntimeError as exc:
        raise CapHit(str(exc)) from None
    out = {"kind": "slice", "poly": f.to_json()}
    out.update(cert.to_json())
    _emit(args, out)
    return EXIT_OK


def cmd_project(args):
    from dimgrowth.pipeline import project_to_hypersurface

    polys = load_poly_list(_read(args.input))
    try:
        if args.param:
            res = project_to_hypersurface(param=polys, m=args.m, seed=_seed(args))
        else:
            res = project_to_hypersurface(gens=polys, m=args.m, seed=_seed(args))
    except RuntimeError as exc:
        raise CapHit(str(exc)) from None
    out = {"kind": "project", "input": [p.to_json() for p in polys], "param": bool(args.param), "m": args.m, "seed": _seed(args)}
    out.update(res.to_json())
    _emit(args, out)
    return EXIT_OK


def cmd_verify(args):
    from dimgrowth.verify import UnknownSuite, run_suite

    try:
        rep = run_suite(args.suite, seed=args.seed, scale=args.scale, mutant=args.mutant)
    except UnknownSuite as exc:
        raise InputError(exc.args[0]) from None
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(rep.dumps())
    else:
        sys.stdout.write(rep.dumps())
    return EXIT_OK if rep.passed else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="dimgrowth", description="Counting rational and integral points of bounded height.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="polynomial file (text or JSON)")
    common.add_argument("--B", type=int, help="height bound")
    common.add_argument("--B1", type=int)
    common.add_argument("--B2", type=int)
    common.add_argument("--ladder", help="comma-separated height bounds")
    common.add_argument("--seed", type=int, help="random seed (default 0; verify: the suite's corpus seed)")
    common.add_argument("--json", help="write the JSON report here instead of stdout")
    common.add_argument("--csv", help="write points here (count)")
    common.add_argument("--cap-M", type=int, dest="cap_M", help="largest auxiliary degree multiplier M")
    common.add_argument("--cap-prime", type=int, dest="cap_prime", help="largest prime for b(f)")
    common.add_argument("--max-B", type=int, dest="max_B", default=DEFAULT_MAX_B, help=f"largest allowed height (default {DEFAULT_MAX_B})")
    common.add_argument("--max-bidegree", type=int, dest="max_bidegree", default=DEFAULT_MAX_BIDEGREE, help=f"largest allowed d1, d2 (default {DEFAULT_MAX_BIDEGREE})")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("count", parents=[common], help="exact point counts")
    c.add_argument("--kind", choices=["p1p1", "a1p1", "affine"], default="affine")
    c.add_argument("--bounds", action="store_true", help="add bound columns")
    c.add_argument("--bidegree", help="declared bidegree d1,d2 of an a1p1 input")
    c.add_argument("--timing", action="store_true", help="include wall times (breaks byte-identical reruns)")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("fit", parents=[common], help="least-squares exponent of log N against log B")
    c.add_argument("--kind", choices=["p1p1", "a1p1", "affine"], default="affine")
    c.add_argument("--counts", help="fit these counts instead of counting")
    c.set_defaults(func=cmd_fit)

    c = sub.add_parser("aux", parents=[common], help="auxiliary polynomial through all points of bounded height")
    c.set_defaults(func=cmd_aux)

    c = sub.add_parser("b-of-f", parents=[common], help="bad-prime product b(f)")
    c.set_defaults(func=cmd_b_of_f)

    c = sub.add_parser("cylinder", parents=[common], help="test f = g(l1, l2)")
    c.set_defaults(func=cmd_cylinder)

    c = sub.add_parser("lines", parents=[common], help="integral points on lines of a surface")
    c.add_argument("--H", type=int, default=1, help="height of directions at infinity")
    c.set_defaults(func=cmd_lines)

    c = sub.add_parser("slice", parents=[common], help="hyperplane slice, or search for a good slicing form")
    c.add_argument("--form", help="linear form coefficients a1,...,an")
    c.add_argument("--b", help="slice value (rational)")
    c.add_argument("--trials", type=int, default=10)
    c.set_defaults(func=cmd_slice)

    c = sub.add_parser("project", parents=[common], help="random linear projection to a hypersurface")
    c.add_argument("--m", type=int, default=1, help="dimension of the variety")
    c.add_argument("--param", action="store_true", help="input lines are the coordinates of a parametrization")
    c.set_defaults(func=cmd_project)

    c = sub.add_parser("verify", parents=[common], help="run a property suite")
    c.add_argument("suite")
    c.add_argument("--scale", choices=["small", "full"], default="small")
    c.add_argument("--mutant", action="store_true", help="inject a known bug; the suite must fail")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except PolyParseError as exc:
        print(f"dimgrowth: parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, ValueError) as exc:
        print(f"dimgrowth: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapHit as exc:
        print(f"dimgrowth: resource cap hit: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
