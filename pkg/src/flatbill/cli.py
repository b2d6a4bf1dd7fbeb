"""Command-line front end.  Data goes to stdout or --out; progress and errors go to stderr."""
from __future__ import annotations

import argparse
import io
import json
import logging
import math
import os
import sys
import time

from . import asymptotics, builders, census, surface, veech
from .geom import Vec2

log = logging.getLogger("flatbill")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _pair(text: str) -> Vec2:
    try:
        x, y = (float(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected 'x,y', got {text!r}") from None
    return Vec2(x, y)


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load(path: str) -> surface.TranslationSurface:
    return surface.load(path)


# -- subcommands -------------------------------------------------------------------

def cmd_build(args) -> int:
    fam = args.family
    if fam == "unfold":
        if not args.polygon:
            raise UsageError("--family unfold needs --polygon FILE")
        s = builders.unfold(builders.load_polygon(args.polygon))
    elif fam == "square":
        s = builders.square_torus()
    else:
        if args.n is None:
            raise UsageError(f"--family {fam} needs --n")
        if fam in ("pn", "qn"):
            table = builders.build(fam, args.n)
            if args.table:
                _emit(args, _json(table.to_dict()))
                return EXIT_OK
            s = builders.unfold(table, name=f"unfold({table.name})")
        else:
            s = builders.build(fam, args.n)
    _emit(args, surface.dumps(s) + "\n")
    return EXIT_OK


def cmd_validate(args) -> int:
    s = surface.from_dict(json.load(open(args.file)), check=False)
    rep = surface.validate(s)
    out = {"ok": rep.ok, "violations": [{"kind": v.kind, "detail": v.detail} for v in rep.violations]}
    if rep.ok:
        out.update(genus=s.genus(), area=surface.area(s), stratum=list(surface.stratum(s)),
                   cone_angles=[c.angle_multiple for c in surface.cone_points(s)])
    _emit(args, _json(out))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_saddles(args) -> int:
    s = _load(args.file)
    conns = census.saddle_connections(s, args.length)
    log.info("%d saddle connections of length <= %g", len(conns), args.length)
    buf = io.StringIO()
    census.write_saddles_csv(conns, buf)
    _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_cylinders(args) -> int:
    s = _load(args.file)
    cyls = census.cylinders_up_to(s, args.length, signed=not args.unsigned, jobs=args.jobs)
    log.info("%d cylinders of circumference <= %g", len(cyls), args.length)
    buf = io.StringIO()
    census.write_cylinders_csv(cyls, buf)
    _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_count(args) -> int:
    s = _load(args.file)
    kind = {"cyl": "cylinders", "sc": "saddle_connections"}[args.what]
    predicted = None
    if args.predict:
        fam, _, n = args.predict.partition(":")
        predicted = asymptotics.predicted_constant(fam, int(n) if n else None,
                                                   surface_area=surface.area(s))
    series = asymptotics.count_series(s, kind, _floats(args.lengths), signed=not args.unsigned,
                                      predicted=predicted, jobs=args.jobs)
    buf = io.StringIO()
    series.write_csv(buf)
    _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_decompose(args) -> int:
    direction = _pair(args.dir)
    s = _load(args.file)
    d = census.decompose(s, direction, args.budget)
    out = {"direction": [d.direction.x, d.direction.y], "total_area": d.total_area(),
           "cylinders": [{"circumference": c.circumference, "width": c.width, "area": c.area,
                          "modulus": c.modulus} for c in d.cylinders]}
    _emit(args, _json(out))
    return EXIT_OK


def _check_veech(n):
    X = builders.double_ngon(n)
    grp = veech.gamma_n(n)
    res = {"generators": [veech.stabilizes(g, X) for g in grp.generators]}
    return res, all(res["generators"])


def _check_identity(n):
    lhs, rhs = asymptotics.sum_identity_check(n)
    return {"lhs": lhs, "rhs": rhs}, abs(lhs - rhs) <= 1e-9


def _check_trapezoid(n):
    t = 2.0
    v = Vec2(1.0, 0.3).unit()
    small = asymptotics.trapezoid_ellipse_integral(v * (math.exp(-t) / 4), t)
    big = asymptotics.trapezoid_ellipse_integral(v * (2 * math.sqrt(2) * math.exp(t) * 1.01), t)
    mid = asymptotics.trapezoid_ellipse_integral(v * (0.75 * math.exp(t)), t)
    res = {"t": t, "below_support": small, "above_support": big, "in_range": mid,
           "in_range_times_e2t": mid * math.exp(2 * t)}
    return res, small == 0 and big == 0 and mid > 0


def _check_decomp(n):
    X = builders.double_ngon(n)
    d = census.decompose(X, Vec2(0.0, 1.0), 10 * X.scale * n)
    got = sorted((c.circumference, c.width) for c in d.cylinders)
    want = sorted((4 * math.sin(math.pi * (2 * j - 1) / n) * math.cos(math.pi / n),
                   2 * math.sin(math.pi * (2 * j - 1) / n) * math.sin(math.pi / n))
                  for j in range(1, (n - 1) // 2 + 1))
    ok = len(got) == len(want) and all(
        abs(a - b) <= 1e-6 * b and abs(c - e) <= 1e-6 * e for (a, c), (b, e) in zip(got, want))
    return {"cylinders": got, "expected": want}, ok


def _check_circle(n, T=12.0, grid=2880):
    r = asymptotics.circle_average_check(builders.double_ngon(n), T, grid)
    ok = r.ratio is not None and 0.6 <= r.ratio <= 1.6
    return r.to_dict(), ok


CHECKS = {"veech": _check_veech, "identity": _check_identity, "trapezoid": _check_trapezoid,
          "decomp": _check_decomp, "circle": _check_circle}


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else 5
    res, ok = CHECKS[args.check](n)
    res.update(check=args.check, n=n, ok=ok)
    _emit(args, _json(res))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_orbit_count(args) -> int:
    grp = veech.sl2z() if args.group == "sl2z" else veech.gamma_n(args.n)
    cal = veech.gj_calibration()
    oc = veech.orbit_count(grp, _pair(args.vector), args.radius, args.prune, calibration=cal)
    _emit(args, _json(oc.to_dict()))
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    p = _Parser(prog="flatbill", description="Translation surfaces, saddle connections and cylinder counts.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="build a named surface")
    b.add_argument("--family", required=True, choices=["pn", "qn", "xn", "sn", "square", "unfold"])
    b.add_argument("--n", type=int)
    b.add_argument("--polygon", help="polygon JSON for --family unfold")
    b.add_argument("--table", action="store_true", help="for pn/qn write the triangle instead of its unfolding")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("validate", parents=[common], help="check a surface file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    for name, func, what in (("saddles", cmd_saddles, "saddle connections"),
                             ("cylinders", cmd_cylinders, "cylinders")):
        q = sub.add_parser(name, parents=[common], help=f"list {what} as CSV")
        q.add_argument("file")
        q.add_argument("--length", type=float, required=True)
        if name == "cylinders":
            q.add_argument("--unsigned", action="store_true", help="one row per cylinder, not per orientation")
        q.set_defaults(func=func)

    c = sub.add_parser("count", parents=[common], help="counting function N(S, T)")
    c.add_argument("file")
    c.add_argument("--lengths", required=True)
    c.add_argument("--what", choices=["cyl", "sc"], default="cyl")
    c.add_argument("--predict", help="family:n, e.g. xn:5 or torus")
    c.add_argument("--unsigned", action="store_true")
    c.set_defaults(func=cmd_count)

    d = sub.add_parser("decompose", parents=[common], help="cylinder decomposition in one direction")
    d.add_argument("file")
    d.add_argument("--dir", required=True)
    d.add_argument("--budget", type=float, required=True)
    d.set_defaults(func=cmd_decompose)

    w = sub.add_parser("verify", parents=[common], help="built-in checks")
    w.add_argument("--check", required=True, choices=sorted(CHECKS))
    w.add_argument("--n", type=int)
    w.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbit-count", parents=[common], help="lattice orbit count against the asymptotic formula")
    o.add_argument("--n", type=int, default=5)
    o.add_argument("--group", choices=["gamma", "sl2z"], default="gamma")
    o.add_argument("--vector", required=True)
    o.add_argument("--radius", type=float, required=True)
    o.add_argument("--prune", type=float, default=veech.DEFAULT_PRUNE)
    o.set_defaults(func=cmd_orbit_count)
    return p


def run(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(_json({"error": "usage", "message": str(exc)}))
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(message)s")
    start = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as exc:
        sys.stderr.write(_json({"error": "usage", "message": str(exc)}))
        return EXIT_USAGE
    except (surface.InvalidSurfaceError, census.CensusError, veech.OrbitError, ValueError,
            OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(_json({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_FAIL
    log.info("done in %.2fs", time.perf_counter() - start)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
