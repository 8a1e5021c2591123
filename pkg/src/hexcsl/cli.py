"""Command-line interface: ``hexcsl <subcommand> ...``.

Every subcommand prints deterministic output; JSON is emitted with sorted
keys.  Units are given as an integer k standing for (-xi^2)^k.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .coincidence import (
    CoincidenceIsometry,
    count_csls,
    count_rotations,
    enumerate_csls,
    exponents_of,
    misorientation_angle,
)
from .eisenstein import UNITS, EisensteinInt, Unit, factor
from .multilattice import (
    csml,
    honeycomb,
    honeycomb_index,
    shifted_csml,
    shifted_honeycomb,
)
from .oracle import SuiteConfig, run_suite
from .render import SCENES, RenderSpec, render_svg
from .shifted import (
    AffinelyRelated,
    BothIndependent,
    IrrationalA,
    IrrationalB,
    as_point,
    is_member,
    oc_description,
    parse_shift,
    reduce_to_fundamental_domain,
    shifted_csl,
)

UNIT_LEGEND = "units: k -> (-xi^2)^k, " + ", ".join(f"{u.k}={u}" for u in UNITS)

CSV_COLUMNS = ("row", "index", "z_m", "z_n", "angle_deg", "f", "rotations")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def _pair(text: str) -> EisensteinInt:
    try:
        m, n = (int(t) for t in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'm,n' integers, got {text!r}") from exc
    return EisensteinInt(m, n)


def _shift(text: str):
    try:
        return parse_shift(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _isometry(args) -> CoincidenceIsometry:
    return CoincidenceIsometry.from_numerator(args.z, Unit(args.eps), reflect=args.reflect)


def _add_isometry_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--z", type=_pair, required=required, default=EisensteinInt(1), help="numerator m,n for z = m + n*xi")
    p.add_argument("--eps", type=int, default=0, help="unit k (see legend)")
    p.add_argument("--reflect", action="store_true", help="use T_{z,eps} instead of R_{z,eps}")


# --------------------------------------------------------------------------
# subcommands


def cmd_factor(args) -> int:
    g = args.z
    f = factor(g)
    print(_dump({
        "z": g.to_json(),
        "norm": g.norm(),
        "unit": f.unit.k,
        "factors": [
            {"prime": p.prime.to_json(), "exponent": p.exponent, "kind": p.kind, "rational_prime": p.rational_prime}
            for p in f.factors
        ],
        "text": str(f),
    }))
    return 0


def enumerate_rows(max_index: int) -> tuple[list[dict], list[dict]]:
    csls, per_index = [], {}
    for c, m in enumerate_csls(max_index):
        csls.append({"index": m, "z": c.z.to_json(), "angle_deg": f"{misorientation_angle(c.z):.6f}"})
        per_index[m] = per_index.get(m, 0) + 1
    summary = [{"index": m, "f": count_csls(m), "rotations": count_rotations(m)} for m in sorted(per_index)]
    return csls, summary


def cmd_enumerate(args) -> int:
    csls, summary = enumerate_rows(args.max_index)
    if args.format == "json":
        print(_dump({"angle_note": "display only, minimal misorientation over the six units", "csls": csls, "summary": summary}))
        return 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in csls:
        w.writerow(["csl", r["index"], r["z"]["m"], r["z"]["n"], r["angle_deg"], "", ""])
    for r in summary:
        w.writerow(["summary", r["index"], "", "", "", r["f"], r["rotations"]])
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_count(args) -> int:
    rows = [{"index": m, "f": count_csls(m), "rotations": count_rotations(m)} for m in range(1, args.max + 1)]
    if not args.all:
        rows = [r for r in rows if r["f"]]
    print(_dump(rows))
    return 0


def _shift_from_args(args):
    cls = args.shift_class
    if args.shift is not None:
        if cls is not None:
            raise SystemExit("use either --shift or --shift-class, not both")
        return args.shift
    if cls is None:
        raise SystemExit("one of --shift or --shift-class is required")

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise SystemExit(f"--shift-class {cls} requires --{name.replace('_', '-')}")
        return v

    if cls == "irrational-a":
        return IrrationalA(Fraction(need("b")))
    if cls == "irrational-b":
        return IrrationalB(Fraction(need("a")))
    if cls == "both-independent":
        return BothIndependent()
    return AffinelyRelated(int(need("p1")), int(need("q1")), int(need("p2")), int(need("q2")))


def cmd_shift(args) -> int:
    x = _shift_from_args(args)
    out = {"description": oc_description(x).to_json()}
    if args.shift is not None:
        p = as_point(x)
        y, u, refl, g = reduce_to_fundamental_domain(p)
        out["shift"] = p.to_json()
        out["fundamental_domain"] = {"point": y.to_json(), "unit": u.k, "reflect": refl, "translation": g.to_json()}
    else:
        out["shift_class"] = args.shift_class
    print(_dump(out))
    return 0


def cmd_csl(args) -> int:
    r = _isometry(args)
    v = r.value()
    ex = exponents_of(r)
    out = {
        "isometry": r.to_json(),
        "text": str(r),
        "value": v.to_json(),
        "angle_deg": f"{r.angle():.6f}",
        "index": r.index,
        "csl": {"z": r.z.to_json()},
        "exponents": {"eps": ex.eps.k, "t": [[p, e] for p, e in ex.t]},
    }
    if args.shift is not None:
        x = as_point(args.shift)
        member = is_member(r, x)
        out["shift"] = x.to_json()
        out["member"] = member
        if member:
            c = shifted_csl(r, x)
            out["coset_csl"] = c.to_json()
    print(_dump(out))
    return 0


def cmd_packing(args) -> int:
    r = _isometry(args)
    if args.shifted:
        x, lat = shifted_honeycomb()
        c = shifted_csml(x, lat, r)
        out = {"packing": "shifted-honeycomb", "shift": x.to_json(), "index": c.index.numerator}
    else:
        lat = honeycomb()
        c = csml(lat, r)
        assert c.index == honeycomb_index(r)
        out = {"packing": "honeycomb", "index": c.index.numerator}
    out.update(isometry=r.to_json(), multilattice=lat.to_json(), csml=c.to_json())
    print(_dump(out))
    return 0


def cmd_render(args) -> int:
    spec = RenderSpec(
        scene=args.scene,
        rotation=_isometry(args),
        shift=as_point(args.shift) if args.shift is not None else None,
        radius=Fraction(args.radius),
        domain=args.domain,
    )
    svg = render_svg(spec)
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(norm_bound=args.norm_bound, radius=Fraction(args.radius), only=tuple(args.only or ()))
    reports = run_suite(cfg)
    rows = []
    for rep in reports:
        d = rep.to_json()
        if not args.timings:
            d.pop("seconds")
        rows.append(d)
    ok = all(r.passed for r in reports)
    print(_dump({"config": {"norm_bound": cfg.norm_bound, "radius": str(cfg.radius)}, "passed": ok, "checks": rows}))
    return 0 if ok else 1


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hexcsl",
        description="Coincidence site lattices of the hexagonal lattice Z[xi], its shifts and the honeycomb packing.",
        epilog=UNIT_LEGEND,
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", help="prime factorization in Z[xi]", epilog=UNIT_LEGEND)
    s.add_argument("--z", type=_pair, required=True)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("enumerate", help="table of CSLs up to an index")
    s.add_argument("--max-index", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", help="f(m) and rotation counts 6 f(m)")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--all", action="store_true", help="include indices with f(m) = 0")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("shift", help="coincidence group of x + Z[xi]", epilog=UNIT_LEGEND)
    s.add_argument("--shift", type=_shift, help="rational shift a,b for x = a + b*xi, e.g. 2/3,1/3")
    s.add_argument("--shift-class", choices=("irrational-a", "irrational-b", "both-independent", "affine"))
    s.add_argument("--a", help="rational a (irrational-b)")
    s.add_argument("--b", help="rational b (irrational-a)")
    for name in ("p1", "q1", "p2", "q2"):
        s.add_argument(f"--{name}", type=int, help="affine: a = p1/q1 + (p2/q2) b")
    s.set_defaults(func=cmd_shift)

    s = sub.add_parser("csl", help="describe one coincidence isometry", epilog=UNIT_LEGEND)
    _add_isometry_args(s)
    s.add_argument("--shift", type=_shift, help="also test x + Z[xi] and give its coset CSL")
    s.set_defaults(func=cmd_csl)

    s = sub.add_parser("packing", help="index and CSML of the honeycomb packing", epilog=UNIT_LEGEND)
    _add_isometry_args(s)
    s.add_argument("--shifted", action="store_true", help="use the hexagon-centred copy x + L")
    s.set_defaults(func=cmd_packing)

    s = sub.add_parser("render", help="write an SVG figure", epilog=UNIT_LEGEND)
    s.add_argument("--scene", choices=SCENES, default="lattice")
    _add_isometry_args(s, required=False)
    s.add_argument("--shift", type=_shift)
    s.add_argument("--radius", default="4", help="patch radius (rational)")
    s.add_argument("--domain", action="store_true", help="overlay the fundamental domain")
    s.add_argument("--out", default="-", help="output file, '-' for stdout")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", help="closed forms versus brute force")
    s.add_argument("--norm-bound", type=int, default=50)
    s.add_argument("--radius", default="15")
    s.add_argument("--only", nargs="*", help="run only the named checks")
    s.add_argument("--timings", action="store_true", help="include per-check seconds")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"hexcsl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
