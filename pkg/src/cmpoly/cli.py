"""Command-line frontend: poly, curve and bench subcommands.

Exit codes: 0 ok, 2 precondition, 3 precision, 4 search, 5 cache.
"""
import argparse
import json
import sys

from . import cache
from .classpoly import build
from .cm import generate_prime_order_curve
from .errors import CmPolyError, UnsupportedFamily
from .family import ALL_FAMILIES, Family, double_eta, single_eta
from .precision import bench_report, format_table


def _family_from_args(args):
    name = args.family
    if name == "eta-l":
        if args.l is None:
            raise UnsupportedFamily("--family eta-l needs --l")
        return single_eta(args.l)
    if name == "eta-p1p2":
        if args.pair is None:
            raise UnsupportedFamily("--family eta-p1p2 needs --pair P1,P2")
        p1, p2 = (int(x) for x in args.pair.split(","))
        return double_eta(p1, p2)
    return Family.parse(name)


def poly_json(poly):
    return json.dumps({"family": poly.family.tag, "D": poly.D, "degree": poly.degree,
                       "coeffs": [str(c) for c in poly.coeffs]})


def cmd_poly(args, out=sys.stdout):
    family = _family_from_args(args)
    poly = cache.load_or_build(family, args.D, args.cache, args.prec)
    if args.out:
        _write(args.out, poly, args.format)
    print(poly_json(poly) if args.format == "json" else str(poly), file=out)
    return 0


def _write(path, poly, fmt):
    with open(path, "w") as fh:
        fh.write(poly_json(poly) + "\n" if fmt == "json" else cache.dumps(poly))


def cmd_curve(args, out=sys.stdout):
    family = _family_from_args(args)
    poly = None
    if family.kind != "eta2" and args.D % 8 == 3:
        poly = cache.load_or_build(family, args.D, args.cache) if args.cache else None
    E = generate_prime_order_curve(args.D, args.bits, family, seed=args.seed, poly=poly)
    if args.format == "json":
        print(json.dumps({k: E.to_dict()[k] for k in ("p", "a", "b", "m", "D", "j")}), file=out)
    else:
        for k in ("p", "a", "b", "m", "D", "j"):
            print(f"{k} = {getattr(E, k)}", file=out)
    return 0


def _parse_range(text):
    parts = [int(x) for x in text.split(":")]
    if len(parts) == 2:
        parts.append(1)
    start, stop, step = parts
    return list(range(start, stop, step))


def _parse_families(text):
    text = text.strip().lower()
    if text in ("", "none"):
        return []
    if text == "all":
        return list(ALL_FAMILIES)
    return [Family.parse(t) for t in text.split(",")]


def cmd_bench(args, out=sys.stdout):
    Ds = []
    if args.d_list:
        Ds += [int(x) for x in args.d_list.split(",") if x]
    if args.d_range:
        Ds += [D for D in _parse_range(args.d_range) if D % 4 == 3]
    families = _parse_families(args.families)
    rows = bench_report(Ds, families, args.mode, args.max_h)
    if args.format == "jsonl":
        for r in rows:
            print(r.to_json(), file=out)
    else:
        print(format_table(rows), file=out)
    if args.jsonl:
        try:
            with open(args.jsonl, "w") as fh:
                for r in rows:
                    fh.write(r.to_json() + "\n")
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 1
    return 0


FAMILY_CHOICES = ["hilbert", "weber", "eta-l", "eta-p1p2", "ramanujan",
                  "eta-3", "eta-5", "eta-7", "eta-13", "eta-5-7", "eta-3-13"]


def make_parser():
    parser = argparse.ArgumentParser(prog="cmpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="build a class polynomial")
    p.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    p.add_argument("-D", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--pair", help="P1,P2 for eta-p1p2")
    p.add_argument("--out", help="also write the polynomial to this file")
    p.add_argument("--cache", help="cache directory")
    p.add_argument("--prec", type=int, help="starting working precision in bits")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_poly)

    c = sub.add_parser("curve", help="generate a prime-order curve")
    c.add_argument("-D", type=int, required=True)
    c.add_argument("--bits", type=int, required=True)
    c.add_argument("--family", choices=FAMILY_CHOICES, default="ramanujan")
    c.add_argument("--l", type=int)
    c.add_argument("--pair")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--cache", help="cache directory")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_curve)

    b = sub.add_parser("bench", help="precision and size report")
    b.add_argument("--d-list", help="comma separated discriminants")
    b.add_argument("--d-range", help="START:STOP[:STEP]")
    b.add_argument("--families", default="all", help="comma list, 'all' or 'none'")
    b.add_argument("--mode", choices=["estimate", "construct"], default="estimate")
    b.add_argument("--max-h", type=int, default=None)
    b.add_argument("--format", choices=["text", "jsonl"], default="text")
    b.add_argument("--jsonl", help="also write line-delimited records here")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out=out)
    except CmPolyError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
