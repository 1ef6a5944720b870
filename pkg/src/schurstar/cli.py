"""Command-line front end: ``schurstar <command> ...``.

Exit codes: 0 success, 1 no preimage (``theta``), 2 bad input or a bound
exceeded, 3 internal disagreement, 4 a counterexample was found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from schurstar import __version__, cache, families, schur
from schurstar.kernels import BACKEND
from schurstar.partition import (
    MAX_WEIGHT,
    SkewShape,
    format_partition,
    parse_partition,
    parse_skew,
    show,
)
from schurstar.report import config_hash, from_report, render, render_expansion, show_pair
from schurstar.star import NoPreimage, extremal_fixed_points, is_fixed_point, star_direct, star_recursive, star_skew, theta_min
from schurstar.verify import SweepSpec, SweepSummary, bounded_height_check, iter_reports, verify_pair, verify_skew_pair

EXIT_NO_PREIMAGE = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3
EXIT_COUNTEREXAMPLE = 4


class BoundError(ValueError):
    pass


def _check_weight(total: int, args) -> None:
    if total > args.max_weight:
        raise BoundError(f"bound exceeded: total weight {total} > --max-weight {args.max_weight}")


def _parse_pair(args, skew: bool):
    parse = parse_skew if skew else parse_partition
    left, right = parse(args.left), parse(args.right)
    outer = (left.outer, right.outer) if skew else (left, right)
    _check_weight(sum(outer[0]) + sum(outer[1]), args)
    return left, right


def _emit(args, obj: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print("\n".join(lines))


def cmd_star(args) -> int:
    left, right = _parse_pair(args, args.skew)
    image = star_skew(left, right) if args.skew else star_direct(left, right)
    if args.recursive:
        pairs = [(left.outer, right.outer), (left.inner, right.inner)] if args.skew else [(left, right)]
        for mu, nu in pairs:
            if star_recursive(mu, nu) != star_direct(mu, nu):
                print(f"disagreement on {show_pair((mu, nu))}: recursive {show_pair(star_recursive(mu, nu))}, "
                      f"direct {show_pair(star_direct(mu, nu))}", file=sys.stderr)
                return EXIT_DISAGREE
    _emit(args, {"subject": [args.left, args.right], "star_image": [_text(x) for x in image]}, [show_pair(image)])
    return 0


def _text(s) -> str:
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}" if isinstance(s, SkewShape) else format_partition(s)


def cmd_coeff(args) -> int:
    mu, nu, theta = (parse_partition(x) for x in (args.mu, args.nu, args.theta))
    _check_weight(max(sum(theta), sum(mu) + sum(nu)), args)
    c = schur.lr_coefficient(mu, nu, theta)
    _emit(args, {"mu": args.mu, "nu": args.nu, "theta": args.theta, "coefficient": c}, [str(c)])
    return 0


def parse_expression(text: str) -> schur.SchurExpansion:
    """A product of factors separated by ``*``; each factor is a partition or ``outer/inner``."""
    out = None
    for factor in text.split("*"):
        factor = factor.strip()
        if factor.startswith("s"):
            factor = factor[1:]
        f = schur.skew_schur(parse_skew(factor)) if "/" in factor else schur.SchurExpansion.schur(parse_partition(factor))
        out = f if out is None else schur.multiply(out, f)
    return out


def cmd_expand(args) -> int:
    e = parse_expression(args.expression)
    _check_weight(e.degree or 0, args)
    _emit(args, {"expression": args.expression, "degree": e.degree,
                 "expansion": {format_partition(k): c for k, c in e.items()}}, render_expansion(e))
    return 0


def cmd_verify(args) -> int:
    left, right = _parse_pair(args, args.skew)
    r = verify_skew_pair(left, right) if args.skew else verify_pair(left, right)
    if args.json:
        print(render(from_report(r)))
    else:
        print(r.verdict.capitalize())
        print("\n".join(render_expansion(r.difference)))
        if r.witness is not None:
            w = r.witness
            print(f"witness: s({format_partition(w.shape)}) coefficient {w.left} - {w.right} < 0")
        for name, ok in r.checks.items():
            if not ok:
                print(f"check failed: {name}", file=sys.stderr)
    if r.witness is not None:
        return EXIT_COUNTEREXAMPLE
    return 0 if r.ok else EXIT_DISAGREE


def _summary_line(s: SweepSummary) -> str:
    tag = " (proven family)" if s.proven else ""
    return f"{s.family}{tag}: verified: {s.verified} zero-difference: {s.zero_difference} failures: {len(s.failures)}"


def cmd_sweep(args) -> int:
    nu = parse_partition(args.nu) if args.nu is not None else None
    spec = SweepSpec(args.family, args.max_weight, args.p, nu, args.dedupe, args.sample, args.seed)
    config = config_hash({"family": spec.family, "max_weight": spec.weight_bound, "p": spec.p, "nu": spec.nu,
                          "dedupe": spec.dedupe, "sample": spec.sample, "seed": spec.seed})
    summary = SweepSummary(spec.family, proven=spec.proven)
    counterexample = False
    out = open(args.out, "w") if args.out else None
    try:
        # single writer: reports arrive in subject order from the pool
        for r in iter_reports(spec.subjects(), args.jobs):
            summary.add(r)
            if out is not None:
                out.write(render(from_report(r, config)) + "\n")
            if not r.ok:
                counterexample |= r.witness is not None
                print(f"counterexample: {render(from_report(r, config))}", file=sys.stderr)
    finally:
        if out is not None:
            out.close()
    print(_summary_line(summary))
    if counterexample:
        return EXIT_COUNTEREXAMPLE
    return EXIT_DISAGREE if summary.failures else 0


def cmd_bounded(args) -> int:
    nu = parse_partition(args.nu)
    rep = bounded_height_check(nu, args.p, args.extent, args.jobs)
    print(f"base (alpha_1 <= {rep.bound}): verified: {rep.base.verified} failures: {len(rep.base.failures)}")
    print(f"spot check, corroboration only ({rep.bound} < mu_1 <= {rep.bound + rep.spot_extent}): "
          f"verified: {rep.spot.verified} failures: {len(rep.spot.failures)}")
    for s in rep.base.failures + rep.spot.failures:
        print(f"counterexample: {show_pair(s)}", file=sys.stderr)
    return 0 if rep.ok else EXIT_COUNTEREXAMPLE


def cmd_fixed(args) -> int:
    mu, nu = _parse_pair(args, False)
    low, high = extremal_fixed_points(mu, nu)
    fixed = is_fixed_point(mu, nu)
    _emit(args, {"subject": [args.left, args.right], "fixed": fixed,
                 "largest_inside": [format_partition(x) for x in low],
                 "smallest_containing": [format_partition(x) for x in high]},
          [f"fixed: {'yes' if fixed else 'no'}",
           f"largest fixed pair inside: {show_pair(low)}",
           f"smallest fixed pair containing: {show_pair(high)}"])
    return 0


def cmd_theta(args) -> int:
    tau, nu = parse_partition(args.tau), parse_partition(args.nu)
    _check_weight(sum(tau) + sum(nu), args)
    try:
        theta = theta_min(tau, nu)
    except NoPreimage as exc:
        print(f"NoPreimage: {exc}", file=sys.stderr)
        return EXIT_NO_PREIMAGE
    _emit(args, {"tau": args.tau, "nu": args.nu, "theta": format_partition(theta)}, [show(theta)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-weight", type=int, help=f"weight bound (default {MAX_WEIGHT}; 8 for sweep)")
    common.add_argument("--cache", nargs="?", const="", default=None, metavar="PATH",
                        help="persist LR coefficients (default path from $SCHURSTAR_CACHE or ./.schurstar-lr-cache)")

    parser = argparse.ArgumentParser(prog="schurstar", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(p, skew=True):
        p.add_argument("left", help='left partition, e.g. "3,1" ("" for empty)')
        p.add_argument("right", help="right partition")
        if skew:
            p.add_argument("--skew", action="store_true", help='read shapes as "outer/inner"')

    p = sub.add_parser("star", parents=[common], help="image of a pair under the star map")
    pair(p)
    p.add_argument("--recursive", action="store_true", help="cross-check against the cell-by-cell recursion")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("coeff", parents=[common], help="Littlewood-Richardson coefficient c^theta_{mu nu}")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("theta")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("expand", parents=[common], help='Schur expansion of e.g. "2,1*3" or "4,4,2,1/2,1"')
    p.add_argument("expression")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", parents=[common], help="check positivity of s_lambda s_rho - s_mu s_nu")
    pair(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="verify every pair of a family")
    p.add_argument("--family", required=True, choices=families.FAMILIES)
    p.add_argument("--p", type=int, help="height, for bounded_height")
    p.add_argument("--nu", help="fixed right partition, for bounded_height")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write one JSON record per line")
    p.add_argument("--dedupe", action="store_true", help="skip pairs equivalent under conjugation")
    p.add_argument("--sample", type=int, help="verify a random sample of this size")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounded", parents=[common], help="finite-base check for pairs of bounded height")
    p.add_argument("nu")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--extent", type=int, default=0, help="spot-check this far past the bound")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bounded)

    p = sub.add_parser("fixed", parents=[common], help="fixed-point test and extremal fixed pairs")
    pair(p, skew=False)
    p.set_defaults(func=cmd_fixed)

    p = sub.add_parser("theta", parents=[common], help="smallest mu with rho(mu, nu) = tau")
    p.add_argument("tau")
    p.add_argument("nu")
    p.set_defaults(func=cmd_theta)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_weight is None:
        args.max_weight = 8 if args.command == "sweep" else MAX_WEIGHT
    if args.max_weight > MAX_WEIGHT:
        print(f"error: bound exceeded: --max-weight {args.max_weight} > {MAX_WEIGHT}", file=sys.stderr)
        return EXIT_INPUT
    use_cache = args.cache is not None or bool(os.environ.get(cache.ENV))
    path = args.cache or None
    if use_cache:
        schur.load_cache(cache.load(path))
        schur.new_cache_entries()
    try:
        code = args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if use_cache:
        cache.append(schur.new_cache_entries(), path)
    return code


if __name__ == "__main__":
    sys.exit(main())
