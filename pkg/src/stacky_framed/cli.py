"""JSON command-line front end.

Every subcommand prints one JSON document. Rationals are written as reduced
``"num/den"`` strings (plain integers as ``"n"``), matrices as arrays of
arrays of decimal strings. Precondition failures exit with status 2 and an
``{"error": {"code", "message"}}`` document; bad flags exit with 64.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import riemann_roch as rr
from . import fans, picard, stability
from .fixed_points import DEFAULT_LIMIT, count_fixed_points, enumerate_fixed_points
from .lattice import FGAbelianGroup, IntMatrix, gale_dual

EXIT_PRECONDITION = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def q(x) -> str:
    return str(Fraction(x))


def matrix_json(m: IntMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.tolist()]


def group_json(g: FGAbelianGroup) -> dict:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion_orders), "label": str(g)}


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _matrix(text: str) -> IntMatrix:
    rows = [_ints(r) for r in text.split(";")]
    return IntMatrix.from_rows(rows)


def _divisor(text: str, p: int) -> picard.DivisorClass:
    if "," in text:
        a, b = _ints(text)
        return picard.DivisorClass(a, b, p)
    return picard.named_class(text, p)


# subcommand handlers


def cmd_fan(args):
    sf = fans.root_stacky_fan(args.p)
    nonvanishing, group, weights = fans.quotient_presentation(sf)
    return {
        "p": args.p,
        "rays": [list(v) for v in sf.fan.rays],
        "cones": [list(c) for c in sf.fan.max_cones],
        "multiplicities": list(sf.multiplicities),
        "beta": matrix_json(sf.beta),
        "nonvanishing": [list(s) for s in nonvanishing],
        "group": group_json(group),
        "weights": matrix_json(weights),
    }


def cmd_gale(args):
    if args.gerbe:
        if args.p is None:
            raise ValueError("--gerbe needs --p")
        quot, images = fans.quotient_stacky_fan_along_ray(fans.root_stacky_fan(args.p), fans.INF)
        beta, target = images, quot
    else:
        if args.beta is None:
            raise ValueError("give --beta or --gerbe")
        beta = _matrix(args.beta)
        torsion = tuple(_ints(args.torsion)) if args.torsion else ()
        free = args.free_rank if args.free_rank is not None else beta.rows - len(torsion)
        target = FGAbelianGroup(free, torsion)
    group, weights = gale_dual(beta, target)
    return {"target": group_json(target), "beta": matrix_json(beta), "group": group_json(group), "weights": matrix_json(weights)}


def cmd_picard(args):
    p = args.p
    gens = {name: picard.named_class(name, p) for name in picard.NAMES}
    pairing = picard.pairing_matrix(p)
    return {
        "p": p,
        "basis": ["omega", "Dinf"],
        "generators": {k: [v.a_omega, v.a_Dinf] for k, v in gens.items()},
        "pairing": [[q(x) for x in row] for row in pairing],
        "restriction": {
            k: [picard.restrict_to_Dinf(v).a, picard.restrict_to_Dinf(v).b] for k, v in gens.items()
        },
    }


def cmd_restrict(args):
    c = picard.restrict_to_Dinf(_divisor(args.cls, args.p))
    return {"a": c.a, "b": c.b, "p": c.p, "degree": q(picard.degree_on_Dinf(c))}


def cmd_intersect(args):
    return {"value": q(picard.intersect(_divisor(args.x, args.p), _divisor(args.y, args.p)))}


def cmd_degree(args):
    return {"degree": q(picard.degree_on_Dinf(picard.DinfLineClass(args.a, args.b, args.p)))}


def cmd_dim(args):
    w = _ints(args.w)
    out = {"dimension": q(rr.dimension(args.p, args.r, args.delta, w))}
    if args.terms:
        out["A"] = q(rr.A_term(args.p, args.r, args.delta))
        out["B"] = q(rr.B_term(args.p, w))
    return out


def cmd_sum(args):
    return {"value": q(rr.roots_of_unity_sum(args.p, args.j))}


def cmd_todd(args):
    return {"value": q(rr.todd2_integral(args.p))}


def _limit(args):
    if args.limit is not None:
        return args.limit
    env = os.environ.get("FMT_LIMIT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"FMT_LIMIT must be an integer, got {env!r}") from None
    return DEFAULT_LIMIT


def cmd_fixed_points(args):
    w = _ints(args.w)
    if args.count_only:
        return {"count": count_fixed_points(args.p, args.r, args.u, args.delta, w)}
    pts = enumerate_fixed_points(args.p, args.r, args.u, args.delta, w, limit=_limit(args))
    return {
        "count": len(pts),
        "truncated": pts.truncated,
        "points": [
            {"u": list(fp.u_vec), "pairs": [[list(a), list(b)] for a, b in fp.pairs]} for fp in pts
        ],
    }


def cmd_good_divisor(args):
    if args.cls is not None:
        d = picard.coarse_named(args.cls, args.p)
    else:
        d = picard.CoarseDivisor(args.f, args.e, args.p)
    good, a_D = picard.good_framing_divisor_check(d)
    return {"f": d.f, "e": d.e, "p": d.p, "good": good, "a_D": a_D}


def cmd_good_sheaf(args):
    if args.w is not None:
        # framing sheaf sum_i (L2^i)^{w_i} at infinity of the p-th surface
        if args.p is None:
            raise ValueError("--w needs --p")
        w = _ints(args.w)
        if len(w) != args.p:
            raise ValueError(f"framing vector has length {len(w)}, expected p = {args.p}")
        degs = [
            picard.degree_on_Dinf(picard.DinfLineClass(0, i, args.p)) for i, wi in enumerate(w) for _ in range(wi)
        ]
        a_D, k_D, DD = 1, args.p, args.p
    else:
        if args.degrees is None:
            raise ValueError("give --degrees or --p/--w")
        degs = [Fraction(x) for x in args.degrees.split(",")]
        a_D, k_D, DD = args.a_D, args.k_D, args.DD
    good, A0 = stability.good_framing_sheaf_check(degs, a_D, k_D, DD)
    bound = stability.good_framing_sheaf_bound(len(degs), a_D, k_D, DD)
    return {"good": good, "A0": q(A0), "bound": q(bound)}


def cmd_gen_sheaf_cond(args):
    return {
        "k": args.k,
        "r": args.r,
        "holds": stability.generating_sheaf_condition(args.k, args.r),
        "numeric": stability.generating_sheaf_condition_numeric(args.k, args.r),
    }


def _poly(coeffs) -> stability.HilbertPoly:
    return stability.HilbertPoly([Fraction(str(c)) for c in coeffs])


def _verdict_json(kind, v: stability.StabilityVerdict):
    return {
        "kind": kind,
        "semistable": v.semistable,
        "stable": v.stable,
        "subs": [{"semistable": s.semistable, "stable": s.stable} for s in v.subs],
        "scope": v.scope,
    }


def run_stability(data: dict) -> dict:
    kind = data.get("kind")
    parent = data.get("parent")
    if parent is None:
        raise ValueError("stability input needs a 'parent' object")
    eps = int(parent.get("eps", 1))
    injective = data.get("framing_injective")
    if kind == "delta":
        P = _poly(parent["P"])
        delta = _poly(data["delta"])
        if P.leading == 0 and injective is not None:
            return _verdict_json(kind, stability.delta_rank_zero_verdict(P, delta, injective))
        par = stability.FramedNumData(P, eps)
        subs = [(_poly(s["P"]), Fraction(str(s["alpha_d"])), int(s["eps"])) for s in data.get("subs", [])]
        return _verdict_json(kind, stability.delta_semistable_check(par, delta, subs))
    if kind == "mu":
        ork, deg = Fraction(str(parent["ork"])), Fraction(str(parent["deg"]))
        delta1 = Fraction(str(data["delta1"]))
        if ork == 0 and injective is not None:
            return _verdict_json(kind, stability.mu_rank_zero_verdict(deg, delta1, injective))
        par = stability.FramedNumData(stability.HilbertPoly([]), eps, ork, deg)
        subs = [(Fraction(str(s["deg"])), Fraction(str(s["ork"])), int(s["eps"])) for s in data.get("subs", [])]
        return _verdict_json(kind, stability.mu_stable_check(par, delta1, subs))
    raise ValueError(f"unknown stability kind {kind!r}; expected 'delta' or 'mu'")


def cmd_stability(args):
    try:
        with open(args.input) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read {args.input}: {exc}") from exc
    try:
        return run_stability(data)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed stability input: {exc!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stacky-framed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="JSON output (the only format)")
        return sp

    sp = add("fan", cmd_fan, "stacky fan, quotient presentation and weights")
    sp.add_argument("--p", type=int, required=True)

    sp = add("gale", cmd_gale, "Gale dual of an integer matrix")
    sp.add_argument("--beta", help="rows separated by ';', entries by ','")
    sp.add_argument("--free-rank", type=int)
    sp.add_argument("--torsion", help="torsion orders of the target, comma separated")
    sp.add_argument("--gerbe", action="store_true", help="use the quotient stacky fan along rho_inf")
    sp.add_argument("--p", type=int)

    sp = add("picard", cmd_picard, "generators, pairing and restriction table")
    sp.add_argument("--p", type=int, required=True)

    sp = add("restrict", cmd_restrict, "restriction of a class to D_inf")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--class", dest="cls", required=True, help="name or a_omega,a_Dinf")

    sp = add("intersect", cmd_intersect, "intersection number of two classes")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)

    sp = add("degree", cmd_degree, "degree of L1^a L2^b on D_inf")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, default=0)

    sp = add("stability", cmd_stability, "check framed stability against a witness list")
    sp.add_argument("action", choices=["check"])
    sp.add_argument("--input", required=True)

    sp = add("dim", cmd_dim, "dimension of the moduli space")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--delta", type=_rational, required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--terms", action="store_true", help="also print the A and B terms")

    sp = add("sum", cmd_sum, "closed-form root-of-unity sum")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)

    sp = add("todd", cmd_todd, "integral of Td_2")
    sp.add_argument("--p", type=int, required=True)

    sp = add("fixed-points", cmd_fixed_points, "torus-fixed points")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--u", type=int, required=True)
    sp.add_argument("--delta", type=_rational, required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--limit", type=int)

    sp = add("good-divisor", cmd_good_divisor, "nef-and-big test on the coarse surface")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--class", dest="cls", choices=["F", "E", "Dinf"])
    sp.add_argument("--f", type=int, default=0)
    sp.add_argument("--e", type=int, default=0)

    sp = add("good-sheaf", cmd_good_sheaf, "good framing sheaf test for a split sheaf")
    sp.add_argument("--degrees", help="comma separated degrees of the summands")
    sp.add_argument("--a-D", dest="a_D", type=_rational, default=Fraction(1))
    sp.add_argument("--k-D", dest="k_D", type=_rational, default=Fraction(1))
    sp.add_argument("--DD", type=_rational, default=Fraction(1))
    sp.add_argument("--p", type=int)
    sp.add_argument("--w")

    sp = add("gen-sheaf-cond", cmd_gen_sheaf_cond, "root-of-unity generating sheaf condition")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)

    return parser


def _emit(doc, stream):
    stream.write(json.dumps(doc, sort_keys=False) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _emit({"error": {"code": "usage", "message": str(exc)}}, stderr)
        return EXIT_USAGE
    try:
        doc = args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        _emit({"error": {"code": "precondition", "message": str(exc)}}, stdout)
        return EXIT_PRECONDITION
    _emit(doc, stdout)
    return 0


def main():
    try:
        code = run()
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 0
    sys.exit(code)
