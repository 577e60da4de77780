"""Command-line frontend.

Subcommands: hilb, gamma, analyze, schur, hironaka, scan.  All output is
deterministic UTF-8 JSON on stdout (rationals as "p/q" strings, polynomials
as sorted [exponent, coefficient] pairs, factored denominators as
[d, multiplicity] pairs).  Validation problems exit 2, internal invariant
violations exit 3, with a structured error object on stderr.

Flag defaults can be overridden with environment variables CIRCLEINV_JOBS,
CIRCLEINV_METHOD, CIRCLEINV_VERIFY_DEPTH and
CIRCLEINV_MAX_DENOMINATOR_DEGREE.
"""

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations_with_replacement

from . import gorenstein, hironaka, laurent, schur
from .errors import CircleInvError, InternalError, ValidationError
from .exact import Polynomial, RationalFunction, _expand_view
from .hilbert import (
    DEFAULT_DEGREE_LIMIT,
    hilbert_heuristic,
    hilbert_series,
    oracle_coefficients,
)
from .weights import canonical_key, validate

ENV_PREFIX = "CIRCLEINV_"

SCAN_FILTERS = ("OnlyNonGorensteinIntegerRatio", "OnlyGorenstein", "OnlyDegenerate")


def _env(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return type(fallback)(raw) if fallback is not None else raw


# ---------------------------------------------------------------------------
# JSON encoding


def frac_json(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def poly_json(p: Polynomial) -> list:
    return [[e, frac_json(c)] for e, c in sorted(p.items())]


def rf_json(f: RationalFunction) -> dict:
    if f.factored_denominator is not None:
        view = [list(pair) for pair in f.factored_denominator]
        den = _expand_view(dict(f.factored_denominator))
        num = f.view_numerator()
    else:
        view = None
        den = f.denominator
        num = f.numerator
    return {
        "numerator": poly_json(num),
        "factored_denominator": view,
        "denominator": poly_json(den),
    }


def report_json(report: gorenstein.GorensteinReport) -> dict:
    return {
        "weights": list(report.weights),
        "zero_count": report.zero_count,
        "faithful_scale": report.faithful_scale,
        "dimension": report.dimension,
        "degenerate": report.degenerate,
        "classification": report.classification,
        "stanley_holds": report.stanley_holds,
        "gamma0": frac_json(report.gamma0),
        "gamma1": frac_json(report.gamma1),
        "ratio_2g1_g0": frac_json(report.ratio_2g1_g0),
        "ratio_is_integer": report.ratio_is_integer,
        "a_invariant": None if report.degree is None else str(report.degree),
        "sufficient_condition_hits": list(report.sufficient_condition_hits),
        "hilbert": None if report.hilbert is None else rf_json(report.hilbert),
    }


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def parse_poly(pairs) -> Polynomial:
    return Polynomial({int(e): Fraction(c) for e, c in pairs})


# ---------------------------------------------------------------------------
# argument helpers


def parse_weights(tokens) -> list:
    items = []
    for token in tokens:
        for piece in token.replace(",", " ").split():
            items.append(int(piece))
    return items


def parse_int_list(text: str) -> tuple:
    return tuple(int(p) for p in text.replace(",", " ").split())


def _emit(payload: dict):
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_hilb(args) -> int:
    v = validate(parse_weights(args.weights))
    depth = args.verify_depth if args.verify_depth else None
    if args.method == "oracle":
        upto = args.verify_depth if args.verify_depth else 50
        _emit(
            {
                "weights": parse_weights(args.weights),
                "method": "oracle",
                "coefficients": oracle_coefficients(v, upto),
            }
        )
        return 0
    if args.method == "heuristic":
        f = hilbert_heuristic(v, args.max_denominator_degree)
        payload = {
            "weights": parse_weights(args.weights),
            "method": "heuristic",
            "heuristic": True,
            "hilbert": rf_json(f),
            "degree": f.degree,
        }
        _emit(payload)
        return 0
    f = hilbert_series(
        v,
        method=args.method,
        verify_depth=depth,
        degree_limit=args.max_denominator_degree,
    )
    _emit(
        {
            "weights": parse_weights(args.weights),
            "method": args.method,
            "hilbert": rf_json(f),
            "degree": f.degree,
        }
    )
    return 0


def cmd_gamma(args) -> int:
    v = validate(parse_weights(args.weights))
    upto = args.upto
    if args.gamma_method == "all":
        results = {"schur": laurent.gammas(v, upto, "schur")}
        if v.is_generic and upto <= 3:
            results["generic"] = laurent.gammas(v, upto, "generic")
        results["series"] = laurent.gammas(v, upto, "series")
        reference = results["schur" if upto <= 3 else "series"]
        agree = all(g.values == reference.values for g in results.values())
        _emit(
            {
                "weights": parse_weights(args.weights),
                "gamma": [frac_json(x) for x in reference.values],
                "pole_order": reference.pole_order,
                "methods": sorted(results),
                "methods_agree": agree,
            }
        )
        return 0
    g = laurent.gammas(v, upto, args.gamma_method)
    _emit(
        {
            "weights": parse_weights(args.weights),
            "gamma": [frac_json(x) for x in g.values],
            "pole_order": g.pole_order,
            "method": g.method,
        }
    )
    return 0


def cmd_analyze(args) -> int:
    v = validate(parse_weights(args.weights))
    depth = args.verify_depth if args.verify_depth else None
    report = gorenstein.analyze(v, full=args.full, verify_depth=depth)
    _emit(report_json(report))
    return 0


def cmd_schur(args) -> int:
    xs = [Fraction(p) for p in args.xs.replace(",", " ").split()] if args.xs else []
    ys = [Fraction(p) for p in args.ys.replace(",", " ").split()] if args.ys else []
    value = schur.partial_schur_expansion(args.u, xs, ys)
    routes = {"expansion": value}
    if len(set(xs)) == len(xs) and len(set(ys)) == len(ys) and xs:
        routes["determinant"] = schur.partial_schur_det(args.u, xs, ys)
    if len(xs) + len(ys) <= schur.TABLEAU_SIZE_LIMIT:
        routes["tableaux"] = schur.partial_schur_tableaux(args.u, xs, ys)
    agree = len({v for v in routes.values()}) == 1
    _emit(
        {
            "u": args.u,
            "xs": [frac_json(x) for x in xs],
            "ys": [frac_json(y) for y in ys],
            "value": frac_json(value),
            "routes": sorted(routes),
            "routes_agree": agree,
        }
    )
    return 0


def cmd_hironaka(args) -> int:
    data = hironaka.HironakaData(parse_int_list(args.alphas), parse_int_list(args.betas))
    values = [frac_json(hironaka.gamma_cm(ell, data)) for ell in range(args.upto + 1)]
    _emit(
        {
            "alphas": list(data.alphas),
            "betas": list(data.betas),
            "gamma": values,
            "hilbert": rf_json(hironaka.hilb_from_hironaka(data)),
        }
    )
    return 0


# ---------------------------------------------------------------------------
# scan


def _scan_representative(weights) -> tuple:
    """Pick the orientation of a canonical class that reads best: fewer
    negatives, then positive total, then lexicographically smaller."""
    forward = tuple(sorted(weights))
    backward = tuple(sorted(-w for w in weights))

    def rank(ws):
        return (sum(1 for w in ws if w < 0), -sum(ws), ws)

    return min(forward, backward, key=rank)


def _scan_candidates(n: int, max_abs: int):
    values = [w for w in range(-max_abs, max_abs + 1) if w != 0]
    seen = set()
    out = []
    for combo in combinations_with_replacement(values, n):
        if not any(w < 0 for w in combo) or not any(w > 0 for w in combo):
            continue
        v = validate(combo)
        key = canonical_key(v)
        if key in seen:
            continue
        seen.add(key)
        out.append(_scan_representative(v.weights))
    out.sort()
    return out


def _scan_one(weights) -> dict:
    try:
        report = gorenstein.analyze(validate(weights))
        return report_json(report)
    except CircleInvError as exc:  # record and keep scanning
        return {"weights": list(weights), "error": str(exc)}


def _passes_filters(payload: dict, filters) -> bool:
    if "error" in payload:
        return True
    for name in filters:
        if name == "OnlyNonGorensteinIntegerRatio":
            if not (payload["ratio_is_integer"] and payload["classification"] == "NotGorenstein"):
                return False
        elif name == "OnlyGorenstein":
            if payload["classification"] != "Gorenstein":
                return False
        elif name == "OnlyDegenerate":
            # degeneracy of the class: repeats on either sign side (the
            # emitted representative may be the generic orientation)
            ws = payload["weights"]
            negs = [w for w in ws if w < 0]
            poss = [w for w in ws if w > 0]
            if len(set(negs)) == len(negs) and len(set(poss)) == len(poss):
                return False
    return True


def cmd_scan(args) -> int:
    if args.n < 2 or args.max_weight < 1:
        raise ValidationError("scan needs n >= 2 and max-weight >= 1")
    candidates = _scan_candidates(args.n, args.max_weight)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            payloads = list(pool.map(_scan_one, candidates, chunksize=16))
    else:
        payloads = [_scan_one(w) for w in candidates]
    counts = {"total": len(payloads), "Gorenstein": 0, "NotGorenstein": 0,
              "integer_ratio_not_gorenstein": 0, "errors": 0, "written": 0}
    lines = []
    for payload in payloads:
        if "error" in payload:
            counts["errors"] += 1
        else:
            counts[payload["classification"]] += 1
            if payload["ratio_is_integer"] and payload["classification"] == "NotGorenstein":
                counts["integer_ratio_not_gorenstein"] += 1
        if _passes_filters(payload, args.filter):
            lines.append(json.dumps(payload, separators=(",", ":")))
    counts["written"] = len(lines)
    with open(args.output, "w", encoding="utf-8") as handle:
        for line in lines:
            handle.write(line + "\n")
    _emit({"n": args.n, "max_weight": args.max_weight, "filters": list(args.filter),
           "output": args.output, "counts": counts})
    return 0


# ---------------------------------------------------------------------------
# parser


# lets weight lists like "-3,1,3" pass as positionals instead of flags
_WEIGHTS_TOKEN = re.compile(r"^-\d[\d,\- ]*$")


def _allow_weight_tokens(parser: argparse.ArgumentParser):
    parser._negative_number_matcher = _WEIGHTS_TOKEN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circleinv",
        description="Exact Hilbert series and Gorenstein diagnosis for circle weight actions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--verify-depth",
        type=int,
        default=_env("VERIFY_DEPTH", 0),
        help="cross-check this many leading series coefficients against the counting oracle (0 disables)",
    )
    common.add_argument(
        "--jobs", type=int, default=_env("JOBS", 1), help="parallel workers (scan)"
    )
    common.add_argument(
        "--max-denominator-degree",
        type=int,
        default=_env("MAX_DENOMINATOR_DEGREE", DEFAULT_DEGREE_LIMIT),
        help="hard ceiling for constructed denominator degrees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilb", parents=[common], help="Hilbert series as an exact rational function")
    p.add_argument("weights", nargs="+", help="comma- or space-separated integer weights")
    p.add_argument(
        "--method",
        choices=("auto", "generic", "degenerate", "oracle", "heuristic"),
        default=_env("METHOD", "auto"),
    )
    _allow_weight_tokens(p)
    p.set_defaults(func=cmd_hilb)

    p = sub.add_parser("gamma", parents=[common], help="Laurent coefficients at t=1")
    p.add_argument("weights", nargs="+")
    p.add_argument("--upto", type=int, default=3)
    p.add_argument(
        "--method",
        dest="gamma_method",
        choices=("schur", "generic", "series", "all"),
        default="schur",
    )
    _allow_weight_tokens(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("analyze", parents=[common], help="Gorenstein diagnosis report")
    p.add_argument("weights", nargs="+")
    p.add_argument("--full", action="store_true", help="always compute the series and Stanley test")
    _allow_weight_tokens(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("schur", parents=[common], help="partial Schur value with route agreement")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--xs", default="", help="comma-separated rationals")
    p.add_argument("--ys", default="", help="comma-separated rationals")
    _allow_weight_tokens(p)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("hironaka", parents=[common], help="Laurent coefficients from decomposition degrees")
    p.add_argument("--alphas", required=True)
    p.add_argument("--betas", required=True)
    p.add_argument("--upto", type=int, default=3)
    p.set_defaults(func=cmd_hironaka)

    p = sub.add_parser("scan", parents=[common], help="batch survey of weight vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--filter", action="append", choices=SCAN_FILTERS, default=[])
    p.add_argument("--output", required=True, help="line-delimited JSON report file")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ValueError) as exc:
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return 2
    except InternalError as exc:
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return 3


if __name__ == "__main__":
    sys.exit(main())
