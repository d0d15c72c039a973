r"""
Command-line front end.

Subcommands map one-to-one onto the library operations::

    origamis stratum "n=3; h=(1,2); v=(1,3)"
    origamis orbit   "n=3; h=(1,2); v=(1,3)"
    origamis svc     "n=3; h=(1,2); v=(1,3)"
    origamis sum     "n=3; h=(1,2); v=(1,3)"
    origamis mc      "n=3; h=(1,2); v=(1,3)" --steps 1000000 --seed 1
    origamis enumerate --squares 4 --stratum 1,1
    origamis formulas kappa --abelian 1,1,1,1
    origamis formulas double-cover --orders 2,1,1
    origamis formulas genus0 --orders -1,-1,-1,-1
    origamis formulas hyp-abelian --genus 3 --component single_zero
    origamis formulas hyp-quadratic --family F1 --genus 2 --k 0
    origamis formulas positivity --kind abelian_general --genus 7
    origamis formulas nondegenerate --orders 1,-1,-1,-1,-1,-1
    origamis formulas stratum-info --quadratic 3,1

``--json`` switches to machine output.  Exact values print as ``p/q``.
Exit codes: 0 success, 2 invalid input or parse error, 3 internal
consistency violation.  The environment variable ``ORIGAMI_MAX_ORBIT``
overrides the orbit-size cap.
"""

import argparse
import json
import re
import sys

from .errors import DomainError, ParseError, ConsistencyError
from .homology import is_reduced
from .montecarlo import estimate_spectrum
from .orbits import cusp_decomposition, enumerate_stratum, sl2z_orbit
from .origami import format_origami, parse_origami, stratum_of
from .rationals import format_rational
from .strata import (
    AbelianSignature,
    QuadraticSignature,
    double_cover,
    genus0_values,
    hyperelliptic_abelian_sum,
    hyperelliptic_quadratic_sum,
    kappa,
    nondegeneracy_check,
    positivity_bound,
    stratum_info,
)
from .svc import cycle_statistic, normalized_svc, sum_exponents_abelian_orbit


def _int_list(text):
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise ParseError(f"expected a comma-separated integer list: {text!r}")


def _emit(args, json_obj, text_lines):
    if args.json:
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _orbit_report(orbit):
    cusps = cusp_decomposition(orbit)
    return {
        "n": orbit.n_squares,
        "stratum": list(orbit.signature.degrees),
        "orbit_size": orbit.size,
        "cusp_widths": list(cusps.widths),
        "members": [format_origami(m) for m in orbit.members],
        "reduced": is_reduced(orbit.representative),
    }


def _cmd_stratum(args):
    o = parse_origami(args.origami)
    sig = stratum_of(o)
    info = stratum_info(sig)
    _emit(
        args,
        {
            "n": o.n_squares,
            "stratum": list(sig.degrees),
            "genus": info.genus,
            "dimension": info.dimension,
        },
        [f"stratum: {sig}", f"genus: {info.genus}", f"dimension: {info.dimension}"],
    )
    return 0


def _cmd_orbit(args):
    o = parse_origami(args.origami)
    orbit = sl2z_orbit(o)
    report = _orbit_report(orbit)
    lines = [
        f"n: {report['n']}",
        "stratum: H(%s)" % ",".join(str(m) for m in report["stratum"]),
        f"orbit_size: {report['orbit_size']}",
        "cusp_widths: %s" % ",".join(str(w) for w in report["cusp_widths"]),
        f"reduced: {str(report['reduced']).lower()}",
    ] + ["member: " + m for m in report["members"]]
    _emit(args, report, lines)
    return 0


def _cmd_svc(args):
    o = parse_origami(args.origami)
    orbit = sl2z_orbit(o)
    result = normalized_svc(orbit)
    stat = cycle_statistic(orbit)
    if stat != result.svc:
        raise ConsistencyError(
            f"cycle statistic {stat} disagrees with cylinder average {result.svc}"
        )
    _emit(
        args,
        {
            "svc": format_rational(result.svc),
            "pi2_c_area": format_rational(result.c.pi2_times_c),
        },
        [
            f"svc: {format_rational(result.svc)}",
            f"pi2_c_area: {format_rational(result.c.pi2_times_c)}",
        ],
    )
    return 0


def _cmd_sum(args):
    o = parse_origami(args.origami)
    value = sum_exponents_abelian_orbit(sl2z_orbit(o)).value
    _emit(args, {"sum": format_rational(value)}, [format_rational(value)])
    return 0


def _cmd_mc(args):
    o = parse_origami(args.origami)
    est = estimate_spectrum(o, args.steps, args.seed, replicas=args.replicas)
    lines = [
        "lambda_%d: %.6f +- %.6f" % (i + 1, x, s)
        for i, (x, s) in enumerate(zip(est.exponents, est.standard_errors))
    ]
    lines.append(f"steps: {est.steps}")
    lines.append(f"seed: {est.seed}")
    lines.append(f"cf_digit_resamples: {est.cf_digit_resamples}")
    _emit(args, est.to_json_dict(), lines)
    return 0


def _cmd_enumerate(args):
    sig = None
    if args.stratum is not None:
        sig = AbelianSignature(_int_list(args.stratum))
    orbits = enumerate_stratum(args.squares, sig)
    reports = [_orbit_report(orb) for orb in orbits]
    lines = []
    for rep in reports:
        lines.append(
            "n=%d stratum=H(%s) orbit_size=%d cusp_widths=%s reduced=%s rep=%r"
            % (
                rep["n"],
                ",".join(str(m) for m in rep["stratum"]),
                rep["orbit_size"],
                ",".join(str(w) for w in rep["cusp_widths"]),
                str(rep["reduced"]).lower(),
                rep["members"][0],
            )
        )
    lines.append(f"orbits: {len(reports)}")
    _emit(args, reports, lines)
    return 0


def _signature_from_args(args):
    if getattr(args, "abelian", None) is not None:
        return AbelianSignature(_int_list(args.abelian))
    if getattr(args, "quadratic", None) is not None:
        return QuadraticSignature(_int_list(args.quadratic))
    raise ParseError("pass --abelian or --quadratic")


def _cmd_formulas(args):
    sub = args.formula
    if sub == "kappa":
        value = kappa(_signature_from_args(args))
        _emit(args, {"kappa": format_rational(value)}, [format_rational(value)])
    elif sub == "double-cover":
        res = double_cover(QuadraticSignature(_int_list(args.orders)))
        obj = {
            "cover_degrees": list(res.cover_signature.degrees),
            "cover_marked_points": res.cover_signature.marked_points,
            "g_hat": res.g_hat,
            "g_eff": res.g_eff,
        }
        _emit(
            args,
            obj,
            [
                f"cover: {res.cover_signature}",
                f"g_hat: {res.g_hat}",
                f"g_eff: {res.g_eff}",
            ],
        )
    elif sub == "genus0":
        res = genus0_values(QuadraticSignature(_int_list(args.orders)))
        obj = {
            "pi2_c_area": format_rational(res.c.pi2_times_c),
            "lambda_minus_sum": format_rational(res.lambda_minus_sum),
        }
        _emit(
            args,
            obj,
            [
                f"pi2_c_area: {obj['pi2_c_area']}",
                f"lambda_minus_sum: {obj['lambda_minus_sum']}",
            ],
        )
    elif sub == "hyp-abelian":
        value = hyperelliptic_abelian_sum(args.genus, args.component)
        _emit(args, {"sum": format_rational(value)}, [format_rational(value)])
    elif sub == "hyp-quadratic":
        res = hyperelliptic_quadratic_sum(args.family, args.genus, args.k)
        obj = {
            "sum": format_rational(res.sum),
            "g_eff": res.g_eff,
            "orders": list(res.orders),
        }
        _emit(
            args,
            obj,
            [f"sum: {obj['sum']}", f"g_eff: {res.g_eff}",
             "orders: %s" % ",".join(str(d) for d in res.orders)],
        )
    elif sub == "positivity":
        value = positivity_bound(args.kind, args.genus)
        _emit(args, {"k": value}, [str(value)])
    elif sub == "nondegenerate":
        value = nondegeneracy_check(QuadraticSignature(_int_list(args.orders)))
        _emit(args, {"nondegenerate": value}, [str(value).lower()])
    elif sub == "stratum-info":
        info = stratum_info(_signature_from_args(args))
        obj = {
            "genus": info.genus,
            "dimension": info.dimension,
            "known_empty": info.known_empty,
        }
        _emit(
            args,
            obj,
            [
                f"genus: {info.genus}",
                f"dimension: {info.dimension}",
                f"known_empty: {str(info.known_empty).lower()}",
            ],
        )
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown formulas subcommand {sub!r}")
    return 0


def _allow_negative_lists(parser):
    # let values like "-1,-1,-1,-1" pass as arguments, not options
    parser._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)*$")
    return parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog="origamis",
        description="Exact Siegel-Veech constants and Lyapunov exponents "
        "of square-tiled surfaces",
    )
    parser.add_argument("--json", action="store_true", help="machine output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stratum", help="stratum of an origami")
    p.add_argument("origami")
    p.set_defaults(func=_cmd_stratum)

    p = sub.add_parser("orbit", help="SL(2,Z)-orbit and cusp decomposition")
    p.add_argument("origami")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("svc", help="normalized Siegel-Veech constant of the orbit")
    p.add_argument("origami")
    p.set_defaults(func=_cmd_svc)

    p = sub.add_parser("sum", help="exact sum of Lyapunov exponents of the disc")
    p.add_argument("origami")
    p.set_defaults(func=_cmd_sum)

    p = sub.add_parser("mc", help="Monte Carlo individual Lyapunov exponents")
    p.add_argument("origami")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--replicas", type=int, default=1)
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("enumerate", help="all orbits with a given square count")
    p.add_argument("--squares", type=int, required=True)
    p.add_argument("--stratum", help="comma-separated Abelian degrees")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("formulas", help="stratum-level closed formulas")
    fsub = p.add_subparsers(dest="formula", required=True)

    f = _allow_negative_lists(fsub.add_parser("kappa"))
    f.add_argument("--abelian")
    f.add_argument("--quadratic")

    f = _allow_negative_lists(fsub.add_parser("double-cover"))
    f.add_argument("--orders", required=True)

    f = _allow_negative_lists(fsub.add_parser("genus0"))
    f.add_argument("--orders", required=True)

    f = fsub.add_parser("hyp-abelian")
    f.add_argument("--genus", type=int, required=True)
    f.add_argument(
        "--component", choices=["single_zero", "two_zeros"], required=True
    )

    f = fsub.add_parser("hyp-quadratic")
    f.add_argument("--family", choices=["F1", "F2", "F3"], required=True)
    f.add_argument("--genus", type=int, required=True)
    f.add_argument("--k", type=int, required=True)

    f = fsub.add_parser("positivity")
    f.add_argument(
        "--kind",
        choices=[
            "abelian_general",
            "abelian_principal",
            "quadratic_general",
            "quadratic_plus_principal",
            "quadratic_minus_principal",
        ],
        required=True,
    )
    f.add_argument("--genus", type=int, required=True)

    f = _allow_negative_lists(fsub.add_parser("nondegenerate"))
    f.add_argument("--orders", required=True)

    f = _allow_negative_lists(fsub.add_parser("stratum-info"))
    f.add_argument("--abelian")
    f.add_argument("--quadratic")

    p.set_defaults(func=_cmd_formulas)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
