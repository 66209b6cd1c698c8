"""Command-line front end.

Every operation is exposed as a subcommand with machine-readable JSON output
(``--format spice`` switches netlist-producing commands to a SPICE-like
listing).  Exit codes: 0 success; 1 for NotPositiveReal / UnknownWithinScope
outcomes and verification failures; 2 for invalid input.

Numbers are parsed exactly whenever possible ("3/2", "0.25", "1e-6" all give
exact rationals); outputs carry exact rational strings where available and
50-digit decimal strings plus the working precision otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path

from mpmath import mp, mpf

from .biquad import (
    CanonicalBiquad,
    GeneralBiquad,
    PoleSquaredForm,
    canonical_positive_real,
    is_positive_real,
    target_from_json,
    to_rational_fn,
)
from .network import (
    apply_transform,
    enumerate_labeled,
    enumerate_topologies,
    from_netlist_json,
    impedance,
    to_netlist_json,
    to_spice,
)
from .ratpoly import Poly, RationalFn, isolate_root, scalar_to_str, sturm_count
from .realize import (
    NotRealizableError,
    RealizationClass,
    classify,
    synth_config,
)
from .verify import falsify_small, verify_numeric

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _parse_scalar(text: str):
    """Exact rational if possible ('3/2', '0.25', '1e-9'), else mpf."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return Fraction(Decimal(text))
    except (InvalidOperation, ValueError):
        pass
    try:
        return mpf(text)
    except Exception:
        raise CliError("cannot parse number %r" % text)


def _load_json_arg(text: str):
    """Accept inline JSON or a path to a JSON file."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            return json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise CliError("invalid JSON: %s" % exc)
    path = Path(text)
    if not path.exists():
        raise CliError("no such file: %s" % text)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CliError("invalid JSON in %s: %s" % (text, exc))


def _target_rational(data) -> RationalFn:
    try:
        target = target_from_json(data)
    except (ValueError, KeyError) as exc:
        raise CliError("invalid target: %s" % exc)
    if isinstance(target, RationalFn):
        return target
    return to_rational_fn(target)


def _emit(obj, args) -> None:
    print(json.dumps(obj, indent=2))


def _emit_netlist(net, args, extra=None) -> None:
    if args.format == "spice":
        sys.stdout.write(to_spice(net))
        return
    payload = {"netlist": to_netlist_json(net)}
    if extra:
        payload.update(extra)
    if args.format == "text":
        print(to_spice(net).strip())
        for key, value in (extra or {}).items():
            print("%s: %s" % (key, value))
        return
    _emit(payload, args)


def _canonical_target(args) -> CanonicalBiquad:
    try:
        return CanonicalBiquad(
            _parse_scalar(args.k), _parse_scalar(args.z), _parse_scalar(args.p)
        )
    except ValueError as exc:
        raise CliError(str(exc))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args) -> int:
    b = _canonical_target(args)
    report = classify(b, precision_bits=args.precision_bits, tol=args.tol)
    data = report.to_json()
    data["target"] = {"k": scalar_to_str(b.k), "z": scalar_to_str(b.z), "p": scalar_to_str(b.p)}
    if args.format == "text":
        print("class: %s" % data["class"])
        for cond in data["conditions"]:
            print(
                "  %s = %s [%s]"
                % (cond["name"], cond["value"], "pass" if cond["pass"] else "fail")
            )
    else:
        _emit(data, args)
    if report.klass in (
        RealizationClass.NOT_POSITIVE_REAL,
        RealizationClass.UNKNOWN_WITHIN_SCOPE,
    ):
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_synth(args) -> int:
    b = _canonical_target(args)
    if args.config:
        try:
            net = synth_config(args.config, b, precision_bits=args.precision_bits)
        except KeyError as exc:
            raise CliError(str(exc))
        except NotRealizableError as exc:
            _emit({"error": str(exc)}, args)
            return EXIT_NEGATIVE
        config, transform = args.config, None
        ok, residual = verify_numeric(
            net, to_rational_fn(b), tol=args.tol, precision_bits=args.precision_bits
        )
        if not ok:
            _emit({"error": "verification failed", "residual": scalar_to_str(residual)}, args)
            return EXIT_NEGATIVE
    else:
        report = classify(b, precision_bits=args.precision_bits, tol=args.tol)
        if report.network is None:
            _emit(
                {
                    "error": "no closed-form synthesis for class %s" % report.klass.value,
                    "class": report.klass.value,
                },
                args,
            )
            return EXIT_NEGATIVE
        net, config, transform, residual = (
            report.network,
            report.config,
            report.transform,
            report.residual,
        )
    _emit_netlist(
        net,
        args,
        extra={
            "config": config,
            "transform": transform,
            "residual": scalar_to_str(residual),
            "precision_bits": args.precision_bits,
        },
    )
    return EXIT_OK


def _cmd_impedance(args) -> int:
    net = _load_netlist(args.netlist)
    with mp.workprec(args.precision_bits):
        z = impedance(net)
    _emit({"num": z.num.to_json(), "den": z.den.to_json()}, args)
    return EXIT_OK


def _cmd_transform(args) -> int:
    net = _load_netlist(args.netlist)
    with mp.workprec(args.precision_bits):
        out = apply_transform(net, args.op)
    _emit_netlist(out, args)
    return EXIT_OK


def _load_netlist(arg):
    data = _load_json_arg(arg)
    try:
        return from_netlist_json(data)
    except (KeyError, ValueError) as exc:
        raise CliError("invalid netlist: %s" % exc)


def _cmd_verify(args) -> int:
    net = _load_netlist(args.netlist)
    target = _target_rational(_load_json_arg(args.target))
    ok, residual = verify_numeric(
        net, target, tol=args.tol, precision_bits=args.precision_bits
    )
    _emit({"ok": bool(ok), "residual": scalar_to_str(residual)}, args)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_enumerate(args) -> int:
    if args.filters is None:
        try:
            shapes = enumerate_topologies(args.n)
        except ValueError as exc:
            raise CliError(str(exc))
        payload = {
            "n": args.n,
            "count": len(shapes),
            "topologies": [to_netlist_json(s) for s in shapes],
        }
    else:
        specs = [f for f in args.filters.split(",") if f]
        try:
            shapes = enumerate_labeled(args.n, specs)
        except ValueError as exc:
            raise CliError(str(exc))
        payload = {
            "n": args.n,
            "filters": specs,
            "count": len(shapes),
            "topologies": [to_netlist_json(s) for s in shapes],
        }
    _emit(payload, args)
    return EXIT_OK


def _cmd_roots(args) -> int:
    data = _load_json_arg(args.poly)
    if not isinstance(data, list):
        raise CliError("--poly expects a JSON array of coefficients")
    poly = Poly.from_json(data)
    if not poly.is_exact():
        raise CliError("root counting requires exact rational coefficients")
    lo, hi = _parse_scalar(args.lo), _parse_scalar(args.hi)
    if not isinstance(lo, Fraction) or not isinstance(hi, Fraction):
        raise CliError("bounds must be exact rationals")
    try:
        count = sturm_count(poly, lo, hi)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {"count": count}
    if count == 1:
        width = _parse_scalar(args.width)
        ilo, ihi = isolate_root(poly, lo, hi, width)
        payload["interval"] = [scalar_to_str(ilo), scalar_to_str(ihi)]
        mid = (ilo + ihi) / 2
        with mp.workprec(args.precision_bits):
            payload["midpoint"] = scalar_to_str(mpf(mid.numerator) / mid.denominator)
    _emit(payload, args)
    return EXIT_OK


def _cmd_pr_check(args) -> int:
    data = _load_json_arg(args.target)
    try:
        target = target_from_json(data)
    except (ValueError, KeyError) as exc:
        raise CliError("invalid target: %s" % exc)
    if isinstance(target, CanonicalBiquad):
        ok = canonical_positive_real(target)
    elif isinstance(target, GeneralBiquad):
        ok = is_positive_real(target)
    elif isinstance(target, PoleSquaredForm):
        g = GeneralBiquad(
            target.alpha,
            target.beta,
            target.gamma,
            1,
            2 * target.p,
            target.p * target.p,
        )
        ok = is_positive_real(g)
    else:
        raise CliError("pr-check expects a biquadratic target, not a raw rational fn")
    _emit({"positive_real": bool(ok)}, args)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_falsify(args) -> int:
    target = _target_rational(_load_json_arg(args.target))
    if args.nmax > 5:
        raise CliError("--nmax is limited to 5")
    report = falsify_small(
        target,
        args.nmax,
        budget=args.budget,
        seed=args.seed,
        tol=args.tol,
        stop_at_first_success=args.stop_at_first_success,
    )
    _emit(report, args)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_global_options(parser, suppress: bool):
    default = lambda v: argparse.SUPPRESS if suppress else v
    parser.add_argument(
        "--precision-bits",
        type=int,
        default=default(256),
        help="working precision for numeric synthesis/verification (>= 64)",
    )
    parser.add_argument(
        "--tol",
        type=str,
        default=default("1e-20"),
        help="verification tolerance (max relative coefficient error)",
    )
    parser.add_argument(
        "--format", choices=("json", "spice", "text"), default=default("json")
    )
    parser.add_argument("--seed", type=int, default=default(0))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biquadrlc",
        description="Realizability and synthesis of biquadratic impedances "
        "k(s+z)^2/(s+p)^2 as series-parallel RLC networks.",
    )
    _add_global_options(parser, suppress=False)
    # the same options are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    _add_global_options(common, suppress=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="decide the realizability class")
    p.add_argument("--k", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--p", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("synth", parents=[common], help="closed-form seven-element synthesis")
    p.add_argument("--k", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--config", choices=("fig3a", "n4a", "n5a"), default=None)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("impedance", parents=[common], help="symbolic impedance of a netlist")
    p.add_argument("netlist", help="netlist JSON (inline or file path)")
    p.set_defaults(func=_cmd_impedance)

    p = sub.add_parser("transform", parents=[common], help="apply inv/dual/gdu to a netlist")
    p.add_argument("--op", required=True, choices=("inv", "dual", "gdu"))
    p.add_argument("netlist")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("verify", parents=[common], help="check a netlist against a target")
    p.add_argument("netlist")
    p.add_argument("--target", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="series-parallel topology enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filters",
        default=None,
        help="comma-separated labeling filters (cutset, reactive-arm, "
        "mergeable, min-resistors=N, reactive-count=N); labeled output",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("roots", parents=[common], help="exact distinct-root count (and isolation)")
    p.add_argument("--poly", required=True, help="JSON array, ascending degree")
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.add_argument("--width", default="1e-30")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("pr-check", parents=[common], help="positive-realness of a target")
    p.add_argument("--target", required=True)
    p.set_defaults(func=_cmd_pr_check)

    p = sub.add_parser("falsify", parents=[common], help="brute-force fit over small topologies")
    p.add_argument("--target", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--budget", type=int, default=4000)
    p.add_argument("--stop-at-first-success", action="store_true")
    p.set_defaults(func=_cmd_falsify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision_bits < 64:
        print(json.dumps({"error": "--precision-bits must be >= 64"}), file=sys.stderr)
        return EXIT_INVALID
    try:
        with mp.workprec(args.precision_bits):
            args.tol = _parse_scalar(args.tol)
            if not args.tol > 0:
                raise CliError("--tol must be positive")
            return args.func(args)
    except CliError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return exc.code
    except NotRealizableError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_NEGATIVE
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
