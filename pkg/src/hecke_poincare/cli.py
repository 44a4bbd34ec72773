"""Command line front end.

Every subcommand reads JSON input files and writes one JSON document to
standard output with sorted keys, so identical inputs give byte-identical
output.  Exit status: 0 on success, 1 on a domain error (the payload is then
``{"error": {"type": ..., "message": ...}}``), 2 on malformed flags or input.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import HeckePoincareError
from .partition import Partition, SkewShape
from .positivity import DEFAULT_MAX_INDEX, DEFAULT_MAX_ORDER, check_p_sequence, check_pp_sequence
from .quantum import (
    QuantumSpaceSpec,
    classify,
    comodule_dims,
    e_series_via_dims,
    e_series_via_star,
    hecke_sum,
    specialization,
)
from .series import FactoredSeries, TruncatedSeries, as_fraction, dual_series, fraction_to_json
from .symfun import kostka, lr_coefficient, skew_schur_value, super_schur_value


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    payload: dict = None
    diagnostics: str = ""

    def render(self):
        if self.payload is None:
            return ""
        return json.dumps(self.payload, sort_keys=True) + "\n"


def _load_json_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from err
    except json.JSONDecodeError as err:
        raise UsageError(f"{path} is not valid JSON: {err}") from err


def _json_arg(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"not valid JSON: {text!r}") from err


def _partition_arg(text):
    try:
        return Partition.from_json(_json_arg(text))
    except ValueError as err:
        raise UsageError(str(err)) from err


def _rationals_arg(text):
    data = _json_arg(text)
    if not isinstance(data, list):
        raise UsageError(f"expected a JSON array of rationals: {text!r}")
    try:
        return [as_fraction(v) for v in data]
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise UsageError(f"bad rational in {text!r}: {err}") from err


def _load(path, kind):
    data = _load_json_file(path)
    try:
        return kind.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as err:
        if isinstance(err, HeckePoincareError):
            raise
        raise UsageError(f"{path}: {err}") from err


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def cmd_dual(args):
    series = _load(args.series, TruncatedSeries)
    return dual_series(series.truncate(args.order)).to_json()


def cmd_dims(args):
    spec = _load(args.spec, QuantumSpaceSpec)
    return comodule_dims(spec, args.max_weight, strict=not args.allow_fractional).to_json()


def cmd_e_series(args):
    spec = _load(args.spec, QuantumSpaceSpec)
    strict = not args.allow_fractional
    if args.method == "dims":
        series = e_series_via_dims(spec, args.order, strict=strict)
    elif args.method == "star":
        series = e_series_via_star(spec, args.order)
    else:
        via_dims = e_series_via_dims(spec, args.order, strict=strict)
        via_star = e_series_via_star(spec, args.order)
        payload = {"coeffs": via_star.to_json()["coeffs"], "order": args.order,
                   "agreement": via_dims == via_star}
        if via_dims != via_star:
            payload["coeffs_dims"] = via_dims.to_json()["coeffs"]
            return 1, payload
        return payload
    return dict(series.to_json(), method=args.method)


def cmd_classify(args):
    spec = _load(args.spec, QuantumSpaceSpec)
    return classify(spec, args.max_weight).to_json()


def cmd_check_tp(args):
    series = _load(args.series, TruncatedSeries)
    try:
        return check_p_sequence(series, args.max_order, args.max_index).to_json()
    except ValueError as err:
        if isinstance(err, HeckePoincareError):
            raise
        raise UsageError(str(err)) from err


def cmd_check_pp(args):
    f = _load(args.factored, FactoredSeries)
    return check_pp_sequence(f, args.max_order, args.max_index).to_json()


def cmd_hecke_sum(args):
    if len(args.spec) != 2:
        raise UsageError("hecke-sum needs exactly two --spec files")
    a, b = (_load(path, QuantumSpaceSpec) for path in args.spec)
    return hecke_sum(a, b).to_json()


def cmd_schur(args):
    spec = _load(args.spec, QuantumSpaceSpec)
    outer = _partition_arg(args.partition)
    inner = _partition_arg(args.inner) if args.inner else Partition()
    sp = specialization(spec, max(outer.weight, 1))
    value = skew_schur_value(sp, SkewShape(outer, inner))
    return {"partition": list(outer), "inner": list(inner), "value": fraction_to_json(value)}


def cmd_super_schur(args):
    x, y = _rationals_arg(args.x), _rationals_arg(args.y)
    if any(v <= 0 for v in x + y):
        raise UsageError("super Schur variables must be positive")
    lam = _partition_arg(args.partition)
    return {"partition": list(lam), "value": fraction_to_json(super_schur_value(x, y, lam))}


def cmd_kostka(args):
    shape = _partition_arg(args.shape)
    weight = _json_arg(args.weight)
    if not isinstance(weight, list) or not all(isinstance(w, int) and w >= 0 for w in weight):
        raise UsageError("--weight must be a JSON array of nonnegative integers")
    return {"shape": list(shape), "weight": weight, "value": kostka(shape, weight)}


def cmd_lr(args):
    mu, gamma, lam = (_partition_arg(t) for t in (args.mu, args.gamma, args.lam))
    return {"mu": list(mu), "gamma": list(gamma), "lambda": list(lam),
            "value": lr_coefficient(mu, gamma, lam)}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hecke-poincare",
        description="Exact Poincare-series computations for quantum spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dual", help="dual series q(t) = 1/p(-t)")
    p.add_argument("--series", required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("dims", help="dimension table of simple comodules")
    p.add_argument("--spec", required=True)
    p.add_argument("--max-weight", type=_nonnegative, required=True)
    p.add_argument("--allow-fractional", action="store_true",
                   help="report rational values instead of rejecting them")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("e-series", help="Poincare series of the bialgebra E")
    p.add_argument("--spec", required=True)
    p.add_argument("--order", type=_nonnegative, required=True)
    p.add_argument("--method", choices=["dims", "star", "both"], default="both")
    p.add_argument("--allow-fractional", action="store_true")
    p.set_defaults(func=cmd_e_series)

    p = sub.add_parser("classify", help="rank / super rank classification and bounds")
    p.add_argument("--spec", required=True)
    p.add_argument("--max-weight", type=_nonnegative, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-tp", help="bounded total-positivity certificate")
    p.add_argument("--series", required=True)
    p.add_argument("--max-order", type=_positive, default=DEFAULT_MAX_ORDER)
    p.add_argument("--max-index", type=_nonnegative, default=DEFAULT_MAX_INDEX)
    p.set_defaults(func=cmd_check_tp)

    p = sub.add_parser("check-pp", help="strict positivity (PP) test of a factored series")
    p.add_argument("--factored", required=True)
    p.add_argument("--max-order", type=_positive, default=DEFAULT_MAX_ORDER)
    p.add_argument("--max-index", type=_nonnegative, default=DEFAULT_MAX_INDEX)
    p.set_defaults(func=cmd_check_pp)

    p = sub.add_parser("hecke-sum", help="spec of the Hecke sum of two specs")
    p.add_argument("--spec", action="append", required=True)
    p.set_defaults(func=cmd_hecke_sum)

    p = sub.add_parser("schur", help="(skew) Schur value at a spec's specialization")
    p.add_argument("--spec", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--inner")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("super-schur", help="hook Schur function m_lambda(x/y)")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_super_schur)

    p = sub.add_parser("kostka", help="Kostka number")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--mu", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_lr)
    return parser


def run(argv):
    """Execute one command and return its result without printing it."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), None, "usage error")
    try:
        out = args.func(args)
    except UsageError as err:
        return CommandResult(2, None, f"error: {err}")
    except HeckePoincareError as err:
        return CommandResult(1, {"error": err.to_json()}, f"{err.code}: {err}")
    if isinstance(out, tuple):
        code, payload = out
        return CommandResult(code, payload, "the two routes disagree")
    return CommandResult(0, out)


def main(argv=None):
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.render())
    if result.diagnostics:
        print(result.diagnostics, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
