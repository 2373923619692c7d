"""Command-line interface.

Subcommands: radius, table, curve, verify, sum, bounds.  Exit status is 0
on success, 1 when a computation fails (no root, uncertified tail, failed
verification), 2 for unusable flags.  Output is deterministic: identical
argv produces byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from . import bohr, extremal, radii, report, weights
from .coeffs import CoefficientSequence
from .errors import BohradError, DomainError
from .weights import WeightFamily

PROG = "bohrad"

_FAMILY_CHOICES = ("power", "n1", "n", "n2", "cesaro", "bernardi")

_CLI_X_TOL = 1e-12


@dataclass
class CommandSpec:
    """A parsed invocation: one subcommand plus its validated flags."""

    subcommand: str
    flags: dict = field(default_factory=dict)
    output_path: Optional[str] = None
    format: str = "plain"


class _UsageError(Exception):
    pass


def _num(x: float) -> str:
    return format(x, ".10g")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Radii of weighted majorant inequalities on shifted disks.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_rad = sub.add_parser("radius", help="solve one radius equation")
    p_rad.add_argument("--family", required=True, choices=_FAMILY_CHOICES)
    p_rad.add_argument("--p", type=float, default=1.0)
    p_rad.add_argument("--gamma", type=float, default=None)
    p_rad.add_argument("--alpha", type=float, default=None, help="cesaro order")
    p_rad.add_argument("--beta", type=float, default=None, help="bernardi offset")
    p_rad.add_argument("--m", type=int, default=0, help="vanishing order")
    p_rad.add_argument("--lambda", dest="lam", type=float, default=None,
                       help="general coefficient-bound constant instead of --gamma")

    p_tab = sub.add_parser("table", help="reproduce one reference table")
    p_tab.add_argument("--id", type=int, required=True)
    p_tab.add_argument("--format", choices=("csv", "json", "markdown"), default="markdown")
    p_tab.add_argument("--out", type=str, default=None)

    p_cur = sub.add_parser("curve", help="sample a radius equation over (0, 1)")
    p_cur.add_argument("--tag", required=True, choices=("G", "C", "B"))
    p_cur.add_argument("--p", type=float, default=None)
    p_cur.add_argument("--alpha", type=float, default=None)
    p_cur.add_argument("--m", type=int, default=None)
    p_cur.add_argument("--beta", type=float, default=None)
    p_cur.add_argument("--gamma-list", dest="gamma_list", required=True,
                       help="comma-separated gamma values (1 allowed)")
    p_cur.add_argument("--samples", type=int, default=512)
    p_cur.add_argument("--format", choices=("csv", "json"), default="csv")
    p_cur.add_argument("--out", type=str, default=None)

    p_ver = sub.add_parser("verify", help="probe sharpness on both sides of a radius")
    p_ver.add_argument("--family", required=True, choices=_FAMILY_CHOICES)
    p_ver.add_argument("--p", type=float, default=1.0)
    p_ver.add_argument("--gamma", type=float, required=True)
    p_ver.add_argument("--alpha", type=float, default=None)
    p_ver.add_argument("--beta", type=float, default=None)
    p_ver.add_argument("--m", type=int, default=0)
    p_ver.add_argument("--r", type=float, default=0.01,
                       help="probe offset from the computed radius")
    p_ver.add_argument("--a-list", dest="a_list", type=str, default=None,
                       help="comma-separated extremal parameters")

    p_sum = sub.add_parser("sum", help="majorant sum or per-function radius from a coefficient file")
    p_sum.add_argument("--coeffs", required=True, help="JSON file with m, moduli, optional tail")
    p_sum.add_argument("--family", required=True, choices=_FAMILY_CHOICES)
    p_sum.add_argument("--p", type=float, default=1.0)
    p_sum.add_argument("--r", type=float, default=None)
    p_sum.add_argument("--q", type=float, default=None,
                       help="per-function radius exponent; switches to radius mode")
    p_sum.add_argument("--alpha", type=float, default=None)
    p_sum.add_argument("--beta", type=float, default=None)
    p_sum.add_argument("--m0", type=int, default=0, help="bernardi family start index")
    p_sum.add_argument("--format", choices=("plain", "json"), default="plain")

    p_bnd = sub.add_parser("bounds", help="p-norm majorant radius bounds, 1 < p < 2")
    p_bnd.add_argument("--p", type=float, required=True)

    return parser


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise _UsageError(message)


def _family_from_flags(name: str, alpha, beta, m0: int) -> WeightFamily:
    if name == "power":
        return weights.power()
    if name == "n1":
        return weights.power_times_n_plus_1()
    if name == "n":
        return weights.power_times_n()
    if name == "n2":
        return weights.power_times_n_squared()
    if name == "cesaro":
        _require(alpha is not None, "--alpha is required for --family cesaro")
        _require(alpha > -1.0, "--alpha must be > -1")
        return weights.cesaro(alpha)
    _require(beta is not None, "--beta is required for --family bernardi")
    _require(m0 >= 0, "--m must be >= 0")
    _require(m0 + beta > 0.0, "--m + --beta must be > 0")
    return weights.bernardi(beta, m0=m0)


def _check_gamma_p(gamma: Optional[float], p: float) -> None:
    if gamma is not None:
        _require(0.0 <= gamma < 1.0, "--gamma must lie in [0, 1)")
    _require(1.0 <= p <= 2.0, "--p must lie in [1, 2]")


def _parse_floats(text: str, flag: str) -> List[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise _UsageError(f"{flag} expects comma-separated reals: {exc}") from exc
    _require(bool(values), f"{flag} must name at least one value")
    return values


def _cmd_radius(ns: argparse.Namespace, out) -> int:
    _check_gamma_p(ns.gamma, ns.p)
    _require(ns.m >= 0, "--m must be >= 0")
    if ns.family == "cesaro":
        _require(ns.lam is None, "--lambda does not apply to --family cesaro")
        _require(ns.gamma is not None, "--gamma is required")
        _require(ns.alpha is not None, "--alpha is required for --family cesaro")
        _require(ns.alpha > -1.0, "--alpha must be > -1")
        _require(ns.p == 1.0, "the cesaro radius is defined for --p 1")
        result = radii.cesaro_radius(ns.gamma, ns.alpha, x_tol=_CLI_X_TOL)
    elif ns.family == "bernardi":
        _require(ns.lam is None, "--lambda does not apply to --family bernardi")
        _require(ns.gamma is not None, "--gamma is required")
        _require(ns.beta is not None, "--beta is required for --family bernardi")
        _require(ns.m + ns.beta > 0.0, "--m + --beta must be > 0")
        _require(ns.p == 1.0, "the bernardi radius is defined for --p 1")
        result = radii.bernardi_radius(ns.m, ns.beta, ns.gamma, x_tol=_CLI_X_TOL)
    else:
        family = _family_from_flags(ns.family, None, None, 0)
        if ns.lam is not None:
            _require(ns.gamma is None, "give exactly one of --gamma and --lambda")
            _require(ns.lam > 0.0, "--lambda must be > 0")
            _require(ns.m == 0, "--lambda applies to the m = 0 form")
            result = radii.general_radius(family, ns.p, ns.lam, x_tol=_CLI_X_TOL)
        else:
            _require(ns.gamma is not None, "give exactly one of --gamma and --lambda")
            if ns.m > 0:
                result = radii.shifted_disk_radius_m(
                    family, ns.p, ns.gamma, ns.m, x_tol=_CLI_X_TOL
                )
            else:
                result = radii.shifted_disk_radius(family, ns.p, ns.gamma, x_tol=_CLI_X_TOL)
    print(_num(result.root), file=out)
    print(f"residual {result.residual:.3e}", file=out)
    return 0


def _write_or_print(text: str, path: Optional[str], out) -> None:
    if path is None:
        out.write(text)
        if not text.endswith("\n"):
            out.write("\n")
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_table(ns: argparse.Namespace, out) -> int:
    _require(1 <= ns.id <= 6, "--id must be in 1..6")
    spec = report.reproduce_table(ns.id)
    _write_or_print(report.emit(spec, ns.format), ns.out, out)
    return 0


def _cmd_curve(ns: argparse.Namespace, out) -> int:
    gammas = _parse_floats(ns.gamma_list, "--gamma-list")
    for g in gammas:
        _require(0.0 <= g <= 1.0, "--gamma-list entries must lie in [0, 1]")
    _require(ns.samples >= 2, "--samples must be >= 2")
    if ns.tag == "G":
        _require(ns.p is not None, "--p is required for --tag G")
        _require(1.0 <= ns.p <= 2.0, "--p must lie in [1, 2]")
        base = {"p": ns.p}
    elif ns.tag == "C":
        _require(ns.alpha is not None, "--alpha is required for --tag C")
        _require(ns.alpha > -1.0, "--alpha must be > -1")
        base = {"alpha": ns.alpha}
    else:
        _require(ns.m is not None and ns.beta is not None,
                 "--m and --beta are required for --tag B")
        _require(ns.m >= 0, "--m must be >= 0")
        _require(ns.m + ns.beta > 0.0, "--m + --beta must be > 0")
        base = {"m": ns.m, "beta": ns.beta}

    for g in gammas:
        params = dict(base, gamma=g)
        curve = report.sample_curve(ns.tag, params, ns.samples)
        text = report.emit(curve, ns.format)
        if ns.out is None:
            flat = " ".join(f"{k}={v:g}" for k, v in sorted(params.items()))
            out.write(f"# tag={ns.tag} {flat}\n")
            out.write(text)
        else:
            path = Path(ns.out)
            if len(gammas) > 1:
                path = path.with_name(f"{path.stem}_g{g:g}{path.suffix}")
            path.write_text(text, encoding="utf-8")
    return 0


def _cmd_verify(ns: argparse.Namespace, out) -> int:
    _check_gamma_p(ns.gamma, ns.p)
    _require(ns.m >= 0, "--m must be >= 0")
    _require(0.0 < ns.r < 1.0, "--r must lie in (0, 1)")
    family = _family_from_flags(ns.family, ns.alpha, ns.beta, ns.m)
    schedule = None
    if ns.a_list is not None:
        schedule = _parse_floats(ns.a_list, "--a-list")
        for a in schedule:
            _require(0.0 < a < 1.0, "--a-list entries must lie in (0, 1)")
    if ns.m > 0:
        result = radii.shifted_disk_radius_m(family, ns.p, ns.gamma, ns.m)
    else:
        result = radii.shifted_disk_radius(family, ns.p, ns.gamma)
    radius = result.root
    below = max(radius - ns.r, 0.0)
    above = min(radius + ns.r, weights.R_MAX)
    hit_below = extremal.sharpness_witness(family, ns.p, ns.gamma, ns.m, below, schedule)
    hit_above = extremal.sharpness_witness(family, ns.p, ns.gamma, ns.m, above, schedule)
    print(f"radius {_num(radius)}", file=out)
    if hit_below is None:
        print(f"below r={_num(below)} witness none", file=out)
    else:
        print(f"below r={_num(below)} witness a={_num(hit_below[0])} "
              f"margin {hit_below[1]:.3e}", file=out)
    if hit_above is None:
        print(f"above r={_num(above)} witness none", file=out)
    else:
        print(f"above r={_num(above)} witness a={_num(hit_above[0])} "
              f"margin {hit_above[1]:.3e}", file=out)
    ok = hit_below is None and hit_above is not None
    print("verdict ok" if ok else "verdict mismatch", file=out)
    return 0 if ok else 1


def _cmd_sum(ns: argparse.Namespace, out) -> int:
    _require(ns.p >= 1.0, "--p must be >= 1")
    family = _family_from_flags(ns.family, ns.alpha, ns.beta, ns.m0)
    try:
        payload = json.loads(Path(ns.coeffs).read_text(encoding="utf-8"))
    except OSError as exc:
        raise _UsageError(f"cannot read --coeffs file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _UsageError(f"--coeffs file is not valid JSON: {exc}") from exc
    try:
        coeffs = CoefficientSequence.from_json_dict(payload)
    except DomainError as exc:
        raise _UsageError(str(exc)) from exc

    if ns.q is not None:
        _require(ns.q >= 1.0, "--q must be >= 1")
        value = bohr.function_radius(coeffs, family, ns.p, ns.q)
        if ns.format == "json":
            print(json.dumps({"function_radius": value}), file=out)
        else:
            print(_num(value), file=out)
        return 0

    _require(ns.r is not None, "--r is required unless --q is given")
    _require(0.0 <= ns.r <= weights.R_MAX, "--r must lie in [0, 1)")
    rep = bohr.majorant_sum(coeffs, family, ns.p, ns.r)
    if ns.format == "json":
        print(json.dumps({
            "r": rep.r,
            "value": rep.value,
            "bound": rep.bound,
            "satisfied": rep.satisfied,
            "truncation_terms": rep.truncation_terms,
            "tail_bound": rep.tail_bound,
        }), file=out)
    else:
        print(f"value {_num(rep.value)}", file=out)
        print(f"bound {_num(rep.bound)}", file=out)
        print(f"tail_bound {rep.tail_bound:.3e}", file=out)
        print(f"terms {rep.truncation_terms}", file=out)
        print(f"satisfied {'true' if rep.satisfied else 'false'}", file=out)
    return 0


def _cmd_bounds(ns: argparse.Namespace, out) -> int:
    _require(1.0 < ns.p < 2.0, "--p must lie strictly between 1 and 2")
    lower, upper = radii.djakov_ramanujan_bounds(ns.p)
    print(f"lower {_num(lower)}", file=out)
    print(f"upper {_num(upper)}", file=out)
    return 0


_HANDLERS = {
    "radius": _cmd_radius,
    "table": _cmd_table,
    "curve": _cmd_curve,
    "verify": _cmd_verify,
    "sum": _cmd_sum,
    "bounds": _cmd_bounds,
}


def run(argv: List[str], out=None) -> int:
    """Execute one invocation; returns the exit status."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else 2
    spec = CommandSpec(
        subcommand=ns.subcommand,
        flags=vars(ns),
        output_path=getattr(ns, "out", None),
        format=getattr(ns, "format", "plain"),
    )
    try:
        return _HANDLERS[spec.subcommand](ns, out)
    except _UsageError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except BohradError as exc:
        print(f"{PROG}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = ["CommandSpec", "build_parser", "run", "main"]
