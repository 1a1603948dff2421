"""Command-line front end emitting experiment data as CSV tables.

Subcommands: ``spectrum`` (eigenvalue pair per frequency), ``optimize``
(closed form vs. numeric optimum report), ``sweep`` (parameter grids to
CSV), ``validate`` (invariant suite) and ``crossover`` (smoother
break-even penalty).  Floats are written in shortest round-trip form and
``inf`` encodes the pure diffusion limit, so output is lossless and
byte-reproducible.
"""

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

from .closed_forms import eigs_closed_form, lfa_spectral_radius
from .config import BOUNDARY_MODES, DIRICHLET, SMOOTHERS, ProblemConfig
from .optimal import (
    NonUnimodalError,
    alpha_opt,
    alpha_opt_numeric,
    crossover_check,
)
from .twolevel import build_iteration_matrix, spectral_radius_dense, two_level_components
from .validate import run_validation

_OPTIMIZE_TOLERANCES = {
    "poisson": 1e-6,
    "rd-point": 1e-4,
    "rd-cell": 2e-3,
}


def _fmt(value) -> str:
    return repr(float(value))


def _parse_grid(text: str, parser, flag: str, allow_inf: bool = False):
    """Parse ``value``, ``v1,v2,...`` or ``lo:hi:step`` into a float list."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            pieces = part.split(":")
            if len(pieces) != 3:
                parser.error(f"{flag}: range must be lo:hi:step, got {part!r}")
            lo, hi, step = (float(p) for p in pieces)
            if step <= 0.0 or hi < lo:
                parser.error(f"{flag}: bad range {part!r}")
            n = int(math.floor((hi - lo) / step + 0.5))
            values.extend(lo + i * step for i in range(n + 1) if lo + i * step <= hi + step / 2)
        elif allow_inf and part.lower() == "inf":
            values.append(math.inf)
        else:
            try:
                values.append(float(part))
            except ValueError:
                parser.error(f"{flag}: cannot parse {part!r}")
    if not values:
        parser.error(f"{flag}: empty grid")
    return values


@contextmanager
def _output(path: str):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            yield fh


def _add_common(sub, alpha_default="opt"):
    sub.add_argument("--smoother", choices=SMOOTHERS, required=True)
    sub.add_argument("--delta0", default="2", help="value, list v1,v2 or range lo:hi:step")
    sub.add_argument("--gamma", default="inf", help="value, inf, or list")
    sub.add_argument("--alpha", default=alpha_default, help="value, 'opt', or range")
    sub.add_argument("--cells", type=int, default=64)
    sub.add_argument("--bc", choices=BOUNDARY_MODES, default=DIRICHLET)
    sub.add_argument("--out", default="-", help="output path or - for stdout")


def _resolve_alpha(text, parser, config, kind):
    if text.strip().lower() == "opt":
        return [alpha_opt(config, kind).alpha_opt]
    return _parse_grid(text, parser, "--alpha")


def cmd_spectrum(args, parser) -> int:
    delta0 = _parse_grid(args.delta0, parser, "--delta0")
    gamma = _parse_grid(args.gamma, parser, "--gamma", allow_inf=True)
    if len(delta0) != 1 or len(gamma) != 1:
        parser.error("spectrum expects a single --delta0 and --gamma")
    config = ProblemConfig(args.cells, delta0[0], gamma[0], args.bc)
    alphas = _resolve_alpha(args.alpha, parser, config, args.smoother)
    if len(alphas) != 1:
        parser.error("spectrum expects a single --alpha")
    alpha = alphas[0]
    with _output(args.out) as out:
        out.write("k,c_k,lambda_plus,lambda_minus\n")
        for k in range(1, config.cells // 2 + 1):
            ck = math.cos(4.0 * math.pi * k / config.cells)
            pair = eigs_closed_form(ck, config, args.smoother, alpha)
            out.write(
                f"{k},{_fmt(ck)},{_fmt(pair.lambda_plus)},{_fmt(pair.lambda_minus)}\n"
            )
    return 0


def cmd_optimize(args, parser) -> int:
    delta0 = _parse_grid(args.delta0, parser, "--delta0")
    gamma = _parse_grid(args.gamma, parser, "--gamma", allow_inf=True)
    if len(delta0) != 1 or len(gamma) != 1:
        parser.error("optimize expects a single --delta0 and --gamma")
    config = ProblemConfig(args.cells, delta0[0], gamma[0], args.bc)
    formula = alpha_opt(config, args.smoother)
    try:
        numeric = alpha_opt_numeric(config, args.smoother)
    except NonUnimodalError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    case = "poisson" if config.is_poisson else f"rd-{args.smoother}"
    tol = _OPTIMIZE_TOLERANCES[case]
    gap = abs(formula.alpha_opt - numeric.alpha_opt)
    agrees = gap <= tol
    with _output(args.out) as out:
        out.write(f"alpha_opt_formula={_fmt(formula.alpha_opt)}\n")
        out.write(f"alpha_opt_numeric={_fmt(numeric.alpha_opt)}\n")
        out.write(f"rho_formula={_fmt(formula.rho_predicted)}\n")
        out.write(f"rho_numeric={_fmt(numeric.rho_predicted)}\n")
        out.write(f"branch={formula.branch}\n")
        out.write(f"agreement_tolerance={_fmt(tol)}\n")
        out.write(f"agrees={'true' if agrees else 'false'}\n")
    return 0 if agrees else 1


def cmd_sweep(args, parser) -> int:
    delta0 = _parse_grid(args.delta0, parser, "--delta0")
    gamma = _parse_grid(args.gamma, parser, "--gamma", allow_inf=True)
    kind = args.smoother

    def rows_for(point):
        d0, g = point
        config = ProblemConfig(args.cells, d0, g, args.bc)
        alphas = _resolve_alpha(args.alpha, parser, config, kind)
        rows = []
        for a in alphas:
            row = [d0, g, a, lfa_spectral_radius(config, kind, a)]
            if args.dense:
                E = build_iteration_matrix(two_level_components(config, kind, a))
                row.append(spectral_radius_dense(E))
            rows.append(row)
        return rows

    grid = [(d0, g) for d0 in delta0 for g in gamma]
    with ThreadPoolExecutor() as pool:
        blocks = list(pool.map(rows_for, grid))
    with _output(args.out) as out:
        header = "delta0,gamma,alpha,rho_lfa"
        out.write(header + (",rho_dense\n" if args.dense else "\n"))
        for block in blocks:
            for row in block:
                out.write(",".join(_fmt(v) for v in row) + "\n")
    return 0


def cmd_validate(args, parser) -> int:
    checks = run_validation(cells=args.cells)
    with _output(args.out) as out:
        for check in checks:
            out.write(check.line() + "\n")
        failed = [c for c in checks if not c.passed]
        out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return 1 if failed else 0


def cmd_crossover(args, parser) -> int:
    gamma = _parse_grid(args.gamma, parser, "--gamma", allow_inf=True)
    if len(gamma) != 1:
        parser.error("crossover expects a single --gamma")
    try:
        lo, hi = crossover_check(gamma[0])
    except RuntimeError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    with _output(args.out) as out:
        out.write("delta0_lo,delta0_hi\n")
        out.write(f"{_fmt(lo)},{_fmt(hi)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgtwolevel",
        description="Two-level solver analysis for interior-penalty reaction-diffusion problems",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("spectrum", help="eigenvalue pair per frequency as CSV")
    _add_common(sub)
    sub.set_defaults(func=cmd_spectrum)

    sub = subs.add_parser("optimize", help="closed-form vs numeric optimum report")
    _add_common(sub)
    sub.set_defaults(func=cmd_optimize)

    sub = subs.add_parser("sweep", help="parameter sweep as CSV")
    _add_common(sub, alpha_default="opt")
    sub.add_argument("--dense", action="store_true", help="add assembled-matrix spectral radius")
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("validate", help="run the cross-module invariant suite")
    sub.add_argument("--cells", type=int, default=64)
    sub.add_argument("--out", default="-")
    sub.set_defaults(func=cmd_validate)

    sub = subs.add_parser("crossover", help="bracket the smoother break-even penalty")
    sub.add_argument("--gamma", default="inf")
    sub.add_argument("--out", default="-")
    sub.set_defaults(func=cmd_crossover)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
