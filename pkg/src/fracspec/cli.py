"""Command-line surface: theta, cn, morse, bifurcate, regime.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
2 validation error (bad arguments, out-of-regime parameters, malformed
files), 3 numerical-integrity error. Every number printed is the
library value formatted at 15 significant digits; JSON payloads carry
a top-level `schema: 1`.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bifurcation import (
    DEFAULT_REFINE_TOL,
    DEFAULT_SCAN_RESOLUTION,
    detect_instants,
    load_path_file,
)
from .errors import ConvergenceError, DomainError, NumericalIntegrityError
from .morse import (
    SurfaceSpectrum,
    check_bifurcation_inequality,
    jacobi_threshold,
    morse_index_nullity,
)
from .symbol import (
    BCoordinate,
    HalfAxisPoint,
    SpectralParams,
    q_gamma_trivial,
    theta,
    theta_eigenvalue,
    xi_const,
)
from .thresholds import cn_table, solve_cn

__all__ = ["main", "entry"]

SCHEMA_VERSION = 1


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _diag(text: str) -> None:
    sys.stderr.write(text if text.endswith("\n") else text + "\n")


def _params_from(args: argparse.Namespace) -> SpectralParams:
    missing = [f for f in ("n", "k", "gamma") if getattr(args, f, None) is None]
    if missing:
        raise DomainError(f"missing required parameter(s): {', '.join('--' + m for m in missing)}")
    return SpectralParams(args.n, args.k, args.gamma)


def _print_value(args: argparse.Namespace, name: str, value: float) -> None:
    fmt = args.format or "pretty"
    if fmt == "json":
        _emit(json.dumps({"schema": SCHEMA_VERSION, name: value}))
    elif fmt == "csv":
        _emit(f"{name}\n{_fmt(value)}")
    else:
        _emit(f"{name} = {_fmt(value)}")


def _cmd_theta(args: argparse.Namespace) -> int:
    params = _params_from(args)
    grid_mode = args.grid is not None
    point_mode = args.a is not None or args.b is not None or args.beta is not None
    eig_mode = args.m is not None or args.lam is not None
    if sum((grid_mode, point_mode, eig_mode)) != 1:
        raise DomainError(
            "choose exactly one of: --m/--lambda, --a with --b or --beta, --grid M L"
        )
    if eig_mode:
        if args.m is None or args.lam is None:
            raise DomainError("--m and --lambda must be given together")
        value = theta_eigenvalue(args.m, args.lam, params)
        _print_value(args, "theta", value)
        return 0
    if point_mode:
        if args.a is None or (args.b is None) == (args.beta is None):
            raise DomainError("--a requires exactly one of --b (real) or --beta (imaginary)")
        coord = (
            BCoordinate.real_axis(args.b)
            if args.b is not None
            else BCoordinate.imaginary_axis(args.beta)
        )
        value = theta(HalfAxisPoint(args.a, coord), params)
        _print_value(args, "theta", value)
        return 0
    m_max, l_max = args.grid
    if m_max < 0 or l_max < 0:
        raise DomainError("--grid arguments must be nonnegative")
    if args.spectrum is None:
        raise DomainError("--grid needs --spectrum FILE for the lambda values")
    spectrum = SurfaceSpectrum.from_file(args.spectrum)
    if l_max >= len(spectrum.eigenvalues):
        raise DomainError(
            f"grid needs lambda_0..lambda_{l_max} but the file lists only "
            f"{len(spectrum.eigenvalues)}"
        )
    header = ["ell", "lambda"] + [f"theta_m{m}" for m in range(m_max + 1)]
    lines = [",".join(header)]
    for ell in range(l_max + 1):
        lam = spectrum.eigenvalues[ell]
        row = [str(ell), _fmt(lam)]
        row += [_fmt(theta_eigenvalue(m, lam, params)) for m in range(m_max + 1)]
        lines.append(",".join(row))
    _emit("\n".join(lines))
    return 0


def _cmd_cn(args: argparse.Namespace) -> int:
    tol = args.tol if args.tol is not None else 1e-12
    records = cn_table(args.n_min, args.n_max, tol=tol)
    if (args.format or "csv") == "json":
        _emit(json.dumps({"schema": SCHEMA_VERSION, "records": [r.to_dict() for r in records]}))
        return 0
    lines = ["n,c_n,residual,gap_to_asymptote"]
    for r in records:
        lines.append(
            f"{r.n},{_fmt(r.c_n)},{_fmt(r.residual)},{_fmt(r.gap_to_asymptote)}"
        )
    _emit("\n".join(lines))
    return 0


def _cmd_morse(args: argparse.Namespace) -> int:
    params = _params_from(args)
    spectrum = SurfaceSpectrum.from_file(args.spectrum)
    report = morse_index_nullity(spectrum, params, null_tol=args.null_tol)
    if not report.complete:
        _diag(
            "warning: truncation bound cannot certify the count; eigenvalues "
            "beyond the file could still contribute (complete=false)"
        )
    payload = {"schema": SCHEMA_VERSION, **report.to_dict()}
    if (args.format or "json") == "pretty":
        _emit(
            f"index = {report.index}\nnullity = {report.nullity}\n"
            f"threshold = {_fmt(report.threshold)}\ncomplete = {str(report.complete).lower()}"
        )
    else:
        _emit(json.dumps(payload))
    return 0


def _cmd_bifurcate(args: argparse.Namespace) -> int:
    path, meta = load_path_file(args.path)
    for field, cast in (("n", int), ("k", int), ("gamma", float)):
        if getattr(args, field) is None and field in meta:
            try:
                setattr(args, field, cast(meta[field]))
            except ValueError as exc:
                raise DomainError(f"{args.path}: bad metadata {field}={meta[field]!r}") from exc
    params = _params_from(args)
    report = detect_instants(
        path,
        params,
        scan_resolution=args.resolution,
        refine_tol=args.refine_tol,
        null_tol=args.null_tol,
    )
    for w in report.warnings:
        _diag(f"warning: {w}")
    if args.plot_data is not None:
        n_tracks = len(path.tracks)
        lines = [
            "t," + ",".join(f"theta_l{j}" for j in range(1, n_tracks + 1)) + ",threshold"
        ]
        samples = args.resolution
        for i in range(samples + 1):
            t = i / samples
            row = [_fmt(t)]
            row += [
                _fmt(theta_eigenvalue(0, tr(t), params)) for tr in path.tracks
            ]
            row.append(_fmt(report.threshold))
            lines.append(",".join(row))
        with open(args.plot_data, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        _diag(f"plot data written to {args.plot_data}")
    payload = {"schema": SCHEMA_VERSION, **report.to_dict()}
    if (args.format or "json") == "pretty":
        _emit(
            f"jump_total = {report.jump_total}\ninstants = {len(report.instants)}\n"
            + "\n".join(
                f"  t* = {_fmt(i.t_star)}  track {i.ell}  direction {i.direction:+d}"
                for i in report.instants
            )
        )
    else:
        _emit(json.dumps(payload))
    return 0


def _cmd_regime(args: argparse.Namespace) -> int:
    n_min, n_max = args.n_range
    if n_min < 3 or n_min > n_max:
        raise DomainError(f"need 3 <= n_min <= n_max, got {n_min}, {n_max}")
    steps = args.gamma_steps
    if steps < 1:
        raise DomainError(f"--gamma-steps must be >= 1, got {steps}")
    k = args.k if args.k is not None else 1
    lines = ["n,gamma,k,in_regime,q_gamma,xi,inequality_holds"]
    for n in range(n_min, n_max + 1):
        for j in range(1, steps + 1):
            g = j * (n / 2.0) / (steps + 1)
            params = SpectralParams(n, k, g)
            in_regime = k < n / 2.0 - g
            try:
                q = q_gamma_trivial(params, allow_out_of_regime=True)
                q_txt = _fmt(q)
            except DomainError:
                q_txt = ""
            xi_txt = ineq_txt = ""
            if k == 1 and g < n / 2.0 - 1.0:
                xi_txt = _fmt(xi_const(params))
                ineq_txt = str(check_bifurcation_inequality(params).holds).lower()
            lines.append(
                f"{n},{_fmt(g)},{k},{str(in_regime).lower()},{q_txt},{xi_txt},{ineq_txt}"
            )
    _emit("\n".join(lines))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracspec",
        description=(
            "Spectral computations for the fractional conformal operator on "
            "sphere-hyperbolic products: eigenvalues, Morse counts, "
            "bifurcation constants, and crossing detection."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, help="ambient dimension n >= 3")
        p.add_argument("--k", type=int, help="singular-set dimension")
        p.add_argument("--gamma", type=float, help="fractional order in (0, n/2)")
        p.add_argument(
            "--format", choices=("csv", "json", "pretty"), default=None,
            help="output format (default depends on the subcommand)",
        )

    p_theta = sub.add_parser("theta", help="evaluate the symbol / operator eigenvalues")
    add_params(p_theta)
    p_theta.add_argument("--m", type=int, help="spherical mode index")
    p_theta.add_argument("--lambda", dest="lam", type=float, help="surface Laplace eigenvalue")
    p_theta.add_argument("--a", type=float, help="raw first coordinate")
    p_theta.add_argument("--b", type=float, help="raw real second coordinate")
    p_theta.add_argument("--beta", type=float, help="raw imaginary part of the second coordinate")
    p_theta.add_argument("--grid", nargs=2, type=int, metavar=("M", "L"),
                         help="emit the (m, l) eigenvalue table up to M, L")
    p_theta.add_argument("--spectrum", help="spectrum file for --grid")
    p_theta.set_defaults(func=_cmd_theta)

    p_cn = sub.add_parser("cn", help="bifurcation constants c_n")
    p_cn.add_argument("--n-min", dest="n_min", type=int, required=True)
    p_cn.add_argument("--n-max", dest="n_max", type=int, required=True)
    p_cn.add_argument("--tol", type=float, default=None, help="root tolerance on c (default 1e-12)")
    p_cn.add_argument("--format", choices=("csv", "json"), default=None)
    p_cn.set_defaults(func=_cmd_cn)

    p_morse = sub.add_parser("morse", help="Morse index and nullity from a spectrum file")
    add_params(p_morse)
    p_morse.add_argument("--spectrum", required=True, help="surface spectrum file")
    p_morse.add_argument("--null-tol", dest="null_tol", type=float, default=None,
                         help="nullity band half-width (default 1e-9 * threshold)")
    p_morse.set_defaults(func=_cmd_morse)

    p_bif = sub.add_parser("bifurcate", help="degeneracy instants along a spectral path")
    add_params(p_bif)
    p_bif.add_argument("--path", required=True, help="spectral path file")
    p_bif.add_argument("--resolution", type=int, default=DEFAULT_SCAN_RESOLUTION)
    p_bif.add_argument("--refine-tol", dest="refine_tol", type=float, default=DEFAULT_REFINE_TOL)
    p_bif.add_argument("--null-tol", dest="null_tol", type=float, default=None)
    p_bif.add_argument("--plot-data", dest="plot_data", default=None,
                       help="write per-track theta curves and the threshold to this CSV")
    p_bif.set_defaults(func=_cmd_bifurcate)

    p_reg = sub.add_parser("regime", help="regime map rows for heat-map plotting")
    p_reg.add_argument("--n-range", dest="n_range", nargs=2, type=int, required=True,
                       metavar=("N_MIN", "N_MAX"))
    p_reg.add_argument("--gamma-steps", dest="gamma_steps", type=int, required=True)
    p_reg.add_argument("--k", type=int, default=1)
    p_reg.set_defaults(func=_cmd_regime)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a message; normalize its code
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except DomainError as exc:
        _diag(f"error: {exc}")
        return 2
    except (NumericalIntegrityError, ConvergenceError) as exc:
        _diag(f"numerical integrity error: {exc}")
        return 3
    except OSError as exc:
        _diag(f"error: {exc}")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
