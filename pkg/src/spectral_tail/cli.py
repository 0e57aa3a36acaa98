"""Command-line front end.

Every subcommand writes CSV (17 significant digits, ``\\n`` line endings)
to ``--output`` or standard output.  Exit codes: 0 success, 1 usage or
domain error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from . import coeffbounds as cb
from . import quadrature as qd
from .errors import DomainError, NumericalError, PrecisionError
from .expand import TEST_FUNCTIONS, basis_rescale, exact_coeffs, expansion_coeffs
from .figures import FIGURE_IDS, figure_table
from .sigma import sigma_table
from .verify import run_suite

__all__ = ["main", "build_parser", "format_value", "write_csv"]

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this project reserves 2 for verification."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_value(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def write_csv(columns: Sequence[str], rows: Iterable[Sequence], stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([format_value(v) for v in r])


def _threads() -> int:
    raw = os.environ.get("SPECTRAL_TAIL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"SPECTRAL_TAIL_THREADS must be an integer, got {raw!r}") from None


def _pmap(fn: Callable, items: list) -> list:
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _rhos(args) -> list[float]:
    if args.grid:
        try:
            vals = [float(t) for t in args.grid.split(",") if t.strip()]
        except ValueError:
            raise UsageError(f"--grid must be a comma-separated list of rho values, got {args.grid!r}") from None
    else:
        vals = [args.rho]
    for r in vals:
        if not (r > 1 and math.isfinite(r)):
            raise UsageError(f"rho must exceed 1, got {r}")
    return sorted(set(vals))


def _bound_row(b: cb.BoundReport) -> tuple:
    return (b.method, b.n, b.alpha, b.beta, b.rho, b.M, b.value, b.stripped_value, b.constant_mode)


_BOUND_COLS = ("method", "n", "alpha", "beta", "rho", "M", "value", "stripped_value", "constant_mode")


# -- subcommands --------------------------------------------------------------


def cmd_sigma(args):
    ns = list(range(args.nmax + 1))
    tables = _pmap(lambda n: sigma_table(n, args.alpha, args.beta, args.lmax, args.method), ns)
    rows = [(t.n, j, t.alpha, t.beta, t.method, v) for t in tables for j, v in enumerate(t.values)]
    return ("n", "j", "alpha", "beta", "method", "value"), rows


def _coeff_bounds_for(n, a, b, rho, M, mode):
    out = [cb.bound_jacobi(n, a, b, rho, M), cb.bound_xiang(n, a, b, rho, M)]
    if a == b:
        out.append(cb.bound_gegenbauer(n, a, rho, M))
    if (a, b) == (0.0, 0.0) and n >= 1:
        out += [
            cb.bound_legendre(n, rho, M, "explicit" if mode == "explicit" else "asymptotic"),
            cb.bound_xiang_legendre(n, rho, M),
            cb.bound_davis(n, rho, M),
            cb.bound_kambo_legendre(n, rho, M),
        ]
    if (a, b) == (-0.5, -0.5):
        out.append(cb.bound_chebyshev(n, rho, M))
    if (a, b) == (0.5, 0.5):
        out += [cb.bound_chebyshev2(n, rho, M, "A"), cb.bound_chebyshev2(n, rho, M, "B")]
    if (a, b) == (1.5, 0.5):
        out.append(cb.bound_cheb_type_3_2_1_2(n, rho, M))
    if (a, b) == (1.0, 0.0):
        out.append(cb.bound_leg_type_1_0(n, rho, M))
    return out


def cmd_coeff_bounds(args):
    keys = [(rho, n) for rho in _rhos(args) for n in range(1, args.nmax + 1)]
    res = _pmap(lambda k: _coeff_bounds_for(k[1], args.alpha, args.beta, k[0], args.M, args.constant_mode), keys)
    rows = sorted(_bound_row(b) for group in res for b in group)
    return _BOUND_COLS, rows


def cmd_trunc_bounds(args):
    rows = []
    for rho in _rhos(args):
        for N in range(1, args.bign + 1):
            rows.append(_bound_row(cb.truncation_bound(N, args.alpha, args.beta, rho, args.M, args.constant_mode)))
            if (args.alpha, args.beta) == (0.0, 0.0):
                rows.append(_bound_row(cb.truncation_bound_legendre(N, rho, args.M, args.constant_mode)))
                rows.append(_bound_row(cb.truncation_bound_xiang(N, rho, args.M)))
    return _BOUND_COLS, sorted(rows)


def cmd_theta(args):
    prof = qd.theta_profile(args.n, args.alpha, args.lmax)
    rows = [(prof.n, prof.alpha, l, float(t), int(l == prof.argmax_l)) for l, t in enumerate(prof.theta)]
    return ("n", "alpha", "l", "theta", "is_argmax"), rows


def _quad_bounds_for(n, a, rho, M, mode):
    out = [qd.bound_quad_computable(n, a, rho, M), qd.bound_quad_computable(n, a, rho, M, form="series")]
    out.append(qd.bound_quad_literature("hunter_general", n, a, rho, M))
    if a != -0.5:
        out.append(qd.bound_quad_gegenbauer(n, a, rho, M, mode))
    if a == -0.5:
        out.append(qd.bound_quad_literature("chawla_cheb", n, a, rho, M))
    if a == 0.5:
        out.append(qd.bound_quad_literature("hunter_cheb2", n, a, rho, M))
    if a == 0.0:
        out.append(qd.bound_quad_legendre(n, rho, M, mode))
        if rho > math.sqrt(2):
            out.append(qd.bound_quad_literature("kambo_legendre", n, a, rho, M))
    return out


def cmd_quad_bounds(args):
    keys = [(rho, n) for rho in _rhos(args) for n in range(1, args.nmax + 1)]
    res = _pmap(lambda k: _quad_bounds_for(k[1], args.alpha, k[0], args.M, args.constant_mode), keys)
    rows = sorted((b.method, b.n, b.alpha, b.rho, b.M, b.value) for group in res for b in group)
    return ("method", "n", "alpha", "rho", "M", "value"), rows


def cmd_quad_verify(args):
    tf = TEST_FUNCTIONS[args.function]
    rows = []
    for rho in _rhos(args):
        if not rho < tf.function.rho_max:
            raise UsageError(f"{args.function} is analytic only for rho < {tf.function.rho_max}")
        M = tf.max_modulus(rho)
        for n in range(2, args.nmax + 1):
            E = abs(qd.quad_remainder(tf.function, n, args.alpha))
            for b in _quad_bounds_for(n, args.alpha, rho, M, args.constant_mode):
                rows.append((args.function, n, args.alpha, rho, b.method, E, b.value, int(E <= b.value)))
    rows.sort()
    status = EXIT_OK if all(r[-1] for r in rows) else EXIT_VERIFY
    return ("function", "n", "alpha", "rho", "method", "abs_remainder", "bound", "holds"), rows, status


def cmd_coeffs(args):
    tf = TEST_FUNCTIONS[args.function]
    rho = args.rho
    if not 1 < rho < tf.function.rho_max:
        raise UsageError(f"{args.function} needs 1 < rho < {tf.function.rho_max}")
    M = tf.max_modulus(rho)
    a, b = args.alpha, args.beta
    N = args.nmax + 1
    num = expansion_coeffs(tf.function, a, b, N)
    exact = None
    basis = "szego"
    if (a, b) == (-0.5, -0.5):
        basis = "T_basis"
        num = basis_rescale(num, basis)
        if args.function == "u1":
            exact = exact_coeffs("u1", N).coefficients
    elif (a, b) == (0.0, 0.0) and args.function == "u2":
        exact = exact_coeffs("u2", N).coefficients
    rows = []
    for n in range(N):
        if basis == "T_basis":
            fac = math.exp(math.lgamma(n + 0.5) - math.lgamma(n + 1)) / math.sqrt(math.pi)
            main = cb.bound_chebyshev(n, rho, M).value
            xiang = fac * cb.bound_xiang(n, a, b, rho, M).value
        elif (a, b) == (0.0, 0.0) and n >= 1:
            main = cb.bound_legendre(n, rho, M).value
            xiang = cb.bound_xiang_legendre(n, rho, M).value
        else:
            main = cb.bound_jacobi(n, a, b, rho, M).value
            xiang = cb.bound_xiang(n, a, b, rho, M).value
        ex = float(exact[n]) if exact is not None else float("nan")
        rows.append((n, a, b, basis, ex, float(num.coefficients[n]), main, xiang))
    return ("n", "alpha", "beta", "basis", "exact", "numerical", "bound_main", "bound_xiang"), rows


def cmd_figure(args):
    t = figure_table(args.id)
    return t.columns, t.rows


def cmd_verify(args):
    results = run_suite(quick=args.grid == "quick", perturb=args.perturb, rho=args.rho)
    width = max(len(r.name) for r in results)
    rows = [("PASS" if r.passed else "FAIL", r.name, r.detail) for r in results]
    for status, name, detail in rows:
        print(f"{status}  {name:<{width}}  {detail}")
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return None, None, EXIT_OK if ok else EXIT_VERIFY


# -- parser -------------------------------------------------------------------


def _positive_int(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _jacobi_param(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {s!r}") from None
    if not v > -1:
        raise argparse.ArgumentTypeError(f"Jacobi parameters must exceed -1, got {v}")
    return v


def _rho(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {s!r}") from None
    if not (v > 1 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"rho must exceed 1, got {v}")
    return v


def _common(p, *, alpha=0.0, beta=True, rho=2.0, nmax=20, grid=True, mode=False, M=False):
    p.add_argument("--alpha", type=_jacobi_param, default=alpha)
    if beta:
        p.add_argument("--beta", type=_jacobi_param, default=None, help="defaults to --alpha")
    p.add_argument("--rho", type=_rho, default=rho)
    p.add_argument("--nmax", type=_positive_int, default=nmax)
    if grid:
        p.add_argument("--grid", default=None, help="comma-separated rho values (overrides --rho)")
    if mode:
        p.add_argument("--constant-mode", choices=cb.CONSTANT_MODES, default="explicit")
    if M:
        p.add_argument("--M", type=float, default=1.0, help="max modulus of the function on the ellipse")
    p.add_argument("--output", default=None, help="CSV destination (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectral-tail", description="Error bounds for Jacobi expansions and Gauss quadrature.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sigma", help="sigma(n, j) table for one index pair")
    _common(p, nmax=10, grid=False)
    p.add_argument("--lmax", type=int, default=10, help="largest j")
    p.add_argument("--method", choices=("general_formula", "oracle", "closed_form"), default="general_formula")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("coeffs", help="numerical, exact and bounded coefficients of a test function")
    _common(p, alpha=-0.5, rho=1.98, nmax=30, grid=False)
    p.add_argument("--function", choices=tuple(TEST_FUNCTIONS), default="u1")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("coeff-bounds", help="coefficient bounds on an n-range")
    _common(p, mode=True, M=True)
    p.set_defaults(func=cmd_coeff_bounds)

    p = sub.add_parser("trunc-bounds", help="L2 truncation bounds")
    _common(p, mode=True, M=True)
    p.add_argument("--bign", type=_positive_int, default=20, help="largest truncation degree N")
    p.set_defaults(func=cmd_trunc_bounds)

    p = sub.add_parser("theta", help="theta_{n,l} profile")
    _common(p, alpha=0.5, beta=False, grid=False)
    p.add_argument("--n", type=_positive_int, default=36)
    p.add_argument("--lmax", type=_positive_int, default=250)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("quad-bounds", help="quadrature error bounds")
    _common(p, beta=False, mode=True, M=True)
    p.set_defaults(func=cmd_quad_bounds)

    p = sub.add_parser("quad-verify", help="compare actual remainders of a test function with every bound")
    _common(p, beta=False, rho=1.9, nmax=12, mode=True)
    p.add_argument("--function", choices=tuple(TEST_FUNCTIONS), default="u1")
    p.set_defaults(func=cmd_quad_verify)

    p = sub.add_parser("figure", help="data behind one figure panel")
    p.add_argument("--id", required=True, choices=FIGURE_IDS)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--grid", choices=("quick", "full"), default="full")
    p.add_argument("--rho", type=_rho, default=None, help="extra ellipse parameter for the ellipse check")
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "beta", 0.0) is None:
        args.beta = args.alpha
    try:
        result = args.func(args)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"spectral-tail: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, PrecisionError) as exc:
        print(f"spectral-tail: numerical failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    status = EXIT_OK
    if len(result) == 3:
        columns, rows, status = result
    else:
        columns, rows = result
    if columns is not None:
        buf = io.StringIO()
        write_csv(columns, rows, buf)
        if getattr(args, "output", None):
            with open(args.output, "w", newline="", encoding="utf-8") as fh:
                fh.write(buf.getvalue())
        else:
            sys.stdout.write(buf.getvalue())
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
