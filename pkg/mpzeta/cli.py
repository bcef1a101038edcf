#!/usr/bin/env python

#   MpZeta 1.0, boundary terms and mean-periodicity of zeta functions.
#               Copyright (C) 2022  The MpZeta developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#      the Free Software Foundation, either version 3 of the License, or
#                  (at your option) any later version.
#
#     This program is distributed in the hope that it will be useful,
#     but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#              GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see https://www.gnu.org/licenses/.


"""Command-line interface.

Every subcommand builds a ``RunConfig``, evaluates, and writes CSV, JSON or HDF5 output to ``--out`` or to the
standard output. The screen log goes to the standard error stream so that the output stays machine readable.
Exit codes: 0 on success, 1 on usage and configuration errors, 2 on numerical failures and on failed checks
under ``--strict``.
"""

import os
import sys
import json
import hashlib
import argparse

import numpy as np
import h5py

from mpzeta.log import log
from mpzeta.exceptions import NumericalError
from mpzeta.utils import load_curve, load_model
from mpzeta.lfunc.zeta import QuadField, riemann_zeta
from mpzeta.lfunc.elliptic import cached_ec_an
from mpzeta.lfunc.builders import (DEFAULT_DEPTH, build_riemann, build_dedekind, build_elliptic_l, build_Z_E,
    build_Z_E_squared, build_Z_K, build_Z_model)
from mpzeta.boundary.term import boundary_from_spec, boundary_riemann, boundary_E, boundary_E2
from mpzeta.boundary.zeros import (load_zeros, zeta_zero_scan, lzero_scan, argument_count, dedekind_zeta,
    DESK_HEIGHT)
from mpzeta.boundary.poles import pole_ledger_for_Z_E, pole_expansion, residue_ledger
from mpzeta.meanper.convolutor import build_convolutor_lambda_q, build_convolutor_V
from mpzeta.meanper.convolve import certify_mean_periodicity
from mpzeta.meanper.explicit import bump_function, truncated_gaussian, explicit_formula_check
from mpzeta.analytics.signscan import single_sign_scan
from mpzeta.analytics.appendix import good_ordinates
from mpzeta.mellin.series import theta_boundary_E_derivative, bessel_boundary_E2_derivative
from mpzeta.sampling.scan import GridScan
from mpzeta.sampling.writers import CSVWriter, HDF5Writer


__all__ = ["RunConfig", "main", "parse_complex", "build_parser"]


SPECS = ["riemann", "dedekind", "elliptic", "ZE", "ZE2", "ZK", "Zmodel"]
METHODS = ["contour", "theta", "bessel2", "poles"]


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError("%s: %s" % (self.prog, message))


class RunConfig(object):
    def __init__(self, command, label=None, grids=None, tolerances=None, paths=None):
        """The complete configuration of a run.

        Parameters
        ----------
        command : str
            The subcommand.
        label : str, optional
            The curve label or field discriminant the run is about.
        grids : dict, optional
            Grid and scan parameters, for instance ``{"t_from": -1, "t_to": 1, "t_step": 0.1}``. Entries whose
            name ends in ``step`` must be positive.
        tolerances : dict, optional
            Positive tolerances.
        paths : dict, optional
            ``zero_file``, ``cache_dir`` and ``out``. A zero file must exist.

        Raises
        ------
        ValueError
            If a step or tolerance is not positive, or a path does not resolve.
        """
        self.command = command
        self.label = label
        self.grids = {} if grids is None else dict(grids)
        self.tolerances = {} if tolerances is None else dict(tolerances)
        self.paths = {} if paths is None else dict(paths)
        for key, value in self.grids.items():
            if key.endswith("step") and value is not None and not value > 0:
                raise ValueError("The grid step %s must be positive, got %s." % (key, value))
        for key, value in self.tolerances.items():
            if value is not None and not value > 0:
                raise ValueError("The tolerance %s must be positive, got %s." % (key, value))
        zero_file = self.paths.get("zero_file")
        if zero_file is not None and not os.path.isfile(zero_file):
            raise ValueError("Zero file %s does not exist." % zero_file)
        cache_dir = self.paths.get("cache_dir")
        if cache_dir is not None and os.path.exists(cache_dir) and not os.path.isdir(cache_dir):
            raise ValueError("Cache path %s is not a directory." % cache_dir)

    def to_dict(self):
        # The cache and the output location do not change numbers.
        return {
            "command": self.command,
            "label": self.label,
            "grids": self.grids,
            "tolerances": self.tolerances,
            "zero_file": self.paths.get("zero_file"),
        }

    def config_hash(self):
        """The sha256 of the canonical JSON form of the configuration."""
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def __repr__(self):
        return "RunConfig(%r, label=%r)" % (self.command, self.label)


def parse_complex(text):
    """Parse ``2``, ``0.5+14.1i`` or ``0.5+14.1j`` into a complex number."""
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not a complex number" % text)


def _grid(start, stop, step):
    if not step > 0:
        raise ValueError("The grid step must be positive, got %s." % step)
    if stop < start:
        return np.zeros(0)
    n = int(np.floor((stop - start)/step + 1e-9))
    return start + step*np.arange(n + 1)


def _curve(args):
    if args.curve is None:
        raise ValueError("This command needs --curve.")
    curve = load_curve(args.curve)
    if args.cache_dir is not None:
        cached_ec_an(curve, args.depth, args.cache_dir)
    return curve


def _field(args):
    return QuadField(args.dK)


def _build_spec(args):
    if args.spec == "riemann":
        return build_riemann(args.depth)
    elif args.spec == "dedekind":
        return build_dedekind(_field(args), args.depth)
    elif args.spec == "ZK":
        return build_Z_K(_field(args), args.depth)
    curve = _curve(args)
    if args.spec == "elliptic":
        return build_elliptic_l(curve, args.depth)
    elif args.spec == "ZE":
        return build_Z_E(curve, args.depth)
    elif args.spec == "ZE2":
        return build_Z_E_squared(curve, args.depth)
    elif args.spec == "Zmodel":
        if args.model is None:
            raise ValueError("The function Zmodel needs --model.")
        return build_Z_model(curve, load_model(args.model), args.depth)
    raise ValueError("Unknown spec %s." % args.spec)


def _label(args):
    if getattr(args, "curve", None) is not None:
        return args.curve
    if getattr(args, "spec", None) in ("dedekind", "ZK"):
        return "dK=%i" % args.dK
    return getattr(args, "spec", None)


def _suffix(fn):
    return os.path.splitext(fn)[1].lower()


def _write_json(data, config, out):
    data = dict(data)
    data["config_hash"] = config.config_hash()
    text = json.dumps(data, indent=2, sort_keys=True)
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w") as f:
            f.write(text + "\n")


def _run_scan(config, grid, evaluators, variable, out):
    """Tabulate ``evaluators`` on ``grid`` and write the table according to the extension of ``out``."""
    if out is not None and _suffix(out) == ".json":
        scan = GridScan(grid, evaluators, variable)
        table = scan.scan()
        _write_json(dict((name, table[name].tolist()) for name in scan.columns), config, out)
        return table
    if out is None:
        scan = GridScan(grid, evaluators, variable, hooks=CSVWriter(sys.stdout, config.config_hash()))
        return scan.scan()
    if _suffix(out) == ".csv":
        scan = GridScan(grid, evaluators, variable, hooks=CSVWriter(out, config.config_hash()))
        return scan.scan()
    if _suffix(out) == ".h5":
        with h5py.File(out, "w") as f:
            scan = GridScan(grid, evaluators, variable, hooks=HDF5Writer(f, config.config_hash()))
            return scan.scan()
    raise ValueError("Unknown output format %s, use .csv, .json or .h5." % out)


def cmd_eval(args):
    """Print values of an L-function or completed function at one point."""
    config = RunConfig("eval", _label(args), {"s": [args.s.real, args.s.imag], "depth": args.depth},
                       {"tol": args.tol}, {"cache_dir": args.cache_dir})
    spec = _build_spec(args)
    s = args.s
    result = {"spec": spec.label, "s": [s.real, s.imag]}
    if args.spec == "riemann":
        value = complex(riemann_zeta(s))
        result["L"] = [value.real, value.imag]
    elif args.spec in ("dedekind", "elliptic"):
        value = complex(spec(s)/spec.gamma(s))
        result["L"] = [value.real, value.imag]
    completed = complex(spec(s))
    result["Z"] = [completed.real, completed.imag]
    sigma = max(s.real, spec.weight_d + 1.0 - s.real)
    bound = spec.coefficients.tail_bound(sigma)
    result["tail_bound"] = None if not np.isfinite(bound) else float(bound*abs(complex(spec.gamma(s))))
    if args.out is not None and _suffix(args.out) == ".json":
        _write_json(result, config, args.out)
        return 0
    lines = []
    if "L" in result:
        lines.append("L(s)      = %.10e %+.10ej" % tuple(result["L"]))
    lines.append("Z(s)      = %.10e %+.10ej" % tuple(result["Z"]))
    if result["tail_bound"] is not None:
        lines.append("tail      <= %.3e" % result["tail_bound"])
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as f:
            f.write(text)
    return 0


def _boundary_evaluator(method, curve, args):
    if method == "theta":
        return boundary_E(curve).H
    elif method == "bessel2":
        return boundary_E2(curve).H
    elif method == "contour":
        return boundary_from_spec(build_Z_E(curve, args.depth)).H
    elif method == "poles":
        if args.zeros is not None:
            zeros = load_zeros(args.zeros)
        else:
            zeros = lzero_scan(build_elliptic_l(curve, args.depth), 2.0*args.cutoff)
        ledger = pole_ledger_for_Z_E(curve, zeros, args.cutoff)
        return lambda t: pole_expansion(ledger, np.exp(-np.asarray(t, dtype=float)), args.cutoff)
    raise ValueError("Unknown boundary method %s." % method)


def cmd_boundary(args):
    """Tabulate H(t) = h(e^(-t)) of Z_E by one or more methods, with a difference column for two."""
    methods = args.method if args.method else ["theta"]
    if len(set(methods)) != len(methods):
        raise ValueError("Boundary methods must be distinct, got %s." % methods)
    config = RunConfig("boundary", args.curve,
                       {"t_from": args.t_from, "t_to": args.t_to, "t_step": args.t_step, "cutoff": args.cutoff,
                        "methods": methods, "depth": args.depth},
                       {"tol": args.tol}, {"zero_file": args.zeros, "cache_dir": args.cache_dir})
    curve = _curve(args)
    grid = _grid(args.t_from, args.t_to, args.t_step)
    evaluators = [(method, _boundary_evaluator(method, curve, args)) for method in methods]
    if len(methods) == 2:
        first, second = evaluators[0][1], evaluators[1][1]
        evaluators.append(("diff", lambda t: first(t) - second(t)))
    table = _run_scan(config, grid, evaluators, "t", args.out)
    if "diff" in table and len(grid) > 0:
        largest = float(np.max(np.abs(table["diff"])))
        sys.stderr.write("max |%s - %s| = %.6e\n" % (methods[0], methods[1], largest))
        if args.strict and args.tol is not None and largest > args.tol:
            return 2
    return 0


def cmd_certify(args):
    """Certify v *x h = 0 for the convolutor and boundary term of Lambda_Q or Z_E."""
    x_grid = np.logspace(np.log10(args.x_from), np.log10(args.x_to), args.x_num)
    label = args.curve if args.curve is not None else "riemann"
    config = RunConfig("certify", label,
                       {"x_from": args.x_from, "x_to": args.x_to, "x_num": args.x_num, "squared": args.squared,
                        "damping": args.damping, "perturb": args.perturb, "depth": args.depth},
                       {"tol": args.tol}, {"cache_dir": args.cache_dir})
    if args.curve is None:
        v = build_convolutor_lambda_q(damping=args.damping)
        h = boundary_riemann()
    else:
        curve = _curve(args)
        v = build_convolutor_V(curve, squared=args.squared, damping=args.damping, depth=args.depth)
        h = boundary_E2(curve) if args.squared else boundary_E(curve)
    if args.perturb != 0:
        h = h.perturbed(args.perturb, 0.25)
    threshold = args.tol if args.tol is not None else 1e-5
    report = certify_mean_periodicity(v, h, x_grid, threshold)
    _write_json(report.to_dict(), config, args.out)
    if args.strict and not report.passed:
        return 2
    return 0


def cmd_explicit(args):
    """Both sides of the explicit formula of Lambda_Q or Lambda_K for a bump or truncated Gaussian."""
    if args.spec not in ("riemann", "dedekind"):
        raise ValueError("The explicit formula is available for riemann and dedekind, not %s." % args.spec)
    config = RunConfig("explicit", _label(args),
                       {"x_lo": args.x_lo, "x_hi": args.x_hi, "family": args.family, "center": args.center,
                        "width": args.width, "scale": args.scale, "panels": args.panels, "depth": args.depth},
                       {"tol": args.tol}, {})
    spec = _build_spec(args)
    if args.family == "bump":
        testfn = bump_function(args.x_lo, args.x_hi)
    else:
        testfn = truncated_gaussian(args.center, args.width, args.x_lo, args.x_hi)
    if args.scale != 1.0:
        testfn = testfn.scaled(args.scale)
    ledger = residue_ledger(spec)
    lhs, rhs = explicit_formula_check(spec, testfn, ledger, args.panels)
    result = {"spec": spec.label, "testfn": testfn.label, "lhs": lhs, "rhs": rhs, "difference": lhs - rhs}
    if args.out is not None and _suffix(args.out) == ".json":
        _write_json(result, config, args.out)
    else:
        text = "lhs        = %.15e\nrhs        = %.15e\ndifference = %.3e\n" % (lhs, rhs, lhs - rhs)
        if args.out is None:
            sys.stdout.write(text)
        else:
            with open(args.out, "w") as f:
                f.write(text)
    tol = args.tol if args.tol is not None else 1e-8
    if args.strict and abs(lhs - rhs) > tol:
        return 2
    return 0


def cmd_signscan(args):
    """Tabulate a derivative of H_E or of the Bessel boundary term and report its sign changes."""
    config = RunConfig("signscan", args.curve,
                       {"t_from": args.t_from, "t_to": args.t_to, "t_step": args.t_step, "k": args.k,
                        "function": args.function},
                       {"tol": args.tol}, {"cache_dir": args.cache_dir})
    curve = _curve(args)
    xtol = args.tol if args.tol is not None else 1e-12
    report = single_sign_scan(curve, args.k, (args.t_from, args.t_to), args.t_step, args.function, xtol)
    if args.out is not None and _suffix(args.out) == ".json":
        _write_json(report.to_dict(), config, args.out)
    else:
        if args.function == "theta":
            func = lambda t: theta_boundary_E_derivative(curve, t, args.k)
        else:
            func = lambda t: bessel_boundary_E2_derivative(curve, t, args.k)
        grid = _grid(args.t_from, args.t_to, args.t_step)
        _run_scan(config, grid, [("value", func), ("sign", lambda t: np.sign(func(t)))], "t", args.out)
    sys.stderr.write("%i sign change(s), constant sign from t = %s\n" % (
        len(report.sign_changes), report.constant_sign_from))
    return 0


def _dirichlet_callable(args):
    if args.spec == "riemann":
        return riemann_zeta
    elif args.spec == "dedekind":
        field = _field(args)
        return lambda s: dedekind_zeta(field, s)
    raise ValueError("Good ordinates are scanned for riemann and dedekind, not %s." % args.spec)


def cmd_ordinates(args):
    """Good ordinates in (T, T + 1): min |L| over the strip at every sampled t and the fitted exponent A."""
    config = RunConfig("ordinates", _label(args),
                       {"T": args.T, "H": args.H, "sigma_from": args.sigma_from, "sigma_to": args.sigma_to},
                       {"tol": args.tol}, {})
    report = good_ordinates(_dirichlet_callable(args), args.T, args.H, (args.sigma_from, args.sigma_to))
    if args.out is not None and _suffix(args.out) == ".json":
        _write_json(report.to_dict(), config, args.out)
    else:
        # The scan runs over report.grid itself, so the columns are taken as they are.
        evaluators = [
            ("min_abs_L", lambda t: report.minima),
            ("accepted", lambda t: report.accepted_at(report.exponent_A).astype(float)),
        ]
        _run_scan(config, report.grid, evaluators, "t", args.out)
    sys.stderr.write("A = %.1f, excluded measure %.4f\n" % (report.exponent_A, report.excluded_measure_estimate))
    return 0


def cmd_zeros(args):
    """Zeros of zeta or of L(E, s) on the critical line up to a height."""
    config = RunConfig("zeros", _label(args), {"height": args.height, "step": args.step},
                       {"tol": args.tol}, {"cache_dir": args.cache_dir})
    xtol = args.tol if args.tol is not None else 1e-10
    if args.spec == "riemann":
        zeros = zeta_zero_scan(args.height, args.step, xtol)
        if args.height <= DESK_HEIGHT:
            sys.stderr.write("argument principle count %i\n" % argument_count(args.height))
    elif args.spec == "elliptic":
        zeros = lzero_scan(build_elliptic_l(_curve(args), args.depth), args.height, args.step, xtol)
    else:
        raise ValueError("Zero scans are available for riemann and elliptic, not %s." % args.spec)
    _run_scan(config, zeros.ordinates, [], "gamma", args.out)
    return 0


def build_parser():
    parser = _Parser(prog="mpzeta", description="Boundary terms, L-functions and mean-periodicity.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more screen output (repeatable)")
    parser.add_argument("-q", "--quiet", action="store_true", help="no screen output")
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="tolerance of the command")
    common.add_argument("--out", type=str, default=None, help="output file, .csv, .json or .h5")
    common.add_argument("--cache-dir", type=str, default=None, help="directory of coefficient caches")
    common.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                        help="Dirichlet coefficient depth (default 10^4; use 10^5 for conductors near 1000 at larger heights)")
    common.add_argument("--strict", action="store_true", help="exit with code 2 when a check fails")
    common.add_argument("--curve", type=str, default=None, help="curve label, such as 11a1, or JSON file")
    common.add_argument("--dK", type=int, default=1, help="fundamental discriminant of the quadratic field")
    common.add_argument("--model", type=str, default=None, help="model JSON file")
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = subparsers.add_parser("eval", parents=[common], help="evaluate at one point")
    p.add_argument("--spec", choices=SPECS, default="riemann")
    p.add_argument("--s", type=parse_complex, required=True, help="the argument, such as 0.5+14.1i")
    p.set_defaults(func=cmd_eval)

    t_grid = _Parser(add_help=False)
    t_grid.add_argument("--t-from", type=float, default=-1.0)
    t_grid.add_argument("--t-to", type=float, default=1.0)
    t_grid.add_argument("--t-step", type=float, default=0.1)

    p = subparsers.add_parser("boundary", parents=[common, t_grid], help="tabulate boundary terms")
    p.add_argument("--method", choices=METHODS, action="append")
    p.add_argument("--zeros", type=str, default=None, help="zero file of L(E, s) for the pole method")
    p.add_argument("--cutoff", type=float, default=10.0, help="pole height cutoff")
    p.set_defaults(func=cmd_boundary)

    p = subparsers.add_parser("certify", parents=[common], help="certify mean-periodicity")
    p.add_argument("--x-from", type=float, default=0.1)
    p.add_argument("--x-to", type=float, default=10.0)
    p.add_argument("--x-num", type=int, default=21)
    p.add_argument("--squared", action="store_true")
    p.add_argument("--damping", type=int, default=0)
    p.add_argument("--perturb", type=float, default=0.0, help="amplitude of an added x^(-1/4)")
    p.set_defaults(func=cmd_certify)

    p = subparsers.add_parser("explicit", parents=[common], help="check the explicit formula")
    p.add_argument("--spec", choices=SPECS, default="riemann")
    p.add_argument("--family", choices=["bump", "gauss"], default="bump")
    p.add_argument("--x-lo", type=float, default=0.5)
    p.add_argument("--x-hi", type=float, default=2.0)
    p.add_argument("--center", type=float, default=1.0)
    p.add_argument("--width", type=float, default=0.2)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--panels", type=int, default=16)
    p.set_defaults(func=cmd_explicit)

    p = subparsers.add_parser("signscan", parents=[common, t_grid], help="scan derivatives for sign changes")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--function", choices=["theta", "bessel2"], default="theta")
    p.set_defaults(func=cmd_signscan)

    p = subparsers.add_parser("ordinates", parents=[common], help="good ordinates in (T, T + 1)")
    p.add_argument("--spec", choices=SPECS, default="riemann")
    p.add_argument("--T", type=float, default=30.0)
    p.add_argument("--H", type=float, default=10.0)
    p.add_argument("--sigma-from", type=float, default=0.0)
    p.add_argument("--sigma-to", type=float, default=1.0)
    p.set_defaults(func=cmd_ordinates)

    p = subparsers.add_parser("zeros", parents=[common], help="zeros on the critical line")
    p.add_argument("--spec", choices=SPECS, default="riemann")
    p.add_argument("--height", type=float, default=50.0)
    p.add_argument("--step", type=float, default=0.05)
    p.set_defaults(func=cmd_zeros)
    return parser


def main(argv=None):
    parser = build_parser()
    log.set_file(sys.stderr)
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("No command given.")
        if args.quiet:
            log.set_level(log.silent)
        else:
            log.set_level([log.warning, log.medium, log.high][min(args.verbose, 2)])
        with log.section("CLI"):
            return args.func(args)
    except NumericalError as e:
        sys.stderr.write("mpzeta: numerical failure: %s\n" % e)
        return 2
    except (ValueError, IOError, NotImplementedError) as e:
        sys.stderr.write("mpzeta: %s\n" % e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
