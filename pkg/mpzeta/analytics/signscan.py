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


"""Single-sign diagnostics for boundary terms in the logarithmic variable."""

import json

import numpy as np

from scipy.optimize import brentq

from mpzeta.log import log, timer
from mpzeta.mellin.series import theta_boundary_E_derivative, bessel_boundary_E2_derivative
from mpzeta.mellin.transforms import mellin_carleman


__all__ = ["SignScanReport", "sign_scan", "single_sign_scan", "real_pole_probe"]


class SignScanReport(object):
    def __init__(self, derivative_order, t_range, grid_step, sign_changes, roots=None, label="f"):
        """The sign changes of a sampled function.

        Parameters
        ----------
        derivative_order : int
            The order k of the scanned derivative.
        t_range : tuple
            The interval (t_lo, t_hi).
        grid_step : float
            The sampling step.
        sign_changes : list of tuple
            Brackets (a, b) with a sign change of the samples.
        roots : list of float, optional
            The roots refined inside the brackets.
        label : str, optional
            An identifier of the scanned function.
        """
        self.derivative_order = int(derivative_order)
        self.t_range = (float(t_range[0]), float(t_range[1]))
        self.grid_step = float(grid_step)
        self.sign_changes = [(float(a), float(b)) for a, b in sign_changes]
        self.roots = [] if roots is None else [float(r) for r in roots]
        self.label = label

    @property
    def constant_sign_from(self):
        """The t_0 beyond which no sign change was found in the range."""
        if len(self.sign_changes) == 0:
            return self.t_range[0]
        return self.sign_changes[-1][1]

    def to_dict(self):
        return {
            "label": self.label,
            "derivative_order": self.derivative_order,
            "t_range": list(self.t_range),
            "grid_step": self.grid_step,
            "sign_changes": [list(b) for b in self.sign_changes],
            "roots": self.roots,
            "constant_sign_from": self.constant_sign_from,
        }

    def to_json(self, fn):
        with open(fn, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)

    def __repr__(self):
        return "SignScanReport(%r, k=%i, %i sign changes)" % (self.label, self.derivative_order,
                                                              len(self.sign_changes))


def sign_scan(func, t_range, step, derivative_order=0, label="f", xtol=1e-12):
    """Sample ``func`` on a grid over ``t_range`` and bracket its sign changes.

    Parameters
    ----------
    func : callable
        A vectorized real function of t.
    t_range : tuple
        The interval (t_lo, t_hi).
    step : float
        The grid step.

    Returns
    -------
    report : SignScanReport
        Each bracket is refined to a root by ``scipy.optimize.brentq``. Exact zeros on the grid count as a
        sign change of the bracket that ends there.
    """
    t_lo, t_hi = t_range
    if not step > 0 or not t_hi > t_lo:
        raise ValueError("A sign scan needs a positive step and a nonempty range, got %s and %s." % (step, t_range))
    n = int(np.ceil((t_hi - t_lo)/step))
    ts = np.linspace(t_lo, t_hi, n + 1)
    values = np.asarray(func(ts), dtype=float)
    signs = np.sign(values)
    brackets = []
    roots = []
    for i in range(n):
        if signs[i] == 0:
            continue
        if signs[i]*signs[i + 1] <= 0:
            brackets.append((ts[i], ts[i + 1]))
            if signs[i + 1] == 0:
                roots.append(ts[i + 1])
            else:
                roots.append(brentq(lambda t: float(func(t)), ts[i], ts[i + 1], xtol=xtol))
    return SignScanReport(derivative_order, t_range, step, brackets, roots, label)


def single_sign_scan(curve, derivative_order, t_range, step, function="theta", xtol=1e-12):
    """Scan the k-th derivative of H_E (``"theta"``) or of h_E^(2)(e^(-t)) (``"bessel2"``) for sign changes.

    The derivatives are taken term by term in the series. The report is evidence; the range is finite.
    """
    if function == "theta":
        def func(t):
            return theta_boundary_E_derivative(curve, t, derivative_order)
        label = "H_E^(%i)[%s]" % (derivative_order, curve.label)
    elif function == "bessel2":
        def func(t):
            return bessel_boundary_E2_derivative(curve, t, derivative_order)
        label = "H_E2^(%i)[%s]" % (derivative_order, curve.label)
    else:
        raise ValueError("Unknown scanned function %s." % function)
    with log.section("SIGN"), timer.section("Sign scan"):
        report = sign_scan(func, t_range, step, derivative_order, label, xtol)
        if log.do_medium:
            if len(report.sign_changes) == 0:
                log("%s keeps its sign on [%s, %s]." % (label, t_range[0], t_range[1]))
            for root in report.roots:
                log("%s changes sign near t = %.10f." % (label, root))
    return report


def real_pole_probe(h, v, sigmas):
    """|MC(h)(sigma)| at real sigma > 1/2.

    Large values flag a real pole of the Mellin-Carleman transform. Returns an array aligned with ``sigmas``.
    """
    sigmas = np.asarray(sigmas, dtype=float)
    if np.any(sigmas <= 0.5):
        raise ValueError("Real pole probes need sigma > 1/2.")
    with log.section("SIGN"):
        values = np.abs(mellin_carleman(h, v, sigmas.astype(complex)))
        if log.do_medium:
            for sigma, value in zip(sigmas, values):
                log("sigma = %6.3f   |MC(h)| = %.6e" % (sigma, value))
    return values
