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


"""Multiplicative convolution with a convolutor and the numerical certification of mean-periodicity."""

import json

import numpy as np

from scipy.integrate import quad

from mpzeta.log import log, timer
from mpzeta.exceptions import ConvergenceError
from mpzeta.mellin.transforms import log_convolve, CERTIFY_THRESHOLD


__all__ = ["mult_convolve", "certify_mean_periodicity", "MeanPeriodicityReport", "ENVELOPE_TOL"]


ENVELOPE_TOL = 1e-10


def _adaptive(v, h, x, window):
    lo, hi = window
    value = np.zeros(len(x))
    for i, xi in enumerate(x):
        # Integration variable u = log w with w = x/y.
        value[i], error = quad(lambda u: v(np.exp(u))*h(xi*np.exp(-u)), lo, hi,
                               epsabs=1e-14, epsrel=1e-12, limit=400)
    return value


def mult_convolve(v, h, x, method="gauss"):
    """(v *x h)(x) = int_0^oo v(x/y) h(y) dy/y.

    Parameters
    ----------
    v : Convolutor
        The rapidly decaying factor, negligible outside its log window.
    h : callable
        A vectorized function of polynomial growth, such as a ``BoundaryTerm``.
    x : float or numpy.ndarray
        Positive argument(s).
    method : str, optional
        ``"gauss"`` integrates in log y with composite Gauss-Legendre panels, ``"adaptive"`` integrates in
        log(x/y) with ``scipy.integrate.quad``.

    Raises
    ------
    ConvergenceError
        If the integrand does not vanish at the edges of the log window of v.
    """
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    lo, hi = v.log_window
    if method == "gauss":
        value, magnitude = log_convolve(v.evaluator, h, xs, v.log_window)
    elif method == "adaptive":
        value = _adaptive(v.evaluator, h, xs, v.log_window)
        magnitude = np.abs(value)
    else:
        raise ValueError("Unknown convolution method %s." % method)
    edges = np.abs(v.evaluator(np.exp([lo, hi])))
    for xi, size in zip(xs, magnitude):
        tails = edges*np.abs(np.asarray(h(xi*np.exp(-np.array([lo, hi]))), dtype=float))
        if np.any(tails > ENVELOPE_TOL*max(size, 1e-300)) and np.any(tails > 1e-300):
            raise ConvergenceError("The convolution integrand at x = %s does not vanish at the window edges." % xi)
    if np.ndim(x) == 0:
        return value[0]
    return value


class MeanPeriodicityReport(object):
    def __init__(self, label, grid, residuals, scale, threshold=CERTIFY_THRESHOLD):
        """The outcome of a mean-periodicity certification.

        Parameters
        ----------
        label : str
            An identifier of the pair (v, h).
        grid : numpy.ndarray
            The evaluation points x.
        residuals : numpy.ndarray
            The values (v *x h)(x).
        scale : float
            The normalization max_x int |v(x/y) h(y)| dy/y.
        threshold : float, optional
            The largest relative residual that passes.
        """
        self.label = label
        self.grid = np.asarray(grid, dtype=float)
        self.residuals = np.asarray(residuals, dtype=float)
        self.scale = float(scale)
        self.threshold = threshold

    @property
    def max_residual(self):
        return float(np.max(np.abs(self.residuals)))

    @property
    def ratio(self):
        if self.scale == 0:
            return np.inf
        return self.max_residual/self.scale

    @property
    def passed(self):
        return bool(self.ratio <= self.threshold)

    def to_dict(self):
        return {
            "label": self.label,
            "grid": self.grid.tolist(),
            "residuals": self.residuals.tolist(),
            "scale": self.scale,
            "ratio": self.ratio,
            "pass": self.passed,
        }

    def to_json(self, fn):
        with open(fn, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)

    def __repr__(self):
        return "MeanPeriodicityReport(%r, ratio=%.3e, pass=%s)" % (self.label, self.ratio, self.passed)


def certify_mean_periodicity(v, h, grid=None, threshold=CERTIFY_THRESHOLD):
    """Check numerically that v *x h vanishes.

    Parameters
    ----------
    v : Convolutor
        The convolutor.
    h : BoundaryTerm or callable
        The boundary term.
    grid : sequence of float, optional
        Evaluation points, by default 21 points spread logarithmically over [0.1, 10].
    threshold : float, optional
        The largest relative residual max |v *x h|/S that passes.

    Returns
    -------
    report : MeanPeriodicityReport
        Failures are carried by the report, not raised.
    """
    if grid is None:
        grid = np.logspace(-1.0, 1.0, 21)
    grid = np.asarray(grid, dtype=float)
    if grid.min() > 0.1 or grid.max() < 10.0:
        log.warn("The certification grid [%s, %s] does not span [0.1, 10]." % (grid.min(), grid.max()))
    label = "%s * %s" % (getattr(v, "label", "v"), getattr(h, "label", "h"))
    with log.section("CERT"), timer.section("Certification"):
        residuals, magnitude = log_convolve(v.evaluator, h, grid, v.log_window)
        report = MeanPeriodicityReport(label, grid, residuals, np.max(magnitude), threshold)
        if log.do_medium:
            log.hline()
            log("     x           residual")
            log.hline()
            for x, r in zip(grid, residuals):
                log("%10.4f  %16.6e" % (x, r))
            log.hline()
            log("Scale %.6e, relative residual %.3e: %s." % (
                report.scale, report.ratio, "PASS" if report.passed else "FAIL"))
    return report
