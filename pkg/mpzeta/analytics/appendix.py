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


"""Desk-scale estimates on the vertical distribution of zeros and the size of L-functions near them.

The reports here exhibit, on finite windows, the exponents and constants whose existence is known for
L-functions: ordinates T < t < T + 1 where |L(sigma + it)|^(-1) stays below t^A, the number of zeros near a
height T, and the expansion of L'/L over the nearby zeros. Nothing is asserted beyond the window.
"""

import json

import numpy as np

from mpzeta.log import log, timer
from mpzeta.exceptions import NotFoundError, check_finite
from mpzeta.lfunc.spec import LFunctionSpec, completed_l
from mpzeta.lfunc.builders import build_Z_E_squared
from mpzeta.mellin.series import bessel_boundary_E2
from mpzeta.boundary.poles import residue_ledger
from mpzeta.boundary.zeros import c_gamma_coefficient


__all__ = [
    "OrdinateReport", "good_ordinates", "zero_density_check", "log_deriv_expansion_check", "log_deriv_constant",
    "c_gamma_partial_sums", "decompose_h2", "SIGMA_STEP"
]


SIGMA_STEP = 0.05


def _dirichlet_function(spec):
    # L(s) = Z(s)/gamma(s) for completed functions, plain callables are used as they are.
    if isinstance(spec, LFunctionSpec):
        return lambda s: completed_l(spec, s)/spec.gamma(s)
    return spec


class OrdinateReport(object):
    def __init__(self, T, H, grid, minima, exponent_A):
        """Good ordinates in (T, T + 1).

        Parameters
        ----------
        T, H : float
            The window (T, T + 1) and the measure bound 1/H of the excluded set.
        grid : numpy.ndarray
            The sampled ordinates.
        minima : numpy.ndarray
            min over the sigma grid of |L(sigma + it)| at each ordinate.
        exponent_A : float
            The smallest half-integer A for which the excluded measure is at most 1/H.
        """
        self.T = float(T)
        self.H = float(H)
        self.grid = np.asarray(grid, dtype=float)
        self.minima = np.asarray(minima, dtype=float)
        self.exponent_A = float(exponent_A)

    @property
    def step(self):
        return 1.0/len(self.grid)

    def accepted_at(self, A):
        """Mask of the ordinates t with min |L(sigma + it)| >= t^(-A)."""
        return self.minima >= self.grid**(-A)

    def excluded_measure_at(self, A):
        return float(np.sum(~self.accepted_at(A))*self.step)

    @property
    def accepted(self):
        return self.grid[self.accepted_at(self.exponent_A)]

    @property
    def excluded_measure_estimate(self):
        return self.excluded_measure_at(self.exponent_A)

    @property
    def passed(self):
        return self.excluded_measure_estimate <= 1.0/self.H

    def to_dict(self):
        return {
            "T": self.T,
            "H": self.H,
            "exponent_A": self.exponent_A,
            "excluded_measure_estimate": self.excluded_measure_estimate,
            "accepted": self.accepted.tolist(),
            "pass": self.passed,
        }

    def to_json(self, fn):
        with open(fn, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)

    def __repr__(self):
        return "OrdinateReport(T=%s, H=%s, A=%s, excluded=%.4f)" % (
            self.T, self.H, self.exponent_A, self.excluded_measure_estimate)


def good_ordinates(spec, T, H, strip=(0.0, 1.0), sigma_step=SIGMA_STEP, t_step=None, A_max=10.0):
    """Ordinates in (T, T + 1) where L stays away from zero throughout a vertical strip.

    Parameters
    ----------
    spec : LFunctionSpec or callable
        The function L. For a completed function the gamma factor is divided out.
    T : float
        The window (T, T + 1), T >= 2.
    H : float
        The excluded set may have measure at most 1/H.
    strip : tuple, optional
        The sigma range (a, b).
    sigma_step : float, optional
        The sigma grid step.
    t_step : float, optional
        The ordinate grid step, by default 1/(50 H). The grid consists of cell midpoints.
    A_max : float, optional
        The largest exponent tried.

    Raises
    ------
    NotFoundError
        If no half-integer A <= ``A_max`` keeps the excluded measure below 1/H.
    """
    if T < 2:
        raise ValueError("Good ordinates are searched for T >= 2, got %s." % T)
    if t_step is None:
        t_step = 1.0/(50.0*H)
    func = _dirichlet_function(spec)
    n = int(np.ceil(1.0/t_step))
    grid = T + (np.arange(n) + 0.5)/n
    a, b = strip
    sigmas = np.linspace(a, b, int(round((b - a)/sigma_step)) + 1)
    with log.section("ORDN"), timer.section("Good ordinates"):
        s = sigmas[:, None] + 1j*grid[None, :]
        values = np.abs(np.asarray(func(s), dtype=complex)*np.ones(s.shape))
        minima = check_finite(np.min(values, axis=0), "L on the strip")
        report = None
        for A in np.arange(0.0, A_max + 0.25, 0.5):
            candidate = OrdinateReport(T, H, grid, minima, A)
            if candidate.passed:
                report = candidate
                break
        if report is None:
            raise NotFoundError("No exponent A <= %s leaves an excluded set of measure <= %s in (%s, %s)." % (
                A_max, 1.0/H, T, T + 1))
        if log.do_medium:
            log("Window (%s, %s): A = %.1f, %i of %i ordinates accepted, excluded measure %.4f." % (
                T, T + 1, report.exponent_A, len(report.accepted), n, report.excluded_measure_estimate))
    return report


def zero_density_check(zeros, T):
    """The number m(T) of ordinates with |gamma - T| <= 1 and the ratio m(T)/log T.

    Raises
    ------
    ValueError
        If the zero list is not complete up to T + 1.
    """
    if zeros.height_limit < T + 1.0:
        raise ValueError("Zero data up to height %s do not cover the window around T = %s." % (zeros.height_limit, T))
    count = int(np.sum(np.abs(np.asarray(zeros.ordinates) - T) <= 1.0))
    ratio = count/np.log(T)
    if log.do_high:
        log("m(%s) = %i, m/log T = %.4f." % (T, count, ratio))
    return count, ratio


def log_deriv_expansion_check(spec, s, zeros, center=0.5, step=1e-5):
    """|L'/L(s) - sum over zeros rho with |s - rho| < 1 of 1/(s - rho)|.

    Parameters
    ----------
    spec : LFunctionSpec or callable
        The function L, real on the real axis.
    s : complex
        The point, |Im s| >= 2.
    zeros : ZeroList
        Ordinates of the zeros center +- i gamma, complete up to |Im s| + 1.
    step : float, optional
        The step of the central difference for L'.

    Raises
    ------
    ValueError
        If the zero list does not cover the unit disk around ``s``.
    """
    s = complex(s)
    if abs(s.imag) < 2:
        raise ValueError("The expansion of L'/L is checked at |Im s| >= 2, got %s." % s)
    if zeros.height_limit < abs(s.imag) + 1.0:
        raise ValueError("Zero data up to height %s miss the zeros near %s." % (zeros.height_limit, s))
    func = _dirichlet_function(spec)
    value = complex(np.asarray(func(s)))
    derivative = (complex(np.asarray(func(s + step))) - complex(np.asarray(func(s - step))))/(2.0*step)
    total = 0.0j
    for gamma in zeros.ordinates:
        for rho in (complex(center, gamma), complex(center, -gamma)):
            if abs(s - rho) < 1.0:
                total += 1.0/(s - rho)
    return float(abs(derivative/value - total))


def log_deriv_constant(spec, heights, zeros, sigma=0.5, center=0.5):
    """The fitted constant C = max_t r(sigma + it)/log t over ``heights``, with the residuals r.

    Heights closer than 1e-3 to a zero ordinate should be avoided when ``sigma`` equals ``center``.
    """
    residuals = np.array([log_deriv_expansion_check(spec, complex(sigma, t), zeros, center) for t in heights])
    constant = float(np.max(residuals/np.log(np.asarray(heights, dtype=float))))
    if log.do_medium:
        with log.section("ORDN"):
            for t, r in zip(heights, residuals):
                log("t = %8.3f   residual %.6e   ratio %.4f" % (t, r, r/np.log(t)))
            log("Fitted constant C = %.4f." % constant)
    return constant, residuals


def c_gamma_partial_sums(field, zeros, heights):
    """Partial sums of |c_gamma| over the ordinates 0 < gamma < T, for each T in ``heights``."""
    heights = np.asarray(heights, dtype=float)
    if zeros.height_limit < np.max(heights):
        raise ValueError("Zero data up to height %s do not reach %s." % (zeros.height_limit, np.max(heights)))
    with log.section("ORDN"), timer.section("c_gamma sums"):
        ordinates = zeros.up_to(np.max(heights))
        sizes = np.array([abs(c_gamma_coefficient(field, gamma)) for gamma in ordinates])
        sums = np.array([np.sum(sizes[ordinates < T]) for T in heights])
        if log.do_medium:
            for T, value in zip(heights, sums):
                log("T = %8.3f   sum |c_gamma| = %.6e" % (T, value))
    return sums


def decompose_h2(curve, zeros, t, height_cutoff=None, spec=None, radius=1e-2):
    """Split the boundary term of Z_E^2 into its principal parts at 0 and 1 and the remaining poles.

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    zeros : ZeroList
        Ordinates gamma of the zeros 1 + i gamma of L(E, s).
    t : float or numpy.ndarray
        The argument(s), x = e^(-t).
    height_cutoff : float, optional
        The largest |Im lambda| of the spectral poles, by default half the height limit of ``zeros``.

    Returns
    -------
    h00, h01, h1, residual : numpy.ndarray
        The contributions of the poles at 0, at 1 and of all other poles, and the difference between the
        Bessel series and their sum. The residual measures the truncation of the spectral part.
    """
    if height_cutoff is None:
        height_cutoff = 0.5*zeros.height_limit
    if zeros.height_limit < 2.0*height_cutoff:
        raise ValueError("Zero data up to height %s do not cover poles up to height %s." % (
            zeros.height_limit, height_cutoff))
    if spec is None:
        spec = build_Z_E_squared(curve)
    candidates = list(spec.candidate_poles)
    for gamma in zeros.up_to(2.0*height_cutoff):
        candidates.append((complex(0.5, 0.5*gamma), 2))
        candidates.append((complex(0.5, -0.5*gamma), 2))
    ledger = residue_ledger(spec, candidates, radius)
    at_zero = [datum for datum in ledger if abs(datum.location_lambda) < radius]
    at_one = [datum for datum in ledger if abs(datum.location_lambda - 1.0) < radius]
    if len(at_zero) == 0 or len(at_one) == 0:
        raise ValueError("The ledger of %s misses the poles at 0 or 1." % spec.label)
    x = np.exp(-np.asarray(t, dtype=float))
    h00 = sum(datum.term(x) for datum in at_zero).real
    h01 = sum(datum.term(x) for datum in at_one).real
    others = [datum for datum in ledger if datum not in at_zero and datum not in at_one]
    h1 = np.zeros(np.shape(x), dtype=complex)
    for datum in others:
        h1 = h1 + datum.term(x)
    if np.any(np.abs(h1.imag) > 1e-10*(1.0 + np.abs(h1.real))):
        log.warn("The spectral part of h_E^(2) has an imaginary part up to %.3e." % np.max(np.abs(h1.imag)))
    h1 = h1.real
    residual = bessel_boundary_E2(curve, t) - h00 - h01 - h1
    return h00, h01, h1, residual
