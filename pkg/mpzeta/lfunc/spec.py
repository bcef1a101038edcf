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


"""Completed L-functions of class F: a gamma factor times a Dirichlet series.

The generic evaluator ``completed_l`` sums the Dirichlet series directly wherever it converges well enough,
mirrored through the functional equation, and falls back on the smoothed approximate functional equation
with incomplete gamma weights inside the critical strip.
"""

import numpy as np
import mpmath

from mpzeta.log import log, timer
from mpzeta.specfun import _prepare, _finish
from mpzeta.exceptions import PrecisionLossError, NotFoundError, check_finite


__all__ = ["LFunctionSpec", "smoothed_completed", "completed_l", "power_search_m"]


class LFunctionSpec(object):
    def __init__(self, coefficients, gamma, sign_eps, weight_d, pole_strip_halfwidth_w, label,
                 evaluator=None, candidate_poles=None, dual=None):
        """A completed function Z(s) = gamma(s) D(s) with Z(s) = eps Z_dual(d + 1 - s).

        Parameters
        ----------
        coefficients : mpzeta.lfunc.dirichlet.DirichletCoefficients
            The Dirichlet coefficients of D(s).
        gamma : mpzeta.lfunc.gamma.GammaFactor
            The gamma factor.
        sign_eps : complex
            The sign of the functional equation, |eps| = 1.
        weight_d : int
            The functional equation relates s and d + 1 - s.
        pole_strip_halfwidth_w : float
            All poles lie in |Re(s) - (d + 1)/2| <= w.
        label : str
            An identifier.
        evaluator : callable, optional
            A closed evaluator s -> Z(s) composed from constituent functions. When given, ``completed_l``
            uses it instead of the Dirichlet series.
        candidate_poles : list of tuple, optional
            Structural poles (location, maximal multiplicity), confirmed later by residue quadrature.
        dual : LFunctionSpec, optional
            The dual function. ``None`` means self-dual.

        Raises
        ------
        ValueError
            If |eps| differs from 1 by more than 1e-12.
        """
        if abs(abs(sign_eps) - 1.0) > 1e-12:
            raise ValueError("The sign of a functional equation must have modulus one, got %s." % sign_eps)
        self.coefficients = coefficients
        self.gamma = gamma
        self.sign_eps = sign_eps
        self.weight_d = weight_d
        self.pole_strip_halfwidth_w = pole_strip_halfwidth_w
        self.label = label
        self.evaluator = evaluator
        self.candidate_poles = [] if candidate_poles is None else list(candidate_poles)
        self.dual = dual
        # Diagnostic exponents, filled in by the analytics module.
        self.exponent_a1 = None
        self.exponent_a2 = None

    @property
    def center(self):
        return 0.5*(self.weight_d + 1)

    @property
    def is_self_dual(self):
        return self.dual is None

    def __call__(self, s):
        return completed_l(self, s)

    def __repr__(self):
        return "LFunctionSpec(%r, eps=%s, d=%i, w=%s)" % (
            self.label, self.sign_eps, self.weight_d, self.pole_strip_halfwidth_w)


def _rotation(t, lam, margin):
    if abs(t) > margin/(0.5*lam*np.pi):
        return np.sign(t)*(0.5*lam*np.pi - margin/abs(t))
    return 0.0


def _smoothed_point(values, lam, mu, q, scale, eps, d, s, margin, cutoff):
    theta = _rotation(s.imag, lam, margin)
    phi = theta/lam
    cosphi = np.cos(phi)
    sqrtq = np.sqrt(q)
    nmax = int(np.ceil(sqrtq*(cutoff/cosphi)**lam))
    if nmax > len(values) - 1:
        raise PrecisionLossError(
            "The smoothed series at s = %s needs %i coefficients, only %i are available." % (s, nmax, len(values) - 1))
    s1 = mpmath.mpc(s.real, s.imag)
    s2 = d + 1 - s1
    rot1 = mpmath.expj(phi)
    rot2 = mpmath.expj(-phi)
    total = mpmath.mpc(0)
    qq = mpmath.sqrt(mpmath.mpf(q))
    for n in range(1, nmax + 1):
        an = values[n]
        if an == 0:
            continue
        ratio = qq/n
        w = (n/qq)**(1.0/lam)
        term = mpmath.power(ratio, s1)*mpmath.gammainc(lam*s1 + mu, w*rot1)
        term += eps*mpmath.power(ratio, s2)*mpmath.gammainc(lam*s2 + mu, w*rot2)
        total += int(an)*term if isinstance(an, (int, np.integer)) else float(an)*term
    return complex(scale*total)


def smoothed_completed(coefficients, gamma, eps, d, s, margin=5.0, cutoff=40.0, dps=30):
    """Entire completed L-function from the smoothed approximate functional equation.

    Parameters
    ----------
    coefficients : mpzeta.lfunc.dirichlet.DirichletCoefficients
        Real Dirichlet coefficients of a self-dual function.
    gamma : mpzeta.lfunc.gamma.GammaFactor
        A gamma factor with a single gamma function, scale q^(s/2) Gamma(lambda s + mu).
    eps : float
        The sign of the functional equation Lambda(s) = eps Lambda(d + 1 - s).
    d : int
        The weight.
    s : complex or numpy.ndarray
        The argument(s).
    margin : float, optional
        For |t| large the integration ray is rotated over theta = sign(t)(lambda pi/2 - margin/|t|),
        which keeps the terms within a factor exp(margin) of the result.
    cutoff : float, optional
        The series stops where the real part of the incomplete gamma argument exceeds ``cutoff``.
    dps : int, optional
        Decimal working precision of the incomplete gamma functions.

    Returns
    -------
    output : complex or numpy.ndarray

    Raises
    ------
    ValueError
        If the gamma factor does not contain exactly one gamma function.
    PrecisionLossError
        If more coefficients are needed than available.

    Notes
    -----
    With Q = sqrt(q), s' = d + 1 - s and w_n = (n/Q)^(1/lambda), the sum reads
    Lambda(s) = sum_n a_n [(Q/n)^s Gamma(lambda s + mu, w_n e^(i theta/lambda))
                           + eps (Q/n)^s' Gamma(lambda s' + mu, w_n e^(-i theta/lambda))].
    It holds for entire functions only.
    """
    if gamma.nfactor != 1:
        raise ValueError("The smoothed series needs a gamma factor with exactly one gamma function.")
    (lam, mu), = gamma.shifts
    s, scalar = _prepare(s)
    result = np.empty_like(s)
    with timer.section("Smoothed series"), mpmath.workdps(dps):
        mu_mp = mpmath.mpc(mu.real, mu.imag)
        for i, si in enumerate(s):
            result[i] = _smoothed_point(coefficients.values, lam, mu_mp, gamma.conductor_q, gamma.scale,
                                        eps, d, si, margin, cutoff)
    return _finish(check_finite(result, "smoothed series"), scalar)


def completed_l(spec, s, tol=1e-12):
    """Evaluate the completed function Z(s) = gamma(s) D(s) of ``spec``.

    Parameters
    ----------
    spec : LFunctionSpec
        The function to evaluate.
    s : complex or numpy.ndarray
        The argument(s).
    tol : float, optional
        Tolerance on the Dirichlet tail bound for the direct path.

    Raises
    ------
    PrecisionLossError
        If neither the direct Dirichlet series nor the smoothed series can reach the tolerance.

    Notes
    -----
    Specs with an evaluator composed from constituent functions are evaluated through it.
    Otherwise the Dirichlet series is summed at max(sigma, d + 1 - sigma) when its tail bound is below ``tol``,
    and mirrored through the functional equation for sigma < (d + 1)/2. In the remaining region the smoothed
    approximate functional equation is used, which requires a single gamma function.
    """
    if spec.evaluator is not None:
        return spec.evaluator(s)
    s, scalar = _prepare(s)
    result = np.empty_like(s)
    d = spec.weight_d
    mirrored = s.real < spec.center
    far = np.where(mirrored, d + 1.0 - s, s)
    direct = np.array([spec.coefficients.tail_bound(sigma) <= tol for sigma in far.real], dtype=bool)
    if np.any(direct):
        sd = far[direct]
        value = spec.gamma(sd)*spec.coefficients.evaluate(sd)
        if not spec.is_self_dual:
            dual_value = spec.dual.gamma(sd)*spec.dual.coefficients.evaluate(sd)
            value = np.where(mirrored[direct], dual_value, value)
        result[direct] = np.where(mirrored[direct], spec.sign_eps*value, value)
    rest = ~direct
    if np.any(rest):
        if spec.gamma.nfactor != 1 or not spec.is_self_dual:
            raise PrecisionLossError(
                "%s cannot be evaluated at s = %s: the Dirichlet tail is too large and no smoothed series applies."
                % (spec.label, s[rest][0]))
        result[rest] = smoothed_completed(spec.coefficients, spec.gamma, spec.sign_eps.real, d, s[rest])
    return _finish(result, scalar)


def power_search_m(spec, m_max=10, delta=0.1, nsigma=21):
    """Smallest power m for which Lambda_Q(s)^m gamma(s) decays like |t|^(-1-delta) in the pole strip.

    Parameters
    ----------
    spec : LFunctionSpec
        Provides the gamma factor and the strip (d + 1)/2 +- w.
    m_max : int, optional
        The largest power to try.
    delta : float, optional
        The required excess decay.
    nsigma : int, optional
        Number of sampled abscissae in the strip.

    Raises
    ------
    NotFoundError
        If no m <= m_max works. The ``best`` attribute holds the best exponent reached.

    Notes
    -----
    By Stirling, |Lambda_Q(sigma + it)| ~ |t|^((sigma - 1)/2) exp(-pi |t|/4) up to the polynomial growth of zeta.
    A positive total exponential rate makes the exponent minus infinity; otherwise the polynomial exponent
    has to stay below -(1 + delta) across the strip.
    """
    center = spec.center
    w = spec.pole_strip_halfwidth_w
    sigmas = np.linspace(center - w, center + w, nsigma)
    best = np.inf
    for m in range(m_max + 1):
        rate = 0.25*np.pi*m + spec.gamma.decay_rate()
        if rate > 0:
            exponent = -np.inf
        else:
            exponent = max(0.5*m*(sigma - 1.0) + spec.gamma.poly_exponent(sigma) for sigma in sigmas)
        best = min(best, exponent)
        if exponent <= -(1.0 + delta):
            if log.do_high:
                log("Power m = %i makes %s decay with exponent %s." % (m, spec.label, exponent))
            return m
    raise NotFoundError("No power m <= %i gives decay exponent <= %s." % (m_max, -(1.0 + delta)), best)
