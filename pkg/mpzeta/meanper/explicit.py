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


"""Test functions and the explicit summation formula of a self-dual completed function.

Pairing the boundary term h of Z(s) = gamma(s) sum_m d_m m^(-s) with phi(1/x) and expanding h over the poles of Z
gives, for a smooth phi with compact support in (0, oo),

    sum_poles sum_k C_k/(k-1)! M(phi)^(k-1)(lambda) = sum_m d_m [(phi *x kappa)(m) - eps (phi^v *x kappa)(m)],

where kappa is the inverse Mellin transform of gamma(s) and phi^v(x) = x^(-(d+1)) phi(1/x).
"""

import numpy as np

from scipy.special import factorial

from mpzeta.log import log, timer
from mpzeta.exceptions import ConvergenceError
from mpzeta.mellin.contour import kappa_transform, kappa_closed_form
from mpzeta.mellin.transforms import _panels, _gauss_nodes


__all__ = [
    "TestFunction", "bump_function", "truncated_gaussian", "explicit_formula_check", "mellin_moment",
    "KAPPA_FLOOR"
]


# kappa(m/w) below KAPPA_FLOOR times its largest sampled value ends the sum over m.
KAPPA_FLOOR = 1e-18


class TestFunction(object):
    # Keeps pytest from collecting this class.
    __test__ = False

    def __init__(self, func, support, label="phi"):
        """A smooth function with compact support [x_lo, x_hi] in (0, oo).

        Parameters
        ----------
        func : callable
            Vectorized x -> phi(x), zero outside ``support``.
        support : tuple
            The interval (x_lo, x_hi).
        label : str, optional
            An identifier.

        Raises
        ------
        ValueError
            If the support touches 0 or infinity or is empty.
        """
        x_lo, x_hi = support
        if not (0.0 < x_lo < x_hi < np.inf):
            raise ValueError("A test function needs a support [x_lo, x_hi] inside (0, oo), got %s." % (support,))
        self.func = func
        self.support = (float(x_lo), float(x_hi))
        self.label = label

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x > self.support[0]) & (x < self.support[1])
        safe = np.where(inside, x, np.sqrt(self.support[0]*self.support[1]))
        return np.where(inside, self.func(safe), 0.0)

    def scaled(self, factor):
        return TestFunction(lambda x: factor*self.func(x), self.support, "%s*%s" % (factor, self.label))

    def dual(self, weight_d=0):
        """phi^v(x) = x^(-(d+1)) phi(1/x)."""
        x_lo, x_hi = self.support
        return TestFunction(lambda x: x**(-(weight_d + 1.0))*self.func(1.0/x), (1.0/x_hi, 1.0/x_lo),
                            "%s^v" % self.label)

    def __repr__(self):
        return "TestFunction(%r, support=%s)" % (self.label, self.support)


def _log_coordinate(x, x_lo, x_hi):
    return (2.0*np.log(x) - np.log(x_lo) - np.log(x_hi))/(np.log(x_hi) - np.log(x_lo))


def bump_function(x_lo, x_hi):
    """exp(-1/(1 - u^2)) with u the logarithmic coordinate mapping [x_lo, x_hi] onto [-1, 1]."""
    def func(x):
        u = _log_coordinate(np.asarray(x, dtype=float), x_lo, x_hi)
        inside = np.abs(u) < 1.0
        return np.where(inside, np.exp(-1.0/np.where(inside, 1.0 - u*u, 1.0)), 0.0)

    return TestFunction(func, (x_lo, x_hi), "bump[%s, %s]" % (x_lo, x_hi))


def truncated_gaussian(center, width, x_lo, x_hi):
    """A Gaussian in log x around log ``center``, multiplied by the bump on [x_lo, x_hi]."""
    bump = bump_function(x_lo, x_hi)

    def func(x):
        x = np.asarray(x, dtype=float)
        return np.exp(-0.5*(np.log(x/center)/width)**2)*bump.func(x)

    return TestFunction(func, (x_lo, x_hi), "gauss[%s, %s]" % (center, width))


def _nodes(testfn, panels):
    lo, hi = np.log(testfn.support[0]), np.log(testfn.support[1])
    u, w = _gauss_nodes(_panels(lo, hi, [], (hi - lo)/panels))
    return u, w*testfn(np.exp(u))


def mellin_moment(testfn, s, k=0, panels=16):
    """M(phi)^(k)(s) = int phi(x) log^k(x) x^s dx/x."""
    u, weights = _nodes(testfn, panels)
    return complex(np.sum(weights*u**k*np.exp(complex(s)*u)))


def _kappa(gamma):
    if gamma.nfactor == 1:
        return lambda x: kappa_closed_form(gamma, x)
    return kappa_transform(gamma)


def _kappa_sum(kappa, coefficients, u, weights):
    # sum_m d_m int phi(w) kappa(m/w) dw/w, with m cut where kappa(m/w) is negligible on the support.
    wmax = np.exp(np.max(u))
    ratios = np.arange(1, coefficients.length + 1)/wmax
    if hasattr(kappa, "evaluate"):
        probe, noise = kappa.evaluate(ratios)
        probe = np.abs(probe)
    else:
        probe = np.abs(np.asarray(kappa(ratios), dtype=float))
        noise = 0.0
    keep = np.nonzero(probe > np.maximum(KAPPA_FLOOR*np.max(probe), 10.0*noise))[0]
    mmax = keep[-1] + 1 if len(keep) > 0 else 1
    if mmax == coefficients.length:
        raise ConvergenceError("The kernel has not decayed at m = %i, the last available coefficient." % mmax)
    total = 0.0
    for m in coefficients.support():
        if m > mmax:
            break
        total += coefficients[m]*np.dot(weights, kappa(m*np.exp(-u)))
    return total, mmax


def explicit_formula_check(spec, testfn, ledger, panels=16):
    """Both sides of the explicit summation formula of ``spec`` for the test function ``testfn``.

    Parameters
    ----------
    spec : mpzeta.lfunc.spec.LFunctionSpec
        A self-dual completed function with real sign eps = +-1.
    testfn : TestFunction
        The test function phi.
    ledger : list of PoleDatum
        The poles of ``spec`` with their principal parts.
    panels : int, optional
        The number of Gauss-Legendre panels over the logarithmic support of phi.

    Returns
    -------
    lhs, rhs : float
        The pole side sum C_k/(k-1)! M(phi)^(k-1)(lambda) and the coefficient side
        sum d_m [(phi *x kappa)(m) - eps (phi^v *x kappa)(m)].

    Raises
    ------
    ValueError
        If ``spec`` is not self-dual with a real sign, or ``testfn`` has no compact support in (0, oo).
    """
    if not spec.is_self_dual or abs(complex(spec.sign_eps).imag) > 1e-12:
        raise ValueError("The explicit formula needs a self-dual function with real sign, %s is not." % spec.label)
    if not isinstance(testfn, TestFunction):
        raise ValueError("The explicit formula needs a compactly supported TestFunction.")
    eps = complex(spec.sign_eps).real
    with log.section("EXPL"), timer.section("Explicit formula"):
        u, weights = _nodes(testfn, panels)
        lhs = 0.0j
        for datum in ledger:
            for k, c in enumerate(datum.principal_coeffs):
                lhs += c/factorial(k)*np.sum(weights*u**k*np.exp(datum.location_lambda*u))
        if abs(lhs.imag) > 1e-9*(1.0 + abs(lhs.real)):
            log.warn("The pole side has an imaginary part %.3e; the ledger is not conjugate closed." % lhs.imag)
        kappa = _kappa(spec.gamma)
        direct, m1 = _kappa_sum(kappa, spec.coefficients, u, weights)
        dual = testfn.dual(spec.weight_d)
        ud, weights_d = _nodes(dual, panels)
        mirrored, m2 = _kappa_sum(kappa, spec.coefficients, ud, weights_d)
        rhs = direct - eps*mirrored
        if log.do_medium:
            log("Test function %s, %i poles, coefficients up to m = %i." % (testfn.label, len(ledger), max(m1, m2)))
            log("Pole side %.15e, coefficient side %.15e, difference %.3e." % (lhs.real, rhs, lhs.real - rhs))
    return float(lhs.real), float(rhs)
