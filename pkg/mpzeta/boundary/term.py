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


"""Boundary terms h(x) = f(x) - eps x^(-1) f(1/x) and their logarithmic form H(t) = h(e^(-t))."""

import numpy as np

from mpzeta.log import log
from mpzeta.lfunc.spec import completed_l
from mpzeta.mellin.contour import InverseMellin, default_contour
from mpzeta.mellin.series import theta_boundary_E, bessel_boundary_E2, theta_riemann


__all__ = [
    "BoundaryTerm", "boundary_term", "boundary_from_spec", "boundary_riemann", "boundary_E", "boundary_E2",
    "RELATION_TOL"
]


RELATION_TOL = 1e-8


class BoundaryTerm(object):
    def __init__(self, evaluator, sign_eps, growth_exponent, label="h", weight_d=0):
        """A boundary term with its functional relation h(1/x) = -eps x^(d+1) h(x).

        Parameters
        ----------
        evaluator : callable
            Vectorized x -> h(x) on (0, oo).
        sign_eps : complex
            The sign eps, |eps| = 1.
        growth_exponent : float
            An exponent g with h(x) = O(x^(-g)) as x -> 0+.
        label : str, optional
            An identifier.
        weight_d : int, optional
            The weight of the underlying functional equation.
        """
        if abs(abs(sign_eps) - 1.0) > 1e-12:
            raise ValueError("The sign of a boundary term must have modulus one, got %s." % sign_eps)
        self.evaluator = evaluator
        self.sign_eps = sign_eps
        self.growth_exponent = float(growth_exponent)
        self.label = label
        self.weight_d = weight_d

    def __call__(self, x):
        return self.evaluator(x)

    def H(self, t):
        """H(t) = h(e^(-t))."""
        return self.evaluator(np.exp(-np.asarray(t, dtype=float)))

    def relation_residual(self, x=None):
        """max |h(1/x) + eps x^(d+1) h(x)|/(1 + |h(x)| x^(d+1)) on a logarithmic grid in [0.1, 10]."""
        if x is None:
            x = np.logspace(-1.0, 1.0, 41)
        x = np.asarray(x, dtype=float)
        hx = np.asarray(self.evaluator(x))
        weight = x**(self.weight_d + 1)
        lhs = np.asarray(self.evaluator(1.0/x)) + self.sign_eps*weight*hx
        return float(np.max(np.abs(lhs)/(1.0 + np.abs(hx)*weight)))

    def check_relation(self, tol=RELATION_TOL):
        """The relation residual, with a warning when it exceeds ``tol``."""
        residual = self.relation_residual()
        if residual > tol:
            log.warn("The boundary term %s violates its functional relation by %.3e." % (self.label, residual))
        return residual

    def scaled(self, factor):
        return BoundaryTerm(lambda x: factor*self.evaluator(x), self.sign_eps, self.growth_exponent,
                            "%s*%s" % (factor, self.label), self.weight_d)

    def perturbed(self, amplitude, exponent):
        """h(x) + amplitude x^(-exponent), a control that breaks mean-periodicity."""
        def evaluator(x):
            x = np.asarray(x, dtype=float)
            return self.evaluator(x) + amplitude*x**(-exponent)
        return BoundaryTerm(evaluator, self.sign_eps, max(self.growth_exponent, exponent),
                            "%s+%sx^-%s" % (self.label, amplitude, exponent), self.weight_d)

    def __repr__(self):
        return "BoundaryTerm(%r, eps=%s, growth=%s)" % (self.label, self.sign_eps, self.growth_exponent)


def boundary_term(f, eps, growth_exponent=None, label=None, weight_d=0):
    """The boundary term h(x) = f(x) - eps x^(-(d+1)) f(1/x) of a function f.

    Parameters
    ----------
    f : callable
        Vectorized, rapidly decaying at infinity.
    eps : complex
        The sign.
    growth_exponent : float, optional
        The envelope exponent of f at 0+. Defaults to ``f.growth_exponent`` and else to 0.
    label : str, optional
        An identifier.
    weight_d : int, optional
        The weight d; the boundary terms of class F functions have d = 0.
    """
    if growth_exponent is None:
        growth_exponent = getattr(f, "growth_exponent", 0.0)

    def evaluator(x):
        x = np.asarray(x, dtype=float)
        return f(x) - eps*x**(-(weight_d + 1.0))*f(1.0/x)

    return BoundaryTerm(evaluator, eps, growth_exponent, "h" if label is None else label, weight_d)


def boundary_from_spec(spec, contour=None, delta=0.1, tol=1e-10):
    """The boundary term of a completed function, with f the contour inverse Mellin transform of ``spec``.

    The growth exponent is (d + 1)/2 + w + delta, the envelope of f at 0+.
    """
    if contour is None:
        contour = default_contour(spec)
    contour.check_spec(spec)
    f = InverseMellin(lambda s: completed_l(spec, s), contour, tol=tol)
    return boundary_term(f, spec.sign_eps, spec.center + spec.pole_strip_halfwidth_w + delta,
                         "h[%s]" % spec.label, spec.weight_d)


def boundary_riemann():
    """The boundary term of Lambda_Q from the theta series, equal to x^(-1) - 1."""
    return boundary_term(theta_riemann, 1.0, 1.1, "h[riemann]")


def boundary_E(curve):
    """h_E(x) = H_E(-log x) from the theta series, with eps = -omega_E."""
    return BoundaryTerm(lambda x: theta_boundary_E(curve, -np.log(x)), -float(curve.sign_omega), 1.1,
                        "h[Z_E(%s)]" % curve.label)


def boundary_E2(curve, convention="square"):
    """h_E^(2)(x) from the Bessel series, with eps = +1."""
    return BoundaryTerm(lambda x: bessel_boundary_E2(curve, -np.log(x), convention=convention), 1.0, 1.1,
                        "h[Z_E^2(%s)]" % curve.label)
