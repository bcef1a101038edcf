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


"""Convolutors: rapidly decaying functions v, given by their Mellin transforms V, with v *x h = 0.

For a completed function Z = U/V with U and V entire, the inverse Mellin transform v of V annihilates the
boundary term of Z. The builders below produce the denominators V of Lambda_Q and of Z_E (also squared),
which satisfy V(s) = sign V(1 - s); the inverse Mellin transforms are evaluated for x < 1 through
v(x) = sign x^(-1) v(1/x).
"""

import numpy as np

from mpzeta.log import log, timer
from mpzeta.exceptions import ConvergenceError
from mpzeta.lfunc.zeta import completed_riemann
from mpzeta.lfunc.builders import DEFAULT_DEPTH, uv_split_E, build_elliptic_l
from mpzeta.lfunc.spec import completed_l
from mpzeta.mellin.contour import ContourSpec, InverseMellin


__all__ = [
    "Convolutor", "build_convolutor_from_mellin", "build_convolutor_lambda_q", "build_convolutor_V",
    "check_line_decay", "SEMINORM_ORDERS"
]


SEMINORM_ORDERS = range(-5, 6)
# Window detection: |v| below WINDOW_FLOOR times its maximum counts as zero.
WINDOW_FLOOR = 1e-16


class Convolutor(object):
    def __init__(self, evaluator, mellin_evaluator, label="v", decay_class=True, log_window=None):
        """A rapidly decaying function v and its Mellin transform V.

        Parameters
        ----------
        evaluator : callable
            Vectorized x -> v(x).
        mellin_evaluator : callable
            Vectorized s -> V(s).
        label : str, optional
            An identifier.
        decay_class : bool, optional
            Whether v decays rapidly at both 0 and infinity.
        log_window : tuple, optional
            An interval (lo, hi) with v negligible outside [e^lo, e^hi]. Detected by sampling when omitted.

        Raises
        ------
        ValueError
            If v vanishes on the sample grid or if some seminorm sup |x^m v(x)|, -5 <= m <= 5, is not finite.
        """
        self.evaluator = evaluator
        self.mellin_evaluator = mellin_evaluator
        self.label = label
        self.decay_class = decay_class
        u = np.arange(-30.0, 30.25, 0.25)
        values = np.abs(np.asarray(evaluator(np.exp(u)), dtype=float))
        top = np.max(values)
        if not top > 0:
            raise ValueError("The convolutor %s vanishes identically." % label)
        self.seminorms = dict((m, np.max(values*np.exp(m*u))) for m in SEMINORM_ORDERS)
        if not all(np.isfinite(value) for value in self.seminorms.values()):
            raise ValueError("The convolutor %s has an infinite seminorm." % label)
        if log_window is None:
            support = u[values > WINDOW_FLOOR*top]
            log_window = (support[0] - 0.5, support[-1] + 0.5)
        self.log_window = log_window
        if log.do_medium:
            log("Convolutor %s lives on log x in [%.2f, %.2f]." % (label, log_window[0], log_window[1]))

    def __call__(self, x):
        return self.evaluator(x)

    def __repr__(self):
        return "Convolutor(%r, window=%s)" % (self.label, self.log_window)


def check_line_decay(V, sigmas=(0.0, 0.5, 1.0), heights=(4.0, 24.0), exponent=1.1, samples=11):
    """Check that |V(sigma + it)| decays at least like |t|^(-exponent).

    Mean values over [t, t + 1] are compared at the given heights, so that isolated zeros of V do not matter.

    Raises
    ------
    ConvergenceError
        If the decay on some sampled line is slower.
    """
    lo, hi = heights
    for sigma in sigmas:
        means = []
        for t in heights:
            s = sigma + 1j*np.linspace(t, t + 1.0, samples)
            means.append(np.mean(np.abs(np.asarray(V(s), dtype=complex))))
        if means[1]*hi**exponent > means[0]*lo**exponent:
            raise ConvergenceError("V decays slower than |t|^-%s on Re(s) = %s." % (exponent, sigma))


def build_convolutor_from_mellin(V, sign, contour, label="v", check=True, heights=(4.0, 24.0)):
    """The convolutor with Mellin transform V, an entire function with V(s) = sign V(1 - s)."""
    if check:
        check_line_decay(V, heights=heights)
    f = InverseMellin(V, contour, reflect=(sign, 0))
    return Convolutor(f, V, label)


def _damping(s, damping):
    return (s*(1.0 - s))**damping


def build_convolutor_lambda_q(contour=None, damping=0):
    """The convolutor of Lambda_Q with V(s) = s^2 (s - 1)^2 Lambda_Q(s) (s(1 - s))^k, k = ``damping``."""
    def V(s):
        s = np.asarray(s, dtype=complex)
        at_pole = (s == 0.0) | (s == 1.0)
        safe = np.where(at_pole, 0.5, s)
        value = safe*safe*(safe - 1.0)**2*completed_riemann(safe)*_damping(safe, damping)
        return np.where(at_pole, 0.0, value)

    if contour is None:
        contour = ContourSpec(2.0, 70.0, 1400)
    return build_convolutor_from_mellin(V, 1.0, contour, "v[riemann]")


def build_convolutor_V(curve, contour=None, squared=False, damping=0, P=None, depth=DEFAULT_DEPTH):
    """The convolutor of Z_E, or of Z_E^2 when ``squared`` is set.

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    contour : ContourSpec, optional
        The default line Re(s) = 5/2 keeps the Dirichlet series of Lambda(E, 2s) absolutely convergent.
    squared : bool, optional
        Use V(s) = (2s - 1)^2 s^4 (s - 1)^4 Lambda(E, 2s)^2, with sign +1, instead of
        V(s) = (2s - 1) s^2 (s - 1)^2 Lambda(E, 2s) P(2s), with sign -omega_E.
    damping : int, optional
        The power k of the symmetric damping factor (s(1 - s))^k.
    P : list, optional
        Polynomial coefficients, highest degree first, see ``uv_split_E``.
    depth : int, optional
        The coefficient depth of Lambda(E, s).
    """
    with log.section("MEANP"), timer.section("Convolutor"):
        if squared:
            lfunc = build_elliptic_l(curve, depth)

            def V(s):
                s = np.asarray(s, dtype=complex)
                poly = (2.0*s - 1.0)**2*s**4*(s - 1.0)**4
                return poly*completed_l(lfunc, 2.0*s)**2*_damping(s, damping)

            sign = 1.0
            height = 20.0
            label = "v2[%s]" % curve.label
        else:
            U, V0 = uv_split_E(curve, depth, P)

            def V(s):
                return V0(s)*_damping(np.asarray(s, dtype=complex), damping)

            sign = -float(curve.sign_omega)
            height = 30.0
            label = "v[%s]" % curve.label
        if contour is None:
            contour = ContourSpec(2.5, height, int(20*height))
        return build_convolutor_from_mellin(V, sign, contour, label, heights=(4.0, 12.0))
