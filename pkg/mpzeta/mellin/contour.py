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


"""Inverse Mellin transforms by quadrature along a vertical line.

For a function Z(s) which is real on the real axis, the inverse Mellin transform on the line Re(s) = c is

    f(x) = (1/2 pi i) int_(c) Z(s) x^(-s) ds = (x^(-c)/pi) Re int_0^oo Z(c + it) exp(-it log x) dt.

The values Z(c + it_k) at the quadrature nodes are computed once and reused for every x,
so that a single ``InverseMellin`` instance evaluates f on arbitrary grids at the cost of a matrix product.
"""

import numpy as np

from mpzeta.log import log, timer
from mpzeta.exceptions import ConvergenceError, check_finite


__all__ = [
    "ContourSpec", "SeriesTruncation", "InverseMellin", "inverse_mellin", "kappa_kernel", "kappa_closed_form",
    "default_contour", "kappa_transform"
]


# Number of points per block in the phase matrix.
CHUNK = 512


class ContourSpec(object):
    def __init__(self, abscissa_c, height_T=40.0, node_count=400, rule="trapezoid"):
        """A truncated vertical line c + it, 0 <= t <= T, with a quadrature rule.

        Parameters
        ----------
        abscissa_c : float
            The real part c of the line, to the right of all poles of the integrand.
        height_T : float, optional
            The truncation height.
        node_count : int, optional
            The number of quadrature intervals. For the error estimate of the trapezoidal rule it should be even.
        rule : str, optional
            ``"trapezoid"`` or ``"tanh-sinh"``.
        """
        if rule not in ("trapezoid", "tanh-sinh"):
            raise ValueError("Unknown quadrature rule %s." % rule)
        if not height_T > 0 or not node_count >= 4:
            raise ValueError("A contour needs a positive height and at least four nodes.")
        self.abscissa_c = float(abscissa_c)
        self.height_T = float(height_T)
        self.node_count = int(node_count)
        self.rule = rule

    def check_spec(self, spec):
        """Raise ``ValueError`` if the line is not to the right of the pole strip of ``spec``."""
        edge = spec.center + spec.pole_strip_halfwidth_w
        if not self.abscissa_c > edge:
            raise ValueError("The contour abscissa %s must exceed %s for %s." % (self.abscissa_c, edge, spec.label))

    def nodes(self):
        """Quadrature nodes on [0, T] and two weight vectors: the full rule and the rule with half the nodes."""
        n = self.node_count - self.node_count % 2
        if self.rule == "trapezoid":
            t = np.linspace(0.0, self.height_T, n + 1)
            h = t[1] - t[0]
            w = np.full(n + 1, h)
            w[0] = w[-1] = 0.5*h
            w2 = np.zeros(n + 1)
            w2[::2] = 2.0*h
            w2[0] = w2[-1] = h
            return t, w, w2
        # tanh-sinh on [0, T]
        umax = 3.2
        u = np.linspace(-umax, umax, n + 1)
        h = u[1] - u[0]
        arg = 0.5*np.pi*np.sinh(u)
        t = 0.5*self.height_T*(1.0 + np.tanh(arg))
        dt = 0.5*self.height_T*0.5*np.pi*np.cosh(u)/np.cosh(arg)**2
        w = h*dt
        w2 = np.zeros(n + 1)
        w2[::2] = 2.0*h*dt[::2]
        return t, w, w2

    def __repr__(self):
        return "ContourSpec(c=%s, T=%s, nodes=%i, rule=%r)" % (
            self.abscissa_c, self.height_T, self.node_count, self.rule)


class SeriesTruncation(object):
    def __init__(self, n_max, tail_bound=None):
        """Truncation of a boundary series after ``n_max`` terms, with an upper bound on the dropped tail."""
        if not n_max >= 1:
            raise ValueError("A series truncation keeps at least one term.")
        self.n_max = int(n_max)
        self.tail_bound = tail_bound

    def __repr__(self):
        return "SeriesTruncation(n_max=%i, tail_bound=%s)" % (self.n_max, self.tail_bound)


class InverseMellin(object):
    def __init__(self, func, contour, reflect=None, tol=1e-10):
        """Inverse Mellin transform of ``func`` along ``contour``.

        Parameters
        ----------
        func : callable
            Vectorized evaluator s -> Z(s), real on the real axis.
        contour : ContourSpec
            The integration line.
        reflect : tuple, optional
            A pair ``(sign, d)`` for entire integrands with Z(s) = sign Z(d + 1 - s). Then f(x) for x < 1
            is obtained as sign x^(-(d+1)) f(1/x), which avoids the growth of x^(-c).
        tol : float, optional
            Tolerance for the truncation tail.
        """
        self.func = func
        self.contour = contour
        self.reflect = reflect
        self.tol = tol
        self._values = None

    def _prepare(self):
        if self._values is not None:
            return
        with timer.section("Contour nodes"):
            t, w, w2 = self.contour.nodes()
            c = self.contour.abscissa_c
            values = check_finite(np.asarray(self.func(c + 1j*t), dtype=complex), "contour integrand")
        self.t = t
        self._values = values
        self._weighted = values*w
        self._weighted2 = values*w2
        # Tail of int_T^oo |Z| dt, from the local exponential decay rate near T.
        k = max(len(t)//10, 1)
        top = abs(values[-1])
        below = abs(values[-1 - k])
        if top == 0.0:
            self.tail = 0.0
        elif below > top:
            rate = np.log(below/top)/(t[-1] - t[-1 - k])
            self.tail = top/rate
        else:
            self.tail = np.inf
        if log.do_high:
            log("Contour c = %s, T = %s: |Z(c + iT)| = %.3e, tail estimate %.3e." % (c, t[-1], top, self.tail))

    def _direct(self, x):
        logx = np.log(x)
        scale = np.exp(-self.contour.abscissa_c*logx)/np.pi
        value = np.empty(len(x))
        coarse = np.empty(len(x))
        for i in range(0, len(x), CHUNK):
            phases = np.exp(-1j*np.outer(logx[i:i + CHUNK], self.t))
            value[i:i + CHUNK] = np.dot(phases, self._weighted).real
            coarse[i:i + CHUNK] = np.dot(phases, self._weighted2).real
        value *= scale
        coarse *= scale
        error = np.abs(value - coarse) + scale*self.tail + 10.0*np.finfo(float).eps*np.abs(value)
        return value, error

    def evaluate(self, x):
        """Values and error estimates at the points ``x``.

        Raises
        ------
        ConvergenceError
            If the estimated truncation tail exceeds the tolerance.
        """
        self._prepare()
        if self.tail > self.tol:
            raise ConvergenceError("The contour integrand does not decay below %.1e at height %s (tail %.1e)." % (
                self.tol, self.contour.height_T, self.tail))
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(~(x > 0)):
            raise ValueError("Inverse Mellin transforms are evaluated at positive arguments only.")
        value = np.empty_like(x)
        error = np.empty_like(x)
        if self.reflect is None:
            value[:], error[:] = self._direct(x)
        else:
            sign, d = self.reflect
            small = x < 1.0
            value[~small], error[~small] = self._direct(x[~small])
            if np.any(small):
                xs = x[small]
                factor = sign*xs**(-(d + 1.0))
                v, e = self._direct(1.0/xs)
                value[small] = factor*v
                error[small] = np.abs(factor)*e
        return value, error

    def __call__(self, x):
        value, error = self.evaluate(x)
        if np.ndim(x) == 0:
            return value[0]
        return value


def inverse_mellin(func, x, contour, reflect=None, tol=1e-10):
    """Inverse Mellin transform f(x) = (1/2 pi i) int_(c) Z(s) x^(-s) ds.

    Parameters
    ----------
    func : callable or mpzeta.lfunc.spec.LFunctionSpec
        The function Z, real on the real axis. An ``LFunctionSpec`` also validates the contour abscissa.
    x : float or numpy.ndarray
        Positive argument(s).
    contour : ContourSpec
        The integration line.
    reflect : tuple, optional
        ``(sign, d)`` for entire Z with Z(s) = sign Z(d + 1 - s), see ``InverseMellin``.
    tol : float, optional
        Tolerance for the truncation tail.

    Returns
    -------
    value, error : float or numpy.ndarray
        The quadrature value and an estimate of its truncation and discretization error.

    Raises
    ------
    ConvergenceError
        If the tail estimate exceeds ``tol``.
    """
    if hasattr(func, "pole_strip_halfwidth_w"):
        contour.check_spec(func)
    value, error = InverseMellin(func, contour, reflect, tol).evaluate(x)
    if np.ndim(x) == 0:
        return value[0], error[0]
    return value, error


def kappa_closed_form(gamma, x):
    """Closed form of the inverse Mellin transform of a gamma factor with one gamma function.

    For gamma(s) = scale q^(s/2) Gamma(lambda s + mu) and y = x/sqrt(q), it is
    (scale/lambda) y^(mu/lambda) exp(-y^(1/lambda)). For Gamma_R this is 2 exp(-pi x^2).
    """
    if gamma.nfactor != 1:
        raise NotImplementedError("Closed forms are only available for a single gamma function.")
    (lam, mu), = gamma.shifts
    y = np.asarray(x, dtype=float)/np.sqrt(gamma.conductor_q)
    return (gamma.scale/lam*y**(mu/lam)*np.exp(-y**(1.0/lam))).real


def kappa_transform(gamma, contour=None):
    """The inverse Mellin transform of a gamma factor as a reusable ``InverseMellin``.

    By default the line lies one unit right of the rightmost pole and is truncated where exp(-rate T) < 1e-16.
    """
    if contour is None:
        rate = gamma.decay_rate()
        if rate == 0:
            raise ConvergenceError("A gamma factor without gamma functions has no inverse Mellin transform.")
        edge = gamma.poles_right_edge()
        height = 37.0/rate + 10.0
        contour = ContourSpec(edge + 1.0, height, int(20*height))
    elif not contour.abscissa_c > gamma.poles_right_edge():
        raise ValueError("The contour abscissa %s is not right of the gamma poles." % contour.abscissa_c)
    return InverseMellin(gamma, contour)


def kappa_kernel(gamma, x, contour=None):
    """The kernel kappa(x), the inverse Mellin transform of the gamma factor, by contour quadrature.

    Parameters
    ----------
    gamma : mpzeta.lfunc.gamma.GammaFactor
        A gamma factor with at least one gamma function.
    x : float or numpy.ndarray
        Positive argument(s).
    contour : ContourSpec, optional
        See ``kappa_transform``.
    """
    return kappa_transform(gamma, contour)(x)


def default_contour(spec, offset=2.0, tol=1e-12, step=0.1):
    """A contour for the inverse Mellin transform of ``spec``.

    The line lies ``offset`` to the right of the pole strip. It is truncated where the Stirling envelope
    exp(-rate T) has dropped below ``tol`` with a margin of exp(-20) for polynomial factors, and it is
    sampled with step ``step``.
    """
    rate = spec.gamma.decay_rate()
    if rate == 0:
        raise ConvergenceError("%s does not decay on vertical lines." % spec.label)
    c = spec.center + spec.pole_strip_halfwidth_w + offset
    height = (-np.log(tol) + 20.0)/rate
    return ContourSpec(c, height, int(np.ceil(height/step)))
