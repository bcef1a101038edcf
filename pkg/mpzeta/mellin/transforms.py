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


"""Mellin, half-Mellin and Mellin-Carleman transforms by quadrature in the logarithmic variable.

All integrals over (0, oo) with measure dx/x are taken in u = log x. Multiplicative convolutions
(f *x g)(x) = int f(x/y) g(y) dy/y become additive convolutions in u and are evaluated with composite
Gauss-Legendre rules on panels whose edges include the point y = 1, where the cut-off parts h^+ and h^-
of a boundary term jump.
"""

import numpy as np

from scipy.integrate import quad
from numpy.polynomial.legendre import leggauss

from mpzeta.log import log, timer
from mpzeta.exceptions import ConvergenceError, CertificationError, check_finite


__all__ = [
    "mellin_transform", "half_mellin", "log_convolve", "mellin_carleman", "CERTIFY_THRESHOLD", "TAIL_EXPONENT"
]


# Relative residual below which v *x h counts as zero.
CERTIFY_THRESHOLD = 1e-5
# exp(-TAIL_EXPONENT) bounds the relative Laplace tail.
TAIL_EXPONENT = 36.8
GAUSS_ORDER = 16
PANEL_WIDTH = 0.25


def _complex_quad(func, lo, hi, epsabs, epsrel, limit, points=None):
    kwargs = dict(epsabs=epsabs, epsrel=epsrel, limit=limit)
    if points is not None and np.isfinite(lo) and np.isfinite(hi):
        kwargs["points"] = points
    re, re_err = quad(lambda u: func(u).real, lo, hi, **kwargs)
    im, im_err = quad(lambda u: func(u).imag, lo, hi, **kwargs)
    return complex(re, im), abs(re_err) + abs(im_err)


def mellin_transform(f, s, support=(0.0, np.inf), epsabs=1e-13, epsrel=1e-10, limit=400):
    """M(f)(s) = int_0^oo f(x) x^s dx/x.

    Parameters
    ----------
    f : callable
        A real function on ``support``, evaluated at scalar arguments.
    s : complex
        The argument.
    support : tuple, optional
        An interval (x_lo, x_hi) outside of which f vanishes.

    Returns
    -------
    output : complex

    Notes
    -----
    The substitution x = e^u turns the integral into int f(e^u) e^(su) du, which ``scipy.integrate.quad``
    handles on infinite ranges as well.
    """
    lo, hi = support
    if not (0.0 <= lo < hi):
        raise ValueError("A Mellin transform needs a support interval inside (0, oo), got %s." % (support,))
    ulo = np.log(lo) if lo > 0 else -np.inf
    uhi = np.log(hi) if np.isfinite(hi) else np.inf
    s = complex(s)

    def integrand(u):
        with np.errstate(over="ignore"):
            fx = f(np.exp(u))
            # f vanishes where x^s may overflow
            if fx == 0.0:
                return 0j
            return fx*np.exp(s*u)

    value, error = _complex_quad(integrand, ulo, uhi, epsabs, epsrel, limit)
    return check_finite(value, "Mellin transform")


def _growth(h, growth_exponent):
    if growth_exponent is not None:
        return growth_exponent
    return getattr(h, "growth_exponent", None)


def half_mellin(h, s, growth_exponent=None, epsabs=1e-13, epsrel=1e-11, limit=500):
    """omega(s) = int_0^1 h(x) x^s dx/x, the Laplace transform of H(t) = h(e^(-t)).

    Parameters
    ----------
    h : mpzeta.boundary.term.BoundaryTerm or callable
        The boundary term. A plain callable needs an explicit ``growth_exponent``.
    s : complex
        The argument, with Re(s) above the growth exponent.
    growth_exponent : float, optional
        An exponent g with |h(x)| = O(x^(-g)) as x -> 0+. Defaults to ``h.growth_exponent``.

    Raises
    ------
    ConvergenceError
        If Re(s) does not exceed the growth exponent, where the integral diverges.

    Notes
    -----
    The Laplace integral is truncated at T = 36.8/(Re(s) - g), where the envelope e^((g - Re(s)) t) has
    dropped below 1e-16.
    """
    g = _growth(h, growth_exponent)
    if g is None:
        raise ValueError("A half-Mellin transform needs the growth exponent of its integrand.")
    s = complex(s)
    if not s.real > g:
        raise ConvergenceError("The half-Mellin integral diverges at Re(s) = %s <= %s." % (s.real, g))
    height = TAIL_EXPONENT/(s.real - g)
    # Panels of one oscillation period at most.
    npanel = max(int(np.ceil(height*max(abs(s.imag), 1.0)/np.pi)), 1)
    edges = np.linspace(0.0, height, npanel + 1)
    value = 0j
    with timer.section("Half Mellin"):
        for lo, hi in zip(edges[:-1], edges[1:]):
            part, error = _complex_quad(lambda t: h(np.exp(-t))*np.exp(-s*t), lo, hi, epsabs, epsrel, limit)
            value += part
    return check_finite(value, "half-Mellin transform")


def _panels(lo, hi, breaks, width):
    cuts = [lo] + sorted(b for b in breaks if lo < b < hi) + [hi]
    edges = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        n = max(int(np.ceil((b - a)/width)), 1)
        edges.append(np.linspace(a, b, n + 1)[:-1])
    edges.append(np.array([hi]))
    return np.concatenate(edges)


def _gauss_nodes(edges, order=GAUSS_ORDER):
    xg, wg = leggauss(order)
    a = edges[:-1, None]
    b = edges[1:, None]
    u = 0.5*(a + b) + 0.5*(b - a)*xg
    w = 0.5*(b - a)*wg
    return u.ravel(), w.ravel()


def log_convolve(f, g, x, window, cut=None, width=PANEL_WIDTH):
    """Multiplicative convolution (f *x g)(x) = int_0^oo f(x/y) g(y) dy/y.

    Parameters
    ----------
    f : callable
        A vectorized function, negligible for log(x/y) outside ``window``.
    g : callable
        A vectorized function.
    x : float or numpy.ndarray
        Positive argument(s).
    window : tuple
        The interval (lo, hi) of log arguments carrying f.
    cut : str, optional
        ``"below"`` restricts g to y < 1 and ``"above"`` to y >= 1.
    width : float, optional
        The panel width in log y.

    Returns
    -------
    value, magnitude : numpy.ndarray
        The convolution and int |f(x/y) g(y)| dy/y.
    """
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    value = np.zeros(len(xs))
    magnitude = np.zeros(len(xs))
    lo, hi = window
    for i, xi in enumerate(xs):
        # u = log y with log(x/y) in [lo, hi]
        ulo = np.log(xi) - hi
        uhi = np.log(xi) - lo
        if cut == "below":
            uhi = min(uhi, 0.0)
        elif cut == "above":
            ulo = max(ulo, 0.0)
        elif cut is not None:
            raise ValueError("Unknown cut %s." % cut)
        if not uhi > ulo:
            continue
        u, w = _gauss_nodes(_panels(ulo, uhi, [0.0], width))
        terms = np.asarray(f(xi*np.exp(-u)), dtype=float)*np.asarray(g(np.exp(u)), dtype=float)
        value[i] = np.dot(w, terms)
        magnitude[i] = np.dot(w, np.abs(terms))
    check_finite(value, "multiplicative convolution")
    if np.ndim(x) == 0:
        return value[0], magnitude[0]
    return value, magnitude


def _split_convolution(h, v, xs):
    window = v.log_window
    above = xs >= 1.0
    plus = np.zeros(len(xs))
    minus = np.zeros(len(xs))
    mag_plus = np.zeros(len(xs))
    mag_minus = np.zeros(len(xs))
    plus[:], mag_plus[:] = log_convolve(v.evaluator, h, xs, window, "below")
    minus[:], mag_minus[:] = log_convolve(v.evaluator, h, xs, window, "above")
    residual = plus + minus
    scale = np.max(mag_plus + mag_minus)
    # v *x h = 0 gives v *x h^+ = -(v *x h^-); each form is used where it carries no cancellation.
    g = np.where(above, plus, -minus)
    return g, residual, scale


def mellin_carleman(h, v, s, step=0.02, margin=1.0, threshold=CERTIFY_THRESHOLD):
    """The Mellin-Carleman transform MC(h)(s) = M(v *x h^+)(s)/M(v)(s).

    Parameters
    ----------
    h : mpzeta.boundary.term.BoundaryTerm or callable
        The boundary term, vectorized.
    v : mpzeta.meanper.convolutor.Convolutor
        A convolutor with v *x h = 0. Its ``log_window`` bounds the support of v in log x and its
        ``mellin_evaluator`` gives M(v) in closed form.
    s : complex or sequence of complex
        The argument(s).
    step : float, optional
        The grid step in log x for the outer Mellin transform.
    margin : float, optional
        Extension of the log grid beyond the window of v.
    threshold : float, optional
        The largest accepted relative residual of v *x h on the grid.

    Returns
    -------
    output : complex or numpy.ndarray

    Raises
    ------
    CertificationError
        If v *x h does not vanish on the grid, or if M(v)(s) vanishes numerically.

    Notes
    -----
    The function v *x h^+ decays rapidly at both ends, so its Mellin transform is entire and is
    computed with the trapezoidal rule in u = log x. When Re(s) exceeds the growth exponent of h the
    result agrees with the half-Mellin transform of h.
    """
    lo, hi = v.log_window
    extent = max(abs(lo), abs(hi)) + margin
    n = int(np.ceil(extent/step))
    u = step*np.arange(-n, n + 1)
    xs = np.exp(u)
    with log.section("MC"), timer.section("Mellin-Carleman"):
        g, residual, scale = _split_convolution(h, v, xs)
        ratio = np.max(np.abs(residual))/scale if scale > 0 else np.inf
        if not ratio <= threshold:
            raise CertificationError("The convolutor %s does not annihilate the boundary term (residual %.3e)." % (
                getattr(v, "label", "v"), ratio))
        if log.do_medium:
            log("Convolution residual %.3e relative to %.3e on %i points." % (ratio, scale, len(xs)))
        ss = np.atleast_1d(np.asarray(s, dtype=complex))
        numerator = step*np.dot(np.exp(np.outer(ss, u)), g)
        denominator = np.asarray(v.mellin_evaluator(ss), dtype=complex)
        # Mellin transform of v itself, as a check on the closed form.
        vgrid = v.evaluator(xs)
        quadrature = step*np.dot(np.exp(np.outer(ss, u)), vgrid)
        floor = 1e-8*step*np.sum(np.abs(vgrid)*np.exp(np.outer(ss.real, u)), axis=1)
        if np.any(np.abs(denominator) <= floor):
            raise CertificationError("M(v) vanishes numerically at s = %s." % ss[np.argmin(np.abs(denominator) - floor)])
        mismatch = np.max(np.abs(quadrature - denominator)/np.abs(denominator))
        if mismatch > 1e-6:
            log.warn("The closed form of M(v) differs from its quadrature by %.3e relative." % mismatch)
    result = check_finite(numerator/denominator, "Mellin-Carleman transform")
    if np.ndim(s) == 0:
        return result[0]
    return result
