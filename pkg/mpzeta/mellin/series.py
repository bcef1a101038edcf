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


"""Closed-form series for the boundary terms of Z_E and Z_E^2.

The inverse Mellin transform of Z_E(s) = Lambda_Q(s) q_E^(-s) zeta_E(2s) is the theta-type series
f(x) = 2 sum_n D_n exp(-pi q_E^2 n^2 x^2) with D_n = sum_(d|n) c_d. That of Z_E(s)^2 is
4 sum_n B_n K0(2 pi q_E^2 n x) with B = sigma_0 * c * c. Both are evaluated here together with their
derivatives in t = -log x, which are computed term by term.
"""

import numpy as np

from scipy.special import comb

from mpzeta.log import log
from mpzeta.specfun import k0_log_derivative, touchard_coefficients
from mpzeta.exceptions import ConvergenceError
from mpzeta.lfunc.dirichlet import divisor_counts, divisor_sums, dirichlet_convolve
from mpzeta.lfunc.elliptic import ec_an, hasse_weil_coeffs
from mpzeta.mellin.contour import ContourSpec, SeriesTruncation, InverseMellin


__all__ = [
    "theta_coefficients", "bessel_coefficients", "theta_truncation", "bessel_truncation",
    "theta_boundary_E", "theta_boundary_E_derivative", "bessel_boundary_E2", "bessel_boundary_E2_derivative",
    "squared_convolutor_series", "theta_riemann"
]


# exp(-GAUSS_CUT) and exp(-BESSEL_CUT) are below the double precision resolution of the leading terms.
GAUSS_CUT = 45.0
BESSEL_CUT = 45.0
MAX_TERMS = 10**6
CHUNK = 256


def theta_coefficients(curve, nmax):
    """D_n = sum_(d|n) c_d, n <= nmax, the coefficients of the theta series of Z_E."""
    return divisor_sums(hasse_weil_coeffs(curve, nmax).values)


def bessel_coefficients(curve, nmax, convention="square"):
    """Coefficients of the Bessel series of Z_E^2.

    With ``convention="square"`` these are (sigma_0 * c * c)(n), the Dirichlet coefficients of
    zeta(s)^2 zeta_E(2s)^2. With ``convention="displayed"`` they are (c * sigma_0)(n).
    """
    c = hasse_weil_coeffs(curve, nmax).values
    if convention == "square":
        return dirichlet_convolve(dirichlet_convolve(divisor_counts(nmax), c), c)
    elif convention == "displayed":
        return dirichlet_convolve(c, divisor_counts(nmax))
    raise ValueError("Unknown Bessel series convention %s." % convention)


def _gauss_tail(a, nmax):
    # Bound on sum_(n > N) n^2 exp(-a n^2), using |D_n| <= n^2.
    n1 = nmax + 1.0
    return n1*n1*np.exp(-a*n1*n1)/(-np.expm1(-a*(2.0*n1 + 1.0)))


def theta_truncation(curve, t):
    """The number of terms after which both Gaussian parts of H_E(t) drop below exp(-45) relative."""
    a = np.pi*curve.conductor**2*np.exp(-2.0*np.abs(t))
    nmax = int(np.ceil(np.sqrt(GAUSS_CUT/a))) + 1
    if nmax > MAX_TERMS:
        raise ConvergenceError("The theta series at t = %s needs %i terms." % (t, nmax))
    return SeriesTruncation(nmax, _gauss_tail(a, nmax))


def _check_trunc(trunc, needed, t):
    if trunc is None:
        return needed
    if trunc.n_max < needed.n_max:
        raise ConvergenceError("A truncation after %i terms is insufficient at t = %s (%i needed)." % (
            trunc.n_max, t, needed.n_max))
    return trunc


def _synthetic(coefficients, nmax):
    coeffs = np.zeros(nmax)
    m = min(len(coefficients) - 1, nmax)
    coeffs[:m] = coefficients[1:m + 1]
    return coeffs


def theta_boundary_E(curve, t, trunc=None, coefficients=None):
    """H_E(t) = 2 sum_n D_n [exp(-pi q^2 n^2 e^(-2t)) + omega_E exp(t - pi q^2 n^2 e^(2t))].

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    t : float or numpy.ndarray
        The argument(s), t = -log x.
    trunc : SeriesTruncation, optional
        An explicit truncation. By default the series is cut where the Gaussian tail drops below exp(-45).
    coefficients : numpy.ndarray, optional
        Synthetic coefficients D_n (index n, entry 0 ignored) replacing those of the curve.

    Raises
    ------
    ConvergenceError
        If an explicit truncation is too short at ``t``.
    """
    return theta_boundary_E_derivative(curve, t, 0, trunc, coefficients)


def theta_boundary_E_derivative(curve, t, k, trunc=None, coefficients=None):
    """The k-th derivative in t of H_E, differentiated term by term, 0 <= k <= 6.

    With y = a e^(-2t) the first part gives (d/dt)^k exp(-y) = (-2)^k exp(-y) T_k(-y), where T_k is
    the Touchard polynomial. The second part follows from the product rule applied to e^t exp(-a e^(2t)).
    """
    if k < 0 or k > 6:
        raise ValueError("Derivative order %i is not supported (0 <= k <= 6)." % k)
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    result = np.zeros(len(ts))
    if len(ts) == 0:
        return result
    tworst = ts[np.argmax(np.abs(ts))]
    tr = _check_trunc(trunc, theta_truncation(curve, tworst), tworst)
    if coefficients is None:
        coeffs = theta_coefficients(curve, tr.n_max)[1:].astype(float)
    else:
        coeffs = _synthetic(coefficients, tr.n_max)
    n = np.arange(1, tr.n_max + 1, dtype=float)
    keep = coeffs != 0
    if not np.any(keep):
        return result if np.ndim(t) > 0 else 0.0
    coeffs = coeffs[keep]
    a = np.pi*curve.conductor**2*n[keep]**2
    touchard = [touchard_coefficients(j)[::-1] for j in range(k + 1)]
    for i in range(0, len(ts), CHUNK):
        tc = ts[i:i + CHUNK, None]
        y = a*np.exp(-2.0*tc)
        z = a*np.exp(2.0*tc)
        first = (-2.0)**k*np.exp(-y)*np.polyval(touchard[k], -y)
        ez = np.exp(-z)
        second = np.zeros_like(z)
        for j in range(k + 1):
            second += comb(k, j)*2.0**j*ez*np.polyval(touchard[j], -z)
        second *= np.exp(tc)
        result[i:i + CHUNK] = 2.0*np.dot(first + curve.sign_omega*second, coeffs)
    if np.ndim(t) == 0:
        return result[0]
    return result


def bessel_truncation(curve, t, convention="square"):
    """Number of terms after which both K0 parts of the Bessel series drop below exp(-45)."""
    q = curve.conductor**2 if convention == "square" else 1
    a = 2.0*np.pi*q*np.exp(-np.abs(t))
    nmax = int(np.ceil(BESSEL_CUT/a)) + 1
    if nmax > MAX_TERMS:
        raise ConvergenceError("The Bessel series at t = %s needs %i terms." % (t, nmax))
    n1 = nmax + 1.0
    # |B_n| <= n^3 and K0(x) <= exp(-x) for x >= 1
    tail = n1**3*np.exp(-a*n1)/(-np.expm1(-a))
    return SeriesTruncation(nmax, tail)


def bessel_boundary_E2(curve, t, trunc=None, convention="square", coefficients=None):
    """h_E^(2)(e^(-t)) = 4 sum_n B_n [K0(2 pi Q n e^(-t)) - e^t K0(2 pi Q n e^t)].

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    t : float or numpy.ndarray
        The argument(s).
    trunc : SeriesTruncation, optional
        An explicit truncation.
    convention : str, optional
        ``"square"`` (default): B = sigma_0 * c * c and Q = q_E^2, the boundary term of Z_E(s)^2.
        ``"displayed"``: B = c * sigma_0 and Q = 1.
    coefficients : numpy.ndarray, optional
        Synthetic coefficients B_n replacing those of the curve.
    """
    return bessel_boundary_E2_derivative(curve, t, 0, trunc, convention, coefficients)


def bessel_boundary_E2_derivative(curve, t, k, trunc=None, convention="square", coefficients=None):
    """The k-th t-derivative of the Bessel series, term by term through (x d/dx)^k K0."""
    if k < 0 or k > 6:
        raise ValueError("Derivative order %i is not supported (0 <= k <= 6)." % k)
    q = curve.conductor**2 if convention == "square" else 1
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    result = np.zeros(len(ts))
    if len(ts) == 0:
        return result
    tworst = ts[np.argmax(np.abs(ts))]
    tr = _check_trunc(trunc, bessel_truncation(curve, tworst, convention), tworst)
    if coefficients is None:
        coeffs = bessel_coefficients(curve, tr.n_max, convention)[1:].astype(float)
    else:
        coeffs = _synthetic(coefficients, tr.n_max)
    n = np.arange(1, tr.n_max + 1, dtype=float)
    keep = coeffs != 0
    if not np.any(keep):
        return result if np.ndim(t) > 0 else 0.0
    n = n[keep]
    coeffs = coeffs[keep]
    for i, ti in enumerate(ts):
        xlo = 2.0*np.pi*q*n*np.exp(-ti)
        xhi = 2.0*np.pi*q*n*np.exp(ti)
        first = (-1.0)**k*k0_log_derivative(xlo, k)
        second = np.zeros(len(n))
        for j in range(k + 1):
            second += comb(k, j)*k0_log_derivative(xhi, j)
        result[i] = 4.0*np.dot(coeffs, first - np.exp(ti)*second)
    if np.ndim(t) == 0:
        return result[0]
    return result


def _w_polynomial(s):
    return (2.0*s - 1.0)**2*s**4*(s - 1.0)**4


def squared_convolutor_series(curve, x, convention="square", depth=2000, contour=None):
    """Series form of the squared convolutor v(x) = (1/2 pi i) int (2s-1)^2 s^4 (s-1)^4 Lambda(E, 2s)^2 x^(-s) ds.

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    x : float or numpy.ndarray
        Positive argument(s).
    convention : str, optional
        ``"square"``: v(x) = sum_n (a * a)(n) W((2 pi)^4 n^2 x/q^2), the expansion of the contour definition.
        ``"displayed"``: sum_n a_n W(n^2 x/q^2).
    depth : int, optional
        Number of series terms.
    contour : ContourSpec, optional
        Line for the kernel W(y) = (1/2 pi i) int (2s-1)^2 s^4 (s-1)^4 Gamma(2s)^2 y^(-s) ds.

    Returns
    -------
    series, contour_value, discrepancy : numpy.ndarray
        The series value, the contour value of v and their difference.
    """
    from mpzeta.specfun import log_gamma
    from mpzeta.lfunc.builders import build_elliptic_l
    from mpzeta.lfunc.spec import completed_l

    x = np.atleast_1d(np.asarray(x, dtype=float))
    a = ec_an(curve, depth).values
    if convention == "square":
        coeffs = dirichlet_convolve(a, a)
        scale = (2.0*np.pi)**4/curve.conductor**2
    elif convention == "displayed":
        coeffs = a
        scale = 1.0/curve.conductor**2
    else:
        raise ValueError("Unknown convolutor series convention %s." % convention)
    if contour is None:
        contour = ContourSpec(1.0, 30.0, 600)
    kernel = InverseMellin(lambda s: _w_polynomial(s)*np.exp(2.0*log_gamma(2.0*s)), contour)
    n = np.arange(1, depth + 1, dtype=float)
    series = np.zeros(len(x))
    ycut = (0.5*BESSEL_CUT)**4
    for i, xi in enumerate(x):
        y = scale*n*n*xi
        # W(y) decays like exp(-2 y^(1/4)).
        keep = (coeffs[1:] != 0) & (y < ycut)
        if y[-1] < ycut:
            log.warn("The convolutor series at x = %s is truncated above the kernel cut." % xi)
        series[i] = np.dot(coeffs[1:][keep], kernel(y[keep]))
    lfunc = build_elliptic_l(curve)
    vfunc = InverseMellin(lambda s: _w_polynomial(s)*completed_l(lfunc, 2.0*s)**2, ContourSpec(2.5, 40.0, 800))
    value = vfunc(x)
    if log.do_medium:
        log("Squared convolutor of %s, %s convention: max discrepancy %.3e." % (
            curve.label, convention, np.max(np.abs(series - value))))
    return series, value, series - value


def theta_riemann(x):
    """f(x) = 2 sum_(n >= 1) exp(-pi n^2 x^2), the inverse Mellin transform of Lambda_Q by direct summation."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(~(xs > 0)):
        raise ValueError("The theta series is evaluated at positive arguments only.")
    nmax = int(np.ceil(np.sqrt(GAUSS_CUT/(np.pi*np.min(xs)**2)))) + 1
    if nmax > MAX_TERMS:
        raise ConvergenceError("The theta series at x = %s needs %i terms." % (np.min(xs), nmax))
    n2 = np.arange(1, nmax + 1, dtype=float)**2
    result = np.zeros(len(xs))
    for i in range(0, len(xs), CHUNK):
        result[i:i + CHUNK] = 2.0*np.exp(-np.pi*np.outer(xs[i:i + CHUNK]**2, n2)).sum(axis=1)
    if np.ndim(x) == 0:
        return result[0]
    return result
