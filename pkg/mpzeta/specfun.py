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


"""Complex special functions underlying every gamma factor and kernel.

All routines accept scalars or ``numpy.ndarray`` arguments and evaluate elementwise.
Scalar input gives scalar output.
The accuracy targets are those of double precision: no arbitrary precision arithmetic is used here.
"""

import numpy as np

from scipy.special import stirling2

from mpzeta.exceptions import PoleError, DomainError, check_finite


__all__ = [
    "log_gamma", "gamma", "log_gamma_r", "log_gamma_c", "gamma_r", "gamma_c",
    "bessel_k0", "k0_log_derivative", "touchard_coefficients"
]


# Lanczos approximation, g = 6.024680040776729583740234375, in the rational form of the Cephes library.
# Both polynomials are stored with the highest degree first, as expected by ``numpy.polyval``.
LANCZOS_G = 6.024680040776729583740234375
LANCZOS_NUM = np.array([
    0.006061842346248906525783753964555936883222,
    0.5098416655656676188125178644804694509993,
    19.51992788247617482847860966235652136208,
    449.9445569063168119446858607650988409623,
    6955.999602515376140356310115515198987526,
    75999.29304014542649875303443598909137092,
    601859.6171681098786670226533699352302507,
    3481712.15498064590882071018964774556468,
    14605578.08768506808414169982791359218571,
    43338889.32467613834773723740590533316085,
    86363131.28813859145546927288977868422342,
    103794043.1163445451906271053616070238554,
    56906521.91347156388090791033559122686859,
])
LANCZOS_DENOM = np.array([
    1.0, 66.0, 1925.0, 32670.0, 357423.0, 2637558.0, 13339535.0,
    45995730.0, 105258076.0, 150917976.0, 120543840.0, 39916800.0, 0.0,
])

LOG_PI = np.log(np.pi)
LOG_2PI = np.log(2.0*np.pi)


def _prepare(z, dtype=complex):
    scalar = np.ndim(z) == 0
    return np.atleast_1d(np.asarray(z, dtype=dtype)), scalar


def _finish(result, scalar):
    if scalar:
        return result[0]
    return result


def _lanczos_log_gamma(z):
    # Valid for Re(z) >= 1/2.
    rational = np.polyval(LANCZOS_NUM, z)/np.polyval(LANCZOS_DENOM, z)
    return np.log(rational) + (z - 0.5)*(np.log(z + LANCZOS_G - 0.5) - 1.0)


def _log_sin_pi(z):
    # Only correct modulo 2*pi*i, the caller fixes the branch.
    out = np.empty_like(z)
    y = z.imag
    small = np.abs(y) <= 20.0
    out[small] = np.log(np.sin(np.pi*z[small]))
    up = y > 20.0
    out[up] = -1j*np.pi*z[up] + np.log1p(-np.exp(2j*np.pi*z[up])) + np.log(0.5j)
    down = y < -20.0
    out[down] = 1j*np.pi*z[down] + np.log1p(-np.exp(-2j*np.pi*z[down])) + np.log(-0.5j)
    return out


def _reflected_log_gamma(z):
    # Valid for Re(z) < 1/2. The real part comes from the reflection formula, the branch index
    # from the argument sum of the upward recurrence log G(z) = log G(z + n) - sum_k log(z + k).
    result = LOG_PI - _log_sin_pi(z) - _lanczos_log_gamma(1.0 - z)
    nshift = np.ceil(0.5 - z.real).astype(int)
    kmax = nshift.max()
    ks = np.arange(kmax)
    mask = ks[None, :] < nshift[:, None]
    args = np.angle(z[:, None] + ks[None, :])
    target = _lanczos_log_gamma(z + nshift).imag - np.sum(np.where(mask, args, 0.0), axis=1)
    result.imag += 2.0*np.pi*np.round((target - result.imag)/(2.0*np.pi))
    return result


def log_gamma(z):
    """Principal branch of the logarithm of the gamma function.

    Parameters
    ----------
    z : complex or numpy.ndarray
        The argument(s).

    Returns
    -------
    output : complex or numpy.ndarray, dtype=complex
        The principal branch of log(Gamma(z)), analytic on the complex plane cut along the non-positive real axis.

    Raises
    ------
    PoleError
        If ``z`` is a non-positive integer.

    Notes
    -----
    For Re(z) >= 1/2 a 13-term Lanczos approximation is used, for Re(z) < 1/2 the reflection formula.
    The relative error of ``exp(log_gamma(z))`` stays below 1e-13 for |z| <= 100.
    """
    z, scalar = _prepare(z)
    poles = (z.imag == 0.0) & (z.real <= 0.0) & (z.real == np.round(z.real))
    if np.any(poles):
        raise PoleError("The gamma function has a pole at %s." % z[poles][0].real)
    result = np.empty_like(z)
    right = z.real >= 0.5
    result[right] = _lanczos_log_gamma(z[right])
    if not np.all(right):
        result[~right] = _reflected_log_gamma(z[~right])
    return _finish(check_finite(result, "log_gamma"), scalar)


def gamma(z):
    """The gamma function, as ``exp(log_gamma(z))``."""
    return np.exp(log_gamma(z))


def log_gamma_r(s):
    """Logarithm of Gamma_R(s) = pi^(-s/2) Gamma(s/2)."""
    s = np.asarray(s, dtype=complex)
    return -0.5*s*LOG_PI + log_gamma(0.5*s)


def log_gamma_c(s):
    """Logarithm of Gamma_C(s) = (2 pi)^(-s) Gamma(s)."""
    s = np.asarray(s, dtype=complex)
    return -s*LOG_2PI + log_gamma(s)


def gamma_r(s):
    """Real archimedean gamma factor Gamma_R(s) = pi^(-s/2) Gamma(s/2).

    Raises
    ------
    PoleError
        At s = 0, -2, -4, ...
    """
    return np.exp(log_gamma_r(s))


def gamma_c(s):
    """Complex archimedean gamma factor Gamma_C(s) = (2 pi)^(-s) Gamma(s).

    Raises
    ------
    PoleError
        At s = 0, -1, -2, ...
    """
    return np.exp(log_gamma_c(s))


def _k0_series(x):
    # Ascending series, x < 2.
    y = 0.25*x*x
    term = np.ones_like(x)
    i0 = np.ones_like(x)
    acc = np.zeros_like(x)
    harmonic = 0.0
    for k in range(1, 30):
        term = term*y/(k*k)
        harmonic += 1.0/k
        i0 += term
        acc += term*harmonic
    return -(np.log(0.5*x) + np.euler_gamma)*i0 + acc


def _k0_integral_scaled(x, k=0):
    # exp(x) (x d/dx)^k K0(x) from the trapezoidal rule applied to
    # int_0^oo exp(-x (cosh u - 1)) T_k(-x cosh u) du, which converges geometrically in the step.
    h = np.minimum(0.25, 0.3/np.sqrt(x))
    umax = np.arccosh(1.0 + (60.0 + 4.0*k)/x)
    nnode = int(np.ceil(np.max(umax/h))) + 2
    u = np.arange(nnode)[None, :]*h[:, None]
    cosh = np.cosh(u)
    integrand = np.exp(-x[:, None]*(cosh - 1.0))
    if k > 0:
        y = -x[:, None]*cosh
        integrand = integrand*np.polyval(touchard_coefficients(k)[::-1], y)
    weights = np.ones(nnode)
    weights[0] = 0.5
    return h*np.dot(integrand, weights)


def bessel_k0(x, return_underflow=False):
    """Modified Bessel function of the second kind of order zero.

    Parameters
    ----------
    x : float or numpy.ndarray
        Positive argument(s).
    return_underflow : bool, optional
        When true, also return a boolean flag (array) marking values below the underflow threshold.

    Returns
    -------
    value : float or numpy.ndarray
        K0(x). Values below the smallest normal double are returned as exactly zero.
    underflowed : bool or numpy.ndarray
        Only when ``return_underflow`` is true.

    Raises
    ------
    DomainError
        If any ``x <= 0``.

    Notes
    -----
    For x < 2 the ascending series K0(x) = -(log(x/2) + gamma) I0(x) + sum_k H_k (x^2/4)^k/(k!)^2 is summed.
    For x >= 2 the exponentially scaled integral representation exp(x) K0(x) = int_0^oo exp(-x (cosh u - 1)) du
    is evaluated by the trapezoidal rule with a step proportional to 1/sqrt(x), then multiplied by exp(-x).
    The relative error is below 1e-12 on [1e-6, 700].
    """
    x, scalar = _prepare(x, float)
    if np.any(~(x > 0.0)):
        raise DomainError("K0 is only defined for positive arguments.")
    value = np.empty_like(x)
    small = x < 2.0
    value[small] = _k0_series(x[small])
    large = ~small
    if np.any(large):
        xl = x[large]
        value[large] = np.exp(-xl)*_k0_integral_scaled(xl)
    underflowed = value < np.finfo(float).tiny
    value[underflowed] = 0.0
    check_finite(value, "K0")
    if return_underflow:
        return _finish(value, scalar), _finish(underflowed, scalar)
    return _finish(value, scalar)


def touchard_coefficients(k):
    """Stirling numbers of the second kind S(k, j), j = 0, ..., k.

    These are the coefficients of the Touchard polynomial T_k(y) = sum_j S(k, j) y^j, which satisfies
    (y d/dy)^k exp(y) = exp(y) T_k(y).
    """
    return stirling2(k, np.arange(k + 1), exact=False)


def k0_log_derivative(x, k):
    """Logarithmic derivative (x d/dx)^k K0(x).

    Parameters
    ----------
    x : float or numpy.ndarray
        Positive argument(s).
    k : int
        Derivative order, 0 <= k <= 6.

    Returns
    -------
    output : float or numpy.ndarray

    Notes
    -----
    Since d/dt K0(a exp(t)) = (x d/dx) K0 at x = a exp(t), this gives the analytic t-derivatives of
    the Bessel boundary series. For k = 0 the result coincides with ``bessel_k0``.
    """
    if k < 0 or k > 6:
        raise ValueError("Derivative order %i is not supported (0 <= k <= 6)." % k)
    if k == 0:
        return bessel_k0(x)
    x, scalar = _prepare(x, float)
    if np.any(~(x > 0.0)):
        raise DomainError("K0 is only defined for positive arguments.")
    value = np.exp(-x)*_k0_integral_scaled(x, k)
    return _finish(check_finite(value, "K0 derivative"), scalar)
