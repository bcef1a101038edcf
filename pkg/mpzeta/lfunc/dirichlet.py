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


"""Dirichlet coefficient sequences.

A sequence is stored densely as a ``numpy.ndarray`` of length ``N + 1`` with ``values[n] = a_n``.
The entry ``values[0]`` is unused and kept at zero, so that slicing by divisors needs no index shifts.
"""

import hashlib

import numpy as np

from mpzeta.log import log
from mpzeta.exceptions import ConvergenceError, check_finite


__all__ = [
    "DirichletCoefficients", "dirichlet_convolve", "dirichlet_inverse", "divisor_counts",
    "divisor_sums", "dilate", "save_coefficients", "load_coefficients"
]


class DirichletCoefficients(object):
    def __init__(self, values, declared_abscissa, growth_constant=None):
        """A truncated Dirichlet series sum_{n <= N} a_n n^(-s).

        Parameters
        ----------
        values : numpy.ndarray, shape=(N + 1,)
            The coefficients, ``values[n] = a_n``. ``values[0]`` is ignored.
        declared_abscissa : float
            The abscissa of absolute convergence sigma_1 of the full series.
            The coefficients are assumed to grow like n^(sigma_1 - 1) up to a logarithmic factor.
        growth_constant : float, optional
            The constant C in |a_n| <= C n^(sigma_1 - 1) (1 + log n).
            If not given, it is estimated from the stored coefficients.
        """
        values = np.asarray(values)
        if values.ndim != 1 or len(values) < 2:
            raise ValueError("Dirichlet coefficients need at least the entry a_1.")
        self.values = values.copy()
        self.values[0] = 0
        self.declared_abscissa = float(declared_abscissa)
        if growth_constant is None:
            n = np.arange(1, len(values))
            alpha = self.declared_abscissa - 1.0
            growth_constant = np.max(np.abs(self.values[1:])/(n**alpha*(1.0 + np.log(n))))
        self.growth_constant = float(growth_constant)

    @property
    def length(self):
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def support(self):
        """The indices n with a_n != 0."""
        return np.nonzero(self.values)[0]

    def tail_bound(self, sigma):
        """Upper bound for sum_{n > N} |a_n| n^(-sigma), or ``inf`` for sigma <= sigma_1.

        The bound C (1 + log N) N^(1 + alpha - sigma)/(sigma - 1 - alpha), with alpha = sigma_1 - 1,
        follows from comparing the tail with an integral. It decreases monotonically in sigma.
        """
        alpha = self.declared_abscissa - 1.0
        if sigma <= self.declared_abscissa:
            return np.inf
        nmax = float(self.length)
        return self.growth_constant*(1.0 + np.log(nmax))*nmax**(1.0 + alpha - sigma)/(sigma - 1.0 - alpha)

    def depth_for(self, sigma, tol):
        """The smallest power of two N for which the tail bound at ``sigma`` drops below ``tol``.

        Raises
        ------
        ConvergenceError
            If ``sigma`` is not to the right of the abscissa of absolute convergence.
        """
        if sigma <= self.declared_abscissa:
            raise ConvergenceError("The Dirichlet series does not converge absolutely at sigma = %s." % sigma)
        alpha = self.declared_abscissa - 1.0
        nmax = 2
        while self.growth_constant*(1.0 + np.log(nmax))*nmax**(1.0 + alpha - sigma)/(sigma - 1.0 - alpha) > tol:
            nmax *= 2
            if nmax > 2**40:
                raise ConvergenceError("No reasonable depth reaches tolerance %.1e at sigma = %s." % (tol, sigma))
        return nmax

    def evaluate(self, s, nmax=None):
        """Partial sum sum_{n <= nmax} a_n n^(-s) over the nonzero coefficients."""
        s = np.asarray(s, dtype=complex)
        if nmax is None:
            nmax = self.length
        n = self.support()
        n = n[n <= nmax]
        coeffs = self.values[n].astype(complex)
        terms = np.exp(-np.multiply.outer(s, np.log(n.astype(float))))
        return check_finite(np.dot(terms, coeffs), "Dirichlet series")

    def truncate(self, nmax):
        return DirichletCoefficients(self.values[:nmax + 1], self.declared_abscissa, self.growth_constant)

    def __repr__(self):
        return "DirichletCoefficients(N=%i, abscissa=%s)" % (self.length, self.declared_abscissa)


def _as_values(a):
    if isinstance(a, DirichletCoefficients):
        return a.values
    return np.asarray(a)


def dirichlet_convolve(a, b, nmax=None):
    """Dirichlet convolution (a * b)(n) = sum_{d | n} a_d b_(n/d), for n <= nmax.

    Integer input gives exact integer output.
    """
    a = _as_values(a)
    b = _as_values(b)
    if nmax is None:
        nmax = min(len(a), len(b)) - 1
    dtype = np.result_type(a.dtype, b.dtype)
    result = np.zeros(nmax + 1, dtype=dtype)
    for d in range(1, min(nmax, len(a) - 1) + 1):
        if a[d] == 0:
            continue
        m = min(nmax//d, len(b) - 1)
        result[d:d*m + 1:d] += a[d]*b[1:m + 1]
    return result


def dirichlet_inverse(a):
    """Dirichlet inverse b of a, such that a * b is the identity sequence (1, 0, 0, ...).

    Raises
    ------
    ValueError
        If a_1 = 0.

    Notes
    -----
    When a_1 = +1 or -1 and the input is an integer sequence, the inverse is computed in exact integer arithmetic.
    """
    a = _as_values(a)
    if a[1] == 0:
        raise ValueError("A Dirichlet sequence with a_1 = 0 has no inverse.")
    nmax = len(a) - 1
    exact = np.issubdtype(a.dtype, np.integer) and abs(a[1]) == 1
    dtype = a.dtype if exact else np.result_type(a.dtype, float)
    acc = np.zeros(nmax + 1, dtype=dtype)
    b = np.zeros(nmax + 1, dtype=dtype)
    for n in range(1, nmax + 1):
        if n == 1:
            b[1] = a[1] if exact else 1.0/a[1]
        elif exact:
            b[n] = -a[1]*acc[n]
        else:
            b[n] = -acc[n]/a[1]
        m = nmax//n
        if m >= 2 and b[n] != 0:
            acc[2*n:n*m + 1:n] += a[2:m + 1]*b[n]
    return b


def divisor_counts(nmax):
    """The divisor function sigma_0(n) for n <= nmax, in the indexing convention of this module."""
    ones = np.ones(nmax + 1, dtype=np.int64)
    return dirichlet_convolve(ones, ones)


def divisor_sums(c):
    """The sequence (1 * c)(n) = sum_{d | n} c_d."""
    c = _as_values(c)
    return dirichlet_convolve(np.ones(len(c), dtype=c.dtype), c)


def dilate(a, factor, nmax):
    """The sequence with coefficient a_k placed at n = factor*k, for n <= nmax.

    This is the Dirichlet series of factor^(-s) A(s).
    """
    a = _as_values(a)
    result = np.zeros(nmax + 1, dtype=a.dtype)
    m = min(nmax//factor, len(a) - 1)
    result[factor:factor*m + 1:factor] = a[1:m + 1]
    return result


def _payload(values):
    lines = ["n,a_n"]
    for n in range(1, len(values)):
        lines.append("%i,%s" % (n, repr(values[n].item()) if hasattr(values[n], "item") else repr(values[n])))
    return "\n".join(lines) + "\n"


def save_coefficients(fn, coefficients):
    """Write a coefficient cache file.

    The file has the header ``n,a_n``, one row per n, and a trailing line ``# sha256=<hex>``
    holding the digest of everything above it.
    """
    payload = _payload(_as_values(coefficients))
    digest = hashlib.sha256(payload.encode("ascii")).hexdigest()
    with open(fn, "w") as f:
        f.write(payload)
        f.write("# sha256=%s\n" % digest)


def load_coefficients(fn, declared_abscissa):
    """Read a coefficient cache file written by ``save_coefficients``.

    Returns
    -------
    output : DirichletCoefficients

    Raises
    ------
    IOError
        If the header, the row numbering or the digest is wrong.
    """
    with open(fn) as f:
        text = f.read()
    body, sep, tail = text.rpartition("# sha256=")
    if not sep:
        raise IOError("Coefficient cache %s has no digest line." % fn)
    if hashlib.sha256(body.encode("ascii")).hexdigest() != tail.strip():
        raise IOError("Coefficient cache %s does not match its digest." % fn)
    rows = body.strip().split("\n")
    if rows[0] != "n,a_n":
        raise IOError("Coefficient cache %s has an unexpected header: %s" % (fn, rows[0]))
    values = []
    for i, row in enumerate(rows[1:]):
        n, value = row.split(",")
        if int(n) != i + 1:
            raise IOError("Coefficient cache %s skips index %i." % (fn, i + 1))
        values.append(int(value) if value.lstrip("-").isdigit() else float(value))
    values = np.array([0] + values)
    if log.do_high:
        log("Read %i coefficients from %s." % (len(values) - 1, fn))
    return DirichletCoefficients(values, declared_abscissa)
