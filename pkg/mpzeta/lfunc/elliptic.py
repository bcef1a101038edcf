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


"""Elliptic curves over the rationals and the Dirichlet coefficients of their zeta functions."""

import os

import numpy as np

from mpzeta.log import log, timer
from mpzeta.exceptions import NumericalError
from mpzeta.lfunc.dirichlet import (DirichletCoefficients, dirichlet_convolve, dirichlet_inverse,
    save_coefficients, load_coefficients)


__all__ = [
    "EllipticCurve", "ModelData", "primes_up_to", "ec_ap", "reduction_type", "ec_an", "cached_ec_an",
    "hasse_weil_coeffs", "model_factor", "MAX_DEPTH"
]


MAX_DEPTH = 10**7
REDUCTION_TYPES = ["good", "split", "nonsplit", "additive"]
REDUCTION_AP = {"split": 1, "nonsplit": -1, "additive": 0}


def primes_up_to(nmax):
    """All primes p <= nmax, by the sieve of Eratosthenes."""
    if nmax < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(nmax + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(np.sqrt(nmax)) + 1):
        if sieve[p]:
            sieve[p*p::p] = False
    return np.nonzero(sieve)[0]


def _prime_factors(n):
    n = abs(int(n))
    factors = []
    p = 2
    while p*p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _is_prime_power(q):
    return q >= 2 and len(_prime_factors(q)) == 1


class EllipticCurve(object):
    def __init__(self, ainvs, conductor, sign_omega, label=None, rank=None, bad_primes=None):
        """An elliptic curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over the rationals.

        Parameters
        ----------
        ainvs : list of int
            The Weierstrass coefficients [a1, a2, a3, a4, a6] of a minimal equation.
        conductor : int
            The conductor q_E. It is taken as given, not computed.
        sign_omega : int
            The root number, +1 or -1.
        label : str, optional
            An identifier, such as ``"11a1"``.
        rank : int, optional
            The analytic rank, if known. It fixes the order of the pole of Z_E at s = 1/2.
        bad_primes : dict, optional
            Overrides of the reduction type at bad primes, ``{p: "split" | "nonsplit" | "additive"}``.

        Raises
        ------
        ValueError
            If the equation is singular, the sign is not +1 or -1, or the overrides are malformed.
        """
        if len(ainvs) != 5:
            raise ValueError("An elliptic curve needs five Weierstrass coefficients, got %i." % len(ainvs))
        self.a1, self.a2, self.a3, self.a4, self.a6 = [int(a) for a in ainvs]
        if self.discriminant == 0:
            raise ValueError("The Weierstrass equation %s is singular." % (list(ainvs),))
        if sign_omega not in (1, -1):
            raise ValueError("The root number must be +1 or -1, got %s." % sign_omega)
        if not int(conductor) >= 1:
            raise ValueError("The conductor must be a positive integer, got %s." % conductor)
        self.conductor = int(conductor)
        self.sign_omega = int(sign_omega)
        self.label = label if label is not None else "%s" % (list(ainvs),)
        self.rank = rank
        self.bad_primes = {}
        if bad_primes is not None:
            for p, kind in bad_primes.items():
                if kind not in REDUCTION_AP:
                    raise ValueError("Unknown reduction type %s at p = %s." % (kind, p))
                self.bad_primes[int(p)] = kind
        self._an = None

    @property
    def ainvs(self):
        return [self.a1, self.a2, self.a3, self.a4, self.a6]

    @property
    def discriminant(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1*a1 + 4*a2
        b4 = 2*a4 + a1*a3
        b6 = a3*a3 + 4*a6
        b8 = a1*a1*a6 + 4*a2*a6 - a1*a3*a4 + a2*a3*a3 - a4*a4
        return -b2*b2*b8 - 8*b4**3 - 27*b6*b6 + 9*b2*b4*b6

    def is_bad(self, p):
        return self.discriminant % p == 0

    def __repr__(self):
        return "EllipticCurve(%s, conductor=%i, sign=%+i, label=%r)" % (
            self.ainvs, self.conductor, self.sign_omega, self.label)


def _count_points(curve, p):
    # Projective points of the reduced (possibly singular) equation, including the point at infinity.
    a1, a2, a3, a4, a6 = [a % p for a in curve.ainvs]
    if p == 2:
        x, y = np.meshgrid(np.arange(2), np.arange(2))
        lhs = y*y + a1*x*y + a3*y
        rhs = x*x*x + a2*x*x + a4*x + a6
        return int(np.sum((lhs - rhs) % 2 == 0)) + 1
    # Completing the square: (2y + a1 x + a3)^2 = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2.
    x = np.arange(p, dtype=np.int64)
    xx = x*x % p
    cubic = (xx*x + a2*xx + a4*x + a6) % p
    lin = (a1*x + a3) % p
    rhs = (4*cubic + lin*lin) % p
    nroot = np.bincount(xx, minlength=p)
    return int(nroot[rhs].sum()) + 1


def ec_ap(curve, p):
    """The Frobenius trace a_p = p + 1 - #E(F_p).

    At bad primes the count over the singular reduction gives 1, -1 or 0 for split multiplicative,
    nonsplit multiplicative and additive reduction, unless the curve carries an override.

    Raises
    ------
    NumericalError
        If a good prime violates the Hasse bound |a_p| <= 2 sqrt(p).
    """
    p = int(p)
    if p in curve.bad_primes:
        return REDUCTION_AP[curve.bad_primes[p]]
    ap = p + 1 - _count_points(curve, p)
    if not curve.is_bad(p) and ap*ap > 4*p:
        raise NumericalError("a_%i = %i violates the Hasse bound." % (p, ap))
    return ap


def reduction_type(curve, p):
    """The reduction type of the curve at the prime ``p``: good, split, nonsplit or additive."""
    p = int(p)
    if p in curve.bad_primes:
        return curve.bad_primes[p]
    if not curve.is_bad(p):
        return "good"
    return {1: "split", -1: "nonsplit", 0: "additive"}[ec_ap(curve, p)]


def ec_an(curve, nmax):
    """The Dirichlet coefficients a_n, n <= nmax, of L(E, s).

    The a_p are extended to prime powers by a_(p^(k+1)) = a_p a_(p^k) - p a_(p^(k-1)) at good primes and
    a_(p^k) = a_p^k at bad primes, and to all n by multiplicativity.

    Returns
    -------
    output : DirichletCoefficients
        Integer coefficients with declared abscissa 3/2.

    Raises
    ------
    OverflowError
        If ``nmax`` exceeds ``MAX_DEPTH``.
    """
    if nmax < 1:
        raise ValueError("The coefficient depth must be at least 1.")
    if nmax > MAX_DEPTH:
        raise OverflowError("Depth %i exceeds the maximal coefficient depth %i." % (nmax, MAX_DEPTH))
    if curve._an is not None and curve._an.length >= nmax:
        return curve._an.truncate(nmax)
    with log.section("LFUNC"), timer.section("Frobenius traces"):
        a = np.zeros(nmax + 1, dtype=np.int64)
        a[1] = 1
        spf = np.zeros(nmax + 1, dtype=np.int64)
        for p in primes_up_to(nmax):
            p = int(p)
            unset = spf[p::p] == 0
            spf[p::p][unset] = p
            ap = ec_ap(curve, p)
            bad = curve.is_bad(p) or p in curve.bad_primes
            prev, cur = 1, ap
            q = p
            while q <= nmax:
                a[q] = cur
                if bad:
                    prev, cur = cur, cur*ap
                else:
                    prev, cur = cur, ap*cur - p*prev
                q *= p
        for n in range(2, nmax + 1):
            p = spf[n]
            q = p
            while (n//q) % p == 0:
                q *= p
            if q != n:
                a[n] = a[q]*a[n//q]
        if log.do_medium:
            log("Computed %i coefficients of L(E, s) for %s." % (nmax, curve.label))
    result = DirichletCoefficients(a, 1.5)
    curve._an = result
    return result


def cached_ec_an(curve, nmax, cache_dir):
    """Like ``ec_an``, but backed by a coefficient cache file ``<label>-<nmax>.csv`` in ``cache_dir``.

    A cache file is stale when its digest is wrong or when its a_2 and a_3 disagree with freshly counted
    values. Stale files are rebuilt with a warning.
    """
    fn = os.path.join(cache_dir, "%s-%i.csv" % (curve.label, nmax))
    if os.path.isfile(fn):
        try:
            cached = load_coefficients(fn, 1.5)
            spots = [(n, ec_ap(curve, n)) for n in (2, 3) if n <= nmax]
            if cached.length == nmax and all(cached[n] == value for n, value in spots):
                curve._an = cached
                return cached
            log.warn("Coefficient cache %s has wrong spot values, rebuilding it." % fn)
        except (IOError, ValueError) as e:
            log.warn("Coefficient cache %s is unusable (%s), rebuilding it." % (fn, e))
    result = ec_an(curve, nmax)
    if not os.path.isdir(cache_dir):
        os.makedirs(cache_dir)
    save_coefficients(fn, result)
    return result


def hasse_weil_coeffs(curve, mmax):
    """Dirichlet coefficients c_m of zeta_E(2s), m <= mmax.

    With zeta_E(s) = zeta(s) zeta(s - 1)/L(E, s) = sum_k e_k k^(-s), the sequence e is 1 * Id * b, where b is
    the Dirichlet inverse of (a_n). The coefficients of zeta_E(2s) are c_(k^2) = e_k and zero elsewhere.

    Returns
    -------
    output : DirichletCoefficients
        Integer coefficients with declared abscissa 1.
    """
    kmax = int(np.floor(np.sqrt(mmax)))
    while (kmax + 1)**2 <= mmax:
        kmax += 1
    if kmax < 1:
        raise ValueError("The coefficient depth must be at least 1.")
    a = ec_an(curve, max(kmax, 1)).values
    b = dirichlet_inverse(a)
    ident = np.arange(kmax + 1, dtype=np.int64)
    ones = np.ones(kmax + 1, dtype=np.int64)
    e = dirichlet_convolve(dirichlet_convolve(ones, ident), b)
    c = np.zeros(mmax + 1, dtype=np.int64)
    k = np.arange(1, kmax + 1)
    c[k*k] = e[1:]
    return DirichletCoefficients(c, 1.0)


class ModelData(object):
    def __init__(self, fiber_sizes, curve_label=None):
        """Bad-fiber data of a regular model of an elliptic curve.

        Parameters
        ----------
        fiber_sizes : list of int
            The prime powers q_j, one per affine line in the bad fibers.
        curve_label : str, optional
            The label of the curve the model belongs to.

        Raises
        ------
        ValueError
            If some q_j is not a prime power.
        """
        for q in fiber_sizes:
            if not _is_prime_power(int(q)):
                raise ValueError("Fiber size %s is not a prime power." % q)
        self.fiber_sizes = [int(q) for q in fiber_sizes]
        self.curve_label = curve_label

    @property
    def J(self):
        return len(self.fiber_sizes)

    def conductor(self, curve):
        """c = q_E prod_j q_j."""
        return curve.conductor*int(np.prod(self.fiber_sizes, dtype=np.int64))

    def __repr__(self):
        return "ModelData(%s, curve_label=%r)" % (self.fiber_sizes, self.curve_label)


def model_factor(model, s):
    """n(s) = prod_j (1 - q_j^(1 - s))^(-1)."""
    s = np.asarray(s, dtype=complex)
    result = np.ones_like(s)
    for q in model.fiber_sizes:
        result = result/(1.0 - np.exp((1.0 - s)*np.log(q)))
    return result
