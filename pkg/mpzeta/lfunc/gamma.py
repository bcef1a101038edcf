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


"""Archimedean gamma factors."""

import numpy as np

from mpzeta.specfun import log_gamma
from mpzeta.exceptions import check_finite


__all__ = ["GammaFactor"]


class GammaFactor(object):
    def __init__(self, conductor_q, shifts, r1=0, r2=0, scale=1.0):
        """A gamma factor of the form ``scale * q^(s/2) * prod_j Gamma(lambda_j s + mu_j)``.

        Parameters
        ----------
        conductor_q : float
            The positive constant q, which enters as q^(s/2).
        shifts : list of tuple
            The pairs (lambda_j, mu_j), with lambda_j > 0 and mu_j complex.
            An empty list gives a gamma factor without gamma functions.
        r1, r2 : int, optional
            The archimedean shape of the underlying field: the number of real and complex places.
        scale : float, optional
            A constant multiplier.

        Raises
        ------
        ValueError
            If ``conductor_q <= 0``, ``scale == 0`` or any lambda_j is not positive.
        """
        if not conductor_q > 0:
            raise ValueError("The conductor of a gamma factor must be positive, got %s." % conductor_q)
        if scale == 0:
            raise ValueError("A gamma factor cannot have a vanishing scale.")
        self.shifts = [(float(lam), complex(mu)) for lam, mu in shifts]
        for lam, mu in self.shifts:
            if not lam > 0:
                raise ValueError("Gamma factor shifts need lambda > 0, got %s." % lam)
        self.conductor_q = float(conductor_q)
        self.r1 = r1
        self.r2 = r2
        self.scale = scale

    @classmethod
    def gamma_r(cls):
        """Gamma_R(s) = pi^(-s/2) Gamma(s/2)."""
        return cls(1.0/np.pi, [(0.5, 0.0)], r1=1)

    @classmethod
    def gamma_c(cls):
        """Gamma_C(s) = (2 pi)^(-s) Gamma(s)."""
        return cls((2.0*np.pi)**-2, [(1.0, 0.0)], r2=1)

    @classmethod
    def plain(cls):
        """The plain gamma function Gamma(s)."""
        return cls(1.0, [(1.0, 0.0)])

    @classmethod
    def trivial(cls):
        """The constant gamma factor 1."""
        return cls(1.0, [])

    @classmethod
    def elliptic(cls, conductor):
        """N^(s/2) Gamma_C(s), the gamma factor of the L-function of an elliptic curve of conductor ``N``."""
        return cls(conductor/(4.0*np.pi**2), [(1.0, 0.0)], r2=1)

    @property
    def nfactor(self):
        return len(self.shifts)

    def log(self, s):
        """Logarithm of the gamma factor, summed branch by branch."""
        s = np.asarray(s, dtype=complex)
        result = np.log(complex(self.scale)) + 0.5*s*np.log(self.conductor_q)
        for lam, mu in self.shifts:
            result = result + log_gamma(lam*s + mu)
        return result

    def __call__(self, s):
        return check_finite(np.exp(self.log(s)), "gamma factor")

    def decay_rate(self):
        """The exponential decay rate on vertical lines: |gamma(sigma + it)| ~ exp(-rate |t|)."""
        return 0.5*np.pi*sum(lam for lam, mu in self.shifts)

    def poly_exponent(self, sigma):
        """The polynomial part of the Stirling asymptotics: |gamma(sigma + it)| ~ |t|^e exp(-rate |t|)."""
        return sum(lam*sigma + mu.real - 0.5 for lam, mu in self.shifts)

    def poles_right_edge(self):
        """Real part of the rightmost pole, or ``-inf`` when there are no gamma functions."""
        if len(self.shifts) == 0:
            return -np.inf
        return max(-mu.real/lam for lam, mu in self.shifts)

    def __repr__(self):
        return "GammaFactor(%r, %r, r1=%i, r2=%i, scale=%r)" % (
            self.conductor_q, self.shifts, self.r1, self.r2, self.scale)
