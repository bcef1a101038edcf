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


"""Zeros on the critical line: zero lists, zero files, sign-change scans and the argument principle."""

import os

import numpy as np

from scipy.optimize import brentq

from mpzeta.log import log, timer
from mpzeta.specfun import log_gamma_r
from mpzeta.exceptions import DomainError, check_finite
from mpzeta.lfunc.zeta import QuadField, riemann_zeta, quad_dirichlet_l, completed_dedekind
from mpzeta.lfunc.gamma import GammaFactor
from mpzeta.lfunc.spec import completed_l


__all__ = [
    "ZeroList", "load_zeros", "hardy_z", "zeta_zero_scan", "argument_count", "lzero_scan", "dedekind_zeta",
    "c_gamma_coefficient", "DESK_HEIGHT"
]


DESK_HEIGHT = 100.0


class ZeroList(object):
    def __init__(self, ordinates, source="computed", height_limit=None):
        """Ordinates 0 < gamma_1 < gamma_2 < ... of zeros on a critical line.

        Parameters
        ----------
        ordinates : sequence of float
            Strictly increasing positive ordinates.
        source : str, optional
            ``"file"`` or ``"computed"``.
        height_limit : float, optional
            The height up to which the list is complete. Defaults to the last ordinate.

        Raises
        ------
        ValueError
            If the ordinates are not positive, not strictly increasing or exceed the height limit.
        """
        ordinates = np.asarray(ordinates, dtype=float).ravel()
        if source not in ("file", "computed"):
            raise ValueError("Unknown zero list source %s." % source)
        if np.any(ordinates <= 0):
            raise ValueError("Zero ordinates must be positive.")
        if np.any(np.diff(ordinates) <= 0):
            raise ValueError("Zero ordinates must be strictly increasing.")
        if height_limit is None:
            height_limit = ordinates[-1] if len(ordinates) > 0 else 0.0
        if len(ordinates) > 0 and ordinates[-1] > height_limit:
            raise ValueError("Zero ordinate %s exceeds the height limit %s." % (ordinates[-1], height_limit))
        self.ordinates = ordinates
        self.source = source
        self.height_limit = float(height_limit)

    def __len__(self):
        return len(self.ordinates)

    def __iter__(self):
        return iter(self.ordinates)

    def __getitem__(self, index):
        return self.ordinates[index]

    def up_to(self, height):
        """The ordinates not exceeding ``height``."""
        return self.ordinates[self.ordinates <= height]

    def to_file(self, fn):
        with open(fn, "w") as f:
            f.write("# source=%s height_limit=%.12f\n" % (self.source, self.height_limit))
            for gamma in self.ordinates:
                f.write("%.12f\n" % gamma)

    def __repr__(self):
        return "ZeroList(%i zeros, source=%r, height_limit=%s)" % (len(self), self.source, self.height_limit)


def load_zeros(fn, height_limit=None):
    """Read a zero file: one positive ordinate per line in ascending order, ``#`` starts a comment line.

    Raises
    ------
    IOError
        If the file does not exist.
    ValueError
        If a line does not parse (the message names the line number) or the ordinates are not increasing.
    """
    if not os.path.isfile(fn):
        raise IOError("Zero file %s does not exist." % fn)
    ordinates = []
    with open(fn) as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if len(line) == 0 or line.startswith("#"):
                continue
            try:
                ordinates.append(float(line))
            except ValueError:
                raise ValueError("Line %i of zero file %s does not hold a number: %r." % (number, fn, line))
    ordinates = np.array(ordinates)
    if np.any(np.diff(ordinates) <= 0):
        raise ValueError("The ordinates in zero file %s are not sorted." % fn)
    return ZeroList(ordinates, "file", height_limit)


def hardy_z(t):
    """The Hardy function Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t."""
    t = np.asarray(t, dtype=float)
    s = 0.5 + 1j*t
    return check_finite((np.exp(1j*log_gamma_r(s).imag)*riemann_zeta(s)).real, "Hardy Z")


def _sign_change_zeros(func, lo, hi, step, xtol):
    ts = np.arange(lo, hi + 0.5*step, step)
    values = np.array([func(t) for t in ts])
    zeros = []
    for i in np.nonzero(np.sign(values[:-1])*np.sign(values[1:]) < 0)[0]:
        zeros.append(brentq(func, ts[i], ts[i + 1], xtol=xtol))
    return zeros


def zeta_zero_scan(height_limit, step=0.05, xtol=1e-10):
    """Zeros of zeta on the critical line up to ``height_limit`` from sign changes of the Hardy function.

    A warning is issued when the count differs from the argument principle, which signals zeros
    missed by the grid.
    """
    if height_limit > DESK_HEIGHT:
        log.warn("Zero scans above height %s are slow and unverified." % DESK_HEIGHT)
    with log.section("ZEROS"), timer.section("Zero scan"):
        zeros = _sign_change_zeros(lambda t: float(hardy_z(t)), step, height_limit, step, xtol)
        zeros = [gamma for gamma in zeros if gamma <= height_limit]
        expected = argument_count(height_limit)
        if expected != len(zeros):
            log.warn("Found %i zeros below height %s, the argument principle counts %i." % (
                len(zeros), height_limit, expected))
        elif log.do_medium:
            log("Found all %i zeros of zeta below height %s." % (len(zeros), height_limit))
    return ZeroList(zeros, "computed", height_limit)


def argument_count(height, step=0.005):
    """Number of zeros of zeta with 0 < Im(s) < height, by the argument principle.

    The variation of arg xi for xi(s) = s(s - 1) Lambda_Q(s)/2 is followed from s = 2 up to 2 + i height and
    on to 1/2 + i height; by symmetry the count is this variation divided by pi.
    ``height`` should not be a zero ordinate.
    """
    right = 2.0 + 1j*np.arange(0.0, height + 0.5*step, step)
    right[-1] = 2.0 + 1j*height
    top = np.linspace(2.0, 0.5, int(np.ceil(1.5/step)) + 1) + 1j*height
    path = np.concatenate([right, top[1:]])
    phase = np.unwrap(np.angle(riemann_zeta(path)))
    end = path[-1]
    total = phase[-1] - phase[0] + np.angle(end) + np.angle(end - 1.0) + log_gamma_r(end).imag
    return int(np.round(total/np.pi))


def lzero_scan(spec, height_limit, step=0.25, xtol=1e-9):
    """Zeros of a self-dual completed function on its critical line, 0 < t <= ``height_limit``.

    The rotated function Re(eps^(-1/2) Lambda(c + it))/|gamma(c + it)| is real; its sign changes are refined
    by bisection. Zeros of even order are not detected.
    """
    if not spec.is_self_dual:
        raise ValueError("Zero scans need a self-dual function, %s is not." % spec.label)
    c = spec.center
    rotation = 1.0/np.sqrt(complex(spec.sign_eps))

    def rotated(t):
        s = complex(c, t)
        value = rotation*completed_l(spec, s)*np.exp(-spec.gamma.log(s).real)
        return float(value.real)

    with log.section("ZEROS"), timer.section("Zero scan"):
        zeros = _sign_change_zeros(rotated, step, height_limit, step, xtol)
        zeros = [gamma for gamma in zeros if gamma <= height_limit]
        if log.do_medium:
            log("Found %i zeros of %s below height %s." % (len(zeros), spec.label, height_limit))
    return ZeroList(zeros, "computed", height_limit)


def dedekind_zeta(field, s):
    """zeta_K(s) = zeta(s) L(s, chi_K)."""
    if not isinstance(field, QuadField):
        field = QuadField(field)
    if field.is_rational:
        return riemann_zeta(s)
    return riemann_zeta(s)*quad_dirichlet_l(s, field)


def _archimedean(field):
    k = abs(field.fundamental_discriminant)
    if field.is_rational:
        return GammaFactor.gamma_r()
    if field.fundamental_discriminant > 0:
        return GammaFactor(k/np.pi**2, [(0.5, 0.0), (0.5, 0.0)], r1=2)
    return GammaFactor(k/(4.0*np.pi**2), [(1.0, 0.0)], r2=1)


def c_gamma_coefficient(field, gamma_ordinate, step=1e-6, zeta_k=None):
    """The residue c_gamma of Z_K at a simple zero 1/2 + i gamma of zeta_K.

    c_gamma = Lambda_K(2 i gamma) Lambda_K(1 + 2 i gamma)/(zeta_K,oo(1/2 + i gamma) zeta_K'(1/2 + i gamma)).

    Parameters
    ----------
    field : QuadField or int
        The field.
    gamma_ordinate : float
        The ordinate of the zero. Negative ordinates give the conjugate value.
    step : float, optional
        The step of the central difference for zeta_K'. A four-point stencil serves as a cross-check.
    zeta_k : callable, optional
        Replaces s -> zeta_K(s).

    Raises
    ------
    DomainError
        If |zeta_K(1/2 + i gamma)| >= 1e-6, or if |zeta_K'| < 1e-8 and the zero may be multiple.
    """
    if not isinstance(field, QuadField):
        field = QuadField(field)
    if zeta_k is None:
        zeta_k = lambda s: dedekind_zeta(field, s)
    rho = complex(0.5, gamma_ordinate)
    if not abs(zeta_k(rho)) < 1e-6:
        raise DomainError("1/2 + %si is not a zero of zeta_K (|zeta_K| = %.3e)." % (gamma_ordinate, abs(zeta_k(rho))))
    fp = zeta_k(rho + step)
    fm = zeta_k(rho - step)
    derivative = (fp - fm)/(2.0*step)
    stencil = (-zeta_k(rho + 2.0*step) + 8.0*fp - 8.0*fm + zeta_k(rho - 2.0*step))/(12.0*step)
    if abs(derivative) < 1e-8:
        raise DomainError("zeta_K' nearly vanishes at 1/2 + %si, the zero may be multiple." % gamma_ordinate)
    if abs(stencil - derivative) > 1e-6*abs(derivative):
        log.warn("Difference quotients of zeta_K' at 1/2 + %si disagree by %.3e." % (
            gamma_ordinate, abs(stencil - derivative)))
    numerator = completed_dedekind(field, 2.0*rho - 1.0)*completed_dedekind(field, 2.0*rho)
    return complex(check_finite(numerator/(_archimedean(field)(rho)*derivative), "c_gamma"))
