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


"""Pole ledgers of completed functions and the pole expansion of their boundary terms.

Near a pole lambda of multiplicity m a completed function reads Z(s) = sum_(k=1..m) C_k (s - lambda)^(-k) + O(1).
Shifting the inverse Mellin contour across the poles shows that the boundary term equals the sum over all poles
of sum_k C_k (-1)^(k-1)/(k-1)! log^(k-1)(x) x^(-lambda), summed over symmetric height windows.
"""

import csv

import numpy as np

from scipy.special import factorial

from mpzeta.log import log, timer
from mpzeta.exceptions import ConvergenceError
from mpzeta.lfunc.builders import build_Z_E, build_Z_K
from mpzeta.lfunc.zeta import QuadField
from mpzeta.boundary.zeros import c_gamma_coefficient


__all__ = [
    "PoleDatum", "pole_expansion", "residue_ledger", "export_ledger", "import_ledger", "pole_ledger_for_Z_E",
    "pole_ledger_for_Z_K", "conjugate_closed"
]


DROP_TOL = 1e-10


class PoleDatum(object):
    def __init__(self, location_lambda, multiplicity, principal_coeffs):
        """A pole with its principal part.

        Parameters
        ----------
        location_lambda : complex
            The location lambda.
        multiplicity : int
            The order m of the pole.
        principal_coeffs : sequence of complex
            C_1, ..., C_m.

        Raises
        ------
        ValueError
            If the number of coefficients differs from the multiplicity or C_m vanishes.
        """
        coeffs = np.asarray(principal_coeffs, dtype=complex)
        if multiplicity < 1 or len(coeffs) != multiplicity:
            raise ValueError("A pole of multiplicity %i needs as many principal coefficients, got %i." % (
                multiplicity, len(coeffs)))
        if coeffs[-1] == 0:
            raise ValueError("The leading principal coefficient of a pole cannot vanish.")
        self.location_lambda = complex(location_lambda)
        self.multiplicity = int(multiplicity)
        self.principal_coeffs = coeffs

    def conjugate(self):
        return PoleDatum(self.location_lambda.conjugate(), self.multiplicity, self.principal_coeffs.conjugate())

    def term(self, x):
        """The contribution sum_k C_k (-1)^(k-1)/(k-1)! log^(k-1)(x) x^(-lambda) to the boundary term."""
        logx = np.log(np.asarray(x, dtype=float))
        powers = np.zeros(np.shape(logx), dtype=complex)
        for k, c in enumerate(self.principal_coeffs):
            powers = powers + c*(-logx)**k/factorial(k)
        return powers*np.exp(-self.location_lambda*logx)

    def __repr__(self):
        return "PoleDatum(%s, m=%i, C=%s)" % (self.location_lambda, self.multiplicity, list(self.principal_coeffs))


def conjugate_closed(ledger, tol=1e-8):
    """Whether every entry has a conjugate entry with conjugated coefficients."""
    for datum in ledger:
        target = datum.location_lambda.conjugate()
        partners = [other for other in ledger if abs(other.location_lambda - target) <= tol*(1.0 + abs(target))]
        if not any(other.multiplicity == datum.multiplicity and
                   np.allclose(other.principal_coeffs, datum.principal_coeffs.conjugate(), rtol=tol, atol=tol)
                   for other in partners):
            return False
    return True


def pole_expansion(ledger, x, height_cutoff=np.inf, tol=1e-9, return_imag=False):
    """Truncated pole expansion of a boundary term.

    Parameters
    ----------
    ledger : list of PoleDatum
        The poles.
    x : float or numpy.ndarray
        Positive argument(s).
    height_cutoff : float, optional
        Only poles with |Im lambda| <= ``height_cutoff`` contribute.
    tol : float, optional
        Tolerance on the imaginary part of the sum.
    return_imag : bool, optional
        Also return the imaginary part, which cancels for conjugate-closed ledgers.

    Returns
    -------
    real[, imag] : float or numpy.ndarray
    """
    x = np.asarray(x, dtype=float)
    total = np.zeros(np.shape(x), dtype=complex)
    # Symmetric window, conjugate pairs enter together.
    for datum in sorted(ledger, key=lambda d: abs(d.location_lambda.imag)):
        if abs(datum.location_lambda.imag) <= height_cutoff:
            total = total + datum.term(x)
    imag = np.abs(total.imag)
    if np.any(imag > tol*(1.0 + np.abs(total.real))):
        log.warn("The pole expansion has an imaginary part up to %.3e; the ledger is not conjugate closed." %
                 np.max(imag))
    if return_imag:
        return total.real, total.imag
    return total.real


def _circle_coefficients(func, center, order, radius, nodes):
    theta = 2.0*np.pi*np.arange(nodes)/nodes
    z = radius*np.exp(1j*theta)
    values = np.asarray(func(center + z), dtype=complex)
    # C_k = (1/2 pi i) int Z(s) (s - lambda)^(k-1) ds = mean of Z z^k
    return np.array([np.mean(values*z**k) for k in range(1, order + 1)])


def residue_ledger(spec, candidate_poles=None, radius=1e-2, nodes=64, tol=1e-8):
    """Principal parts of ``spec`` at candidate poles, by circular contour quadrature.

    Parameters
    ----------
    spec : LFunctionSpec or callable
        The function Z.
    candidate_poles : list of tuple, optional
        Pairs (location, maximal multiplicity). Defaults to ``spec.candidate_poles``.
    radius : float, optional
        The radius of the circles. A second quadrature with half the radius serves as a check.
    nodes : int, optional
        The number of nodes on each circle.
    tol : float, optional
        Tolerance for the agreement of the two radii, relative to max(1, |C_k|).

    Returns
    -------
    ledger : list of PoleDatum
        Entries whose coefficients are all below 1e-10 are dropped and vanishing leading coefficients are
        removed, so that the multiplicity is the true order of the pole.

    Raises
    ------
    ValueError
        If two candidates are closer than twice the radius.
    ConvergenceError
        If the two radii give inconsistent coefficients.
    """
    if candidate_poles is None:
        candidate_poles = spec.candidate_poles
    func = spec
    locations = [complex(location) for location, order in candidate_poles]
    for i in range(len(locations)):
        for j in range(i):
            if abs(locations[i] - locations[j]) <= 2.0*radius:
                raise ValueError("Candidate poles %s and %s overlap at radius %s." % (
                    locations[j], locations[i], radius))
    ledger = []
    with log.section("POLES"), timer.section("Residues"):
        for location, order in zip(locations, [order for location, order in candidate_poles]):
            coeffs = _circle_coefficients(func, location, order, radius, nodes)
            check = _circle_coefficients(func, location, order, 0.5*radius, nodes)
            error = np.abs(coeffs - check)
            if np.any(error > tol*np.maximum(1.0, np.abs(coeffs))):
                raise ConvergenceError("Residues at %s disagree between radii %s and %s by %.3e." % (
                    location, radius, 0.5*radius, np.max(error)))
            coeffs[np.abs(coeffs) < DROP_TOL] = 0.0
            nonzero = np.nonzero(coeffs)[0]
            if len(nonzero) == 0:
                if log.do_high:
                    log("No pole at %s." % location)
                continue
            m = nonzero[-1] + 1
            ledger.append(PoleDatum(location, m, coeffs[:m]))
            if log.do_medium:
                log("Pole at %s of order %i, C_1 = %s." % (location, m, coeffs[0]))
    return ledger


def export_ledger(ledger, fn):
    """Write a ledger as CSV rows re_lambda,im_lambda,m,re_C1,im_C1,..."""
    mmax = max([datum.multiplicity for datum in ledger] + [1])
    header = ["re_lambda", "im_lambda", "m"]
    for k in range(1, mmax + 1):
        header += ["re_C%i" % k, "im_C%i" % k]
    with open(fn, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(header)
        for datum in ledger:
            row = ["%.17g" % datum.location_lambda.real, "%.17g" % datum.location_lambda.imag, datum.multiplicity]
            for c in datum.principal_coeffs:
                row += ["%.17g" % float(c.real), "%.17g" % float(c.imag)]
            writer.writerow(row)


def import_ledger(fn):
    """Read a ledger written by ``export_ledger``."""
    ledger = []
    with open(fn, newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or header[:3] != ["re_lambda", "im_lambda", "m"]:
            raise ValueError("File %s is not a pole ledger." % fn)
        for number, row in enumerate(reader, 2):
            try:
                m = int(row[2])
                coeffs = [complex(float(row[3 + 2*k]), float(row[4 + 2*k])) for k in range(m)]
                ledger.append(PoleDatum(complex(float(row[0]), float(row[1])), m, coeffs))
            except (IndexError, ValueError) as e:
                raise ValueError("Line %i of ledger %s is malformed (%s)." % (number, fn, e))
    return ledger


def pole_ledger_for_Z_E(curve, zeros, height_cutoff, spec=None, radius=1e-2):
    """The pole ledger of Z_E up to height ``height_cutoff``.

    The poles are 0 and 1 (double), 1/2 (order 1 + rank) and lambda = 1/2 +- i gamma/2 for the zeros
    1 + i gamma of L(E, s), all confirmed by residue quadrature.

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    zeros : ZeroList
        Ordinates gamma of the zeros of L(E, s) on Re(s) = 1, complete up to 2 ``height_cutoff``.
    height_cutoff : float
        The largest |Im lambda|.
    spec : LFunctionSpec, optional
        A prebuilt Z_E.

    Raises
    ------
    ValueError
        If the zero list does not reach 2 ``height_cutoff``.
    """
    if zeros.height_limit < 2.0*height_cutoff:
        raise ValueError("Zero data up to height %s do not cover poles up to height %s." % (
            zeros.height_limit, height_cutoff))
    if spec is None:
        spec = build_Z_E(curve)
    candidates = list(spec.candidate_poles)
    for gamma in zeros.up_to(2.0*height_cutoff):
        candidates.append((complex(0.5, 0.5*gamma), 1))
        candidates.append((complex(0.5, -0.5*gamma), 1))
    return residue_ledger(spec, candidates, radius)


def pole_ledger_for_Z_K(field, zeros, height_cutoff, spec=None, radius=1e-2):
    """The pole ledger of Z_K: the double pole at 1/2 and simple poles at the zeros 1/2 + i gamma of zeta_K.

    The residues at the zeros are the coefficients c_gamma.
    """
    if not isinstance(field, QuadField):
        field = QuadField(field)
    if zeros.height_limit < height_cutoff:
        raise ValueError("Zero data up to height %s do not cover poles up to height %s." % (
            zeros.height_limit, height_cutoff))
    if spec is None:
        spec = build_Z_K(field)
    ledger = residue_ledger(spec, [(0.5, 2)], radius)
    for gamma in zeros.up_to(height_cutoff):
        c = c_gamma_coefficient(field, gamma)
        ledger.append(PoleDatum(complex(0.5, gamma), 1, [c]))
        ledger.append(PoleDatum(complex(0.5, -gamma), 1, [c.conjugate()]))
    return ledger
