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


"""Builders of the completed functions of class F.

Every builder returns an ``LFunctionSpec`` whose closed evaluator composes completed Riemann, Dedekind and
elliptic L-functions, and whose Dirichlet coefficients and gamma factor give the same function as gamma(s) D(s).
Only the rational base field is supported for functions attached to elliptic curves.
"""

import numpy as np

from mpzeta.log import log
from mpzeta.exceptions import PoleError
from mpzeta.lfunc.gamma import GammaFactor
from mpzeta.lfunc.zeta import QuadField, completed_riemann, completed_dedekind, kronecker_symbol
from mpzeta.lfunc.dirichlet import (DirichletCoefficients, dirichlet_convolve, dirichlet_inverse,
    divisor_counts, divisor_sums, dilate)
from mpzeta.lfunc.elliptic import ec_an, hasse_weil_coeffs, model_factor
from mpzeta.lfunc.spec import LFunctionSpec, completed_l


__all__ = [
    "DEFAULT_DEPTH", "build_riemann", "build_dedekind", "build_elliptic_l", "completed_elliptic",
    "build_Z_E", "build_Z_E_squared", "build_Z_K", "build_Z_model", "uv_split_E", "uv_split_model",
    "model_poles"
]


# Enough for the smoothed series of conductors up to 1000 at heights below 20; larger runs pass --depth 100000.
DEFAULT_DEPTH = 10**4


def _check_rational(field):
    if field is not None and not QuadField(getattr(field, "fundamental_discriminant", field)).is_rational:
        raise NotImplementedError("Functions attached to elliptic curves are only supported over the rationals.")


def build_riemann(depth=DEFAULT_DEPTH):
    """Lambda_Q(s) = Gamma_R(s) zeta(s)."""
    coeffs = DirichletCoefficients(np.ones(depth + 1, dtype=np.int64), 1.0)
    return LFunctionSpec(coeffs, GammaFactor.gamma_r(), 1.0, 0, 0.5, "riemann",
                         evaluator=completed_riemann, candidate_poles=[(0.0, 1), (1.0, 1)])


def _dedekind_values(field, depth):
    if field.is_rational:
        values = np.ones(depth + 1, dtype=np.int64)
        values[0] = 0
        return values
    chi = np.array([0] + [kronecker_symbol(field.fundamental_discriminant, n) for n in range(1, depth + 1)],
                   dtype=np.int64)
    return dirichlet_convolve(np.ones(depth + 1, dtype=np.int64), chi)


def _dedekind_gamma(field):
    k = abs(field.fundamental_discriminant)
    if field.is_rational:
        return GammaFactor.gamma_r()
    if field.fundamental_discriminant > 0:
        return GammaFactor(k/np.pi**2, [(0.5, 0.0), (0.5, 0.0)], r1=2)
    return GammaFactor(k/(4.0*np.pi**2), [(1.0, 0.0)], r2=1)


def build_dedekind(field, depth=DEFAULT_DEPTH):
    """Lambda_K(s) = |d_K|^(s/2) Gamma_R(s)^r1 Gamma_C(s)^r2 zeta_K(s)."""
    if not isinstance(field, QuadField):
        field = QuadField(field)
    if field.is_rational:
        return build_riemann(depth)
    coeffs = DirichletCoefficients(_dedekind_values(field, depth), 1.0)
    return LFunctionSpec(coeffs, _dedekind_gamma(field), 1.0, 0, 0.5, "dedekind(%i)" % field.fundamental_discriminant,
                         evaluator=lambda s: completed_dedekind(field, s), candidate_poles=[(0.0, 1), (1.0, 1)])


def build_elliptic_l(curve, depth=DEFAULT_DEPTH):
    """Lambda(E, s) = q_E^(s/2) Gamma_C(s) L(E, s), entire with Lambda(E, s) = omega_E Lambda(E, 2 - s)."""
    return LFunctionSpec(ec_an(curve, depth), GammaFactor.elliptic(curve.conductor), float(curve.sign_omega), 1, 0.5,
                         "L(%s)" % curve.label)


def completed_elliptic(curve, s, depth=DEFAULT_DEPTH):
    """Lambda(E, s), by the direct Dirichlet series or the smoothed approximate functional equation."""
    return completed_l(build_elliptic_l(curve, depth), s)


def _rank(curve):
    if curve.rank is None:
        log.warn("The rank of %s is unknown, assuming rank 0." % curve.label)
        return 0
    return curve.rank


def _z_e_coefficients(curve, depth, power):
    # Coefficients of zeta(s)^power q^(-power s) zeta_E(2s)^power.
    q = curve.conductor**power
    kmax = max(depth//q, 1)
    c = hasse_weil_coeffs(curve, kmax).values
    if power == 1:
        core = divisor_sums(c)
    else:
        core = dirichlet_convolve(dirichlet_convolve(divisor_counts(kmax), c), c)
    return DirichletCoefficients(dilate(core, q, depth), 1.0)


def build_Z_E(curve, depth=DEFAULT_DEPTH, field=None, margin=0.0):
    """Z_E(s) = Lambda_Q(s) q_E^(-s) zeta_E(2s).

    The closed evaluator uses Z_E(s) = (2s - 1)/(4 pi) Lambda_Q(s) Lambda_Q(2s) Lambda_Q(2s - 1)/Lambda(E, 2s),
    which follows from the duplication formula. The sign is eps = -omega_E and the poles are 0 and 1 (double),
    1/2 (order 1 + rank) and the points 1/2 + i gamma/2 for the zeros 1 + i gamma of L(E, s).

    Raises
    ------
    NotImplementedError
        If ``field`` is not the rational field.
    """
    _check_rational(field)
    lfunc = build_elliptic_l(curve, depth)

    def evaluator(s):
        s = np.asarray(s, dtype=complex)
        num = (2.0*s - 1.0)/(4.0*np.pi)*completed_riemann(s)*completed_riemann(2.0*s)*completed_riemann(2.0*s - 1.0)
        den = completed_l(lfunc, 2.0*s)
        if np.any(den == 0):
            raise PoleError("Z_E(%s) sits on a zero of Lambda(E, 2s)." % curve.label)
        return num/den

    poles = [(0.0, 2), (0.5, 1 + _rank(curve)), (1.0, 2)]
    return LFunctionSpec(_z_e_coefficients(curve, depth, 1), GammaFactor.gamma_r(), -float(curve.sign_omega), 0,
                         0.5 + margin, "Z_E(%s)" % curve.label, evaluator=evaluator, candidate_poles=poles)


def build_Z_E_squared(curve, depth=DEFAULT_DEPTH, field=None, margin=0.0):
    """Z_E(s)^2, with Dirichlet data sigma_0 * c * c placed at q_E^2 k and gamma factor Gamma_R(s)^2."""
    _check_rational(field)
    z_e = build_Z_E(curve, depth, field, margin)

    def evaluator(s):
        value = z_e.evaluator(s)
        return value*value

    poles = [(location, 2*order) for location, order in z_e.candidate_poles]
    gamma = GammaFactor(np.pi**-2, [(0.5, 0.0), (0.5, 0.0)], r1=2)
    return LFunctionSpec(_z_e_coefficients(curve, depth, 2), gamma, 1.0, 0, 0.5 + margin,
                         "Z_E^2(%s)" % curve.label, evaluator=evaluator, candidate_poles=poles)


def _z_k_gamma(field):
    k = abs(field.fundamental_discriminant)
    if field.is_rational:
        # Gamma_R(2s) Gamma_R(2s - 1)/Gamma_R(s) = 2^(s-1) pi^(-3s/2) Gamma((s + 1)/2) Gamma(s - 1/2)
        return GammaFactor(4.0/np.pi**3, [(0.5, 0.5), (1.0, -0.5)], r1=1, scale=0.5)
    if field.fundamental_discriminant > 0:
        return GammaFactor(16.0*k**3/np.pi**6, [(0.5, 0.5), (0.5, 0.5), (1.0, -0.5), (1.0, -0.5)], r1=2,
                           scale=0.25/np.sqrt(k))
    return GammaFactor(k**3/(4.0*np.pi**6), [(1.0, 0.5), (2.0, -1.0)], r2=1, scale=np.sqrt(np.pi/k))


def build_Z_K(field, depth=DEFAULT_DEPTH):
    """Z_K(s) = Lambda_K(2s) Lambda_K(2s - 1)/Lambda_K(s), even under s -> 1 - s.

    The poles are the double pole at 1/2 and the zeros of Lambda_K(s). The poles of Lambda_K(2s) at 0 and of
    Lambda_K(2s - 1) at 1 cancel against those of Lambda_K(s), so Z_K is regular there.
    """
    if not isinstance(field, QuadField):
        field = QuadField(field)
    kmax = int(np.floor(np.sqrt(depth)))
    z = _dedekind_values(field, kmax)
    k = np.arange(kmax + 1)
    # zeta_K(2s) zeta_K(2s - 1) has coefficients (z * Id z)(k) at k^2.
    squares = np.zeros(depth + 1, dtype=np.int64)
    squares[k[1:]**2] = dirichlet_convolve(z, k*z)[1:]
    zfull = _dedekind_values(field, depth)
    values = dirichlet_convolve(squares, dirichlet_inverse(zfull))

    def evaluator(s):
        s = np.asarray(s, dtype=complex)
        den = completed_dedekind(field, s)
        if np.any(den == 0):
            raise PoleError("Z_K sits on a zero of Lambda_K.")
        return completed_dedekind(field, 2.0*s)*completed_dedekind(field, 2.0*s - 1.0)/den

    return LFunctionSpec(DirichletCoefficients(values, 1.0), _z_k_gamma(field), 1.0, 0, 0.5,
                         "Z_K(%i)" % field.fundamental_discriminant, evaluator=evaluator,
                         candidate_poles=[(0.5, 2)])


def model_poles(model, height):
    """Poles 1/2 + i pi k/log q_j, k != 0, of n(2s) with |Im| <= height."""
    poles = []
    for q in model.fiber_sizes:
        step = np.pi/np.log(q)
        for k in range(1, int(height/step) + 1):
            poles.append((complex(0.5, k*step), 1))
            poles.append((complex(0.5, -k*step), 1))
    return poles


def build_Z_model(curve, model, depth=DEFAULT_DEPTH, field=None, margin=0.0, height=20.0):
    """Z(s) = Lambda_Q(s) c^(-s) n(2s) zeta_E(2s) for a model with bad-fiber sizes q_j.

    Here c = q_E prod_j q_j and n(w) = prod_j (1 - q_j^(1-w))^(-1). The sign is (-1)^(1+J) omega_E.
    """
    _check_rational(field)
    z_e = build_Z_E(curve, depth, field, margin)
    extra = float(np.prod(model.fiber_sizes)) if model.J > 0 else 1.0

    def evaluator(s):
        s = np.asarray(s, dtype=complex)
        return z_e.evaluator(s)*np.exp(-s*np.log(extra))*model_factor(model, 2.0*s)

    cmodel = model.conductor(curve)
    kmax = max(depth//cmodel, 1)
    seq = np.zeros(kmax + 1, dtype=np.int64)
    seq[1] = 1
    for q in model.fiber_sizes:
        factor = np.zeros(kmax + 1, dtype=np.int64)
        power, weight = 1, 1
        while power <= kmax:
            factor[power] = weight
            power *= q*q
            weight *= q
        seq = dirichlet_convolve(seq, factor)
    core = divisor_sums(dirichlet_convolve(hasse_weil_coeffs(curve, kmax).values, seq))
    coeffs = DirichletCoefficients(dilate(core, cmodel, depth), 1.0)
    sign = (-1.0)**(1 + model.J)*curve.sign_omega
    poles = [(0.0, 2), (0.5, 1 + _rank(curve) + model.J), (1.0, 2)] + model_poles(model, height)
    return LFunctionSpec(coeffs, GammaFactor.gamma_r(), sign, 0, 0.5 + margin, "Z_model(%s)" % curve.label,
                         evaluator=evaluator, candidate_poles=poles)


def uv_split_E(curve, depth=DEFAULT_DEPTH, P=None):
    """Entire functions U, V with Z_E = U/V.

    U(s) = (4 pi)^(-1) (2s - 1)^2 s^2 (s - 1)^2 Lambda_Q(s) Lambda_Q(2s) Lambda_Q(2s - 1) P(2s) and
    V(s) = (2s - 1) s^2 (s - 1)^2 Lambda(E, 2s) P(2s), so that U(s) = U(1 - s) and V(s) = -omega_E V(1 - s).

    Parameters
    ----------
    curve : mpzeta.lfunc.elliptic.EllipticCurve
        The curve.
    depth : int, optional
        The coefficient depth of Lambda(E, s).
    P : list, optional
        Polynomial coefficients, highest degree first, of a polynomial P making P(s) L(E, s) entire.
        The default is P = 1.

    Returns
    -------
    U, V : callable
    """
    lfunc = build_elliptic_l(curve, depth)
    poly = [1.0] if P is None else list(P)

    def U(s):
        s = np.asarray(s, dtype=complex)
        prefactor = (2.0*s - 1.0)**2*s*s*(s - 1.0)**2/(4.0*np.pi)
        value = completed_riemann(s)*completed_riemann(2.0*s)*completed_riemann(2.0*s - 1.0)
        return prefactor*value*np.polyval(poly, 2.0*s)

    def V(s):
        s = np.asarray(s, dtype=complex)
        prefactor = (2.0*s - 1.0)*s*s*(s - 1.0)**2
        return prefactor*completed_l(lfunc, 2.0*s)*np.polyval(poly, 2.0*s)

    return U, V


def uv_split_model(curve, model, depth=DEFAULT_DEPTH):
    """Entire functions U, V with U/V = Z_model and V(s) = (-1)^(1+J) omega_E V(1 - s).

    V_model(s) = V(s) prod_j (q_j^(s - 1/2) - q_j^(1/2 - s)) and U_model(s) = U(s) prod_j q_j^(-1/2).
    """
    U, V = uv_split_E(curve, depth)
    scale = float(np.prod([q**-0.5 for q in model.fiber_sizes]))

    def U_model(s):
        return U(s)*scale

    def V_model(s):
        s = np.asarray(s, dtype=complex)
        value = V(s)
        for q in model.fiber_sizes:
            value = value*(np.exp((s - 0.5)*np.log(q)) - np.exp((0.5 - s)*np.log(q)))
        return value

    return U_model, V_model
