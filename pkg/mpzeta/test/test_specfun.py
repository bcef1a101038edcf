import numpy as np
import pytest

from scipy.special import loggamma, k0, k1

from mpzeta.specfun import (log_gamma, gamma, gamma_r, gamma_c, bessel_k0, k0_log_derivative,
    touchard_coefficients)
from mpzeta.exceptions import NumericalError, PoleError, DomainError, check_finite


def test_log_gamma_principal_branch():
    z = np.array([0.5 + 1j, 3.0 - 2.0j, -2.5 + 0.3j, 10.0 + 50.0j, 0.1 - 7.0j, -7.3 - 12.0j])
    assert abs(log_gamma(z) - loggamma(z)).max() < 1e-10


def _disk_grid(npoint, radius, seed):
    # complex points with |z| <= radius, at least 0.1 away from the integers
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < npoint:
        z = radius*np.sqrt(rng.uniform())*np.exp(2j*np.pi*rng.uniform())
        if abs(z - np.round(z.real)) >= 0.1:
            points.append(z)
    return np.array(points)


def test_log_gamma_reflection():
    z = _disk_grid(100, 10.0, 3)
    residual = log_gamma(z) + log_gamma(1.0 - z) - np.log(np.pi) + np.log(np.sin(np.pi*z))
    residual.imag -= 2.0*np.pi*np.round(residual.imag/(2.0*np.pi))
    assert abs(residual).max() < 1e-11


def test_log_gamma_conjugate_symmetry():
    z = _disk_grid(100, 10.0, 4)
    value = log_gamma(z)
    assert (abs(log_gamma(z.conj()) - value.conj())/np.maximum(abs(value), 1.0)).max() < 1e-12


def test_gamma_values():
    assert abs(gamma(5.0) - 24.0) < 1e-11
    assert abs(gamma(0.5) - np.sqrt(np.pi)) < 1e-13
    # scalar in, scalar out
    assert np.ndim(gamma(2.5)) == 0


def test_gamma_poles():
    with pytest.raises(PoleError):
        log_gamma(0.0)
    with pytest.raises(PoleError):
        log_gamma(np.array([1.0, -3.0]))
    # a pole is also a ValueError
    with pytest.raises(ValueError):
        gamma(-1.0)


def test_archimedean_factors():
    assert abs(gamma_r(1.0) - 1.0) < 1e-13
    assert abs(gamma_r(2.0) - 1.0/np.pi) < 1e-13
    assert abs(gamma_c(1.0) - 1.0/(2.0*np.pi)) < 1e-13
    with pytest.raises(PoleError):
        gamma_r(-2.0)


def test_bessel_k0():
    x = np.array([1e-3, 0.5, 1.9, 2.0, 5.0, 30.0, 300.0])
    assert abs(bessel_k0(x)/k0(x) - 1.0).max() < 1e-10


def test_bessel_k0_monotonic():
    x = np.union1d(np.logspace(-3.0, np.log10(600.0), 400), np.linspace(1.9, 2.1, 201))
    values = bessel_k0(x)
    assert np.all(values > 0)
    assert np.all(np.diff(values) < 0)


def test_bessel_k0_underflow():
    value, underflowed = bessel_k0(800.0, return_underflow=True)
    assert value == 0.0
    assert underflowed
    values, flags = bessel_k0(np.array([1.0, 800.0]), return_underflow=True)
    assert values[0] > 0
    assert not flags[0] and flags[1]


def test_bessel_k0_domain():
    with pytest.raises(DomainError):
        bessel_k0(0.0)
    with pytest.raises(DomainError):
        k0_log_derivative(np.array([1.0, -1.0]), 2)


def test_k0_log_derivative():
    x = np.array([1.0, 2.5, 5.0, 20.0])
    assert abs(k0_log_derivative(x, 1)/(-x*k1(x)) - 1.0).max() < 1e-9
    assert k0_log_derivative(1.5, 0) == bessel_k0(1.5)
    # (x d/dx)^2 K0 = x^2 K0 for the modified Bessel equation of order zero
    assert abs(k0_log_derivative(x, 2)/(x*x*k0(x)) - 1.0).max() < 1e-9
    with pytest.raises(ValueError):
        k0_log_derivative(1.0, 7)


def test_touchard_coefficients():
    assert np.allclose(touchard_coefficients(3), [0.0, 1.0, 3.0, 1.0])
    assert np.allclose(touchard_coefficients(0), [1.0])


def test_check_finite():
    assert check_finite(1.0) == 1.0
    with pytest.raises(NumericalError):
        check_finite(np.array([1.0, np.nan]), "test value")
