import numpy as np
import pytest

from scipy.special import gamma as gamma_function

from mpzeta.exceptions import ConvergenceError, CertificationError
from mpzeta.lfunc.gamma import GammaFactor
from mpzeta.lfunc.builders import build_riemann, build_Z_E
from mpzeta.mellin.contour import (ContourSpec, SeriesTruncation, InverseMellin, inverse_mellin,
    kappa_closed_form, kappa_kernel, default_contour)
from mpzeta.mellin.transforms import mellin_transform, half_mellin, log_convolve, mellin_carleman
from mpzeta.mellin.series import (theta_riemann, theta_boundary_E, theta_boundary_E_derivative,
    bessel_boundary_E2, bessel_boundary_E2_derivative, theta_truncation)
from mpzeta.boundary.term import boundary_riemann, boundary_from_spec, boundary_E
from mpzeta.meanper.convolutor import Convolutor, build_convolutor_lambda_q
from mpzeta.utils import load_curve


def test_contour_spec():
    contour = ContourSpec(2.0, 10.0, 100)
    t, w, w2 = contour.nodes()
    assert t[0] == 0.0 and t[-1] == 10.0
    assert abs(w.sum() - 10.0) < 1e-12
    assert abs(w2.sum() - 10.0) < 1e-12
    t, w, w2 = ContourSpec(2.0, 10.0, 100, "tanh-sinh").nodes()
    assert abs(w.sum() - 10.0) < 1e-8
    with pytest.raises(ValueError):
        ContourSpec(2.0, 10.0, 100, "simpson")
    with pytest.raises(ValueError):
        ContourSpec(2.0, -1.0)
    with pytest.raises(ValueError):
        ContourSpec(0.9).check_spec(build_riemann(10))
    with pytest.raises(ValueError):
        SeriesTruncation(0)


def test_inverse_mellin_of_completed_zeta():
    spec = build_riemann()
    x = np.array([0.8, 1.0, 1.5])
    value, error = inverse_mellin(spec, x, default_contour(spec))
    assert abs(value - theta_riemann(x)).max() < 1e-10
    assert np.all(error < 1e-8)


def test_inverse_mellin_tail():
    # 1/s^2 decays too slowly for a short line
    with pytest.raises(ConvergenceError):
        inverse_mellin(lambda s: 1.0/s**2, 1.0, ContourSpec(1.0, 5.0, 100))


def test_inverse_mellin_reflection():
    spec = build_riemann()
    contour = default_contour(spec)
    entire = lambda s: (s*(s - 1.0))**2*spec(s)
    reflected = InverseMellin(entire, contour, reflect=(1.0, 0))
    direct = InverseMellin(entire, contour)
    x = np.array([0.7, 0.9])
    assert abs(reflected(x) - direct(x)).max() < 1e-9*abs(direct(x)).max()
    with pytest.raises(ValueError):
        reflected(np.array([1.0, -1.0]))


def test_kappa():
    x = np.array([0.5, 1.0, 2.0])
    assert np.allclose(kappa_closed_form(GammaFactor.gamma_r(), x), 2.0*np.exp(-np.pi*x*x), rtol=1e-14)
    assert np.allclose(kappa_closed_form(GammaFactor.plain(), x), np.exp(-x), rtol=1e-14)
    assert abs(kappa_kernel(GammaFactor.gamma_r(), x) - 2.0*np.exp(-np.pi*x*x)).max() < 1e-10
    with pytest.raises(ConvergenceError):
        kappa_kernel(GammaFactor.trivial(), x)
    with pytest.raises(NotImplementedError):
        kappa_closed_form(GammaFactor(1.0, [(0.5, 0.0), (0.5, 0.0)]), x)


def test_mellin_transform():
    assert abs(mellin_transform(lambda x: np.exp(-x), 2.0) - 1.0) < 1e-9
    s = 3.0 + 1.0j
    assert abs(mellin_transform(lambda x: np.exp(-x), s) - gamma_function(s)) < 1e-8*abs(gamma_function(s))
    # int_1^2 x^s dx/x = (2^s - 1)/s
    assert abs(mellin_transform(lambda x: 1.0, 2.0, support=(1.0, 2.0)) - 1.5) < 1e-10
    with pytest.raises(ValueError):
        mellin_transform(lambda x: 1.0, 2.0, support=(2.0, 1.0))


def test_half_mellin():
    h = lambda x: 1.0/x - 1.0
    for s in [2.0, 3.0 + 2.0j]:
        assert abs(half_mellin(h, s, growth_exponent=1.0) - (1.0/(s - 1.0) - 1.0/s)) < 1e-9
    with pytest.raises(ConvergenceError):
        half_mellin(h, 0.5, growth_exponent=1.0)
    with pytest.raises(ValueError):
        half_mellin(h, 2.0)


def test_log_convolve():
    gauss = lambda x: np.exp(-np.log(x)**2)
    one = lambda y: np.ones(np.shape(y))
    value, magnitude = log_convolve(gauss, one, np.array([0.5, 2.0]), (-7.0, 7.0))
    assert np.allclose(value, np.sqrt(np.pi), rtol=1e-10)
    assert np.allclose(magnitude, value)
    # the two halves add up to the whole
    below, _ = log_convolve(gauss, one, 1.0, (-7.0, 7.0), "below")
    above, _ = log_convolve(gauss, one, 1.0, (-7.0, 7.0), "above")
    assert abs(below - 0.5*np.sqrt(np.pi)) < 1e-10
    assert abs(above - 0.5*np.sqrt(np.pi)) < 1e-10
    with pytest.raises(ValueError):
        log_convolve(gauss, one, 1.0, (-7.0, 7.0), "left")


@pytest.mark.slow
def test_mellin_carleman_agrees_with_half_mellin():
    v = build_convolutor_lambda_q()
    h = boundary_riemann()
    assert abs(mellin_carleman(h, v, 2.0) - 0.5) < 1e-6
    # the continuation is meromorphic with the pole of M(h^+) at s = 1 only
    s = 0.5 + 3.0j
    assert abs(mellin_carleman(h, v, s) - (1.0/(s - 1.0) - 1.0/s)) < 1e-5
    with pytest.raises(CertificationError):
        mellin_carleman(h.perturbed(0.01, 0.25), v, 2.0)


@pytest.mark.slow
def test_mellin_carleman_reflection():
    # with h~ = sqrt(x) h and v~ = sqrt(x) v, MC(h~)(s) = MC(h)(s + 1/2) is even for h = 1/x - 1
    v = build_convolutor_lambda_q()
    h = boundary_riemann()
    v_tilde = Convolutor(lambda x: np.sqrt(x)*v.evaluator(x), lambda s: v.mellin_evaluator(np.asarray(s) + 0.5),
                         "v~[riemann]", log_window=v.log_window)
    s = np.array([0.8 + 0.3j, 0.3 + 1.0j, 1.2 - 0.5j, 0.1 + 2.0j, 0.6 - 3.0j])
    values = mellin_carleman(lambda x: np.sqrt(x)*h(x), v_tilde, np.concatenate([s, -s]))
    forward, backward = values[:5], values[5:]
    assert abs(forward - h.sign_eps*backward).max() < 1e-5
    assert abs(forward - (1.0/(s - 0.5) - 1.0/(s + 0.5))).max() < 1e-5


def test_theta_riemann():
    # theta(1) = pi^(1/4)/Gamma(3/4)
    assert abs(theta_riemann(1.0) - (1.0864348112133080 - 1.0)) < 1e-14
    assert theta_riemann(np.array([0.5, 1.0])).shape == (2,)
    with pytest.raises(ValueError):
        theta_riemann(0.0)


def test_theta_boundary_vanishes_at_one_for_sign_plus():
    # root number -1 gives eps = +1 and h(1) = 0
    assert theta_boundary_E(load_curve("37a1"), 0.0) == 0.0
    assert boundary_E(load_curve("11a1")).relation_residual() < 1e-12


def test_theta_derivative_matches_difference_quotient():
    curve = load_curve("11a1")
    t = np.array([2.0, 2.5, 3.0])
    step = 1e-5
    quotient = (theta_boundary_E(curve, t + step) - theta_boundary_E(curve, t - step))/(2.0*step)
    derivative = theta_boundary_E_derivative(curve, t, 1)
    assert abs(derivative - quotient).max() < 1e-6*abs(derivative).max()
    second = theta_boundary_E_derivative(curve, t, 2)
    quotient2 = (theta_boundary_E_derivative(curve, t + step, 1) -
                 theta_boundary_E_derivative(curve, t - step, 1))/(2.0*step)
    assert abs(second - quotient2).max() < 1e-6*abs(second).max()


def test_bessel_derivative_matches_difference_quotient():
    curve = load_curve("11a1")
    t = np.array([6.5, 7.0])
    step = 1e-5
    quotient = (bessel_boundary_E2(curve, t + step) - bessel_boundary_E2(curve, t - step))/(2.0*step)
    derivative = bessel_boundary_E2_derivative(curve, t, 1)
    assert abs(derivative - quotient).max() < 1e-6*abs(derivative).max()


def test_series_truncation():
    curve = load_curve("11a1")
    trunc = theta_truncation(curve, 3.0)
    assert trunc.n_max >= 1
    assert trunc.tail_bound < 1e-15
    with pytest.raises(ConvergenceError):
        theta_boundary_E(curve, 3.0, trunc=SeriesTruncation(1))
    assert theta_boundary_E(curve, np.zeros(0)).shape == (0,)
    with pytest.raises(ValueError):
        theta_boundary_E_derivative(curve, 1.0, 7)


def test_synthetic_coefficients():
    curve = load_curve("11a1")
    coefficients = np.zeros(5)
    assert theta_boundary_E(curve, 2.0, coefficients=coefficients) == 0.0
    coefficients[1] = 1.0
    t = 2.0
    a = np.pi*curve.conductor**2
    expected = 2.0*(np.exp(-a*np.exp(-2.0*t)) + np.exp(t - a*np.exp(2.0*t)))
    assert abs(theta_boundary_E(curve, t, coefficients=coefficients) - expected) < 1e-15


@pytest.mark.slow
def test_theta_series_matches_contour():
    curve = load_curve("11a1")
    t = np.array([2.5, 3.0, 3.5])
    contour = boundary_from_spec(build_Z_E(curve)).H(t)
    series = theta_boundary_E(curve, t)
    assert abs(contour - series).max() < 1e-8*abs(series).max()
