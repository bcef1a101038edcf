import os

import numpy as np
import pytest

from mpzeta.exceptions import NotFoundError
from mpzeta.lfunc.zeta import riemann_zeta
from mpzeta.boundary.term import boundary_riemann
from mpzeta.boundary.zeros import ZeroList, load_zeros
from mpzeta.analytics.signscan import sign_scan, single_sign_scan, real_pole_probe
from mpzeta.analytics.appendix import (good_ordinates, zero_density_check, log_deriv_expansion_check,
    log_deriv_constant, c_gamma_partial_sums, decompose_h2)
from mpzeta.mellin.series import bessel_boundary_E2
from mpzeta.utils import DATA_DIR, load_curve


@pytest.fixture
def zeta_zeros():
    return load_zeros(os.path.join(DATA_DIR, "zeros", "zeta.txt"))


def test_sign_scan():
    report = sign_scan(lambda t: np.exp(-t) - 1.0, (-1.0, 1.0), 0.3)
    assert len(report.sign_changes) == 1
    assert abs(report.roots[0]) < 1e-10
    assert report.constant_sign_from == report.sign_changes[0][1]
    report = sign_scan(np.exp, (-1.0, 1.0), 0.3)
    assert report.sign_changes == []
    assert report.constant_sign_from == -1.0
    with pytest.raises(ValueError):
        sign_scan(np.exp, (-1.0, 1.0), 0.0)
    with pytest.raises(ValueError):
        sign_scan(np.exp, (1.0, -1.0), 0.1)


def test_sign_scan_grid_zero():
    report = sign_scan(lambda t: t, (-1.0, 1.0), 0.5)
    assert report.sign_changes == [(-0.5, 0.0)]
    assert report.roots == [0.0]
    assert report.to_dict()["constant_sign_from"] == 0.0


def test_single_sign_scan():
    curve = load_curve("11a1")
    report = single_sign_scan(curve, 0, (0.0, 1.0), 0.05)
    assert report.sign_changes == []
    assert report.constant_sign_from == 0.0
    assert "11a1" in report.label
    with pytest.raises(ValueError):
        single_sign_scan(curve, 0, (0.0, 1.0), 0.05, function="gauss")


def test_real_pole_probe_range():
    with pytest.raises(ValueError):
        real_pole_probe(boundary_riemann(), None, [0.5, 2.0])


def test_good_ordinates_constant():
    report = good_ordinates(lambda s: 1.0, 10.0, 4.0)
    assert report.exponent_A == 0.0
    assert len(report.accepted) == len(report.grid)
    assert report.passed
    with pytest.raises(ValueError):
        good_ordinates(lambda s: 1.0, 1.5, 4.0)
    with pytest.raises(NotFoundError):
        good_ordinates(lambda s: 0.0, 10.0, 4.0)


def test_good_ordinates_zeta():
    report = good_ordinates(riemann_zeta, 32.0, 10.0)
    assert report.passed
    assert report.exponent_A <= 2.0
    nearest = report.grid[np.argmin(abs(report.grid - 32.935061588))]
    assert nearest not in report.accepted
    assert report.to_dict()["pass"]


def test_zero_density(zeta_zeros):
    count, ratio = zero_density_check(zeta_zeros, 30.0)
    assert count == 1
    assert abs(ratio - 1.0/np.log(30.0)) < 1e-15
    count, ratio = zero_density_check(zeta_zeros, 49.0)
    assert count == 2
    with pytest.raises(ValueError):
        zero_density_check(ZeroList([14.13], height_limit=20.0), 30.0)


def test_log_deriv_constant(zeta_zeros):
    heights = [20.0, 40.0, 60.0]
    constant, residuals = log_deriv_constant(riemann_zeta, heights, zeta_zeros)
    assert len(residuals) == 3
    assert np.all(residuals < 3.0*np.log(heights))
    assert constant < 3.0
    with pytest.raises(ValueError):
        log_deriv_expansion_check(riemann_zeta, 0.5 + 1.0j, zeta_zeros)
    with pytest.raises(ValueError):
        log_deriv_expansion_check(riemann_zeta, 0.5 + 200.0j, zeta_zeros)


def test_c_gamma_partial_sums(zeta_zeros):
    sums = c_gamma_partial_sums(1, zeta_zeros, [15.0, 22.0])
    assert sums[0] > 0
    assert sums[1] > sums[0]
    with pytest.raises(ValueError):
        c_gamma_partial_sums(1, zeta_zeros, [500.0])


def test_decompose_h2_needs_zeros():
    with pytest.raises(ValueError):
        decompose_h2(load_curve("11a1"), ZeroList([6.36], height_limit=7.0), 1.0, height_cutoff=10.0)


@pytest.mark.slow
def test_decompose_h2_parts():
    # 11a1 has no zeros of L(E, s) below height 4, so only the poles at 0, 1/2 and 1 enter
    curve = load_curve("11a1")
    t = np.linspace(-1.0, 1.0, 9)
    h00, h01, h1, residual = decompose_h2(curve, ZeroList([], height_limit=4.0), t, height_cutoff=2.0, radius=0.05)
    bessel = bessel_boundary_E2(curve, t)
    scale = max(abs(bessel).max(), abs(h00).max(), abs(h01).max(), abs(h1).max())
    assert abs(h00 + h01 + h1 + residual - bessel).max() < 1e-12*scale
    # each part obeys H(-t) = -e^(-t) H(t), as the boundary term of Z_E^2 does
    for part in [h00 + h01, h1]:
        mirrored = -np.exp(-t)*part
        assert abs(part[::-1] - mirrored).max() < 1e-6*abs(part).max()
