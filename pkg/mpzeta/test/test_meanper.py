import json

import numpy as np
import pytest

from mpzeta.exceptions import ConvergenceError
from mpzeta.specfun import gamma
from mpzeta.lfunc.builders import build_riemann, build_dedekind
from mpzeta.boundary.term import boundary_riemann, boundary_E
from mpzeta.boundary.poles import residue_ledger
from mpzeta.meanper.convolutor import (Convolutor, check_line_decay, build_convolutor_lambda_q,
    build_convolutor_V)
from mpzeta.meanper.convolve import mult_convolve, MeanPeriodicityReport, certify_mean_periodicity
from mpzeta.meanper.explicit import (TestFunction, bump_function, truncated_gaussian, mellin_moment,
    explicit_formula_check)
from mpzeta.utils import load_curve


def log_gaussian(x):
    return np.exp(-np.log(x)**2)


def ones(y):
    return np.ones(np.shape(y))


def zeros(y):
    return np.zeros(np.shape(y))


def test_convolutor_window():
    v = Convolutor(log_gaussian, None, "lg")
    lo, hi = v.log_window
    assert lo < -6.0 and hi > 6.0
    assert lo > -7.0 and hi < 7.0
    assert all(np.isfinite(value) for value in v.seminorms.values())
    assert v.seminorms[0] == 1.0
    with pytest.raises(ValueError):
        Convolutor(zeros, None)


def test_mult_convolve():
    v = Convolutor(log_gaussian, None, "lg")
    x = np.array([0.5, 1.0, 4.0])
    assert np.allclose(mult_convolve(v, ones, x), np.sqrt(np.pi), rtol=1e-10)
    assert np.allclose(mult_convolve(v, ones, x, method="adaptive"), np.sqrt(np.pi), rtol=1e-10)
    assert mult_convolve(v, zeros, 2.0) == 0.0
    with pytest.raises(ValueError):
        mult_convolve(v, ones, x, method="simpson")
    narrow = Convolutor(log_gaussian, None, "lg", log_window=(-1.0, 1.0))
    with pytest.raises(ConvergenceError):
        mult_convolve(narrow, ones, x)


def test_line_decay():
    check_line_decay(gamma)
    with pytest.raises(ConvergenceError):
        check_line_decay(lambda s: 1.0/(1.0 + s))


def test_report(tmp_path):
    report = MeanPeriodicityReport("v * h", [1.0, 2.0], [1e-9, -2e-9], 1.0)
    assert report.max_residual == 2e-9
    assert report.passed
    empty = MeanPeriodicityReport("v * 0", [1.0], [0.0], 0.0)
    assert empty.ratio == np.inf
    assert not empty.passed
    fn = str(tmp_path/"report.json")
    report.to_json(fn)
    with open(fn) as f:
        data = json.load(f)
    assert data["pass"] is True
    assert data["grid"] == [1.0, 2.0]


def check_perturbation_control(v, h):
    # v *x (h + a x^(-1/4)) = v *x h + a x^(-1/4) M(v)(1/4)
    clean = certify_mean_periodicity(v, h)
    assert clean.passed
    perturbed = certify_mean_periodicity(v, h.perturbed(0.01, 0.25))
    assert not perturbed.passed
    assert perturbed.ratio > 1e3*clean.ratio
    predicted = 0.01*perturbed.grid**-0.25*complex(v.mellin_evaluator(0.25)).real
    assert np.allclose(perturbed.residuals - clean.residuals, predicted, rtol=1e-3, atol=1e-8*perturbed.scale)


@pytest.mark.slow
def test_certify_riemann():
    check_perturbation_control(build_convolutor_lambda_q(), boundary_riemann())


@pytest.mark.slow
def test_certify_elliptic():
    curve = load_curve("11a1")
    check_perturbation_control(build_convolutor_V(curve), boundary_E(curve))


def test_test_function():
    with pytest.raises(ValueError):
        TestFunction(ones, (0.0, 1.0))
    with pytest.raises(ValueError):
        TestFunction(ones, (2.0, 1.0))
    bump = bump_function(0.5, 2.0)
    assert bump(0.4) == 0.0
    assert bump(2.5) == 0.0
    assert abs(bump(1.0) - np.exp(-1.0)) < 1e-15
    dual = bump.dual()
    assert dual.support == (0.5, 2.0)
    assert abs(dual(1.5) - bump(1.0/1.5)/1.5) < 1e-15
    gauss = truncated_gaussian(1.2, 0.2, 0.5, 3.0)
    assert gauss(0.45) == 0.0
    assert gauss(1.2) > gauss(1.0)


def test_mellin_moment():
    bump = bump_function(0.5, 2.0)
    assert abs(mellin_moment(bump, 0.0).imag) < 1e-15
    assert mellin_moment(bump, 0.0).real > 0
    # M(phi^v)(s) = M(phi)(1 - s)
    s = 0.3 + 1.0j
    assert abs(mellin_moment(bump.dual(), s) - mellin_moment(bump, 1.0 - s)) < 1e-12
    # the bump is even in log x
    assert abs(mellin_moment(bump, 0.0, k=1)) < 1e-14


def test_explicit_formula_riemann():
    spec = build_riemann()
    ledger = residue_ledger(spec)
    bump = bump_function(0.5, 2.0)
    lhs, rhs = explicit_formula_check(spec, bump, ledger)
    assert abs(lhs - rhs) < 1e-8
    lhs3, rhs3 = explicit_formula_check(spec, bump.scaled(3.0), ledger)
    assert abs(lhs3 - 3.0*lhs) < 1e-12
    assert abs(rhs3 - 3.0*rhs) < 1e-8
    lhs, rhs = explicit_formula_check(spec, truncated_gaussian(1.3, 0.3, 0.4, 4.0), ledger)
    assert abs(lhs - rhs) < 1e-8


def test_explicit_formula_dedekind():
    spec = build_dedekind(-4)
    lhs, rhs = explicit_formula_check(spec, bump_function(0.5, 2.0), residue_ledger(spec))
    assert abs(lhs - rhs) < 1e-8


def test_explicit_formula_errors():
    spec = build_riemann()
    ledger = residue_ledger(spec)
    lhs, rhs = explicit_formula_check(spec, TestFunction(zeros, (0.5, 2.0)), ledger)
    assert lhs == 0.0 and rhs == 0.0
    with pytest.raises(ValueError):
        explicit_formula_check(spec, ones, ledger)
    spec.dual = build_riemann(10)
    with pytest.raises(ValueError):
        explicit_formula_check(spec, bump_function(0.5, 2.0), ledger)
