import os

import numpy as np
import pytest

from mpzeta.exceptions import DomainError
from mpzeta.lfunc.zeta import QuadField, riemann_zeta
from mpzeta.lfunc.builders import build_riemann, build_Z_K, build_Z_E, build_elliptic_l
from mpzeta.boundary.term import BoundaryTerm, boundary_term, boundary_from_spec, boundary_riemann
from mpzeta.boundary.zeros import (ZeroList, load_zeros, hardy_z, zeta_zero_scan, argument_count, lzero_scan,
    dedekind_zeta, c_gamma_coefficient)
from mpzeta.boundary.poles import (PoleDatum, pole_expansion, residue_ledger, export_ledger, import_ledger,
    conjugate_closed, pole_ledger_for_Z_E, pole_ledger_for_Z_K)
from mpzeta.mellin.series import theta_boundary_E
from mpzeta.utils import DATA_DIR, load_curve


ZETA_ZEROS = [14.134725141734693, 21.022039638771555, 25.010857580145688]
CATALAN = 0.915965594177219015


def test_boundary_riemann_is_elementary():
    x = np.array([0.3, 1.0, 3.0])
    h = boundary_riemann()
    assert abs(h(x) - (1.0/x - 1.0)).max() < 1e-12
    assert abs(h.H(np.log(2.0)) - 1.0) < 1e-12
    assert h.relation_residual() < 1e-12


def test_boundary_term_relation():
    h = boundary_term(lambda x: np.exp(-x), 1.0)
    assert h.relation_residual() < 1e-14
    h = boundary_term(lambda x: np.exp(-x), -1.0, weight_d=1)
    assert h.relation_residual() < 1e-14
    assert h.check_relation() < 1e-14
    with pytest.raises(ValueError):
        BoundaryTerm(lambda x: x, 2.0, 0.0)


def test_boundary_term_controls():
    h = boundary_riemann()
    assert abs(h.scaled(3.0)(2.0) - 3.0*h(2.0)) < 1e-14
    perturbed = h.perturbed(0.01, 0.25)
    assert perturbed.relation_residual() > 1e-4
    assert perturbed.growth_exponent == h.growth_exponent


def test_boundary_from_spec():
    h = boundary_from_spec(build_riemann())
    x = np.array([0.5, 1.0, 2.0])
    assert abs(h(x) - (1.0/x - 1.0)).max() < 1e-9
    assert h.growth_exponent > 1.0


def test_zero_list():
    zeros = ZeroList([1.0, 2.0, 3.5], height_limit=4.0)
    assert len(zeros) == 3
    assert zeros.up_to(2.5).tolist() == [1.0, 2.0]
    assert ZeroList([1.0, 2.0]).height_limit == 2.0
    with pytest.raises(ValueError):
        ZeroList([2.0, 1.0])
    with pytest.raises(ValueError):
        ZeroList([-1.0, 1.0])
    with pytest.raises(ValueError):
        ZeroList([1.0, 5.0], height_limit=4.0)
    with pytest.raises(ValueError):
        ZeroList([1.0], source="guessed")


def test_zero_files(tmp_path):
    zeros = load_zeros(os.path.join(DATA_DIR, "zeros", "zeta.txt"))
    assert len(zeros) == 30
    assert zeros.source == "file"
    assert np.allclose(zeros[:3], ZETA_ZEROS, atol=1e-8)
    fn = str(tmp_path/"zeros.txt")
    ZeroList(ZETA_ZEROS, height_limit=26.0).to_file(fn)
    assert np.allclose(load_zeros(fn, 26.0).ordinates, ZETA_ZEROS, atol=1e-11)
    with open(fn, "w") as f:
        f.write("14.1\nfoo\n")
    with pytest.raises(ValueError) as e:
        load_zeros(fn)
    assert "Line 2" in str(e.value)
    with pytest.raises(IOError):
        load_zeros(str(tmp_path/"missing.txt"))


def test_hardy_z():
    assert hardy_z(14.0)*hardy_z(14.3) < 0
    assert abs(hardy_z(ZETA_ZEROS[1])) < 1e-9


def test_argument_count():
    assert argument_count(20.0) == 1
    assert argument_count(50.0) == 10


def test_zeta_zero_scan():
    zeros = zeta_zero_scan(30.0)
    assert len(zeros) == 3
    assert np.allclose(zeros.ordinates, ZETA_ZEROS, atol=1e-8)
    assert zeros.height_limit == 30.0


@pytest.mark.slow
def test_elliptic_zero_scan():
    zeros = lzero_scan(build_elliptic_l(load_curve("11a1")), 8.0)
    assert len(zeros) == 1
    assert abs(zeros[0] - 6.362613894713) < 1e-6


def test_dedekind_zeta():
    assert abs(dedekind_zeta(-4, 2.0) - np.pi**2/6*CATALAN) < 1e-12
    assert dedekind_zeta(1, 3.0) == riemann_zeta(3.0)


def test_c_gamma_matches_residue():
    gamma = ZETA_ZEROS[0]
    c = c_gamma_coefficient(QuadField(1), gamma)
    assert 0 < abs(c) < 1e-10
    # c_gamma is below the drop tolerance of the ledger, so Z_K is rescaled by |c_gamma|
    spec = build_Z_K(1)
    scale = abs(c)
    ledger = residue_ledger(lambda s: spec(s)/scale, [(complex(0.5, gamma), 1)])
    assert len(ledger) == 1
    assert ledger[0].multiplicity == 1
    assert abs(ledger[0].principal_coeffs[0]*scale - c) < 1e-5*abs(c)
    assert abs(c_gamma_coefficient(1, -gamma) - c.conjugate()) < 1e-6*abs(c)
    with pytest.raises(DomainError):
        c_gamma_coefficient(1, 15.0)


def test_pole_datum():
    datum = PoleDatum(1.0, 1, [2.0])
    x = np.array([0.5, 2.0])
    assert np.allclose(datum.term(x), 2.0/x)
    # a double pole C_2/(s - lambda)^2 contributes -C_2 log(x) x^(-lambda)
    double = PoleDatum(0.0, 2, [0.0, 1.0])
    assert np.allclose(double.term(x), -np.log(x))
    with pytest.raises(ValueError):
        PoleDatum(1.0, 2, [1.0])
    with pytest.raises(ValueError):
        PoleDatum(1.0, 1, [0.0])


def test_riemann_ledger_and_expansion():
    ledger = residue_ledger(build_riemann())
    assert len(ledger) == 2
    by_location = dict((datum.location_lambda.real, datum) for datum in ledger)
    assert abs(by_location[0.0].principal_coeffs[0] + 1.0) < 1e-10
    assert abs(by_location[1.0].principal_coeffs[0] - 1.0) < 1e-10
    x = np.array([0.5, 1.0, 2.0])
    assert abs(pole_expansion(ledger, x) - (1.0/x - 1.0)).max() < 1e-10
    # candidates without a pole are dropped
    assert residue_ledger(build_riemann(), [(2.0, 1)]) == []
    with pytest.raises(ValueError):
        residue_ledger(build_riemann(), [(0.0, 1), (0.01, 1)])


def test_ledger_files(tmp_path):
    ledger = [PoleDatum(0.5 + 2.0j, 2, [1.0 - 1.0j, 0.5j]), PoleDatum(1.0, 1, [1.0])]
    fn = str(tmp_path/"ledger.csv")
    export_ledger(ledger, fn)
    loaded = import_ledger(fn)
    assert [datum.multiplicity for datum in loaded] == [2, 1]
    assert np.allclose(loaded[0].principal_coeffs, ledger[0].principal_coeffs)
    assert loaded[0].location_lambda == ledger[0].location_lambda
    # numpy scalars are written as plain numbers
    ledger = [PoleDatum(np.float64(0.5), 1, [np.complex128(0.1 + 0.2j)])]
    export_ledger(ledger, fn)
    with open(fn) as f:
        rows = f.read().splitlines()
    assert rows[1].split(",") == ["0.5", "0", "1", "0.10000000000000001", "0.20000000000000001"]
    assert import_ledger(fn)[0].principal_coeffs[0] == 0.1 + 0.2j
    with open(fn, "w") as f:
        f.write("x,y\n")
    with pytest.raises(ValueError):
        import_ledger(fn)


def test_conjugate_closed():
    datum = PoleDatum(0.5 + 2.0j, 1, [1.0 + 1.0j])
    assert not conjugate_closed([datum])
    assert conjugate_closed([datum, datum.conjugate()])
    real, imag = pole_expansion([datum, datum.conjugate()], np.array([0.5, 2.0]), return_imag=True)
    assert abs(imag).max() < 1e-14
    # poles above the cutoff are left out
    assert abs(pole_expansion([datum, datum.conjugate()], 2.0, height_cutoff=1.0)) == 0.0


def test_Z_E_ledger_needs_zeros():
    with pytest.raises(ValueError):
        pole_ledger_for_Z_E(load_curve("11a1"), ZeroList([6.36], height_limit=7.0), 10.0)


def test_Z_K_pole_expansion_matches_inverse_mellin():
    zeros = load_zeros(os.path.join(DATA_DIR, "zeros", "zeta.txt"))
    ledger = pole_ledger_for_Z_K(1, zeros, 20.0)
    assert conjugate_closed(ledger)
    assert [datum.multiplicity for datum in ledger] == [2, 1, 1]
    x = np.array([0.5, 1.0, 2.0])
    expansion = pole_expansion(ledger, x)
    h = boundary_from_spec(build_Z_K(1))(x)
    assert abs(expansion - h).max() < 1e-7*max(1.0, abs(h).max())


@pytest.mark.slow
def test_Z_E_pole_expansion_converges():
    curve = load_curve("11a1")
    spec = build_Z_E(curve)
    zeros = lzero_scan(build_elliptic_l(curve), 10.0)
    t = np.linspace(-2.0, 2.0, 41)
    x = np.exp(-t)
    target = theta_boundary_E(curve, t)
    errors = []
    for cutoff in [2.0, 5.0]:
        ledger = pole_ledger_for_Z_E(curve, zeros, cutoff, spec)
        assert conjugate_closed(ledger)
        errors.append(abs(pole_expansion(ledger, x) - target).max())
    assert errors[1] < errors[0]
