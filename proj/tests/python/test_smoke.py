import cmath
import math

import pytest

import harmolift


def test_j_coefficients():
    assert harmolift.j_invariant(2) == ["1", "744", "196884"]


def test_inc_gamma_half():
    v, err = harmolift.inc_gamma(0.5, 1.0)
    assert abs(v - math.sqrt(math.pi) * math.erfc(1.0)) < 1e-12
    assert err < 1e-10


def test_exact_arithmetic():
    assert harmolift.sigma(1, 12) == "28"
    assert harmolift.dedekind_sum(1, 3) == "1/18"


def test_eta_power_at_zero_is_one():
    v, d = harmolift.eta_power_at(0.0, 0.1, 1.2)
    assert abs(v - 1.0) < 1e-14
    # d/dr eta^{2r} at r = 0 is 2 log eta
    z = complex(0.1, 1.2)
    q = cmath.exp(2j * math.pi * z)
    log_eta = 1j * math.pi * z / 12 + sum(cmath.log(1 - q**n) for n in range(1, 60))
    assert abs(d - 2 * log_eta) < 1e-12


def test_lift_constant_term_dominates_high_up():
    v, tail = harmolift.lift_at_zero(0.0, 10.0)
    assert abs(v - (0.1 - math.pi / 3)) < 1e-12
    assert tail < 1e-12


def test_lift_json_has_terms():
    h = harmolift.lift()
    assert isinstance(h, dict) and h


def test_accuracy_region_raises():
    with pytest.raises(harmolift.AccuracyRegionError):
        harmolift.eta_power_at(0.5, 0.0, 1e-5)


def test_verify_suite_passes():
    reports = harmolift.verify("lift")
    assert reports
    assert all(r["pass"] for r in reports)


def test_cli_usage_error():
    code, _, _ = harmolift.cli(["series", "nonsense"])
    assert code == 2
