"""Unit tests for complex erf/erfc evaluation."""

import math
import random
import struct

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from erfsector.cerf import (
    EvalConfig,
    Method,
    _erf_series,
    _erfc_cf,
    conjugate,
    erf,
    erfc,
    reflect,
)
from erfsector.errors import AccuracyError, DomainError

from _oracle import erf_oracle, erfc_oracle_real

# reference values computed with the straight-segment quadrature oracle
# (tests below also recompute them live)
ERF_1 = 0.8427007929497149
ERF_05_03 = complex(0.5615651885242132, 0.2676058649576036)
ERFC_2 = 0.004677734981047266
ERFC_M1 = 1.8427007929497149


def _bits(value: complex) -> bytes:
    return struct.pack("<dd", value.real, value.imag)


def _bits_zero_normalized(value: complex) -> bytes:
    # adding 0.0 turns -0.0 into +0.0 and leaves every other double alone;
    # the symmetry contract promises equal values (not equal signs) at zeros
    return struct.pack("<dd", value.real + 0.0, value.imag + 0.0)


finite_coord = st.floats(min_value=-6.0, max_value=6.0, allow_nan=False)


def _eval_or_skip(fn, z):
    # the thin sliver on the imaginary axis past |z| ~ 7 is outside the
    # deliverable envelope (continued fraction needs Re z != 0 and the
    # series term budget is spent); properties do not apply there
    try:
        return fn(z)
    except AccuracyError:
        assume(False)


# ----------------------------------------------------------------- erf / erfc

def test_erf_at_zero_is_exact():
    res = erf(0)
    assert res.value == 0
    assert res.abs_err_estimate == 0.0
    assert res.method is Method.SERIES


def test_erf_one_matches_oracle():
    res = erf(1)
    assert abs(res.value - ERF_1) <= 1e-12
    assert abs(res.value - erf_oracle(1.0)) <= 1e-12


def test_erf_complex_example_matches_oracle():
    res = erf(0.5 + 0.3j)
    assert abs(res.value - ERF_05_03) <= 1e-12
    assert abs(res.value - erf_oracle(0.5 + 0.3j)) <= 1e-12


def test_erfc_at_zero_is_exactly_one():
    assert erfc(0).value == 1


def test_erfc_two_matches_oracle():
    res = erfc(2)
    # the tail integral from 2 truncated far out
    assert abs(res.value - erfc_oracle_real(2.0)) <= 1e-13
    assert abs(res.value - ERFC_2) <= 1e-12
    assert abs(res.value - 0.004677734981463) <= 1e-12  # 13-digit reference
    assert res.method is Method.CONTINUED_FRACTION


def test_erfc_minus_one_via_reflection():
    res = erfc(-1)
    assert abs(res.value - ERFC_M1) <= 1e-12
    assert res.method is Method.REFLECTION


def test_non_finite_inputs_rejected():
    for bad in (math.nan, math.inf, complex(0, math.inf), complex(math.nan, 1)):
        with pytest.raises(DomainError):
            erf(bad)
        with pytest.raises(DomainError):
            erfc(bad)


def test_overflow_domain_raises_accuracy_error():
    with pytest.raises(AccuracyError):
        erfc(30j)
    with pytest.raises(AccuracyError):
        erf(complex(1.0, 27.0))  # y^2 - x^2 = 728 > 700


def test_accuracy_error_carries_best_value():
    # an unreachable tolerance within a tiny term budget
    cfg = EvalConfig(target_abs_tol=1e-15, max_series_terms=3)
    with pytest.raises(AccuracyError) as err:
        erf(2.5, cfg)
    assert err.value.value is not None
    assert err.value.err_estimate > 1e-15


def test_accuracy_error_value_is_remapped_to_the_operation():
    # carried best values must respect the symmetry and complement maps
    cfg = EvalConfig(target_abs_tol=1e-15, max_series_terms=3)
    with pytest.raises(AccuracyError) as plus:
        erf(2.5, cfg)
    with pytest.raises(AccuracyError) as minus:
        erf(-2.5, cfg)
    assert minus.value.value == -plus.value.value
    with pytest.raises(AccuracyError) as err_erfc:
        erfc(complex(0.5, 3.0), cfg)
    with pytest.raises(AccuracyError) as err_erf:
        erf(complex(0.5, 3.0), cfg)
    assert err_erfc.value.value == 1.0 - err_erf.value.value


def test_pure_imaginary_past_series_budget_raises():
    with pytest.raises(AccuracyError):
        erfc(7.5j)


def test_underflow_tail_estimate_stays_honest():
    # erfc(26.7) is subnormal; the estimate must cover quantization there,
    # and the value must sit inside the asymptotic sandwich
    #   exp(-x^2)/(x sqrt(pi)) * (1 - 1/(2x^2)) < erfc(x) < exp(-x^2)/(x sqrt(pi)),
    # checked in the log domain since the bounds themselves underflow
    x = 26.7
    res = erfc(x)
    assert 0.0 < res.value.real < 1e-310
    assert res.abs_err_estimate >= 1e-322
    log_upper = -(x * x) - math.log(x * math.sqrt(math.pi))
    log_lower = log_upper + math.log1p(-1.0 / (2.0 * x * x))
    assert log_lower <= math.log(res.value.real) <= log_upper


def test_config_validation():
    with pytest.raises(DomainError):
        EvalConfig(target_abs_tol=1e-17)
    with pytest.raises(DomainError):
        EvalConfig(target_abs_tol=-1.0)
    with pytest.raises(DomainError):
        EvalConfig(max_series_terms=0)
    with pytest.raises(DomainError):
        EvalConfig(series_cf_switch_radius=0.0)


# ------------------------------------------------------------- symmetry maps

def test_reflect_and_conjugate_maps():
    assert reflect(1 + 2j) == -1 - 2j
    assert conjugate(1 + 2j) == 1 - 2j


@given(finite_coord, finite_coord)
@settings(max_examples=200, deadline=None)
def test_odd_symmetry_bit_exact(x, y):
    z = complex(x, y)
    a = _eval_or_skip(erf, reflect(z)).value
    b = -_eval_or_skip(erf, z).value
    assert a == b
    assert _bits_zero_normalized(a) == _bits_zero_normalized(b)


@given(finite_coord, finite_coord)
@settings(max_examples=200, deadline=None)
def test_conjugation_bit_exact(x, y):
    z = complex(x, y)
    a = _eval_or_skip(erfc, conjugate(z)).value
    b = _eval_or_skip(erfc, z).value.conjugate()
    assert a == b
    assert _bits_zero_normalized(a) == _bits_zero_normalized(b)


def test_reflect_at_negative_zero():
    # equal values even though the sign bit may differ
    assert erf(-0.0).value == -erf(0.0).value == 0


def test_conjugation_on_real_axis():
    res = erfc(complex(2.0, -0.0))
    assert res.value.imag == 0.0
    assert res.value.real == erfc(2.0).value.real


@given(finite_coord, finite_coord)
@settings(max_examples=150, deadline=None)
def test_complement_within_combined_estimates(x, y):
    z = complex(x, y)
    a = _eval_or_skip(erf, z)
    b = _eval_or_skip(erfc, z)
    assert abs(a.value + b.value - 1.0) <= a.abs_err_estimate + b.abs_err_estimate


def test_complement_on_grid():
    # fixed grid over the |z| <= 6 box, mixing series and fraction routes
    for i in range(-4, 5):
        for j in range(-4, 5):
            z = complex(1.5 * i, 1.5 * j)
            a = erf(z)
            b = erfc(z)
            assert abs(a.value + b.value - 1.0) <= a.abs_err_estimate + b.abs_err_estimate, f"z={z}"


@given(st.floats(min_value=-6.0, max_value=6.0, allow_nan=False))
@settings(max_examples=200, deadline=None)
def test_real_line_imag_exactly_zero(x):
    assert erf(x).value.imag == 0.0
    assert erfc(x).value.imag == 0.0


# -------------------------------------------------- cross-method consistency

def test_series_cf_consistency_on_switch_annulus():
    # series evaluated past its default radius against the continued
    # fraction, on the annulus straddling the switch; tolerance is
    # absolute-or-relative since values near the imaginary axis reach 1e7
    rng = random.Random(20240815)
    wide = EvalConfig(series_cf_switch_radius=5.0)
    checked = 0
    while checked < 40:
        r = rng.uniform(3.5, 4.5)
        th = rng.uniform(-0.5 * math.pi, 0.5 * math.pi)
        z = complex(r * math.cos(th), r * math.sin(th))
        if z.real < 0.05:
            continue  # Lentz needs thousands of iterations this close to the axis
        sv, _ = _erf_series(z, wide)
        cv, _ = _erfc_cf(complex(z.real, abs(z.imag)), wide)
        if z.imag < 0:
            cv = cv.conjugate()
        assert abs(sv - (1.0 - cv)) <= 1e-12 * max(1.0, abs(sv)), f"z={z}"
        checked += 1


def test_oracle_equivalence_sample():
    # small pseudo-random sample; the acceptance suite runs the full 500
    rng = random.Random(7)
    for _ in range(50):
        r = 3.0 * math.sqrt(rng.random())
        th = rng.uniform(0.0, 2.0 * math.pi)
        z = complex(r * math.cos(th), r * math.sin(th))
        assert abs(erf(z).value - erf_oracle(z)) <= 1e-12, f"z={z}"


def test_estimate_covers_true_error_against_oracle():
    rng = random.Random(99)
    for _ in range(40):
        z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        res = erf(z)
        assert abs(res.value - erf_oracle(z)) <= res.abs_err_estimate + 1e-15, f"z={z}"


def test_wedge_dispatch_uses_series_and_stays_accurate():
    # near the imaginary axis past the switch radius the continued
    # fraction stalls; the series must take over and match the oracle
    for z in (0.05 + 4.1j, 0.3 + 4.2j, 0.05 + 6.0j):
        res = erfc(z)
        assert res.method is Method.SERIES
        ref = 1.0 - erf_oracle(z)
        assert abs(res.value - ref) <= 1e-12 * max(1.0, abs(ref)), f"z={z}"


def test_methods_recorded():
    assert erf(0.5).method is Method.SERIES
    assert erf(5.0).method is Method.CONTINUED_FRACTION
    assert erf(-0.5).method is Method.REFLECTION
    assert erf(complex(0.5, -0.5)).method is Method.CONJUGATION
    assert erfc(complex(1.5, -0.5)).method is Method.CONJUGATION
