import math

import numpy as np
import pytest
from scipy.integrate import quad

from watlab.bounds import (
    HypothesisViolation,
    abel_series_check,
    cauchy_mvt_bound_check,
    check_mean_bound_ii,
    check_mean_bound_iii,
    check_mean_bound_iv,
    check_weighted_series,
    closed_form_rhs_q1,
    harmonic_block_bound,
    identity_check,
    log_integral_bound_check,
    log_modulus_integral,
    szego_check,
    theorem_constant,
)
from watlab.coeffs import compute_b_table
from watlab.iterlog import find_constants
from watlab.symbols import TrigSymbol, sup_norm, unit_modulus_set

EQUALITY_SYMBOL = TrigSymbol.trig_polynomial(1, {(0,): 0.5, (1,): 0.5})


def make_table(f, nu, n_range, k_window, grid):
    E = unit_modulus_set(f.evaluate_on_grid(grid), 1e-9)
    return compute_b_table(f, E, nu, n_range, k_window)


def test_theorem_constant_values():
    assert theorem_constant(1.0) == pytest.approx(math.log(16))
    assert theorem_constant(0.5) == pytest.approx(math.log(256))
    assert theorem_constant(0.9) < theorem_constant(0.5)
    with pytest.raises(HypothesisViolation):
        theorem_constant(0.0)


def test_weighted_series_on_delta_table():
    tab = make_table(TrigSymbol.constant(1j), (1,), (0, 8), 4, 64)
    C = math.log(16)
    for N in (5, 7):
        for k in (0, 2):
            rep = check_weighted_series(tab, N, k, C)
            assert rep.passed
            assert rep.lhs == pytest.approx(1 / abs(k - N), abs=1e-12)


def test_weighted_series_truncation_monotone(blaschke_half):
    C = theorem_constant(0.5)
    small = make_table(blaschke_half, (1,), (1, 64), 2, 1024)
    large = make_table(blaschke_half, (1,), (1, 256), 2, 1024)
    for k in (-2, 0, 1):
        a = check_weighted_series(small, 0, k, C).lhs
        b = check_weighted_series(large, 0, k, C).lhs
        assert b >= a


def test_mean_ii(blaschke_half):
    tab = make_table(blaschke_half, (1,), (1, 128), 2, 1024)
    C = theorem_constant(0.5)
    rep = check_mean_bound_ii(tab, 1, 100, 0, C)
    assert rep.passed
    rep1 = check_mean_bound_ii(tab, 1, 1, 0, C)
    assert rep1.rhs == pytest.approx(C / math.log(2))
    assert rep1.lhs <= 1.0


def test_mean_iii_integral_lower_bound():
    # integral_1^{p+1} dt / (t log(t+3)) >= loglog(p+4) - loglog(4)
    for p in (10, 1000):
        integral, _ = quad(lambda t: 1 / (t * math.log(t + 3)), 1, p + 1, limit=200)
        lower = math.log(math.log(p + 4)) - math.log(math.log(4))
        assert integral >= lower


def test_mean_iii(blaschke_half):
    tab = make_table(blaschke_half, (1,), (1, 128), 2, 1024)
    C = theorem_constant(0.5)
    params = find_constants(1)
    rep = check_mean_bound_iii(tab, 1, params.alpha, params.gamma, 1, 100, 0, C)
    assert rep.passed
    with pytest.raises(HypothesisViolation):
        check_mean_bound_iii(tab, 1, 1.5, params.gamma, 1, 100, 0, C)


def test_mean_iv_matches_closed_form(blaschke_half):
    tab = make_table(blaschke_half, (1,), (1, 128), 2, 1024)
    C = theorem_constant(0.5)
    for p in (10, 100):
        rep = check_mean_bound_iv(tab, 1, 1, p, 0, C)
        assert rep.passed
        assert abs(rep.rhs - closed_form_rhs_q1(p, C)) <= 1e-12


def test_mean_bounds_on_zero_table(torus2_degenerate):
    tab = make_table(torus2_degenerate, (1, 1), (1, 64), 2, (256, 256))
    C = theorem_constant(0.5)
    assert check_mean_bound_ii(tab, 1, 10, 0, C).lhs == 0.0
    assert check_mean_bound_iv(tab, 1, 1, 10, 0, C).passed


def test_mean_bounds_require_coverage(blaschke_half):
    tab = make_table(blaschke_half, (1,), (1, 32), 2, 1024)
    C = theorem_constant(0.5)
    with pytest.raises(HypothesisViolation):
        check_mean_bound_ii(tab, 1, 100, 0, C)


# -- geometric-mean inequality ---------------------------------------------


def test_szego_equality_symbol(neg_halfline):
    rep = szego_check(EQUALITY_SYMBOL, neg_halfline, 16384)
    assert rep.passed
    assert rep.lhs == pytest.approx(-math.log(2), abs=1e-12)
    assert rep.rhs == pytest.approx(-math.log(2), abs=1e-12)


def test_szego_constant(neg_halfline):
    rep = szego_check(TrigSymbol.constant(0.7), neg_halfline, 256)
    assert rep.passed
    assert rep.rhs == pytest.approx(math.log(0.7), abs=1e-12)


def test_szego_blaschke(neg_halfline, blaschke_half):
    rep = szego_check(blaschke_half, neg_halfline, 4096)
    assert rep.passed
    assert rep.rhs == pytest.approx(0.0, abs=1e-12)  # inner: log|f| = 0


def test_szego_random_polynomials(neg_halfline):
    rng = np.random.default_rng(7)
    for _ in range(8):
        deg = int(rng.integers(1, 9))
        coeffs = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        if abs(coeffs[0]) < 1e-2:
            coeffs[0] += 0.5
        f = TrigSymbol.trig_polynomial(1, {(j,): c for j, c in enumerate(coeffs)})
        norm = sup_norm(f.evaluate_on_grid(16384))
        f = TrigSymbol.trig_polynomial(
            1, {(j,): c / (norm * (1 + 1e-12)) for j, c in enumerate(coeffs)}
        )
        rep = szego_check(f, neg_halfline, 16384)
        assert rep.passed
        assert rep.rhs >= rep.lhs - 1e-6


def test_szego_hypothesis_gates(neg_halfline):
    non_vanishing = TrigSymbol.trig_polynomial(1, {(0,): 0.5, (-1,): 0.5})
    with pytest.raises(HypothesisViolation):
        szego_check(non_vanishing, neg_halfline, 256)
    no_mean = TrigSymbol.trig_polynomial(1, {(1,): 1.0})
    with pytest.raises(HypothesisViolation):
        szego_check(no_mean, neg_halfline, 256)


def test_log_modulus_integral_equality_case():
    val, method, excluded = log_modulus_integral(EQUALITY_SYMBOL, 256)
    assert method == "roots"
    assert excluded == 0
    assert val == pytest.approx(-math.log(2), abs=1e-12)


# -- double-integral checks --------------------------------------------------


def test_log_integral_bound_constant_symbol():
    rep = log_integral_bound_check(TrigSymbol.constant(1.0), (1,), 0.5, 128)
    assert rep.passed
    assert rep.rhs == pytest.approx(math.log(8))
    assert rep.details["lhs_restricted_to_E"] <= rep.lhs + 1e-15


def test_log_integral_bound_blaschke(blaschke_half):
    for r in (0.5, 0.9):
        rep = log_integral_bound_check(blaschke_half, (1,), r, 128)
        assert rep.passed


def test_log_integral_bound_r_rejected(blaschke_half):
    with pytest.raises(HypothesisViolation):
        log_integral_bound_check(blaschke_half, (1,), 1.5, 128)


def test_identity_constant_symbol():
    for n in (1, 3):
        for k in (0, 1, 3):
            rep = identity_check(TrigSymbol.constant(1.0), (1,), n, k, 128)
            assert rep.passed
            expected = 1.0 if n == k else 0.0
            assert rep.lhs == pytest.approx(expected, abs=1e-12)


def test_identity_blaschke(blaschke_half):
    rep = identity_check(blaschke_half, (1,), 3, 1, 256)
    assert rep.passed
    assert rep.details["abs_difference"] <= 1e-10


def test_identity_sweep(blaschke_half):
    for n in (1, 4, 9, 16):
        for k in (-3, 0, 2):
            rep = identity_check(blaschke_half, (1,), n, k, 256)
            assert rep.details["abs_difference"] <= 1e-10


def test_identity_degenerate(torus2_degenerate):
    rep = identity_check(torus2_degenerate, (1, 1), 3, 1, (256, 256))
    assert rep.passed
    assert rep.lhs == rep.rhs == 0.0
    assert rep.details["degenerate"]


def test_abel_constant_symbol():
    rep = abel_series_check(TrigSymbol.constant(1.0), (1,), 0, 0, 0.5, 50, 128)
    assert rep.passed
    assert rep.lhs == pytest.approx(0.0, abs=1e-14)
    assert rep.rhs == pytest.approx(0.0, abs=1e-12)


def test_abel_blaschke(blaschke_half):
    rep = abel_series_check(blaschke_half, (1,), 0, 0, 0.9, 200, 512)
    assert rep.passed
    assert rep.details["abs_difference"] <= rep.tolerance
    assert rep.details["max_partial_sum"] <= rep.details["partial_sum_bound"]


def test_abel_r_rejected(blaschke_half):
    with pytest.raises(HypothesisViolation):
        abel_series_check(blaschke_half, (1,), 0, 0, 1.0, 10, 128)


# -- elementary lemmas ---------------------------------------------------------


def test_harmonic_block_bound():
    assert harmonic_block_bound(1, 1) == pytest.approx(1.0)
    h10 = harmonic_block_bound(3, 10)
    assert h10 == pytest.approx(2.9289682539682538)
    assert h10 >= math.log(11)


@pytest.mark.parametrize("p", [1, 10, 1000, 10**6])
def test_harmonic_asymptotics(p):
    h = harmonic_block_bound(1, p)
    assert 0.0 <= h - math.log(p + 1) <= 1.0


def test_cauchy_mvt_q1():
    params = find_constants(1)
    rep = cauchy_mvt_bound_check(
        1, params.alpha, params.gamma, [3.0001, 10.0, 1e4, 1e8]
    )
    assert rep.passed


def test_cauchy_mvt_q2():
    params = find_constants(2)
    rep = cauchy_mvt_bound_check(2, params.alpha, params.gamma, [17.0, 1e3, 1e8])
    assert rep.passed


def test_cauchy_mvt_sample_below_gamma_rejected():
    params = find_constants(1)
    with pytest.raises(HypothesisViolation):
        cauchy_mvt_bound_check(1, params.alpha, params.gamma, [2.0])
