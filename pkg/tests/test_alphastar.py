"""tau recurrence, Fibonacci-stage matrices, approximants, and alpha_* digits."""

from fractions import Fraction

import pytest
from gmpy2 import mpq

from jsrlab.alphastar import (
    alpha_N,
    alpha_star,
    b_matrix,
    error_bound_exponent,
    fibonacci,
    log_error_bound,
    partial_product,
    slope_estimate,
    tau,
)
from jsrlab.balls import RealBall, refine
from jsrlab.mat import Mat2, log_rho_of_trace, word_trace
from jsrlab.scurve import s_of
from jsrlab.words import fibonacci_word

ABSTRACT_60 = "0.749326546330367557943961948091344672091327370236064317358024"


def test_fibonacci_convention():
    assert [fibonacci(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_tau_small_values():
    assert tau(3).values == [1, 2, 2, 3]
    assert tau(7).values == [1, 2, 2, 3, 4, 10, 37, 366]
    with pytest.raises(ValueError):
        tau(-1)


def test_tau_equals_matrix_trace():
    ts = tau(25)
    for n in range(1, 26):
        assert b_matrix(n).trace() == ts[n]


def test_tau_dominated_by_doubling_tower():
    ts = tau(30)
    for n in range(1, 31):
        assert ts[n] <= 2 ** fibonacci(n)


def test_b_matrix_values():
    assert b_matrix(1) == Mat2(1, 0, 1, 1, from_word=True)
    assert b_matrix(2) == Mat2(1, 1, 0, 1, from_word=True)
    assert b_matrix(3) == Mat2(2, 1, 1, 1, from_word=True)
    assert b_matrix(4) == Mat2(2, 3, 1, 2, from_word=True)
    assert b_matrix(5).trace() == 10
    for n in range(1, 20):
        assert b_matrix(n).det() == 1
    with pytest.raises(ValueError):
        b_matrix(0)


def test_b_matrix_fibonacci_word_bridge():
    for n in range(1, 18):
        assert b_matrix(n).trace() == word_trace(fibonacci_word(n))


def test_alpha_N_values():
    assert alpha_N(1) == 1
    assert alpha_N(5) == mpq(37**5, 10**8)
    ts = tau(14)
    assert alpha_N(13) == mpq(int(ts[14]) ** fibonacci(13), int(ts[13]) ** fibonacci(14))


def test_alpha_N_signs_and_size():
    for n in range(1, 13):
        a_n = alpha_N(n)
        assert a_n > 0
        if n >= 3 and n % 2 == 1:
            assert a_n < 1
    assert alpha_N(4) > 1  # 4^5/10^3 = 1.024


def test_partial_product_telescopes():
    assert partial_product(1) == 1
    for n in range(1, 15):
        assert partial_product(n) == alpha_N(n)


def test_error_bound_exponents():
    # honest absolute-scale exponents; the N=13 value reproduces the 10^-62 claim
    assert error_bound_exponent(13) == -62
    assert error_bound_exponent(3) == 101
    assert error_bound_exponent(7) == 0
    assert error_bound_exponent(8) == -2
    with pytest.raises(ValueError):
        error_bound_exponent(2)


def test_error_bound_strictly_improving():
    values = [error_bound_exponent(n) for n in range(3, 16)]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_log_error_bound_enclosure():
    ball = log_error_bound(13, 160)
    assert ball.upper < Fraction(1, 10**62)
    assert ball.lower > 0


def test_alpha_star_sixty_digits():
    cert = alpha_star(60)
    assert cert.digits == ABSTRACT_60
    assert cert.n_used <= 14
    assert cert.error_exponent <= -62
    assert cert.value_rational == alpha_N(cert.n_used)


def test_alpha_star_one_digit():
    assert alpha_star(1).digits == "0.7"


def test_alpha_star_stability():
    thirty = alpha_star(30)
    sixty = alpha_star(60)
    assert sixty.digits.startswith(thirty.digits)


def test_alpha_star_validation():
    with pytest.raises(ValueError):
        alpha_star(0)
    with pytest.raises(ValueError):
        alpha_star(2000)


def test_slope_estimate_examples():
    assert slope_estimate(1).contains(0)

    s5 = slope_estimate(5, Fraction(1, 10**35))
    neg_ln = refine(
        lambda p: -RealBall.from_fraction(Fraction(37**5, 10**8), p).ln(),
        Fraction(1, 10**38),
    )
    assert s5.overlaps(neg_ln)


def test_slope_vs_divided_difference():
    """The telescoped slope agrees with the S divided difference between
    consecutive golden-ratio convergents up to the tau-vs-rho correction."""
    s25 = s_of(2, 5, Fraction(1, 10**35)).value
    s38 = s_of(3, 8, Fraction(1, 10**35)).value
    gap = Fraction(3, 8) - Fraction(2, 5)  # = -1/40
    divided = (s38 - s25) / gap
    slope = slope_estimate(5, Fraction(1, 10**35))
    # correction: F_5 / rho(B_6)^2 + F_6 / rho(B_5)^2
    rho5 = log_rho_of_trace(10, Fraction(1, 10**20)).exp()
    rho6 = log_rho_of_trace(37, Fraction(1, 10**20)).exp()
    correction = (
        Fraction(5) / (rho6.lower * rho6.lower) + Fraction(8) / (rho5.lower * rho5.lower)
    )
    diff = slope - divided
    assert abs(diff.mid) <= correction + diff.rad


def test_alpha_sequence_converges_within_bounds():
    """|ln a_n - ln a_m| stays below the sum of the certified bounds."""
    for n in (3, 5, 8):
        for m in (n + 1, n + 3):
            ln_n = refine(
                lambda p, a=alpha_N(n): RealBall.from_fraction(a, p).ln(),
                Fraction(1, 10**30),
            )
            ln_m = refine(
                lambda p, a=alpha_N(m): RealBall.from_fraction(a, p).ln(),
                Fraction(1, 10**30),
            )
            gap = ln_n - ln_m
            allowed = log_error_bound(n, 192).upper + log_error_bound(m, 192).upper
            assert abs(gap.mid) <= allowed + gap.rad


def test_tau_close_to_rho():
    ts = tau(12)
    for n in range(3, 13):
        ln_tau = refine(
            lambda p, t=ts[n]: RealBall.from_int(t, p).ln(), Fraction(1, 10**40)
        )
        ln_rho = log_rho_of_trace(ts[n], Fraction(1, 10**40))
        gap = ln_tau - ln_rho
        bound = (ln_rho * (-2)).exp()
        assert gap.lower >= -Fraction(1, 10**35)
        assert gap.upper <= bound.upper + Fraction(1, 10**35)
