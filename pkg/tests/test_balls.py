"""Ball arithmetic: containment, refinement, and exact decimal printing."""

import random
from fractions import Fraction

import pytest

from jsrlab.balls import (
    BallDomainError,
    PrecisionExhausted,
    RealBall,
    ball_ln,
    ball_sqrt,
    decimal_string,
    fraction_to_decimal,
    refine,
)

# 45-digit reference values (computed with an independent high-precision tool)
LN_PHI = Fraction("0.481211825059603447497758913424368423135184334")
SQRT5 = Fraction("2.23606797749978969640917366873127623544061836")


def test_ln_of_exact_one_is_exact_zero():
    ball = ball_ln(RealBall.from_int(1, 64))
    assert ball.is_exact() and ball.mid == 0


def test_ln_of_golden_ratio():
    phi = (RealBall.from_int(1, 192) + ball_sqrt(RealBall.from_int(5, 192))) / 2
    ball = ball_ln(phi)
    # the reference is a 45-digit rounding, so allow that truncation slack
    assert abs(ball.mid - LN_PHI) < Fraction(1, 10**44)
    assert ball.rad < Fraction(1, 10**40)


def test_ln_inverts_exp_of_two():
    e_squared = RealBall.from_int(2, 128).exp()
    back = ball_ln(e_squared)
    assert back.contains(2)
    assert back.rad < Fraction(1, 2**100)


def test_sqrt_examples():
    assert ball_sqrt(RealBall.from_int(4, 64)).contains(2)
    five = ball_sqrt(RealBall.from_int(5, 192))
    assert abs(five.mid - SQRT5) < Fraction(1, 10**43)
    zero = ball_sqrt(RealBall.from_int(0, 64))
    assert zero.contains(0)


def test_domain_errors():
    with pytest.raises(BallDomainError):
        ball_ln(RealBall.from_int(0, 64))
    with pytest.raises(BallDomainError):
        ball_sqrt(RealBall.from_int(-1, 64))
    straddling = RealBall.from_int(-1, 64) + RealBall.from_fraction(Fraction(1, 2), 64)
    with pytest.raises(BallDomainError):
        ball_ln(straddling)


def test_containment_through_random_pipelines():
    rng = random.Random(7)
    for _ in range(300):
        fr = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**9))
        ball = RealBall.from_fraction(fr, 96)
        assert ball.contains(fr)
        piped = (ball * ball + ball).ln().exp()
        assert piped.contains(fr * fr + fr)


def test_monotone_refinement():
    for value in (Fraction(2), Fraction(10, 7), Fraction(123456, 1001)):
        rads = [RealBall.from_fraction(value, prec).ln().rad for prec in (32, 64, 128, 256)]
        assert all(b <= a for a, b in zip(rads, rads[1:]))


def test_refine_meets_target_and_exhausts():
    ball = refine(lambda p: RealBall.from_int(2, p).ln(), Fraction(1, 10**50))
    assert ball.rad <= Fraction(1, 10**50)
    with pytest.raises(PrecisionExhausted):
        refine(lambda p: RealBall.from_int(2, p).ln(), Fraction(1, 10**9000), max_prec=256)


def test_fraction_to_decimal_examples():
    assert fraction_to_decimal(Fraction(1, 3), 5) == "0.33333"
    assert fraction_to_decimal(Fraction(37**5, 10**8), 8) == "0.69343957"
    assert fraction_to_decimal(Fraction(4, 3), 4) == "1.3333"


def test_decimal_round_half_to_even():
    assert fraction_to_decimal(Fraction(1, 8), 2) == "0.12"  # 0.125 -> even
    assert fraction_to_decimal(Fraction(3, 8), 2) == "0.38"  # 0.375 -> even
    assert fraction_to_decimal(Fraction(1, 4), 1) == "0.2"


def test_fraction_to_decimal_domain():
    with pytest.raises(ValueError):
        fraction_to_decimal(Fraction(10), 2)
    with pytest.raises(ValueError):
        fraction_to_decimal(Fraction(-1, 2), 2)
    with pytest.raises(ValueError):
        fraction_to_decimal(Fraction(1, 2), 0)


def test_decimal_roundtrip_error_below_grid():
    rng = random.Random(11)
    for _ in range(500):
        fr = Fraction(rng.randint(0, 10**8), rng.randint(10**7, 10**8))
        digits = rng.randint(1, 15)
        if fr >= 10:
            continue
        back = Fraction(fraction_to_decimal(fr, digits))
        assert abs(back - fr) < Fraction(1, 10**digits)


def test_decimal_string_handles_negatives_and_magnitude():
    assert decimal_string(Fraction(-1, 3), 4) == "-0.3333"
    assert decimal_string(Fraction(1234567, 100), 2) == "12345.67"


def test_mixed_precision_takes_max():
    a = RealBall.from_int(2, 64)
    b = RealBall.from_int(3, 256)
    assert (a + b).prec == 256
    assert (a * b).prec == 256
