"""Exact sign tests for quadratic-surd expressions.

Growth rates of det-1 integer matrices are logs of numbers of the form
(s + sqrt(s^2-4))/2, so ordering questions reduce to the sign of
A + B*sqrt(d1) + C*sqrt(d2) with integer coefficients.  Everything here is
pure integer arithmetic: no rounding, no precision.
"""

from __future__ import annotations

from fractions import Fraction


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_a_plus_b_sqrt(a, b, d) -> int:
    """Sign of a + b*sqrt(d) for integers a, b and d >= 0."""
    if d < 0:
        raise ValueError("negative radicand")
    if b == 0 or d == 0:
        return _sign(a)
    if b > 0 and a >= 0:
        return 1
    if b < 0 and a <= 0:
        return -1
    lhs, rhs = a * a, b * b * d
    if a > 0:  # b < 0: positive iff a^2 > b^2 d
        return _sign(lhs - rhs)
    return _sign(rhs - lhs)  # a < 0, b > 0


def sign_sum2(a, b, d1, c, d2) -> int:
    """Sign of a + b*sqrt(d1) + c*sqrt(d2) for integers, d1, d2 >= 0."""
    t_sign = sign_a_plus_b_sqrt(a, b, d1)
    if c == 0 or d2 == 0:
        return t_sign
    c_sign = _sign(c)
    if t_sign == 0:
        return c_sign
    if t_sign == c_sign:
        return t_sign
    # opposite signs: compare (a + b*sqrt(d1))^2 against c^2 d2
    diff = sign_a_plus_b_sqrt(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)
    if diff == 0:
        return 0
    return t_sign if diff > 0 else c_sign


def power_trace(t, k: int):
    """Trace of M^k for a det-1 matrix M with trace t (s_0=2, s_{j+1}=t*s_j-s_{j-1})."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return 2
    s_prev, s_cur = 2, t
    for _ in range(k - 1):
        s_prev, s_cur = s_cur, t * s_cur - s_prev
    return s_cur


def compare_growth(k1: int, m1: int, t1, k2: int, m2: int, t2, alpha: Fraction) -> int:
    """Exact sign of [(k1/m1) ln(alpha) + ln(rho(t1))/m1] - [(k2/m2) ln(alpha) + ln(rho(t2))/m2].

    rho(t) = (t + sqrt(t^2-4))/2 is the large eigenvalue of a det-1 matrix of
    trace t >= 2; alpha must be a positive exact rational.
    """
    if m1 <= 0 or m2 <= 0:
        raise ValueError("lengths must be positive")
    if t1 < 2 or t2 < 2:
        raise ValueError("traces must be >= 2 (non-negative det-1 products)")
    a, b = alpha.numerator, alpha.denominator
    if a <= 0 or b <= 0:
        raise ValueError("alpha must be positive")
    s1 = power_trace(t1, m2)
    s2 = power_trace(t2, m1)
    e1, e2 = k1 * m2, k2 * m1
    p = a**e1 * b**e2
    q = a**e2 * b**e1
    return sign_sum2(p * s1 - q * s2, p, s1 * s1 - 4, -q, s2 * s2 - 4)
