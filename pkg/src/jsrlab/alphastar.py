"""The counterexample parameter: tau recurrence, Fibonacci-stage matrices,
exact rational approximants, the certified error bound, and alpha_* digits.

Conventions fixed package-wide: F_0 = 0, F_1 = 1 for Fibonacci numbers;
tau_0 = 1, tau_1 = tau_2 = 2, tau_{n+1} = tau_n tau_{n-1} - tau_{n-2};
B_1 = A1, B_2 = A0, B_{n+1} = B_n B_{n-1}.

The approximant alpha_N = (tau_N^{F_{N+1}} / tau_{N+1}^{F_N})^{(-1)^N} is an
exact rational; |ln(alpha_N) - ln(alpha_*)| < 780 (3/4)^{phi^N} for N >= 3,
which converts to the absolute-scale certificate used by :func:`alpha_star`.
Big operands use GMP integers/rationals internally (tau_40 has ~6.7e7 bits).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq, mpz

from .balls import (
    DEFAULT_PREC,
    MAX_PREC,
    RealBall,
    decimal_string,
    ln_of_int,
    refine,
)
from .mat import Mat2


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("negative Fibonacci index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class TauSequence:
    """values[n] = tau_n for 0 <= n <= N."""

    values: list

    def __getitem__(self, n: int):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def tau(n_max: int) -> TauSequence:
    """Exact tau_0 .. tau_{n_max}."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    vals = [mpz(1), mpz(2), mpz(2)]
    for n in range(2, n_max):
        vals.append(vals[n] * vals[n - 1] - vals[n - 2])
    return TauSequence([int(v) for v in vals[: n_max + 1]])


_B_CHAIN = [
    None,
    (mpz(1), mpz(0), mpz(1), mpz(1)),  # B_1 = A1
    (mpz(1), mpz(1), mpz(0), mpz(1)),  # B_2 = A0
]


def b_matrix(n: int) -> Mat2:
    """B_n: B_1 = A1, B_2 = A0, B_{n+1} = B_n B_{n-1}; det 1, trace tau_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    while len(_B_CHAIN) <= n:
        a, b, c, d = _B_CHAIN[-1]
        e, f, g, h = _B_CHAIN[-2]
        _B_CHAIN.append((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))
    entry = _B_CHAIN[n]
    return Mat2(int(entry[0]), int(entry[1]), int(entry[2]), int(entry[3]), from_word=True)


def alpha_N(n: int) -> mpq:
    """Exact rational (tau_n^{F_{n+1}} / tau_{n+1}^{F_n})^{(-1)^n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ts = tau(n + 1)
    num = mpz(ts[n]) ** fibonacci(n + 1)
    den = mpz(ts[n + 1]) ** fibonacci(n)
    value = mpq(num, den)
    return value if n % 2 == 0 else 1 / value


def partial_product(n_terms: int) -> mpq:
    """Exact partial product prod_{n=1}^{N-1} (1 - tau_{n-1}/(tau_n tau_{n+1}))^{(-1)^n F_{n+1}}.

    Telescopes to alpha_N(N) exactly; N = 1 gives the empty product 1.
    """
    if n_terms < 1:
        raise ValueError("N must be >= 1")
    ts = tau(n_terms + 1)
    prod = mpq(1)
    for n in range(1, n_terms):
        base = mpq(mpz(ts[n + 1]) * mpz(ts[n]) - mpz(ts[n - 1]), mpz(ts[n + 1]) * mpz(ts[n]))
        exponent = fibonacci(n + 1)
        term = base**exponent
        prod = prod * term if n % 2 == 0 else prod / term
    return prod


def _phi_ball(prec: int) -> RealBall:
    return (RealBall.from_int(1, prec) + RealBall.from_int(5, prec).sqrt()) / 2


def log_error_bound(n: int, prec: int = DEFAULT_PREC) -> RealBall:
    """Enclosure of 780 (3/4)^{phi^n}: certified bound for |ln a_n - ln a_*|, n >= 3."""
    if n < 3:
        raise ValueError("the error chain is established for N >= 3")
    phi = _phi_ball(prec)
    power = RealBall.from_int(1, prec)
    base = phi
    k = n
    while k:  # phi^n by binary powering of the enclosure
        if k & 1:
            power = power * base
        base = base * base
        k >>= 1
    ln34 = RealBall.from_fraction(Fraction(3, 4), prec).ln()
    return (power * ln34).exp() * 780


_ALPHA20_BELOW_1_1: bool | None = None


def _alpha_n_below_11_10(n: int) -> bool:
    """Certify alpha_n < 11/10 (needed for the absolute-scale conversion)."""
    global _ALPHA20_BELOW_1_1
    if n <= 20:
        return alpha_N(n) < mpq(11, 10)
    # For n > 20: |ln a_n - ln a_20| <= bound(20) + bound(n) <= 2 bound(20),
    # and bound(20) < 1e-250, so a_20 < 1.09 certifies a_n < 1.1.
    if _ALPHA20_BELOW_1_1 is None:
        _ALPHA20_BELOW_1_1 = alpha_N(20) < mpq(109, 100)
    return _ALPHA20_BELOW_1_1


def error_bound_exponent(n: int, max_prec: int = MAX_PREC) -> int:
    """Smallest integer e with a certified |alpha_n - alpha_*| < 10^e.

    The log-scale bound B = 780 (3/4)^{phi^n} converts to absolute scale via
    |alpha_n - alpha_*| <= alpha_n (e^B - 1) < (11/10)(e^B - 1), after
    certifying alpha_n < 11/10 exactly.
    """
    if n < 3:
        raise ValueError("the error chain is established for N >= 3")
    if not _alpha_n_below_11_10(n):
        raise AssertionError(f"alpha_{n} >= 1.1; absolute conversion invalid")

    def compute(prec: int) -> RealBall:
        log_bound = log_error_bound(n, prec)
        return (log_bound.exp() - 1) * Fraction(11, 10)

    prec = DEFAULT_PREC
    while True:
        abs_bound = compute(prec)
        if abs_bound.lower > 0 and abs_bound.rad <= abs_bound.mid / 4:
            break
        if prec >= max_prec:
            break
        prec = min(2 * prec, max_prec)
    upper = abs_bound.upper
    if upper <= 0:
        raise AssertionError("error bound collapsed to a non-positive value")
    # smallest integer e with upper < 10^e, located from exact bit lengths
    e = int((upper.numerator.bit_length() - upper.denominator.bit_length()) * 0.30103) + 2
    while Fraction(10) ** e <= upper:
        e += 1
    while Fraction(10) ** (e - 1) > upper:
        e -= 1
    return e


@dataclass(frozen=True)
class AlphaCertificate:
    """Decimal digits of alpha_* with the exact rational and certified error."""

    digits: str
    n_used: int
    error_exponent: int
    value_rational: mpq

    def to_dict(self) -> dict:
        return {
            "digits": self.digits,
            "value": f"{self.value_rational.numerator}/{self.value_rational.denominator}",
            "n_used": self.n_used,
            "error_exponent": self.error_exponent,
        }


def alpha_star(digits: int, max_digits: int = 1000) -> AlphaCertificate:
    """alpha_* correctly rounded to `digits` decimal places, with certificate.

    Chooses the minimal N >= 3 whose certified error is below 10^-(digits+2),
    rounds the exact rational alpha_N, and verifies the printed digits are
    stable across the error interval (so they are also the digits of alpha_*).
    """
    if not 1 <= digits <= max_digits:
        raise ValueError(f"digits must lie in [1, {max_digits}]")
    n = 3
    while True:
        exponent = error_bound_exponent(n)
        if exponent <= -(digits + 2):
            value = alpha_N(n)
            rounded = decimal_string(value, digits)
            wiggle = mpq(1, 10 ** (-exponent))
            if decimal_string(value - wiggle, digits) == rounded == decimal_string(
                value + wiggle, digits
            ):
                return AlphaCertificate(
                    digits=rounded,
                    n_used=n,
                    error_exponent=exponent,
                    value_rational=value,
                )
        n += 1
        if n > 60:
            raise RuntimeError("no stable rounding found below N = 60")


def slope_estimate(
    n: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Enclosure of (-1)^n (F_n ln tau_{n+1} - F_{n+1} ln tau_n) = -ln(alpha_n).

    These telescoped differences converge to the slope of the growth curve at
    the golden-mean ratio, i.e. to -ln(alpha_*).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ts = tau(n + 1)
    f_n, f_n1 = fibonacci(n), fibonacci(n + 1)
    sign = -1 if n % 2 else 1

    def compute(prec: int) -> RealBall:
        value = ln_of_int(ts[n + 1], prec) * f_n - ln_of_int(ts[n], prec) * f_n1
        return value * sign

    return refine(compute, target_rad, start_prec, max_prec)
