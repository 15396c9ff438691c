"""Directed-rounding real enclosures and exact decimal printing.

A :class:`RealBall` stores two MPFR endpoints ``lo <= hi`` such that the real
number it describes is guaranteed to lie in ``[lo, hi]``.  Every operation
rounds the lower endpoint down and the upper endpoint up, so enclosures stay
valid through arbitrary compositions.  Endpoints are dyadic rationals, hence
``mid`` and ``rad`` are available exactly as :class:`fractions.Fraction`.

Exact integers are plain Python ``int`` (with ``gmpy2.mpz`` accepted
everywhere), exact rationals are ``fractions.Fraction`` or ``gmpy2.mpq``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Union

import gmpy2
from gmpy2 import mpfr, mpz

DEFAULT_PREC = 128
MAX_PREC = 8192

Rational = Union[int, Fraction, "gmpy2.mpq"]


class BallDomainError(ValueError):
    """Input ball extends outside the mathematical domain of the operation."""


class PrecisionExhausted(RuntimeError):
    """Requested radius not reached before hitting the precision cap."""


_CTX_CACHE: dict = {}


def _ctx(prec: int, rnd) -> "gmpy2.context":
    key = (prec, rnd)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = gmpy2.context(
            precision=prec,
            round=rnd,
            emin=gmpy2.get_emin_min(),
            emax=gmpy2.get_emax_max(),
        )
        _CTX_CACHE[key] = ctx
    return ctx


def _down(prec: int):
    return _ctx(prec, gmpy2.RoundDown)


def _up(prec: int):
    return _ctx(prec, gmpy2.RoundUp)


def _exact_mpfr(n) -> mpfr:
    """Lossless mpfr image of an integer."""
    n = mpz(n)
    return mpfr(n, max(int(n.bit_length()), 2))


def _fraction_of(x: mpfr) -> Fraction:
    num, den = x.as_integer_ratio()
    return Fraction(int(num), int(den))


class RealBall:
    """Enclosure [lo, hi] of a real number; all derived balls contain the result."""

    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo: mpfr, hi: mpfr, prec: int):
        if gmpy2.is_nan(lo) or gmpy2.is_nan(hi) or not lo <= hi:
            raise ValueError(f"invalid ball endpoints [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n, prec: int = DEFAULT_PREC) -> "RealBall":
        f = _exact_mpfr(n)
        return cls(f, f, prec)

    @classmethod
    def from_fraction(cls, value: Rational, prec: int = DEFAULT_PREC) -> "RealBall":
        num, den = _as_num_den(value)
        if den == 1:
            return cls.from_int(num, prec)
        fn, fd = _exact_mpfr(num), _exact_mpfr(den)
        return cls(_down(prec).div(fn, fd), _up(prec).div(fn, fd), prec)

    @classmethod
    def exact_zero(cls, prec: int = DEFAULT_PREC) -> "RealBall":
        z = mpfr(0, 2)
        return cls(z, z, prec)

    # -- exact accessors ---------------------------------------------------

    @property
    def lower(self) -> Fraction:
        return _fraction_of(self.lo)

    @property
    def upper(self) -> Fraction:
        return _fraction_of(self.hi)

    @property
    def mid(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def rad(self) -> Fraction:
        return (self.upper - self.lower) / 2

    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, value: Rational) -> bool:
        num, den = _as_num_den(value)
        v = Fraction(num, den)
        return self.lower <= v <= self.upper

    def overlaps(self, other: "RealBall") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def entirely_positive(self) -> bool:
        return self.lo > 0

    def entirely_nonnegative(self) -> bool:
        return self.lo >= 0

    # -- certified order ---------------------------------------------------

    def cert_lt(self, other: "RealBall") -> bool:
        """True only if every point of self is < every point of other."""
        return self.hi < other.lo

    def cert_le(self, other: "RealBall") -> bool:
        return self.hi <= other.lo

    def cert_gt(self, other: "RealBall") -> bool:
        return self.lo > other.hi

    def cert_ge(self, other: "RealBall") -> bool:
        return self.lo >= other.hi

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RealBall":
        if isinstance(other, RealBall):
            return other
        return RealBall.from_fraction(other, self.prec)

    def __neg__(self) -> "RealBall":
        p = self.prec
        return RealBall(_down(p).minus(self.hi), _up(p).minus(self.lo), p)

    def __add__(self, other) -> "RealBall":
        o = self._coerce(other)
        p = max(self.prec, o.prec)
        return RealBall(_down(p).add(self.lo, o.lo), _up(p).add(self.hi, o.hi), p)

    __radd__ = __add__

    def __sub__(self, other) -> "RealBall":
        o = self._coerce(other)
        p = max(self.prec, o.prec)
        return RealBall(_down(p).sub(self.lo, o.hi), _up(p).sub(self.hi, o.lo), p)

    def __rsub__(self, other) -> "RealBall":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RealBall":
        o = self._coerce(other)
        p = max(self.prec, o.prec)
        d, u = _down(p), _up(p)
        pairs = ((self.lo, o.lo), (self.lo, o.hi), (self.hi, o.lo), (self.hi, o.hi))
        lo = min(d.mul(x, y) for x, y in pairs)
        hi = max(u.mul(x, y) for x, y in pairs)
        return RealBall(lo, hi, p)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "RealBall":
        num, den = _as_num_den(other)
        if num == 0:
            raise ZeroDivisionError("ball division by zero")
        return self * Fraction(den, num)

    def sqrt(self) -> "RealBall":
        if self.lo < 0:
            raise BallDomainError("sqrt of ball containing negative values")
        p = self.prec
        return RealBall(_down(p).sqrt(self.lo), _up(p).sqrt(self.hi), p)

    def ln(self) -> "RealBall":
        if self.lo <= 0:
            raise BallDomainError("ln of ball touching (-inf, 0]")
        p = self.prec
        if self.is_exact() and self.lo == 1:
            return RealBall.exact_zero(p)
        return RealBall(_down(p).log(self.lo), _up(p).log(self.hi), p)

    def exp(self) -> "RealBall":
        p = self.prec
        if self.is_exact() and self.lo == 0:
            one = mpfr(1, 2)
            return RealBall(one, one, p)
        return RealBall(_down(p).exp(self.lo), _up(p).exp(self.hi), p)

    def __repr__(self) -> str:
        return f"RealBall([{self.lo}, {self.hi}], prec={self.prec})"


def _as_num_den(value: Rational) -> tuple:
    if isinstance(value, int):
        return value, 1
    num = getattr(value, "numerator", None)
    if num is None:
        raise TypeError(f"not an exact rational: {value!r}")
    return int(num), int(value.denominator)


def ball_ln(x: RealBall) -> RealBall:
    """Enclosure of ln over the whole input ball (domain error off (0, inf))."""
    return x.ln()


def ball_sqrt(x: RealBall) -> RealBall:
    """Enclosure of sqrt over the whole input ball (domain error on negatives)."""
    return x.sqrt()


def ball_exp(x: RealBall) -> RealBall:
    return x.exp()


def ln_of_int(n, prec: int) -> RealBall:
    """Enclosure of ln(n) for an exact integer n >= 1."""
    if n <= 0:
        raise BallDomainError("ln of non-positive integer")
    if n == 1:
        return RealBall.exact_zero(prec)
    f = _exact_mpfr(n)
    return RealBall(_down(prec).log(f), _up(prec).log(f), prec)


def ball_max(balls) -> RealBall:
    """Enclosure of max(x_1, ..., x_k), one x_i per input ball."""
    balls = list(balls)
    if not balls:
        raise ValueError("empty max")
    prec = max(b.prec for b in balls)
    return RealBall(max(b.lo for b in balls), max(b.hi for b in balls), prec)


def ball_min(balls) -> RealBall:
    balls = list(balls)
    if not balls:
        raise ValueError("empty min")
    prec = max(b.prec for b in balls)
    return RealBall(min(b.lo for b in balls), min(b.hi for b in balls), prec)


def refine(
    compute: Callable[[int], RealBall],
    target_rad: Rational,
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Re-run ``compute`` at doubling precision until the radius meets target.

    ``compute`` must evaluate from exact data so that higher precision cannot
    widen the result.  Raises :class:`PrecisionExhausted` at the cap.
    """
    target = Fraction(*_as_num_den(target_rad)) if not isinstance(target_rad, float) else Fraction(target_rad)
    if target <= 0:
        raise ValueError("target radius must be positive")
    prec = min(start_prec, max_prec)
    while True:
        ball = compute(prec)
        if ball.rad <= target:
            return ball
        if prec >= max_prec:
            raise PrecisionExhausted(
                f"radius {float(ball.rad):.3e} > target {float(target):.3e} at {prec} bits"
            )
        prec = min(2 * prec, max_prec)


def decimal_string(value: Rational, digits: int) -> str:
    """Exact decimal of a rational with `digits` fractional digits.

    Correctly rounded with ties going to even (round-half-to-even); computed
    by integer long division, so no guard-digit analysis is needed.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    num, den = _as_num_den(value)
    if den < 0:
        num, den = -num, -den
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled, rem = divmod(num * 10**digits, den)
    if 2 * rem > den or (2 * rem == den and scaled % 2 == 1):
        scaled += 1
    int_part, frac_part = divmod(scaled, 10**digits)
    return f"{sign}{int_part}.{str(frac_part).zfill(digits)}"


def fraction_to_decimal(r: Rational, digits: int) -> str:
    """Decimal string of a rational r with 0 <= r < 10 (round-half-to-even)."""
    num, den = _as_num_den(r)
    if den < 0:
        num, den = -num, -den
    if num < 0 or num >= 10 * den:
        raise ValueError("fraction_to_decimal requires 0 <= r < 10")
    return decimal_string(r, digits)


def ball_decimal_pair(ball: RealBall, digits: int = 20) -> tuple[str, str]:
    """(mid, rad) decimal strings; printed rad covers the mid rounding error."""
    mid = ball.mid
    mid_str = decimal_string(mid, digits)
    printed = Fraction(mid_str)
    rad = ball.rad + abs(mid - printed)
    if rad == 0:
        return mid_str, "0"
    # round the radius up to 3 significant decimal digits
    exp = 0
    r = rad
    while r < Fraction(1, 10):
        r *= 10
        exp -= 1
    while r >= 1:
        r /= 10
        exp += 1
    scaled = r * 1000
    top = scaled.numerator // scaled.denominator
    if top * scaled.denominator != scaled.numerator:
        top += 1
    if top >= 1000:
        top, exp = 100, exp + 1
    return mid_str, f"{top}e{exp - 3}"
