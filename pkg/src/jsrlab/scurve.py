"""The growth curve S on rationals, Farey enumeration, and the optimal-1-ratio
search: maximize S(gamma) + gamma*ln(alpha) over Farey fractions.

S(p/q) is ln(rho) / q for the exact trace of the period product of the
mechanical word with slope p/q; S(0) = S(1) = 0 exactly.  The argmax search
descends the Stern-Brocot tree, pruning with certified ball comparisons that
exploit concavity; whenever a comparison cannot be certified the search keeps
both subtrees, so correctness never depends on strict concavity.  A plain
sweep over all Farey fractions is provided as the search oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .balls import DEFAULT_PREC, MAX_PREC, RealBall, refine
from .mat import log_rho_of_trace, word_trace
from .surd import compare_growth
from .words import mechanical_periodic


class IndeterminateComparison(RuntimeError):
    """Candidates could not be separated at the maximum working precision."""


AlphaLike = Union[Fraction, int, RealBall]


@dataclass(frozen=True)
class SPoint:
    """One sample of S: the 1-ratio, the exact period trace, and S's enclosure."""

    gamma: Fraction
    trace: int
    value: RealBall


@dataclass(frozen=True)
class RArgmax:
    """Result of the optimal-1-ratio search over Farey fractions."""

    alpha: RealBall
    best: Fraction
    bracket: tuple[Fraction, Fraction]
    depth: int


_TRACE_CACHE: dict[tuple[int, int], int] = {}


def period_trace(p: int, q: int) -> int:
    """Exact trace of the product along the shift-0 mechanical period of p/q."""
    key = (p, q)
    t = _TRACE_CACHE.get(key)
    if t is None:
        t = word_trace(mechanical_periodic(p, q, 0))
        _TRACE_CACHE[key] = t
    return t


def s_of(
    p: int,
    q: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> SPoint:
    """S(p/q) with a certified enclosure; exactly zero at the endpoints."""
    if q < 1 or not 0 <= p <= q or gcd(p, q) != 1:
        raise ValueError(f"need a reduced fraction in [0, 1]; got {p}/{q}")
    t = period_trace(p, q)
    if t == 2:
        return SPoint(Fraction(p, q), t, RealBall.exact_zero(start_prec))
    value = log_rho_of_trace(t, target_rad, start_prec, max_prec) / q
    return SPoint(Fraction(p, q), t, value)


def farey_fractions(max_den: int) -> list[Fraction]:
    """All reduced fractions in [0, 1] with denominator <= max_den, ascending."""
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    seq = [Fraction(0, 1)]
    a, b, c, d = 0, 1, 1, max_den
    while c <= max_den:
        seq.append(Fraction(c, d))
        k = (max_den + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return seq


def farey_neighbors(fr: Fraction, max_den: int) -> tuple[Fraction, Fraction]:
    """Left/right neighbors of fr in the Farey sequence of order max_den.

    At the endpoints the missing neighbor is reported as fr itself.
    """
    p, q = fr.numerator, fr.denominator
    if q > max_den:
        raise ValueError("fraction not in the Farey sequence of this order")
    if fr == 0:
        return (fr, Fraction(1, max_den))
    if fr == 1:
        return (Fraction(max_den - 1, max_den), fr)
    inv = pow(p, -1, q)  # p * inv == 1 (mod q)
    b = inv + ((max_den - inv) // q) * q  # largest b <= max_den, p*b = 1 mod q
    left = Fraction((p * b - 1) // q, b)
    d = (-inv) % q
    d = d + ((max_den - d) // q) * q
    right = Fraction((p * d + 1) // q, d)
    return (left, right)


class _AlphaView:
    """Uniform access to alpha: enclosures at any precision, exact value if any."""

    def __init__(self, alpha: AlphaLike):
        if isinstance(alpha, RealBall):
            self.ball = alpha
            self.exact: Optional[Fraction] = (
                Fraction(alpha.lower) if alpha.is_exact() else None
            )
        else:
            self.exact = Fraction(alpha)
            self.ball = None
        if self.ball is not None:
            if not self.ball.entirely_positive() or self.ball.upper > 1:
                raise ValueError("alpha must lie within (0, 1]")
        elif not 0 < self.exact <= 1:
            raise ValueError("alpha must lie within (0, 1]")
        self._ln_cache: dict[int, RealBall] = {}

    def alpha_ball(self, prec: int) -> RealBall:
        if self.ball is not None:
            return self.ball
        return RealBall.from_fraction(self.exact, prec)

    def ln_alpha(self, prec: int) -> RealBall:
        cached = self._ln_cache.get(prec)
        if cached is None:
            if self.exact == 1:
                cached = RealBall.exact_zero(prec)
            elif self.ball is not None:
                lo, hi = self.ball.lo, self.ball.hi
                cached = RealBall(lo, hi, prec).ln()
            else:
                cached = RealBall.from_fraction(self.exact, prec).ln()
            self._ln_cache[prec] = cached
        return cached


class _Objective:
    """f(gamma) = S(gamma) + gamma * ln(alpha) over Farey fractions."""

    def __init__(self, alpha: _AlphaView, max_prec: int):
        self.alpha = alpha
        self.max_prec = max_prec
        self._cache: dict[tuple[Fraction, int], RealBall] = {}

    def value(self, fr: Fraction, prec: int) -> RealBall:
        key = (fr, prec)
        ball = self._cache.get(key)
        if ball is None:
            p, q = fr.numerator, fr.denominator
            t = period_trace(p, q)
            s_part = (
                RealBall.exact_zero(prec)
                if t == 2
                else log_rho_of_trace(t, None, prec, prec) / q
            )
            ball = s_part + self.alpha.ln_alpha(prec) * fr if p else s_part
            self._cache[key] = ball
        return ball

    def cert_ge(self, fr_a: Fraction, fr_b: Fraction, prec: int) -> bool:
        """Certified f(a) >= f(b) at the given precision only."""
        return self.value(fr_a, prec).cert_ge(self.value(fr_b, prec))

    def compare_strict(self, fr_a: Fraction, fr_b: Fraction, start_prec: int):
        """+1 / -1 / 0 for f(a) vs f(b); certified, escalating, exact fallback.

        Exact rational alpha: residual overlaps are settled by the surd
        comparator, so 0 means exact equality.  Alpha given as a genuine
        enclosure: candidates whose order depends on where alpha sits inside
        its enclosure are reported as ties (0); only an overlap NOT explained
        by the enclosure width raises IndeterminateComparison.
        """
        prec = start_prec
        while True:
            va = self.value(fr_a, prec)
            vb = self.value(fr_b, prec)
            if va.cert_gt(vb):
                return 1
            if vb.cert_gt(va):
                return -1
            if prec >= self.max_prec:
                break
            prec = min(2 * prec, self.max_prec)
        if self.alpha.exact is not None:
            return compare_growth(
                fr_a.numerator,
                fr_a.denominator,
                period_trace(fr_a.numerator, fr_a.denominator),
                fr_b.numerator,
                fr_b.denominator,
                period_trace(fr_b.numerator, fr_b.denominator),
                self.alpha.exact,
            )
        alpha_floor = (fr_a + fr_b) * self.alpha.ln_alpha(prec).rad
        if va.rad + vb.rad <= 4 * alpha_floor:
            return 0
        raise IndeterminateComparison(
            f"cannot separate f({fr_a}) from f({fr_b}) below precision {self.max_prec}"
        )


def _select_best(cands, objective: _Objective, start_prec: int) -> Fraction:
    """Max by objective; ties to the smaller denominator, then smaller value."""
    ordered = sorted(set(cands), key=lambda f: (f.denominator, f))
    best = ordered[0]
    for cand in ordered[1:]:
        if objective.compare_strict(cand, best, start_prec) > 0:
            best = cand
    return best


def _descend(objective: _Objective, max_den: int, start_prec: int):
    """Stern-Brocot descent; returns (candidate set, maximum depth reached).

    Pruning uses one-sided certified comparisons justified by concavity; when
    neither side can be certified, both subintervals are kept.
    """
    zero, one = Fraction(0, 1), Fraction(1, 1)
    cands = {zero, one}
    max_depth = 0
    stack = [(zero, one, 0)]
    while stack:
        left, right, depth = stack.pop()
        mediant = Fraction(
            left.numerator + right.numerator, left.denominator + right.denominator
        )
        if mediant.denominator > max_den:
            continue
        cands.add(mediant)
        max_depth = max(max_depth, depth + 1)
        prec = start_prec
        while True:
            if objective.cert_ge(left, mediant, prec):
                stack.append((left, mediant, depth + 1))
                break
            if objective.cert_ge(right, mediant, prec):
                stack.append((mediant, right, depth + 1))
                break
            if (
                objective.value(left, prec).cert_lt(objective.value(mediant, prec))
                and objective.value(right, prec).cert_lt(objective.value(mediant, prec))
            ) or prec >= objective.max_prec:
                stack.append((left, mediant, depth + 1))
                stack.append((mediant, right, depth + 1))
                break
            prec = min(2 * prec, objective.max_prec)
    return cands, max_depth


def _argmax(
    alpha: AlphaLike,
    max_den: int,
    start_prec: int,
    max_prec: int,
) -> tuple[Fraction, int, _Objective, _AlphaView]:
    view = _AlphaView(alpha)
    objective = _Objective(view, max_prec)
    cands, depth = _descend(objective, max_den, start_prec)
    best = _select_best(cands, objective, start_prec)
    left, right = farey_neighbors(best, max_den)
    for nb in (left, right):
        if nb != best and objective.compare_strict(nb, best, start_prec) > 0:
            raise AssertionError(f"descent missed a better neighbor {nb} of {best}")
    return best, depth, objective, view


def argmax_r(
    alpha: AlphaLike,
    max_den: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RArgmax:
    """Farey fraction with denominator <= max_den maximizing S(g) + g ln(alpha)."""
    if max_den < 2:
        raise ValueError("max_den must be >= 2")
    best, depth, _objective, view = _argmax(alpha, max_den, start_prec, max_prec)
    return RArgmax(
        alpha=view.alpha_ball(start_prec),
        best=best,
        bracket=farey_neighbors(best, max_den),
        depth=depth,
    )


def sweep_argmax(
    alpha: AlphaLike,
    max_den: int,
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> Fraction:
    """Oracle: same selection rule applied to every Farey fraction directly."""
    view = _AlphaView(alpha)
    objective = _Objective(view, max_prec)
    return _select_best(farey_fractions(max_den), objective, start_prec)


def rho_lower(
    alpha: AlphaLike,
    max_den: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Certified lower bound for rho(alpha): max over gamma of e^{S} alpha^gamma.

    Tight whenever the optimal 1-ratio of alpha has denominator <= max_den.
    """
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    if max_den == 1:
        view = _AlphaView(alpha)
        objective = _Objective(view, max_prec)
        best = _select_best([Fraction(0), Fraction(1)], objective, start_prec)
    else:
        best, _, objective, view = _argmax(alpha, max_den, start_prec, max_prec)

    def compute(prec: int) -> RealBall:
        return objective.value(best, prec).exp()

    return refine(compute, target_rad, start_prec, max_prec)


def scurve_table(
    max_den: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> list[SPoint]:
    """S sampled at every Farey fraction of order max_den, ascending in gamma."""
    return [
        s_of(fr.numerator, fr.denominator, target_rad, start_prec, max_prec)
        for fr in farey_fractions(max_den)
    ]


def rcurve_table(
    alpha_grid,
    max_den: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> list[tuple[Fraction, RArgmax]]:
    """argmax_r on each grid alpha; grid values must be exact in (0, 1]."""
    rows = []
    for alpha in alpha_grid:
        fr = Fraction(alpha)
        rows.append((fr, argmax_r(fr, max_den, target_rad, start_prec, max_prec)))
    return rows
