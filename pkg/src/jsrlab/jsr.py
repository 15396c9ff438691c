"""Brute-force certified bounds for the joint spectral radius of {A0, alpha*A1}.

In log scale the two sides of the classical characterization are

    lower(n_max) = max over |u| <= n_max of  s(u) ln(alpha) + ln(rho(A(u)))/|u|
    upper(n)     = inf over m <= n of (1/m) ln max over |u| = m of |||A^(alpha)(u)|||

Alpha enters only through the ones count, so all matrix data is computed once
per word at alpha = 1 and reused: the spectral side keeps, per (length, ones),
the maximal trace; the norm side keeps the maximal Gram trace.  Spectral data
is deduplicated by canonical cyclic rotation; norms are not cyclic-invariant,
so the norm side enumerates every word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .balls import (
    DEFAULT_PREC,
    MAX_PREC,
    RealBall,
    ball_max,
    ball_min,
    refine,
)
from .mat import log_rho_of_trace
from .scurve import IndeterminateComparison, _AlphaView
from .surd import compare_growth
from .words import canonical_rotation, is_power_balanced

AlphaLike = Union[Fraction, int, RealBall]


@dataclass(frozen=True)
class JsrBounds:
    """Log-scale bracket for ln(rho(alpha)); lower_witness attains the lower bound."""

    alpha: RealBall
    lower: Optional[RealBall]
    upper: Optional[RealBall]
    lower_witness: Optional[str]
    depth: int


def _zero_alpha(view: _AlphaView) -> bool:
    return view.exact == 0


class _ZeroView:
    """Stand-in for alpha = 0: only all-zero words contribute."""

    exact = Fraction(0)

    @staticmethod
    def alpha_ball(prec: int) -> RealBall:
        return RealBall.exact_zero(prec)


def _alpha_view(alpha: AlphaLike):
    if not isinstance(alpha, RealBall):
        fr = Fraction(alpha)
        if fr == 0:
            return _ZeroView()
        if not 0 < fr <= 1:
            raise ValueError("alpha must lie in [0, 1]")
    else:
        if alpha.is_exact() and alpha.lower == 0:
            return _ZeroView()
    return _AlphaView(alpha)


@lru_cache(maxsize=64)
def cyclic_class_profiles(length: int) -> dict[tuple[int, int], str]:
    """Map (ones, trace) -> lexicographically least canonical witness word.

    One entry per realized (ones, trace) pair among cyclic classes of the
    given length; trace is the exact word-product trace.  Cached: the table
    is alpha-free, so every alpha reuses it.
    """
    profiles: dict[tuple[int, int], str] = {}
    for m in range(2**length):
        w = format(m, f"0{length}b")
        if w != canonical_rotation(w):
            continue
        a, b, c, d = 1, 0, 0, 1
        for ch in w:
            if ch == "0":
                b += a
                d += c
            else:
                a += b
                c += d
        key = (w.count("1"), a + d)
        cur = profiles.get(key)
        if cur is None or w < cur:
            profiles[key] = w
    return profiles


def _spectral_cells(n_max: int, balanced_only: bool):
    """Per (length, ones): (max trace, witness) over cyclic classes."""
    cells: dict[tuple[int, int], tuple[int, str]] = {}
    for length in range(1, n_max + 1):
        for (ones, trace_val), witness in cyclic_class_profiles(length).items():
            if balanced_only and not is_power_balanced(witness):
                continue
            key = (length, ones)
            cur = cells.get(key)
            if cur is None or trace_val > cur[0] or (trace_val == cur[0] and witness < cur[1]):
                cells[key] = (trace_val, witness)
    return cells


def _cell_value(ones: int, length: int, trace_val: int, view, prec: int) -> RealBall:
    rho_part = log_rho_of_trace(trace_val, None, prec, prec) / length
    if ones == 0:
        return rho_part
    return rho_part + view.ln_alpha(prec) * Fraction(ones, length)


def _compare_cells(cell_a, cell_b, view, start_prec: int, max_prec: int) -> int:
    """Ordered comparison of (ones, length, trace) growth cells.

    Mirrors the objective comparison in scurve: exact surd fallback for exact
    rational alpha, ties within the alpha enclosure's own ambiguity otherwise.
    """
    (k1, m1, t1), (k2, m2, t2) = cell_a, cell_b
    prec = start_prec
    while True:
        va = _cell_value(k1, m1, t1, view, prec)
        vb = _cell_value(k2, m2, t2, view, prec)
        if va.cert_gt(vb):
            return 1
        if vb.cert_gt(va):
            return -1
        if prec >= max_prec:
            break
        prec = min(2 * prec, max_prec)
    if view.exact is not None:
        # at alpha = 0 only ones-free cells reach here, so the alpha term is absent
        alpha_exact = view.exact if view.exact != 0 else Fraction(1)
        return compare_growth(k1, m1, t1, k2, m2, t2, alpha_exact)
    alpha_floor = (Fraction(k1, m1) + Fraction(k2, m2)) * view.ln_alpha(prec).rad
    if va.rad + vb.rad <= 4 * alpha_floor:
        return 0
    raise IndeterminateComparison(
        f"cannot order growth cells {cell_a} and {cell_b} below precision {max_prec}"
    )


def lower_bound(
    alpha: AlphaLike,
    n_max: int,
    balanced_only: bool = False,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> JsrBounds:
    """Best periodic lower bound over words of length <= n_max, with witness.

    Deterministic tie-breaking: shorter witness first, then lexicographic.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    view = _alpha_view(alpha)
    cells = _spectral_cells(n_max, balanced_only)
    if _zero_alpha(view):
        cells = {key: val for key, val in cells.items() if key[1] == 0}
    items = sorted(
        cells.items(), key=lambda item: (item[0][0], item[1][1])
    )  # by (length, witness)
    best_key, (best_trace, best_witness) = items[0]
    for key, (trace_val, witness) in items[1:]:
        a_cell = (key[1], key[0], trace_val)
        b_cell = (best_key[1], best_key[0], best_trace)
        if _compare_cells(a_cell, b_cell, view, start_prec, max_prec) > 0:
            best_key, best_trace, best_witness = key, trace_val, witness

    ones, length = best_key[1], best_key[0]

    def compute(prec: int) -> RealBall:
        return _cell_value(ones, length, best_trace, view, prec)

    value = refine(compute, target_rad, start_prec, max_prec)
    return JsrBounds(
        alpha=view.alpha_ball(start_prec),
        lower=value,
        upper=None,
        lower_witness=best_witness,
        depth=n_max,
    )


def _norm_gram_maxima(length: int) -> dict[int, int]:
    """Per ones count, the maximal Gram trace over all words of this length."""
    items = [(1, 0, 0, 1, 0)]
    for _ in range(length):
        nxt = []
        for a, b, c, d, ones in items:
            nxt.append((a, a + b, c, c + d, ones))
            nxt.append((a + b, b, c + d, d, ones + 1))
        items = nxt
    best: dict[int, int] = {}
    for a, b, c, d, ones in items:
        g = a * a + b * b + c * c + d * d
        if g > best.get(ones, 0):
            best[ones] = g
    return best


def upper_bound(
    alpha: AlphaLike,
    n: int,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Running infimum over m <= n of the normalized max norm: a certified
    upper bound for ln(rho(alpha))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    view = _alpha_view(alpha)
    grams = [_norm_gram_maxima(m) for m in range(1, n + 1)]
    if _zero_alpha(view):
        grams = [{0: g[0]} for g in grams]

    def compute(prec: int) -> RealBall:
        per_m = []
        for m, best in enumerate(grams, start=1):
            vals = []
            for ones, g in best.items():
                norm_part = log_rho_of_trace(g, None, prec, prec) / 2
                if ones:
                    norm_part = norm_part + view.ln_alpha(prec) * ones
                vals.append(norm_part / m)
            per_m.append(ball_max(vals))
        return ball_min(per_m)

    return refine(compute, target_rad, start_prec, max_prec)


def bounds(
    alpha: AlphaLike,
    n_max: int,
    balanced_only: bool = False,
    target_rad=Fraction(1, 10**30),
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> JsrBounds:
    """Certified log-scale bracket lower <= ln(rho(alpha)) <= upper at depth n_max."""
    low = lower_bound(alpha, n_max, balanced_only, target_rad, start_prec, max_prec)
    up = upper_bound(alpha, n_max, target_rad, start_prec, max_prec)
    return JsrBounds(
        alpha=low.alpha,
        lower=low.lower,
        upper=up,
        lower_witness=low.lower_witness,
        depth=n_max,
    )


def extremal_witnesses(
    alpha: AlphaLike,
    n: int,
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> set[str]:
    """Canonical words of length n attaining the maximal normalized growth.

    Exact ties are resolved by the surd comparator, so the returned set is
    complete for exact rational alpha.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    view = _alpha_view(alpha)
    by_cell: dict[tuple[int, int], list[str]] = {}
    for m in range(2**n):
        w = format(m, f"0{n}b")
        if w != canonical_rotation(w):
            continue
        ones = w.count("1")
        if _zero_alpha(view) and ones:
            continue
        a, b, c, d = 1, 0, 0, 1
        for ch in w:
            if ch == "0":
                b += a
                d += c
            else:
                a += b
                c += d
        by_cell.setdefault((ones, a + d), []).append(w)
    cells = sorted(by_cell)
    best = [cells[0]]
    for cell in cells[1:]:
        rel = _compare_cells(
            (cell[0], n, cell[1]), (best[0][0], n, best[0][1]), view, start_prec, max_prec
        )
        if rel > 0:
            best = [cell]
        elif rel == 0:
            best.append(cell)
    out: set[str] = set()
    for cell in best:
        out.update(by_cell[cell])
    return out
