"""Named invariant suites: each module's documented properties as runnable
checks.  Used by the CLI ``verify`` subcommand; the pytest suite exercises the
same properties at its own bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd
from typing import Callable, Iterable

from . import alphastar, jsr, mat, scurve, words
from .balls import RealBall, fraction_to_decimal, refine
from .surd import power_trace


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _all_words(max_len: int, min_len: int = 1) -> Iterable[str]:
    for n in range(min_len, max_len + 1):
        for m in range(2**n):
            yield format(m, f"0{n}b")


def _balanced_all_pairs(u: str) -> bool:
    """Direct definition: every pair of equal-length subwords differs by <= 1."""
    n = len(u)
    for ell in range(1, n + 1):
        counts = [u[i : i + ell].count("1") for i in range(n - ell + 1)]
        for i, ci in enumerate(counts):
            for cj in counts[i + 1 :]:
                if abs(ci - cj) > 1:
                    return False
    return True


# ---------------------------------------------------------------------------
# arith
# ---------------------------------------------------------------------------


def suite_arith(seed: int = 0) -> list[CheckResult]:
    out = []
    rng = random.Random(seed)

    ok = True
    for _ in range(200):
        num = rng.randint(1, 10**6)
        den = rng.randint(1, 10**6)
        fr = Fraction(num, den)
        ball = RealBall.from_fraction(fr, 64)
        if not ball.contains(fr):
            ok = False
        sq = ball.sqrt()
        # exact square of any point of sq covers fr
        if not (sq.lower**2 <= fr <= sq.upper**2):
            ok = False
        ln = ball.ln()
        back = ln.exp()
        if not back.contains(fr):
            ok = False
    out.append(CheckResult("arith.containment.random-rationals", ok))

    ok = True
    for value in (Fraction(2), Fraction(10, 3), Fraction(721, 17)):
        prev_rad = None
        for prec in (32, 64, 128, 256, 512):
            rad = RealBall.from_fraction(value, prec).ln().rad
            if prev_rad is not None and rad > prev_rad:
                ok = False
            prev_rad = rad
    out.append(CheckResult("arith.monotone-refinement", ok))

    ok = True
    for _ in range(200):
        fr = Fraction(rng.randint(0, 10**7), rng.randint(10**6, 10**7))
        if fr >= 10:
            continue
        digits = rng.randint(1, 12)
        back = Fraction(fraction_to_decimal(fr, digits))
        if abs(back - fr) >= Fraction(1, 10**digits):
            ok = False
    out.append(CheckResult("arith.decimal-roundtrip", ok))
    return out


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def suite_words(seed: int = 0, exhaustive_len: int = 14) -> list[CheckResult]:
    out = []

    ok = all(
        words.is_balanced(u) == _balanced_all_pairs(u)
        for u in _all_words(min(exhaustive_len, 14))
    )
    out.append(CheckResult(f"words.window-equals-definition.len<={exhaustive_len}", ok))

    ok = True
    for u in _all_words(12):
        via_shifts = all(words.is_balanced(s) for s in words.cyclic_shifts(u))
        via_square = words.is_balanced(u + u)
        via_fourth = words.is_balanced(u * 4)
        if not (via_shifts == via_square == via_fourth == words.is_power_balanced(u)):
            ok = False
            break
    out.append(CheckResult("words.cyclic-balanced-equivalence.len<=12", ok))

    ok = True
    for q in range(1, 31):
        for p in range(0, q + 1):
            if gcd(p, q) != 1:
                continue
            word = words.mechanical_periodic(p, q, 0)
            if word.count("1") != p or not words.is_balanced(word):
                ok = False
            xset = words.enumerate_X(p, q)
            if len(xset) != q:
                ok = False
            if any(set(words.cyclic_shifts(w)) - xset for w in xset):
                ok = False
            if 0 < p < q:
                run = max(ceil(q / p), ceil(q / (q - p))) + 1
                if any("0" * run in w or "1" * run in w for w in xset):
                    ok = False
    out.append(CheckResult("words.mechanical-and-X.q<=30", ok))

    ok = True
    for n in range(4, 15):
        f_n = words.fibonacci_word(n)
        xset = words.enumerate_X(f_n.count("1"), len(f_n))
        if words.canonical_rotation(f_n) not in {words.canonical_rotation(w) for w in xset}:
            ok = False
    out.append(CheckResult("words.fibonacci-in-X.n<=14", ok))

    ok = all(words.is_power_balanced(u) for u in words.standard_words(21))
    out.append(CheckResult("words.standard-words-power-balanced.len<=21", ok))

    ok = True
    for u in _all_words(12):
        triple = words.find_suboptimal_triple(u)
        balanced = words.is_balanced(u)
        if balanced != (triple is None):
            ok = False
            break
        if triple is not None and not (
            triple.is_valid() and (triple.a + triple.w + triple.b) in u
        ):
            ok = False
            break
    out.append(CheckResult("words.suboptimal-triple-iff-unbalanced.len<=12", ok))
    return out


# ---------------------------------------------------------------------------
# mat
# ---------------------------------------------------------------------------


def suite_mat(seed: int = 0, exhaustive_len: int = 14) -> list[CheckResult]:
    out = []
    rng = random.Random(seed)

    ok = True
    for u in _all_words(exhaustive_len):
        m = mat.word_product(u)
        if m.det() != 1 or min(m.entries()) < 0:
            ok = False
            break
        if m.trace() != mat.word_trace(u[::-1]):
            ok = False
            break
    for _ in range(300):
        u = "".join(rng.choice("01") for _ in range(rng.randint(15, 60)))
        m = mat.word_product(u)
        if m.det() != 1 or min(m.entries()) < 0:
            ok = False
    out.append(CheckResult(f"mat.det1-nonneg-trace-reversal.len<={exhaustive_len}", ok))

    ok = True
    for u in _all_words(12):
        t = mat.word_trace(u)
        if any(mat.word_trace(s) != t for s in words.cyclic_shifts(u)):
            ok = False
            break
    out.append(CheckResult("mat.trace-cyclic-invariant.len<=12", ok))

    ok = True
    for u in _all_words(exhaustive_len):
        runs, lead = _runs_of(u)
        if mat.cf_product(runs, lead) != mat.word_product(u):
            ok = False
            break
    out.append(CheckResult(f"mat.cf-product-equals-word-product.len<={exhaustive_len}", ok))

    ok = True
    for w in _all_words(12):
        rev = w[::-1]
        k = mat.commutator_k(w)
        cmp_val = (w > rev) - (w < rev)
        if (k > 0) - (k < 0) != cmp_val:
            ok = False
            break
    out.append(CheckResult("mat.commutator-sign-law.len<=12", ok))

    ok = True
    for _ in range(100):
        u = "".join(rng.choice("01") for _ in range(rng.randint(1, 16)))
        m = mat.word_product(u)
        rho = mat.log_spectral_radius(m)
        nrm = mat.log_euclidean_norm(m)
        if rho.lower > nrm.upper:
            ok = False
    out.append(CheckResult("mat.spectral-radius-below-norm.random", ok))

    ok = True
    for u in _all_words(10):
        if not words.is_balanced(u):
            continue
        run = _max_run(u) + 1
        if run < 2:
            run = 2
        if not mat.rho_norm_chain_check(u, run):
            ok = False
            break
    out.append(CheckResult("mat.rho-norm-chain.balanced-len<=10", ok))
    return out


def _runs_of(u: str):
    runs = []
    i = 0
    while i < len(u):
        j = i
        while j < len(u) and u[j] == u[i]:
            j += 1
        runs.append(j - i)
        i = j
    return runs, u[0]


def _max_run(u: str) -> int:
    runs, _ = _runs_of(u)
    return max(runs)


# ---------------------------------------------------------------------------
# scurve
# ---------------------------------------------------------------------------


def suite_scurve(seed: int = 0) -> list[CheckResult]:
    out = []
    rng = random.Random(seed)
    ln_phi_hi = scurve.s_of(1, 2).value.upper

    ok = True
    for q in range(2, 31):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            if scurve.period_trace(p, q) != scurve.period_trace(q - p, q):
                ok = False
            a = scurve.s_of(p, q)
            b = scurve.s_of(q - p, q)
            if not a.value.overlaps(b.value):
                ok = False
            if a.value.lower < 0 or a.value.lower > ln_phi_hi:
                ok = False
    out.append(CheckResult("scurve.symmetry-and-bounds.q<=30", ok))

    ok = True
    fareys = scurve.farey_fractions(30)
    for left, right in zip(fareys, fareys[1:]):
        midpoint = (left + right) / 2
        sl = scurve.s_of(left.numerator, left.denominator).value
        sr = scurve.s_of(right.numerator, right.denominator).value
        sm = scurve.s_of(midpoint.numerator, midpoint.denominator).value
        mean_upper = (sl.upper + sr.upper) / 2
        if sm.upper < mean_upper - (sl.rad + sr.rad + sm.rad):
            ok = False
    out.append(CheckResult("scurve.midpoint-concavity.farey-30", ok))

    ok = True
    for n in range(1, 31):
        point = scurve.s_of(1, n + 1)
        if point.trace != n + 2:
            ok = False
        envelope = refine(
            lambda prec: RealBall.from_int(n + 2, prec).ln() / (n + 1),
            Fraction(1, 10**30),
        )
        if point.value.lower > envelope.upper:
            ok = False
    out.append(CheckResult("scurve.upper-envelope.S(1/n)", ok))

    ok = True
    for q in range(1, 11):
        for p in range(0, q + 1):
            best_trace = max(
                mat.word_trace(w)
                for w in _words_with_ones(q, p)
            )
            g = gcd(p, q) if p else q
            reduced_t = scurve.period_trace(p // g, q // g)
            if best_trace != power_trace(reduced_t, g):
                ok = False
    out.append(CheckResult("scurve.maximizer-matches-S.q<=10", ok))

    ok = True
    for _ in range(8):
        alpha = Fraction(rng.randint(40, 100), 100)
        max_den = rng.randint(5, 60)
        if scurve.argmax_r(alpha, max_den).best != scurve.sweep_argmax(alpha, max_den):
            ok = False
    out.append(CheckResult("scurve.argmax-equals-sweep.random", ok))
    return out


def _words_with_ones(length: int, ones: int):
    for m in range(2**length):
        w = format(m, f"0{length}b")
        if w.count("1") == ones:
            yield w


# ---------------------------------------------------------------------------
# jsr
# ---------------------------------------------------------------------------


def suite_jsr(seed: int = 0) -> list[CheckResult]:
    out = []

    ok = True
    for alpha in (Fraction(1), Fraction(3, 4), Fraction(1, 2), Fraction(1, 5)):
        res = jsr.bounds(alpha, 8)
        if res.lower.lower > res.upper.upper:
            ok = False
    out.append(CheckResult("jsr.lower-below-upper.grid", ok))

    low = jsr.lower_bound(1, 2, target_rad=Fraction(1, 10**32)).lower
    up = jsr.upper_bound(1, 1, target_rad=Fraction(1, 10**32))
    phi_ln = refine(
        lambda prec: ((RealBall.from_int(1, prec) + RealBall.from_int(5, prec).sqrt()) / 2).ln(),
        Fraction(1, 10**35),
    )
    ok = (
        low.contains(phi_ln.mid) or low.overlaps(phi_ln)
    ) and up.overlaps(phi_ln) and low.overlaps(up)
    out.append(CheckResult("jsr.rho1-certified-at-depth-1-2", ok))

    ok = True
    for num in (1, 2, 3):
        alpha = Fraction(num, 4)
        for n_max in range(1, 9):
            plain = jsr.lower_bound(alpha, n_max)
            balanced = jsr.lower_bound(alpha, n_max, balanced_only=True)
            if not plain.lower.overlaps(balanced.lower):
                ok = False
            if plain.lower_witness != balanced.lower_witness:
                ok = False
    for alpha in (Fraction(1), Fraction(3, 4), Fraction(2, 5)):
        plain = jsr.lower_bound(alpha, 12)
        balanced = jsr.lower_bound(alpha, 12, balanced_only=True)
        if plain.lower_witness != balanced.lower_witness:
            ok = False
    out.append(CheckResult("jsr.balanced-restriction-harmless.n<=12", ok))

    ok = True
    for alpha in (Fraction(1), Fraction(7, 10)):
        prev = None
        for n_max in range(1, 9):
            cur = jsr.lower_bound(alpha, n_max).lower
            if prev is not None and cur.upper < prev.lower - Fraction(1, 10**25):
                ok = False
            prev = cur
        prev = None
        for n in range(1, 9):
            cur = jsr.upper_bound(alpha, n)
            if prev is not None and cur.lower > prev.upper + Fraction(1, 10**25):
                ok = False
            prev = cur
    out.append(CheckResult("jsr.bound-monotonicity", ok))

    ok = True
    for alpha in (Fraction(1), Fraction(9, 10), Fraction(3, 5)):
        low = scurve.rho_lower(alpha, 12).ln()
        up = jsr.upper_bound(alpha, 10)
        if low.lower > up.upper:
            ok = False
    out.append(CheckResult("jsr.scurve-lower-consistent", ok))
    return out


# ---------------------------------------------------------------------------
# alphastar
# ---------------------------------------------------------------------------


def suite_alphastar(seed: int = 0, tau_depth: int = 40) -> list[CheckResult]:
    out = []
    ts = alphastar.tau(tau_depth)
    ok = list(ts.values[:8]) == [1, 2, 2, 3, 4, 10, 37, 366]
    for n in range(1, tau_depth + 1):
        if alphastar.b_matrix(n).trace() != ts[n]:
            ok = False
            break
    out.append(CheckResult(f"alphastar.tau-equals-trace.n<={tau_depth}", ok))

    ok = all(
        alphastar.partial_product(n) == alphastar.alpha_N(n) for n in range(1, 15)
    )
    out.append(CheckResult("alphastar.telescoping.n<=14", ok))

    ok = True
    for n in range(1, 15):
        a_n = alphastar.alpha_N(n)
        if a_n <= 0:
            ok = False
        if n % 2 == 1 and n >= 3 and a_n >= 1:
            ok = False
    out.append(CheckResult("alphastar.approximant-signs", ok))

    ok = True
    for n in range(1, 21):
        if alphastar.b_matrix(n).trace() != mat.word_trace(words.fibonacci_word(n)):
            ok = False
            break
    out.append(CheckResult("alphastar.fibonacci-word-bridge.n<=20", ok))

    ok = True
    for n in range(1, 31):
        if alphastar.b_matrix(n).det() != 1:
            ok = False
        if ts[n] > 2 ** alphastar.fibonacci(n):
            ok = False
    for n in range(3, 13):
        # |ln tau_n - ln rho(B_n)| <= rho(B_n)^{-2}, certified with balls
        t = ts[n]
        lt = refine(lambda prec, t=t: RealBall.from_int(t, prec).ln(), Fraction(1, 10**40))
        lr = mat.log_rho_of_trace(t, Fraction(1, 10**40))
        diff = lt - lr
        bound = (lr * (-2)).exp()
        if diff.lower < -bound.upper or diff.upper > bound.upper + Fraction(1, 10**35):
            ok = False
    out.append(CheckResult("alphastar.tau-vs-rho.n<=30", ok))

    ok = True
    for n in (1, 2, 5, 9):
        slope = alphastar.slope_estimate(n)
        a_n = alphastar.alpha_N(n)
        neg_ln = refine(
            lambda prec, a=a_n: -RealBall.from_fraction(a, prec).ln(),
            Fraction(1, 10**30),
        )
        if not slope.overlaps(neg_ln):
            ok = False
    out.append(CheckResult("alphastar.slope-equals-neg-log-alpha", ok))

    ok = alphastar.error_bound_exponent(13) <= -62
    e_prev = None
    for n in range(3, 16):
        e_n = alphastar.error_bound_exponent(n)
        if e_prev is not None and e_n >= e_prev:
            ok = False
        e_prev = e_n
    out.append(CheckResult("alphastar.error-bound-strictly-improving", ok))
    return out


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "arith": suite_arith,
    "words": suite_words,
    "mat": suite_mat,
    "scurve": suite_scurve,
    "jsr": suite_jsr,
    "alphastar": suite_alphastar,
}


def run_suites(names, seed: int = 0) -> list[CheckResult]:
    results: list[CheckResult] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; known: {sorted(SUITES)} or 'all'")
        results.extend(SUITES[name](seed=seed))
    return results
