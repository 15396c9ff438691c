"""Acceptance criteria, one test per criterion, printing one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the criterion lines.
"""

import random
from fractions import Fraction
from math import gcd

from jsrlab.alphastar import (
    alpha_N,
    alpha_star,
    b_matrix,
    error_bound_exponent,
    partial_product,
    tau,
)
from jsrlab.balls import RealBall, refine
from jsrlab.cli import main
from jsrlab.jsr import lower_bound, upper_bound
from jsrlab.mat import commutator_k, rho_norm_chain_check, word_trace
from jsrlab.scurve import (
    argmax_r,
    farey_fractions,
    period_trace,
    rcurve_table,
    s_of,
    scurve_table,
    sweep_argmax,
)
from jsrlab.surd import power_trace
from jsrlab.words import (
    canonical_rotation,
    cyclic_shifts,
    enumerate_X,
    find_suboptimal_triple,
    is_balanced,
    is_power_balanced,
)

ABSTRACT_60 = "0.749326546330367557943961948091344672091327370236064317358024"


def report(number: int, description: str, ok: bool) -> bool:
    print(f"ACCEPTANCE {number:02d} {'PASS' if ok else 'FAIL'} - {description}")
    return ok


def all_words(max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for m in range(2**n):
            yield format(m, f"0{n}b")


def ln_phi_reference(target=Fraction(1, 10**45)):
    return refine(
        lambda p: ((RealBall.from_int(1, p) + RealBall.from_int(5, p).sqrt()) / 2).ln(),
        target,
    )


def test_criterion_01_alpha_star_digits(capsys):
    code = main(["alphastar", "--digits", "60"])
    out = capsys.readouterr().out.strip()
    cert = alpha_star(60)
    ok = (
        code == 0
        and out == ABSTRACT_60
        and cert.digits == ABSTRACT_60
        and cert.n_used <= 14
        and cert.error_exponent <= -62
    )
    assert report(1, "alphastar --digits 60 reproduces the reference value", ok)


def test_criterion_02_error_bound():
    ok = error_bound_exponent(13) <= -62
    assert report(2, "error bound at N=13 certifies |alpha_*-alpha_13| < 1e-62", ok)


def test_criterion_03_tau_trace_oracle():
    ts = tau(40)
    ok = ts.values[:8] == [1, 2, 2, 3, 4, 10, 37, 366]
    for n in range(1, 41):
        if b_matrix(n).trace() != ts[n]:
            ok = False
            break
    assert report(3, "tau_n equals tr(B_n) exactly for n <= 40", ok)


def test_criterion_04_telescoping():
    ok = all(partial_product(n) == alpha_N(n) for n in range(1, 21))
    assert report(4, "partial products telescope to alpha_N exactly for N <= 20", ok)


def test_criterion_05_rho_one_certified():
    tight = Fraction(1, 10**32)
    low = lower_bound(Fraction(1), 2, target_rad=tight).lower
    up = upper_bound(Fraction(1), 1, target_rad=tight)
    ref = ln_phi_reference()
    ok = (
        low.rad < Fraction(1, 10**30)
        and up.rad < Fraction(1, 10**30)
        and low.overlaps(ref)
        and up.overlaps(ref)
        and low.overlaps(up)
        and up.upper - low.lower < Fraction(1, 10**29)
    )
    assert report(5, "rho(1) bracketed at depth (1,2) within 1e-29", ok)


def test_criterion_06_s_landmarks():
    tight = Fraction(1, 10**35)
    ok = True

    half = s_of(1, 2, tight)
    ok &= half.value.overlaps(ln_phi_reference())

    third = s_of(1, 3, tight)
    ref_third = refine(
        lambda p: (RealBall.from_int(2, p) + RealBall.from_int(3, p).sqrt()).ln() / 3,
        Fraction(1, 10**40),
    )
    ok &= third.value.overlaps(ref_third)

    zero = s_of(0, 1)
    ok &= zero.value.is_exact() and zero.value.mid == 0

    for q in range(2, 31):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            a, b = s_of(p, q), s_of(q - p, q)
            if a.trace != b.trace or not a.value.overlaps(b.value):
                ok = False

    fareys = farey_fractions(30)
    for left, right in zip(fareys, fareys[1:]):
        mid = (left + right) / 2
        sl = s_of(left.numerator, left.denominator).value
        sr = s_of(right.numerator, right.denominator).value
        sm = s_of(mid.numerator, mid.denominator).value
        if sm.upper < (sl.upper + sr.upper) / 2 - (sl.rad + sr.rad + sm.rad):
            ok = False

    assert report(6, "S landmarks, symmetry (q<=30), and Farey-30 concavity", ok)


def test_criterion_07_X_two_fifths():
    ok = enumerate_X(2, 5) == {"00101", "01010", "10100", "01001", "10010"}
    assert report(7, "X_{2/5} is exactly the five expected periods", ok)


def test_criterion_08_balancedness_equivalences():
    def balanced_by_definition(u):
        n = len(u)
        for ell in range(1, n + 1):
            counts = [u[i : i + ell].count("1") for i in range(n - ell + 1)]
            for i, ci in enumerate(counts):
                for cj in counts[i + 1 :]:
                    if abs(ci - cj) > 1:
                        return False
        return True

    ok = is_balanced("1001") and not is_power_balanced("1001")
    for u in all_words(12):
        flat = is_balanced(u)
        if flat != balanced_by_definition(u):
            ok = False
            break
        shifts_ok = all(is_balanced(s) for s in cyclic_shifts(u))
        if not (shifts_ok == is_balanced(u + u) == is_balanced(u * 4)):
            ok = False
            break
        if (find_suboptimal_triple(u) is None) != flat:
            ok = False
            break
    assert report(8, "balancedness equivalences exhaustive for |u| <= 12", ok)


def test_criterion_09_spectral_maximizers_balanced():
    ok = True
    for q in range(1, 11):
        for p in range(q + 1):
            words_pq = [w for w in all_words(q, q) if w.count("1") == p]
            traces = {w: word_trace(w) for w in words_pq}
            best = max(traces.values())
            maximizers = [w for w, t in traces.items() if t == best]
            if not all(is_power_balanced(w) for w in maximizers):
                ok = False
            g = gcd(p, q) if p else q
            if best != power_trace(period_trace(p // g, q // g), g):
                ok = False
            # ball version: ln(best rho) overlaps q * S(p/q)
            from jsrlab.mat import log_rho_of_trace

            lhs = log_rho_of_trace(best, Fraction(1, 10**30))
            rhs = s_of(p // g, q // g).value * q if p else RealBall.exact_zero()
            if not lhs.overlaps(rhs):
                ok = False
    assert report(9, "exhaustive spectral maximizers are power-balanced and match S", ok)


def test_criterion_10_plateau():
    ok = (
        argmax_r(Fraction(81, 100), 50).best == Fraction(1, 2)
        and argmax_r(Fraction(9, 10), 50).best == Fraction(1, 2)
        and argmax_r(Fraction(1), 50).best == Fraction(1, 2)
        and argmax_r(Fraction(7, 10), 50).best != Fraction(1, 2)
    )
    assert report(10, "optimal ratio plateau: 1/2 on {0.81, 0.9, 1} but not at 0.7", ok)


def test_criterion_11_convergent_tracking():
    digits = Fraction(ABSTRACT_60)
    wiggle = Fraction(1, 10**60)
    lo = RealBall.from_fraction(digits - wiggle, 256)
    hi = RealBall.from_fraction(digits + wiggle, 256)
    alpha = RealBall(lo.lo, hi.hi, 256)

    res = argmax_r(alpha, 144)
    golden = refine(
        lambda p: (RealBall.from_int(3, p) - RealBall.from_int(5, p).sqrt()) / 2,
        Fraction(1, 10**40),
    )
    ok = abs(res.best - golden.mid) < Fraction(1, 100)
    ok &= res.best == sweep_argmax(alpha, 144)
    assert report(11, "argmax at alpha_* (Q=144) tracks the golden ratio; sweep agrees", ok)


def test_criterion_12_reversal_commutator_law():
    ok = True
    for w in all_words(12):
        rev = w[::-1]
        k = commutator_k(w)  # raises if the difference is not a multiple of J
        if word_trace(w) != word_trace(rev):
            ok = False
            break
        if ((k > 0) != (w > rev)) or ((k < 0) != (w < rev)) or ((k == 0) != (w == rev)):
            ok = False
            break
    assert report(12, "reversal difference is k*J with the sign law, |w| <= 12", ok)


def test_criterion_13_rho_norm_chain():
    def max_run(u):
        best = cur = 1
        for a, b in zip(u, u[1:]):
            cur = cur + 1 if a == b else 1
            best = max(best, cur)
        return best

    ok = True
    for u in all_words(10):
        if not is_balanced(u):
            continue
        if not rho_norm_chain_check(u, max(max_run(u) + 1, 2)):
            ok = False
    rng = random.Random(2026)
    for _ in range(10**4):
        u = "".join(rng.choice("01") for _ in range(rng.randint(1, 40)))
        if not rho_norm_chain_check(u, max(max_run(u) + 1, 2)):
            ok = False
    assert report(13, "rho-norm chain holds on balanced <=10 and 1e4 random words", ok)


def test_figure_data_emission(tmp_path):
    """Addendum: the two figure CSVs exist and satisfy their invariants."""
    s_rows = scurve_table(60, Fraction(1, 10**25))
    s_path = tmp_path / "scurve.csv"
    with open(s_path, "w") as fh:
        fh.write("gamma_num,gamma_den,s_mid,s_rad\n")
        for row in s_rows:
            fh.write(
                f"{row.gamma.numerator},{row.gamma.denominator},"
                f"{float(row.value.mid)!r},{float(row.value.rad)!r}\n"
            )
    gammas = [row.gamma for row in s_rows]
    top = ln_phi_reference()
    ok = gammas == sorted(gammas) and len(gammas) == len(farey_fractions(60))
    ok &= all(row.value.lower <= top.upper and row.value.upper >= 0 for row in s_rows)

    grid = [Fraction(1, 100) + Fraction(99, 100) * Fraction(k, 199) for k in range(200)]
    r_rows = rcurve_table(grid, 80, Fraction(1, 10**25))
    r_path = tmp_path / "rcurve.csv"
    with open(r_path, "w") as fh:
        fh.write("alpha_num,alpha_den,r_num,r_den,bracket_lo,bracket_hi\n")
        for alpha, res in r_rows:
            lo, hi = res.bracket
            fh.write(
                f"{alpha.numerator},{alpha.denominator},"
                f"{res.best.numerator},{res.best.denominator},{lo},{hi}\n"
            )
    bests = [res.best for _, res in r_rows]
    ok &= all(a <= b for a, b in zip(bests, bests[1:]))
    ok &= all(Fraction(0) <= b <= Fraction(1, 2) for b in bests)
    assert report(14, "figure CSVs emitted with monotonicity and bound invariants", ok)
