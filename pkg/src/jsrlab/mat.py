"""Exact 2x2 integer products along binary words and their spectral data.

The two generators are A0 = [[1,1],[0,1]] and A1 = [[1,0],[1,1]].  The product
of a word is taken left to right: ``word_product(u) = A_{u_1} A_{u_2} ... A_{u_n}``.
Every exported quantity (trace, spectral radius, norms) is invariant under
the opposite orientation; under this one the reversal-commutator sign law is
checkable verbatim (see :func:`commutator_k`).

Spectral radius and Euclidean norm of a word product are elementary functions
of exact integer traces, so their enclosures carry no rounding besides the
final sqrt/ln.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .balls import DEFAULT_PREC, MAX_PREC, RealBall, refine
from .surd import sign_sum2
from .words import check_word


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix [[a, b], [c, d]]; from_word marks genuine word products."""

    a: int
    b: int
    c: int
    d: int
    from_word: bool = False

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            from_word=self.from_word and other.from_word,
        )

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a - other.a,
            self.b - other.b,
            self.c - other.c,
            self.d - other.d,
            from_word=False,
        )

    def trace(self) -> int:
        return self.a + self.d

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Mat2":
        return replace(self, b=self.c, c=self.b)

    def gram_trace(self) -> int:
        """Trace of M^T M: the sum of squared entries."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def diag_min(self) -> int:
        """Minimum modulus of the diagonal; only meaningful on word products."""
        self._require_word("diag_min")
        return min(abs(self.a), abs(self.d))

    def entry_max(self) -> int:
        self._require_word("entry_max")
        return max(self.a, self.b, self.c, self.d)

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def _require_word(self, op: str) -> None:
        if not self.from_word:
            raise ValueError(f"{op} requires a non-negative word-product matrix")


A0 = Mat2(1, 1, 0, 1, from_word=True)
A1 = Mat2(1, 0, 1, 1, from_word=True)
IDENTITY = Mat2(1, 0, 0, 1, from_word=True)
J = Mat2(1, 0, 0, -1)  # A0 A1 - A1 A0


def word_product(u: str) -> Mat2:
    """Left-to-right product of the generators along u (empty word -> identity)."""
    check_word(u)
    a, b, c, d = 1, 0, 0, 1
    for ch in u:
        if ch == "0":  # right-multiply by A0
            b += a
            d += c
        else:  # right-multiply by A1
            a += b
            c += d
    return Mat2(a, b, c, d, from_word=True)


def word_trace(u: str) -> int:
    a, b, c, d = 1, 0, 0, 1
    for ch in u:
        if ch == "0":
            b += a
            d += c
        else:
            a += b
            c += d
    return a + d


def trace(m: Mat2) -> int:
    return m.trace()


def det(m: Mat2) -> int:
    return m.det()


def diag_min(m: Mat2) -> int:
    return m.diag_min()


def entry_max(m: Mat2) -> int:
    return m.entry_max()


def log_rho_of_trace(
    t,
    target_rad=None,
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Enclosure of ln((t + sqrt(t^2-4))/2) for an integer trace t >= 2."""
    t = int(t)
    if t < 2:
        raise ValueError(f"trace must be >= 2, got {t}")
    if t == 2:
        return RealBall.exact_zero(start_prec)

    def compute(prec: int) -> RealBall:
        tb = RealBall.from_int(t, prec)
        disc = RealBall.from_int(t * t - 4, prec)
        return ((tb + disc.sqrt()) / 2).ln()

    if target_rad is None:
        return compute(start_prec)
    return refine(compute, target_rad, start_prec, max_prec)


def log_spectral_radius(
    m: Mat2,
    target_rad=None,
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Enclosure of ln(rho(m)) for a non-negative det-1 word product."""
    if not m.from_word:
        raise ValueError("spectral radius formula requires a word-product matrix")
    if m.det() != 1:
        raise ValueError("determinant must be 1")
    return log_rho_of_trace(m.trace(), target_rad, start_prec, max_prec)


def log_euclidean_norm(
    m: Mat2,
    target_rad=None,
    start_prec: int = DEFAULT_PREC,
    max_prec: int = MAX_PREC,
) -> RealBall:
    """Enclosure of ln |||m||| = (1/2) ln rho(m^T m), via exact integer data.

    m^T m has trace T = sum of squared entries and determinant det(m)^2, so
    rho(m^T m) = (T + sqrt(T^2 - 4 det^2))/2.
    """
    t_gram = m.gram_trace()
    if t_gram == 0:
        raise ValueError("norm of the zero matrix is zero; log undefined")
    dd = m.det()
    disc = t_gram * t_gram - 4 * dd * dd

    def compute(prec: int) -> RealBall:
        tb = RealBall.from_int(t_gram, prec)
        rho_gram = (tb + RealBall.from_int(disc, prec).sqrt()) / 2
        return rho_gram.ln() / 2

    if t_gram == 2 and abs(dd) == 1:
        return RealBall.exact_zero(start_prec)  # orthogonal case: norm 1
    if target_rad is None:
        return compute(start_prec)
    return refine(compute, target_rad, start_prec, max_prec)


def commutator_k(w: str) -> int:
    """The integer k with product(reverse(w)) - product(w) = k * diag(1, -1).

    Under the left-to-right orientation, k > 0 iff w > reverse(w)
    lexicographically (and k = 0 iff w is a palindrome).
    """
    check_word(w)
    if not w:
        raise ValueError("commutator of the empty word is undefined")
    diff = word_product(w[::-1]) - word_product(w)
    if diff.b != 0 or diff.c != 0 or diff.a != -diff.d:
        raise AssertionError(f"reversal difference is not a multiple of J: {diff}")
    return diff.a


def decode_runs(runs: Sequence[int], leading_symbol) -> str:
    sym = str(leading_symbol)
    if sym not in ("0", "1"):
        raise ValueError("leading symbol must be 0 or 1")
    out = []
    for r in runs:
        if r < 1:
            raise ValueError("runs must be >= 1")
        out.append(sym * r)
        sym = "1" if sym == "0" else "0"
    return "".join(out)


def cf_product(runs: Sequence[int], leading_symbol) -> Mat2:
    """Product of a run-length-encoded word via the continuant recurrences.

    With the trailing run made of 0s the product is [[p_m, q_m], [p_{m-1},
    q_{m-1}]] (rows swapped when the word starts with 1s), where p_k, q_k obey
    p_k = a_k p_{k-1} + p_{k-2} over the runs read right to left; a trailing
    1-run is handled by the 0<->1 mirror conjugation.  Equals word_product of
    the decoded word exactly.
    """
    runs = list(runs)
    if not runs:
        raise ValueError("runs must be nonempty")
    if any(r < 1 for r in runs):
        raise ValueError("runs must be >= 1")
    lead = str(leading_symbol)
    if lead not in ("0", "1"):
        raise ValueError("leading symbol must be 0 or 1")
    m_count = len(runs)
    trailing = lead if m_count % 2 == 1 else ("1" if lead == "0" else "0")
    if trailing == "1":
        mirrored = cf_product(runs, "1" if lead == "0" else "0")
        return Mat2(mirrored.d, mirrored.c, mirrored.b, mirrored.a, from_word=True)
    p_prev2, p_prev = 1, 0  # p_{-1}, p_0
    q_prev2, q_prev = 0, 1  # q_{-1}, q_0
    for a_k in reversed(runs):
        p_prev2, p_prev = p_prev, a_k * p_prev + p_prev2
        q_prev2, q_prev = q_prev, a_k * q_prev + q_prev2
    if lead == "0":
        return Mat2(p_prev, q_prev, p_prev2, q_prev2, from_word=True)
    return Mat2(p_prev2, q_prev2, p_prev, q_prev, from_word=True)


def _has_constant_run(u: str, n: int) -> bool:
    return "0" * n in u or "1" * n in u


def rho_norm_chain_check(u: str, n_bound: int) -> bool:
    """Check (1/2N^2)|||A||| <= d(A) <= tr(A)/2 <= rho(A) <= |||A||| exactly.

    A = word_product(u); valid for N >= 2 when neither 0^N nor 1^N occurs in
    u.  The alpha scaling cancels, so only the alpha = 1 product matters.
    All four comparisons are exact integer/surd sign tests.
    """
    check_word(u)
    if not u:
        raise ValueError("empty word")
    if n_bound < 2:
        raise ValueError("N must be >= 2")
    if _has_constant_run(u, n_bound):
        raise ValueError(f"word contains a constant run of length {n_bound}")
    m = word_product(u)
    t = m.trace()
    t_gram = m.gram_trace()
    dd = m.diag_min()

    # (1) |||A||| <= 2 N^2 d(A):  (T + sqrt(T^2-4))/2 <= (2 N^2 d)^2
    rhs = 8 * n_bound**4 * dd * dd - t_gram
    ineq1 = rhs >= 0 and t_gram * t_gram - 4 <= rhs * rhs

    # (2) d(A) <= tr(A)/2
    ineq2 = 2 * dd <= t

    # (3) tr(A)/2 <= rho(A): sqrt(t^2-4) >= 0
    ineq3 = t >= 2

    # (4) rho(A) <= |||A|||: (t^2-2) + t sqrt(t^2-4) <= T + sqrt(T^2-4)
    ineq4 = sign_sum2(t_gram - t * t + 2, -t, t * t - 4, 1, t_gram * t_gram - 4) >= 0

    return ineq1 and ineq2 and ineq3 and ineq4
