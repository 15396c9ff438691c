"""Finite binary words: balancedness, mechanical words, standard and Fibonacci
words, and the suboptimal-triple extraction used by the trace-swap argument.

Words are plain Python strings over the alphabet {'0', '1'}; the empty word is
allowed wherever it makes sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class WordError(ValueError):
    pass


def check_word(u: str) -> str:
    if not isinstance(u, str) or u.strip("01"):
        raise WordError(f"not a binary word: {u!r}")
    return u


def ones_count(u: str) -> int:
    return check_word(u).count("1")


def one_ratio(u: str) -> Fraction:
    """1-ratio |u|_1 / |u| of a nonempty word, in lowest terms."""
    check_word(u)
    if not u:
        raise WordError("1-ratio of the empty word is undefined")
    return Fraction(u.count("1"), len(u))


def reverse(u: str) -> str:
    return check_word(u)[::-1]


def is_palindrome(u: str) -> bool:
    check_word(u)
    return u == u[::-1]


def lex_compare(u: str, v: str) -> int:
    """-1, 0 or 1; defined only for words of equal length."""
    check_word(u)
    check_word(v)
    if len(u) != len(v):
        raise WordError("lexicographic comparison needs equal lengths")
    return (u > v) - (u < v)


def cyclic_shifts(u: str) -> list[str]:
    check_word(u)
    return [u[i:] + u[:i] for i in range(len(u))] or [u]


def canonical_rotation(u: str) -> str:
    """Least cyclic rotation; canonical representative of the cyclic class."""
    return min(cyclic_shifts(u))


def is_balanced(u: str) -> bool:
    """Sliding-window balancedness: per window length, max minus min ones <= 1.

    Equivalent to the all-pairs subword definition; O(n^2).
    """
    check_word(u)
    n = len(u)
    bits = [1 if ch == "1" else 0 for ch in u]
    prefix = [0]
    for x in bits:
        prefix.append(prefix[-1] + x)
    for ell in range(2, n):
        lo = hi = prefix[ell]
        for i in range(1, n - ell + 1):
            s = prefix[i + ell] - prefix[i]
            if s < lo:
                lo = s
            elif s > hi:
                hi = s
            if hi - lo > 1:
                return False
    return True


def is_power_balanced(u: str) -> bool:
    """True iff u^2 is balanced, equivalently iff u^infinity is balanced."""
    check_word(u)
    if not u:
        raise WordError("power-balancedness of the empty word is undefined")
    return is_balanced(u + u)


def mechanical_periodic(p: int, q: int, shift: int = 0) -> str:
    """Length-q period of the lower mechanical word with slope p/q and shift.

    Bit n is floor((n+shift+1)p/q) - floor((n+shift)p/q) for n = 1..q; the
    result has exactly p ones.
    """
    if q < 1 or not 0 <= p <= q or gcd(p, q) != 1:
        raise WordError(f"need 0 <= p <= q, q >= 1, gcd(p, q) = 1; got p={p} q={q}")
    if not 0 <= shift < q:
        raise WordError(f"shift must satisfy 0 <= shift < q; got {shift}")
    return "".join(
        str((n + shift + 1) * p // q - (n + shift) * p // q) for n in range(1, q + 1)
    )


def enumerate_X(p: int, q: int) -> set[str]:
    """The q periods of the recurrent balanced words with 1-ratio p/q.

    Returned as the set of cyclic shifts of the shift-0 mechanical word.
    """
    base = mechanical_periodic(p, q, 0)
    return set(cyclic_shifts(base))


def fibonacci_word(n: int) -> str:
    """u_(1)='1', u_(2)='0', u_(n+1) = u_(n) u_(n-1)."""
    if n < 1:
        raise WordError("fibonacci_word is defined for n >= 1")
    if n == 1:
        return "1"
    prev, cur = "1", "0"
    for _ in range(n - 2):
        prev, cur = cur, cur + prev
    return cur


def standard_pairs(max_len: int) -> set[tuple[str, str]]:
    """Closure of (0,1) under (u,v)->(uv,v) and (u,v)->(u,vu), components <= max_len."""
    if max_len < 1:
        raise WordError("max_len must be >= 1")
    seen: set[tuple[str, str]] = set()
    stack = [("0", "1")]
    while stack:
        pair = stack.pop()
        u, v = pair
        if len(u) > max_len or len(v) > max_len or pair in seen:
            continue
        seen.add(pair)
        stack.append((u + v, v))
        stack.append((u, v + u))
    return seen


def standard_words(max_len: int) -> set[str]:
    out: set[str] = set()
    for u, v in standard_pairs(max_len):
        out.add(u)
        out.add(v)
    return out


@dataclass(frozen=True)
class PeriodicWord:
    """Periodic infinite word period^infinity, materialised by finite prefixes."""

    period: str

    def __post_init__(self):
        check_word(self.period)
        if not self.period:
            raise WordError("period must be nonempty")

    def prefix(self, n: int) -> str:
        reps = -(-n // len(self.period))
        return (self.period * reps)[:n]

    def ratio(self) -> Fraction:
        return one_ratio(self.period)


@dataclass(frozen=True)
class SuboptimalTriple:
    """Words (a, w, b), |a| = |b|, whose middle reversal strictly bumps traces."""

    a: str
    w: str
    b: str

    def is_valid(self) -> bool:
        if len(self.a) != len(self.b) or not self.a or not self.w:
            return False
        ra, rb, rw = self.a[::-1], self.b[::-1], self.w[::-1]
        first = ra > self.b and self.w > rw
        second = rb > self.a and rw > self.w
        return first or second


def _minimal_violation(u: str):
    """Smallest window length where ones counts spread by 2, with the leftmost
    extreme windows; None if u is balanced."""
    n = len(u)
    bits = [1 if ch == "1" else 0 for ch in u]
    prefix = [0]
    for x in bits:
        prefix.append(prefix[-1] + x)
    for ell in range(2, n):
        counts = [prefix[i + ell] - prefix[i] for i in range(n - ell + 1)]
        if max(counts) - min(counts) >= 2:
            hi = counts.index(max(counts))
            lo = counts.index(min(counts))
            return ell, u[hi : hi + ell], u[lo : lo + ell]
    return None


def find_suboptimal_triple(u: str):
    """Extract a suboptimal triple (a, w, b) with awb a subword of u.

    Returns None exactly when u is balanced.  At the minimal violating window
    length the extreme windows are 1p1 and 0p0 for a common palindrome p; a
    non-overlapping occurrence pair always exists, and the triple is read off
    as (0p, 0v1, p1) or (1p, 1v0, p0) depending on which block comes first.
    Ties are broken by smallest violating length, then leftmost occurrences.
    """
    check_word(u)
    hit = _minimal_violation(u)
    if hit is None:
        return None
    ell, hi_word, lo_word = hit
    p = hi_word[1:-1]
    if (
        hi_word[0] != "1"
        or hi_word[-1] != "1"
        or lo_word[0] != "0"
        or lo_word[-1] != "0"
        or lo_word[1:-1] != p
        or p != p[::-1]
    ):
        raise AssertionError(f"violating pair not of palindromic form: {hit}")
    zero_occ = [i for i in range(len(u) - ell + 1) if u[i : i + ell] == lo_word]
    one_occ = [i for i in range(len(u) - ell + 1) if u[i : i + ell] == hi_word]
    best = None
    for i in zero_occ:
        for j in one_occ:
            if i + ell <= j:
                cand = (i, j, True)  # 0p0 first
            elif j + ell <= i:
                cand = (j, i, False)  # 1p1 first
            else:
                continue
            if best is None or cand[:2] < best[:2]:
                best = cand
    if best is None:
        raise AssertionError("no non-overlapping occurrence pair found")
    i, j, zero_first = best
    mid = u[i + ell : j]
    if zero_first:
        triple = SuboptimalTriple(a="0" + p, w="0" + mid + "1", b=p + "1")
    else:
        triple = SuboptimalTriple(a="1" + p, w="1" + mid + "0", b=p + "0")
    if not triple.is_valid():
        raise AssertionError(f"constructed triple is invalid: {triple}")
    return triple
