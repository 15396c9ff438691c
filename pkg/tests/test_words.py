"""Word combinatorics: balancedness, mechanical generation, triples."""

from fractions import Fraction
from math import ceil, gcd

import pytest

from jsrlab.words import (
    PeriodicWord,
    SuboptimalTriple,
    WordError,
    canonical_rotation,
    cyclic_shifts,
    enumerate_X,
    fibonacci_word,
    find_suboptimal_triple,
    is_balanced,
    is_palindrome,
    is_power_balanced,
    lex_compare,
    mechanical_periodic,
    one_ratio,
    ones_count,
    reverse,
    standard_pairs,
    standard_words,
)


def all_words(max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for m in range(2**n):
            yield format(m, f"0{n}b")


def balanced_by_definition(u):
    """All pairs of equal-length subwords differ by at most one in ones."""
    n = len(u)
    for ell in range(1, n + 1):
        counts = [u[i : i + ell].count("1") for i in range(n - ell + 1)]
        for i, ci in enumerate(counts):
            for cj in counts[i + 1 :]:
                if abs(ci - cj) > 1:
                    return False
    return True


def test_counts_and_ratio():
    assert ones_count("01001") == 2
    assert one_ratio("01001") == Fraction(2, 5)
    assert ones_count("0000") == 0
    assert one_ratio("0000") == 0
    u6 = fibonacci_word(6)
    assert len(u6) == 8 and ones_count(u6) == 3
    assert one_ratio(u6) == Fraction(3, 8)
    with pytest.raises(WordError):
        one_ratio("")


def test_balanced_examples():
    assert not is_balanced("0011")
    assert is_balanced("1001")
    assert is_balanced("")


def test_power_balanced_examples():
    assert not is_power_balanced("1001")
    assert is_power_balanced("01")
    assert is_power_balanced("00101")
    with pytest.raises(WordError):
        is_power_balanced("")


def test_window_method_matches_definition():
    assert all(is_balanced(u) == balanced_by_definition(u) for u in all_words(10))


def test_cyclic_balance_equivalence_small():
    for u in all_words(10):
        via_shifts = all(is_balanced(s) for s in cyclic_shifts(u))
        assert via_shifts == is_balanced(u + u) == is_balanced(u * 4)


def test_mechanical_examples():
    assert mechanical_periodic(2, 5, 0) == "01010"
    assert mechanical_periodic(0, 1, 0) == "0"
    assert mechanical_periodic(1, 2, 0) in enumerate_X(1, 2)
    assert enumerate_X(1, 2) == {"01", "10"}


def test_mechanical_validation():
    with pytest.raises(WordError):
        mechanical_periodic(2, 4, 0)  # not reduced
    with pytest.raises(WordError):
        mechanical_periodic(3, 2, 0)
    with pytest.raises(WordError):
        mechanical_periodic(1, 3, 3)


def test_mechanical_ones_and_balance():
    for q in range(1, 25):
        for p in range(q + 1):
            if gcd(p, q) != 1:
                continue
            for shift in range(q):
                w = mechanical_periodic(p, q, shift)
                assert w.count("1") == p
                assert is_balanced(w)


def test_enumerate_X_examples():
    assert enumerate_X(2, 5) == {"00101", "01010", "10100", "01001", "10010"}
    assert enumerate_X(0, 1) == {"0"}
    x13 = enumerate_X(1, 3)
    assert len(x13) == 3 and all(w.count("1") == 1 for w in x13)


def test_enumerate_X_cardinality_and_closure():
    for q in range(1, 20):
        for p in range(q + 1):
            if gcd(p, q) != 1:
                continue
            xs = enumerate_X(p, q)
            assert len(xs) == q
            for w in xs:
                assert set(cyclic_shifts(w)) <= xs
                assert is_power_balanced(w)


def test_no_long_constant_runs():
    for q in range(2, 25):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            run = max(ceil(q / p), ceil(q / (q - p))) + 1
            for w in enumerate_X(p, q):
                assert "0" * run not in w and "1" * run not in w


def test_fibonacci_word_examples():
    assert fibonacci_word(1) == "1"
    assert fibonacci_word(2) == "0"
    assert fibonacci_word(3) == "01"
    assert fibonacci_word(5) == "01001"
    with pytest.raises(WordError):
        fibonacci_word(0)


def test_fibonacci_word_lengths_and_prefixes():
    fib = [0, 1]
    for _ in range(20):
        fib.append(fib[-1] + fib[-2])
    for n in range(2, 16):
        w = fibonacci_word(n)
        assert len(w) == fib[n]
        assert w.count("1") == fib[n - 2]
        if n >= 2:
            assert fibonacci_word(n + 1).startswith(w)


def test_fibonacci_word_in_X():
    for n in range(4, 13):
        w = fibonacci_word(n)
        classes = {canonical_rotation(x) for x in enumerate_X(w.count("1"), len(w))}
        assert canonical_rotation(w) in classes


def test_standard_pairs():
    assert standard_pairs(1) == {("0", "1")}
    two = standard_pairs(2)
    assert {("0", "1"), ("01", "1"), ("0", "10")} <= two
    for w in standard_words(18):
        assert is_power_balanced(w)


def test_reverse_palindrome_lex():
    assert reverse("001") == "100"
    assert is_palindrome("")
    assert is_palindrome("0110")
    assert lex_compare("01", "10") == -1
    assert lex_compare("10", "01") == 1
    assert lex_compare("01", "01") == 0
    with pytest.raises(WordError):
        lex_compare("0", "01")


def test_suboptimal_triple_example():
    triple = find_suboptimal_triple("0011")
    assert triple == SuboptimalTriple(a="0", w="01", b="1")
    assert reverse(triple.b) > triple.a and reverse(triple.w) > triple.w


def test_suboptimal_triple_balanced_input():
    assert find_suboptimal_triple("0101") is None


def test_suboptimal_triple_exhaustive():
    for u in all_words(11):
        triple = find_suboptimal_triple(u)
        if is_balanced(u):
            assert triple is None
        else:
            assert triple is not None and triple.is_valid()
            assert (triple.a + triple.w + triple.b) in u


def test_periodic_word_prefixes():
    pw = PeriodicWord("00101")
    assert pw.prefix(7) == "0010100"
    assert pw.ratio() == Fraction(2, 5)
    assert is_balanced(pw.prefix(40))
    with pytest.raises(WordError):
        PeriodicWord("")


def test_word_validation():
    with pytest.raises(WordError):
        is_balanced("012")
    with pytest.raises(WordError):
        ones_count("ab")
