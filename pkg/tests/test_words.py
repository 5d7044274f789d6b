import random

import pytest

from braceletrank.words import (
    Alphabet,
    bracelet_representative,
    canonical_forms,
    floor_necklace,
    is_necklace,
    is_palindromic_necklace,
    is_prenecklace,
    longest_suffix_prefix_match,
    lyndon_prefix_length,
    min_rotation,
    min_rotation_naive,
    period,
    power,
    reverse_word,
    rotate,
)
from util import all_words, enc, naive_min_rotation, necklace_reps, rotations


def test_alphabet_roundtrip():
    al = Alphabet("ab")
    assert al.k == 2
    assert al.encode("abba") == (0, 1, 1, 0)
    assert al.decode((0, 1, 1, 0)) == "abba"
    with pytest.raises(ValueError):
        al.encode("abc")
    with pytest.raises(ValueError):
        al.encode("")
    with pytest.raises(ValueError):
        Alphabet("aa")


def test_rotate_examples():
    assert rotate(enc("aab"), 1) == enc("aba")
    assert rotate(enc("aab"), 0) == enc("aab")
    assert rotate(enc("bababa"), 1) == enc("ababab")


def test_rotate_composes():
    for n in range(1, 7):
        for w in all_words(n, 3):
            for r1 in range(n):
                for r2 in range(n):
                    assert rotate(rotate(w, r1), r2) == rotate(w, (r1 + r2) % n)


def test_reverse_examples():
    assert reverse_word(enc("aaaba")) == enc("abaaa")
    assert reverse_word(enc("aabc")) == enc("cbaa")
    rng = random.Random(0)
    for _ in range(50):
        w = tuple(rng.randrange(4) for _ in range(rng.randrange(1, 12)))
        assert reverse_word(reverse_word(w)) == w


def test_power_examples():
    assert power(enc("aab"), 3) == enc("aabaabaab")
    assert power(enc("ab"), 1) == enc("ab")
    assert power(enc("ab"), 2) == enc("abab")
    with pytest.raises(ValueError):
        power(enc("ab"), 0)


def test_period_examples():
    assert period(enc("aabaab")) == 3
    assert period(enc("aaaa")) == 1
    assert period(enc("aaab")) == 4


def test_period_is_orbit_size():
    for n in range(1, 8):
        for w in all_words(n, 2):
            assert period(w) == len(set(rotations(w)))


def test_min_rotation_examples():
    assert min_rotation(enc("bababa")) == enc("ababab")
    assert min_rotation(enc("aaaa")) == enc("aaaa")
    assert min_rotation(enc("cbaa")) == enc("aacb")


def test_min_rotation_exhaustive():
    for n in range(1, 11):
        for w in all_words(n, 2):
            assert min_rotation(w) == naive_min_rotation(w) == min_rotation_naive(w)
    for n in range(1, 9):
        for w in all_words(n, 3):
            assert min_rotation(w) == naive_min_rotation(w)


def test_bracelet_representative_examples():
    assert bracelet_representative(enc("cbaa")) == enc("aabc")
    assert bracelet_representative(enc("aaaa")) == enc("aaaa")
    assert bracelet_representative(enc("adb")) == enc("abd")


def test_palindromic_examples():
    assert is_palindromic_necklace(enc("ababab"))
    assert is_palindromic_necklace(enc("aaaa"))
    assert not is_palindromic_necklace(enc("abc"))


def test_palindromic_matches_orbit_membership():
    for n in range(1, 8):
        for w in all_words(n, 3):
            expect = reverse_word(w) in set(rotations(w))
            assert is_palindromic_necklace(w) == expect
            for u in rotations(w):
                assert is_palindromic_necklace(u) == expect


def _is_lyndon(w):
    return all(w < r for r in rotations(w)[1:] if r != w) and len(set(rotations(w))) == len(w)


def test_lyndon_prefix_examples():
    assert lyndon_prefix_length(enc("aabaa")) == 3
    assert lyndon_prefix_length(enc("aaaa")) == 1
    assert lyndon_prefix_length(enc("ab")) == 2


def test_lyndon_prefix_brute():
    for n in range(1, 9):
        for w in all_words(n, 2):
            best = max(l for l in range(1, n + 1) if _is_lyndon(w[:l]))
            assert lyndon_prefix_length(w) == best
    for n in range(1, 6):
        for w in all_words(n, 3):
            best = max(l for l in range(1, n + 1) if _is_lyndon(w[:l]))
            assert lyndon_prefix_length(w) == best


def test_suffix_prefix_match():
    assert longest_suffix_prefix_match(enc("baa"), enc("aab")) == 2
    assert longest_suffix_prefix_match(enc("bb"), enc("aa")) == 0
    # definitional lower bound: anything ending in v[:j] matches at least j
    rng = random.Random(1)
    for _ in range(100):
        v = tuple(rng.randrange(3) for _ in range(rng.randrange(2, 9)))
        j = rng.randrange(1, len(v) + 1)
        head = tuple(rng.randrange(3) for _ in range(rng.randrange(0, 6)))
        assert longest_suffix_prefix_match(head + v[:j], v) >= j


def test_suffix_prefix_match_brute():
    for nv in range(1, 6):
        for v in all_words(nv, 2):
            for nw in range(0, 6):
                for w in all_words(nw, 2):
                    want = max((m for m in range(1, min(nw, nv) + 1)
                                if w[nw - m:] == v[:m]), default=0)
                    assert longest_suffix_prefix_match(w, v) == want


def test_empty_words_rejected():
    with pytest.raises(ValueError):
        rotate((), 1)
    with pytest.raises(ValueError):
        min_rotation(())
    with pytest.raises(ValueError):
        period(())


def test_floor_necklace_exhaustive():
    import bisect

    for k, nmax in ((2, 9), (3, 6), (4, 4)):
        for n in range(1, nmax + 1):
            reps = necklace_reps(n, k)
            for w in all_words(n, k):
                i = bisect.bisect_right(reps, w)
                assert floor_necklace(w, k) == reps[i - 1]


def test_prenecklace_matches_definition():
    # a prenecklace is exactly a word with no suffix below the
    # same-length prefix
    for n in range(1, 9):
        for w in all_words(n, 2):
            assert is_prenecklace(w) == all(w[q:] >= w[: n - q] for q in range(1, n))


def test_is_necklace():
    for n in range(1, 9):
        for w in all_words(n, 2):
            assert is_necklace(w) == (w == naive_min_rotation(w))


def test_canonical_forms():
    cf = canonical_forms(enc("cbaa"))
    assert cf.necklace_rep == enc("aacb")
    assert cf.bracelet_rep == enc("aabc")
    assert cf.period == 4
    assert not cf.is_palindromic
    cf = canonical_forms(enc("bababa"))
    assert cf.necklace_rep == enc("ababab")
    assert cf.period == 2
    assert cf.is_palindromic
