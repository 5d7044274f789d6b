import pytest

from braceletrank.enclosing import build_SE, rank_enclosing
from braceletrank.oracle import brute_se_cells, oracle_enclosing
from braceletrank.words import is_necklace, lyndon_prefix_length
from util import all_words, enc, naive_min_rotation


def test_rank_enclosing_examples():
    assert rank_enclosing(enc("acc"), 4) == 1
    for n in range(1, 8):
        assert rank_enclosing((0,) * n, 2) == 0
    found = oracle_enclosing(enc("aaca"), 4)
    assert enc("aabc") in found
    assert rank_enclosing(enc("aaca"), 4) == len(found)


@pytest.mark.parametrize("k,nmax", [(2, 9), (3, 6), (4, 4)])
def test_rank_enclosing_oracle(k, nmax):
    for n in range(1, nmax + 1):
        for v in all_words(n, k):
            assert rank_enclosing(v, k) == len(oracle_enclosing(v, k))


def test_se_cells_ground_truth_small():
    for n in range(2, 7):
        for v in all_words(n, 2):
            assert build_SE(v, 2) == brute_se_cells(v, 2)


def test_enclosing_reps_share_prefix_and_dip():
    # every enclosing bracelet representative extends a proper prefix of v
    # with a strictly smaller symbol, at a position allowed by the Lyndon
    # prefix of the shared part
    for k, nmax in ((2, 9), (3, 6), (4, 4)):
        for n in range(2, nmax + 1):
            for v in all_words(n, k):
                if not is_necklace(v):
                    continue
                for b in oracle_enclosing(v, k):
                    i = 0
                    while b[i] == v[i]:
                        i += 1
                    assert 1 <= i <= n - 1
                    assert b[i] < v[i]
                    l = lyndon_prefix_length(v[:i])
                    assert b[i] >= v[i - l]


def test_enclosing_bracelets_are_apalindromic():
    for n in range(2, 9):
        for v in all_words(n, 2):
            for b in oracle_enclosing(v, 2):
                assert naive_min_rotation(b[::-1]) != b
