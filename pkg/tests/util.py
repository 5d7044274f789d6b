"""Tiny independent helpers for the test suite.

These deliberately re-derive everything by direct enumeration so tests do
not lean on the code under test.
"""

import itertools

ABC = "abcd"


def enc(text, alphabet=ABC):
    return tuple(alphabet.index(c) for c in text)


def dec(word, alphabet=ABC):
    return "".join(alphabet[x] for x in word)


def all_words(n, k):
    return itertools.product(range(k), repeat=n)


def rotations(w):
    return [w[i:] + w[:i] for i in range(len(w))]


def naive_min_rotation(w):
    return min(rotations(w))


def necklace_reps(n, k):
    return sorted(w for w in all_words(n, k) if w == naive_min_rotation(w))


def palindromic_reps(n, k):
    return [w for w in necklace_reps(n, k)
            if naive_min_rotation(w[::-1]) == w]


def bracelet_reps(n, k):
    return sorted(w for w in all_words(n, k)
                  if w == min(naive_min_rotation(w), naive_min_rotation(w[::-1])))
