"""Bracelet ranking, unranking and counting: the public facade.

A bracelet is an equivalence class of words under rotation and reflection.
The rank of a word v is the number of bracelet representatives strictly
below v; it splits as rb = (rn + rp + re) / 2 where rn counts necklace
representatives below v, rp palindromic-necklace representatives below v,
and re bracelets enclosing v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enclosing import rank_enclosing
from .necklace import rank_necklaces
from .palindromic import rank_palindromic
from .words import min_rotation


@dataclass(frozen=True)
class RankBreakdown:
    """rb = (rn + rp + re + mirror_adjust) // 2.

    mirror_adjust is 1 exactly when the query word is itself the larger
    necklace representative of an apalindromic bracelet: that bracelet
    contributes one representative below the word but is neither counted
    twice by rn nor once by the strictly-straddling re.
    """

    word: tuple
    n: int
    k: int
    rn: int
    rp: int
    re: int
    rb: int
    mirror_adjust: int = 0


def _validate(word, k):
    word = tuple(word)
    if len(word) == 0:
        raise ValueError("empty word")
    if k < 1:
        raise ValueError("alphabet size must be >= 1")
    if any(not isinstance(x, int) or x < 0 or x >= k for x in word):
        raise ValueError("symbol index out of range for alphabet")
    return word


def rank_bracelet(word, k: int) -> RankBreakdown:
    """Rank of word over all bracelets of its length (0-based)."""
    word = _validate(word, k)
    n = len(word)
    rn = rank_necklaces(word, k)
    rp = rank_palindromic(word, k)
    re = rank_enclosing(word, k)
    adj = 1 if min_rotation(word) == word and min_rotation(word[::-1]) < word else 0
    total = rn + rp + re + adj
    assert total % 2 == 0, "rank components out of parity"
    return RankBreakdown(word, n, k, rn, rp, re, total // 2, adj)


def count_bracelets(n: int, k: int) -> int:
    """Total number of bracelets of length n over k symbols."""
    if n < 1:
        raise ValueError("n >= 1 required")
    top = ((k - 1),) * n
    return rank_bracelet(top, k).rb + 1


def unrank_bracelet(z: int, n: int, k: int) -> tuple:
    """The bracelet representative of rank z (0-based) among bracelets of
    length n, built symbol by symbol with a binary search per position."""
    if n < 1:
        raise ValueError("n >= 1 required")
    total = count_bracelets(n, k)
    if not 0 <= z < total:
        raise ValueError(f"rank {z} out of range [0, {total})")
    prefix = ()
    for i in range(n):
        lo, hi = 0, k - 1
        # largest x with rank(prefix + x + minimal fill) <= z
        while lo < hi:
            mid = (lo + hi + 1) // 2
            w = prefix + (mid,) + (0,) * (n - i - 1)
            if rank_bracelet(w, k).rb <= z:
                lo = mid
            else:
                hi = mid - 1
        prefix += (lo,)
    assert rank_bracelet(prefix, k).rb == z
    return prefix
