"""Rank over necklaces: count necklace representatives below a word.

Necklace representatives of length n are exactly the powers c^(n/e) of
Lyndon words c with e | n, so the rank decomposes over divisors and the
per-divisor terms reduce, by Mobius inversion, to counts of words all of
whose rotations stay at or above a prefix of the query word.  That last
count is the workhorse DP shared with the enclosing-bracelet module.
"""

from __future__ import annotations

from .bounding import EMPTY, SubwordTable, cached_table
from .words import min_rotation, period


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(m: int) -> int:
    if m == 1:
        return 1
    res, q = 1, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            res = -res
        q += 1
    if m > 1:
        res = -res
    return res


def _rotation_dp(table: SubwordTable):
    """Distribution over final (match, bound) states of all words w of
    length |p| whose every suffix is >= the same-length prefix of p and
    whose every rotation is therefore undecided only at the wrap."""
    d, k = table.n, table.k
    states = {(0, EMPTY): 1}
    for t in range(d):
        nxt = {}
        for (j, b), c in states.items():
            for x in range(table.thresh[j], k):
                key = (table.delta[j][x], table.append_bound(b, x, t))
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    return states


def _wrap_ok(table: SubwordTable, j, b, strict: bool) -> bool:
    """Resolve the wrapped rotations of a finished word against p.

    For every border m of the final match state, the rotation starting at
    that border equals p[:m] followed by the word's own prefix; comparing
    the word with the cyclic subword of p starting at position m settles it.
    """
    d = table.n
    for m in table.chain[j]:
        z = table.pos_id[d][m % d]
        r = table.cmp_with_subword(b, d, z)
        if r < 0 or (r == 0 and strict):
            return False
    return True


def count_all_rotations_geq(w, k: int, strict: bool = False) -> int:
    """Number of words u with |u| = |w| such that every rotation of u is
    >= w (or > w when strict)."""
    table = cached_table(tuple(w), k)
    total = 0
    for (j, b), c in _rotation_dp(table).items():
        if _wrap_ok(table, j, b, strict):
            total += c
    return total


def _class_size(p) -> int:
    """Number of words whose smallest rotation equals p (0 if p is not a
    necklace representative)."""
    return period(p) if min_rotation(p) == p else 0


def _count_min_rot_below(v, k: int, d: int) -> int:
    """#{w in Sigma^d : min-rotation(w)^(n/d) < v}, where d | n = |v|.

    The power comparison reduces to the prefix p = v[:d]: any class minimum
    below p qualifies, and the boundary class of p itself qualifies exactly
    when p repeated dips below v.
    """
    n = len(v)
    p = v[:d]
    g = k ** d - count_all_rotations_geq(p, k)
    if p * (n // d) < v:
        g += _class_size(p)
    return g


def count_lyndon_below(w, k: int) -> int:
    """Number of Lyndon words of length |w| strictly smaller than w."""
    e = len(w)
    if e == 0:
        raise ValueError("empty word")
    total = 0
    for d in divisors(e):
        mu = mobius(e // d)
        if mu:
            total += mu * _count_min_rot_below(w, k, d)
    assert total % e == 0
    return total // e


def rank_necklaces(v, k: int) -> int:
    """Number of necklace representatives of length |v| strictly below v."""
    n = len(v)
    if n == 0:
        raise ValueError("empty word")
    if any(x < 0 or x >= k for x in v):
        raise ValueError("symbol index out of range")
    g = {d: _count_min_rot_below(v, k, d) for d in divisors(n)}
    total = 0
    for e in divisors(n):
        acc = sum(mobius(e // d) * g[d] for d in divisors(e))
        assert acc % e == 0
        total += acc // e
    return total
