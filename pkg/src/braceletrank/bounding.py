"""Ordered cyclic-subword sets of a pattern word and bounding transitions.

For a pattern v of length n, S(v, l) is the lexicographically sorted,
deduplicated set of cyclic subwords of v of length l.  A word w (|w| = l,
w not itself a subword) is *strictly bounded* by the largest subword
s in S(v, l) with s < w; no subword lies in (s, w].  The tables built here
answer, in O(1) after precomputation, how that bound evolves when a symbol
is appended or prepended to w, which is what every counting DP in this
package runs on.

Bound states used throughout:
  EMPTY        the empty word (length 0)
  BOTTOM       below every subword of its length
  ('e', i)     equals subword i of its length exactly
  ('s', i)     strictly bounded by subword i of its length
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from functools import lru_cache

BOTTOM = -2
EMPTY = -1


class SubwordTable:
    """Sorted cyclic-subword lists plus the pattern's matching automaton.

    Attributes:
        p: the pattern word (tuple of symbol indices)
        n, k: pattern length and alphabet size
        sub[l]: sorted list of distinct cyclic subword values of length l
        pos_id[l][start]: index into sub[l] of the subword starting at start
        prefix_id[l]: index of p[:l] in sub[l]
        delta[j][x]: longest-suffix-matching-prefix automaton of p
        fail, chain, thresh: failure links, border chains, and the minimal
            next symbol that avoids creating a suffix below a prefix of p
    """

    def __init__(self, p, k: int):
        if len(p) == 0:
            raise ValueError("empty pattern")
        if any(x < 0 or x >= k for x in p):
            raise ValueError("symbol index out of range")
        self.p = tuple(p)
        self.k = k
        self.n = n = len(p)
        ext = self.p + self.p
        self.sub = [None] * (n + 1)
        self.pos_id = [None] * (n + 1)
        for l in range(1, n + 1):
            vals = sorted(set(tuple(ext[i:i + l]) for i in range(n)))
            idx = {v: i for i, v in enumerate(vals)}
            self.sub[l] = vals
            self.pos_id[l] = [idx[tuple(ext[i:i + l])] for i in range(n)]
        self.prefix_id = [None] + [self.pos_id[l][0] for l in range(1, n + 1)]

        self.fail = [0] * (n + 1)
        j = 0
        for i in range(1, n):
            while j and p[i] != p[j]:
                j = self.fail[j]
            if p[i] == p[j]:
                j += 1
            self.fail[i + 1] = j
        self.delta = [[0] * k for _ in range(n + 1)]
        for j in range(n + 1):
            for x in range(k):
                if j < n and x == p[j]:
                    self.delta[j][x] = j + 1
                elif j == 0:
                    self.delta[j][x] = 0
                else:
                    self.delta[j][x] = self.delta[self.fail[j]][x]
        self.chain = [[] for _ in range(n + 1)]
        for j in range(1, n + 1):
            c, jj = [], j
            while jj:
                c.append(jj)
                jj = self.fail[jj]
            self.chain[j] = c
        # thresh[j]: appending any x >= thresh[j] keeps every suffix of the
        # grown word at least the p-prefix of its length
        self.thresh = [0] * (n + 1)
        for j in range(n + 1):
            t = p[0]
            for m in self.chain[j]:
                if m < n and p[m] > t:
                    t = p[m]
            self.thresh[j] = t
        self._app_cache = {}
        self._pre_cache = {}

    # ---- value-level lookups ----

    def value(self, l: int, i: int):
        return self.sub[l][i]

    def weak_bound(self, val):
        """State of the word val: exact id if val is a subword, otherwise
        the strict bound (largest subword < val), BOTTOM if none."""
        vals = self.sub[len(val)]
        i = bisect_right(vals, val)
        if i and vals[i - 1] == val:
            return ('e', i - 1)
        return ('s', i - 1) if i else BOTTOM

    def match_state(self, val) -> int:
        """Automaton state after reading val: longest suffix of val that is
        a prefix of the pattern."""
        j = 0
        for x in val:
            j = self.delta[j][x]
        return j

    # ---- bound-state transitions ----

    def append_bound(self, st, x: int, l: int):
        """Bound state of w.x at length l+1, given the state st of w at
        length l.  Correct for every w in the class described by st."""
        key = (st, x, l)
        r = self._app_cache.get(key)
        if r is None:
            r = self._append(st, x, l)
            self._app_cache[key] = r
        return r

    def prepend_bound(self, st, x: int, l: int):
        """Bound state of x.w at length l+1, given the state of w."""
        key = (st, x, l)
        r = self._pre_cache.get(key)
        if r is None:
            r = self._prepend(st, x, l)
            self._pre_cache[key] = r
        return r

    def _append(self, st, x, l):
        if st == EMPTY:
            return self.weak_bound((x,))
        if st == BOTTOM:
            # subwords above w stay above w.x; none is <=
            return BOTTOM
        kind, i = st
        if kind == 'e':
            ext = self.p + self.p
            pos = self.pos_id[l]
            for s0 in range(self.n):
                if pos[s0] == i and ext[s0 + l] == x:
                    return ('e', self.pos_id[l + 1][s0])
            return _strict(self.weak_bound(self.sub[l][i] + (x,)))
        # strictly bounded: the bound of w.x is the largest subword whose
        # l-prefix is <= the bounding value, independently of x
        val = self.sub[l][i]
        vals = self.sub[l + 1]
        lo, hi = 0, len(vals)
        while lo < hi:
            mid = (lo + hi) // 2
            if vals[mid][:l] <= val:
                lo = mid + 1
            else:
                hi = mid
        return ('s', lo - 1) if lo else BOTTOM

    def _prepend(self, st, x, l):
        if st == EMPTY:
            return self.weak_bound((x,))
        if st == BOTTOM:
            # largest subword with first symbol < x
            vals = self.sub[l + 1]
            i = bisect_left(vals, (x,))
            return ('s', i - 1) if i else BOTTOM
        kind, i = st
        val = self.sub[l][i]
        if kind == 'e':
            ext = self.p + self.p
            pos = self.pos_id[l]
            for s0 in range(self.n):
                if pos[s0] == i and ext[(s0 - 1) % self.n] == x:
                    return ('e', self.pos_id[l + 1][(s0 - 1) % self.n])
            return _strict(self.weak_bound((x,) + val))
        return _strict(self.weak_bound((x,) + val))

    def cmp_with_subword(self, st, l: int, sub_id: int) -> int:
        """Trichotomy of a word in state st against subword sub_id at
        length l: -1 below, 0 equal (exact states only), 1 above."""
        if st == BOTTOM:
            return -1
        kind, i = st
        if kind == 'e':
            return -1 if i < sub_id else (0 if i == sub_id else 1)
        return 1 if sub_id <= i else -1


def _strict(st):
    # the transitioned word is never a subword itself; demote exact codes
    if st == BOTTOM:
        return BOTTOM
    return ('s', st[1])


def build_subword_table(v, k: int) -> SubwordTable:
    return SubwordTable(v, k)


@lru_cache(maxsize=64)
def cached_table(p: tuple, k: int) -> SubwordTable:
    """Shared tables: the rank components all query the same patterns."""
    return SubwordTable(p, k)


def bound_of(w, table: SubwordTable, strict: bool = True):
    """Index of the bounding subword of w in S(v, |w|), or None (bottom).

    Strict mode returns the largest subword < w; weak mode the largest <= w.
    """
    vals = table.sub[len(w)]
    w = tuple(w)
    i = bisect_left(vals, w) if strict else bisect_right(vals, w)
    return i - 1 if i else None


def build_XW(table: SubwordTable) -> dict:
    """Prepend transitions: (l, s, x) -> bound index at length l+1.

    For every word w strictly bounded by subword s at length l, XW[(l, s, x)]
    strictly bounds x.w.  s = None is the bottom row; value None is bottom.
    """
    out = {}
    for l in range(1, table.n):
        rows = [None] + list(range(len(table.sub[l])))
        for s in rows:
            st = BOTTOM if s is None else ('s', s)
            for x in range(table.k):
                r = table.prepend_bound(st, x, l)
                out[(l, s, x)] = None if r == BOTTOM else r[1]
    return out


def build_WX(table: SubwordTable) -> dict:
    """Append transitions: (l, s, x) -> bound index at length l+1.

    For every word w strictly bounded by s at length l, WX[(l, s, x)]
    strictly bounds w.x (the result does not depend on x)."""
    out = {}
    for l in range(1, table.n):
        rows = [None] + list(range(len(table.sub[l])))
        for s in rows:
            st = BOTTOM if s is None else ('s', s)
            for x in range(table.k):
                r = table.append_bound(st, x, l)
                out[(l, s, x)] = None if r == BOTTOM else r[1]
    return out


def dump_tables(table: SubwordTable, alphabet=None) -> list:
    """JSON-serializable dump of S(v, l) and the XW/WX rows per length."""
    xw, wx = build_XW(table), build_WX(table)

    def fmt(val):
        if alphabet is not None:
            return alphabet.decode(val)
        return list(val)

    out = []
    for l in range(1, table.n + 1):
        entry = {"l": l, "subwords": [fmt(v) for v in table.sub[l]], "xw": {}, "wx": {}}
        if l < table.n:
            for s in [None] + list(range(len(table.sub[l]))):
                for x in range(table.k):
                    key = f"{'bottom' if s is None else s}:{x if alphabet is None else alphabet.symbols[x]}"
                    entry["xw"][key] = xw[(l, s, x)]
                    entry["wx"][key] = wx[(l, s, x)]
        out.append(entry)
    return out
