"""Command-line interface: rank, unrank, count, enumerate, verify, tables.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 enumeration budget exceeded.  All counts print in full decimal.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys

from . import oracle
from .api import count_bracelets, rank_bracelet, unrank_bracelet
from .bounding import SubwordTable, dump_tables
from .enclosing import build_SE, rank_enclosing
from .necklace import rank_necklaces
from .oracle import BudgetExceededError
from .palindromic import pe_layer_counts, po_layer_counts, rank_palindromic
from .words import Alphabet, min_rotation

SETS = ("bracelet", "necklace", "palindromic", "enclosing")

_SET_TO_KIND = {
    "bracelet": "bracelet",
    "necklace": "necklace",
    "palindromic": "palindromic_necklace",
    "enclosing": "enclosing",
}


def _budget(args):
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("BRACELET_BUDGET")
    return int(env) if env else None


def _rank_json(bd, alphabet):
    return {
        "word": alphabet.decode(bd.word),
        "n": bd.n,
        "k": bd.k,
        "rn": str(bd.rn),
        "rp": str(bd.rp),
        "re": str(bd.re),
        "rb": str(bd.rb),
    }


def _cmd_rank(args):
    alphabet = Alphabet(args.alphabet)
    word = alphabet.encode(args.word)
    k = alphabet.k
    if args.use_oracle:
        kind = _SET_TO_KIND[args.set]
        value = oracle.oracle_rank(kind, word, k, _budget(args))
        print(value)
        return 0
    if args.set == "bracelet":
        bd = rank_bracelet(word, k)
        if args.json:
            print(json.dumps(_rank_json(bd, alphabet)))
        elif args.breakdown:
            print(f"rn={bd.rn} rp={bd.rp} re={bd.re} rb={bd.rb}")
        else:
            print(bd.rb)
        return 0
    fn = {"necklace": rank_necklaces, "palindromic": rank_palindromic,
          "enclosing": rank_enclosing}[args.set]
    value = fn(word, k)
    if args.json:
        print(json.dumps({"word": args.word, "n": len(word), "k": k,
                          args.set: str(value)}))
    else:
        print(value)
    return 0


def _cmd_unrank(args):
    alphabet = Alphabet(args.alphabet)
    z = args.index - 1 if args.one_based else args.index
    word = unrank_bracelet(z, args.length, alphabet.k)
    text = alphabet.decode(word)
    if args.json:
        print(json.dumps({"index": args.index, "n": args.length,
                          "k": alphabet.k, "word": text}))
    else:
        print(text)
    return 0


def _cmd_count(args):
    alphabet = Alphabet(args.alphabet)
    k, n = alphabet.k, args.length
    if args.set == "bracelet" and not args.use_oracle:
        print(count_bracelets(n, k))
        return 0
    kind = _SET_TO_KIND[args.set]
    if kind == "enclosing":
        raise ValueError("counting 'enclosing' needs a word; use rank --set enclosing")
    if args.use_oracle:
        print(len(oracle.enumerate_class(kind, n, k, _budget(args))))
        return 0
    if args.set == "necklace":
        print(rank_necklaces(((k - 1),) * n, k) + 1)
    else:
        print(rank_palindromic(((k - 1),) * n, k) + 1)
    return 0


def _cmd_enumerate(args):
    alphabet = Alphabet(args.alphabet)
    kind = _SET_TO_KIND[args.set]
    if kind == "enclosing":
        if not args.word:
            raise ValueError("--set enclosing needs --word")
        word = alphabet.encode(args.word)
        reps = oracle.oracle_enclosing(word, alphabet.k, _budget(args))
    else:
        if args.length is None:
            raise ValueError("--length is required")
        reps = oracle.enumerate_class(kind, args.length, alphabet.k, _budget(args))
    texts = [alphabet.decode(r) for r in reps]
    if args.json:
        print(json.dumps(texts))
    else:
        for t in texts:
            print(t)
    return 0


def _cmd_verify(args):
    """Compare the polynomial ranks against the oracle for every word."""
    alphabet = Alphabet(args.alphabet)
    k, n = alphabet.k, args.length
    budget = _budget(args)
    neck = oracle.enumerate_class("necklace", n, k, budget)
    pal = oracle.enumerate_class("palindromic_necklace", n, k, budget)
    brac = oracle.enumerate_class("bracelet", n, k, budget)
    from bisect import bisect_left

    checked = 0
    for w in itertools.product(range(k), repeat=n):
        bd = rank_bracelet(w, k)
        want = (bisect_left(neck, w), bisect_left(pal, w),
                len(oracle.oracle_enclosing(w, k, budget)), bisect_left(brac, w))
        got = (bd.rn, bd.rp, bd.re, bd.rb)
        if got != want:
            print(f"FAIL at {alphabet.decode(w)}: got rn/rp/re/rb={got}, oracle={want}")
            return 2
        checked += 1
    print(f"PASS ({checked} words, n={n}, k={k})")
    return 0


def _cmd_tables(args):
    alphabet = Alphabet(args.alphabet)
    word = alphabet.encode(args.word)
    k = alphabet.k
    out = {"word": args.word, "tables": dump_tables(SubwordTable(word, k), alphabet)}
    if args.se:
        se = build_SE(word, k)
        out["se"] = [
            {"x": alphabet.symbols[x], "i": i, "j": j, "s": list(s), "count": c}
            for (x, i, j, s), c in sorted(se.items())
        ]
    if args.layers:
        if min_rotation(word) != word:
            raise ValueError("layer dumps require a necklace representative")
        layers = po_layer_counts(word, k) if len(word) % 2 else pe_layer_counts(word, k)
        out["layers"] = [
            {"i": i, "j": j, "s": s, "count": c}
            for (i, j, s), c in sorted(layers.items())
        ]
    print(json.dumps(out))
    return 0


def _parser():
    p = argparse.ArgumentParser(prog="braceletrank",
                                description="Rank and unrank bracelets.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, word=False, length=False, index=False, set_arg=False):
        sp.add_argument("--alphabet", required=True,
                        help="ordered symbols, e.g. 'ab' or 'abcd'")
        if word:
            sp.add_argument("--word", required=True)
        if length:
            sp.add_argument("--length", type=int, required=True)
        if index:
            sp.add_argument("--index", type=int, required=True)
        if set_arg:
            sp.add_argument("--set", choices=SETS, default="bracelet")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--budget", type=int, default=None,
                        help="enumeration budget (default 2^24; env BRACELET_BUDGET)")

    sp = sub.add_parser("rank", help="rank a word within a class")
    common(sp, word=True, set_arg=True)
    sp.add_argument("--breakdown", action="store_true",
                    help="print rn/rp/re/rb for the bracelet set")
    sp.add_argument("--use-oracle", action="store_true",
                    help="rank by brute-force enumeration instead")
    sp.set_defaults(fn=_cmd_rank)

    sp = sub.add_parser("unrank", help="bracelet representative of a rank")
    common(sp, length=True, index=True)
    sp.add_argument("--one-based", action="store_true",
                    help="treat --index as 1-based")
    sp.set_defaults(fn=_cmd_unrank)

    sp = sub.add_parser("count", help="count a class")
    common(sp, length=True, set_arg=True)
    sp.add_argument("--use-oracle", action="store_true")
    sp.set_defaults(fn=_cmd_count)

    sp = sub.add_parser("enumerate", help="list class representatives (oracle)")
    common(sp, set_arg=True)
    sp.add_argument("--length", type=int, help="word length (classes by length)")
    sp.add_argument("--word", help="query word for --set enclosing")
    sp.set_defaults(fn=_cmd_enumerate)

    sp = sub.add_parser("verify", help="oracle-equivalence sweep over all words")
    common(sp, length=True)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("tables", help="dump subword/bounding tables as JSON")
    common(sp, word=True)
    sp.add_argument("--se", action="store_true", help="include suffix-state cells")
    sp.add_argument("--layers", action="store_true", help="include layer counts")
    sp.set_defaults(fn=_cmd_tables)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
