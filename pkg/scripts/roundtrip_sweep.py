#!/usr/bin/env python3
"""Exhaustive inverse-after-forward sweep for the correspondences on small alphabets.

    python3 scripts/roundtrip_sweep.py --max-m 2 --max-n 2 --q 2 --cols 3 --word-length 4
"""
import argparse
import itertools
import sys
import time

from ospkit.alphabet import A, ASTAR, BURGE, DUAL_BURGE, AlphabetParams, enumerate_arrays
from ospkit.correspondences import (
    burge_forward,
    burge_inverse,
    dual_burge_forward,
    dual_burge_inverse,
    dual_spo_forward,
    dual_spo_inverse,
    spo_forward,
    spo_inverse,
    updown_to_word,
    word_to_updown,
)


def sweep(items, forward, inverse):
    total = bad = 0
    images = set()
    for x in items:
        y = forward(x)
        images.add(y)
        total += 1
        bad += inverse(y) != x
    return total, bad, len(images)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=2)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--cols", type=int, default=3, help="maximum number of array columns")
    ap.add_argument("--word-length", type=int, default=4)
    args = ap.parse_args(argv)

    failures = 0
    rows = []
    for m in range(args.max_m + 1):
        for n in range(args.max_n + 1):
            if m + n == 0:
                continue
            p = AlphabetParams(m, n, args.q)
            cols = range(args.cols + 1)
            jobs = {
                "spo": ([pi for c in cols for pi in enumerate_arrays(A, p, c)],
                        lambda x, p=p: spo_forward(x, p), lambda y, p=p: spo_inverse(y, p)),
                "dual spo": ([pi for c in cols for pi in enumerate_arrays(ASTAR, p, c)],
                             lambda x, p=p: dual_spo_forward(x, p), lambda y, p=p: dual_spo_inverse(y, p)),
                "word": ([list(w) for w in itertools.product(p.letters(), repeat=args.word_length)],
                         lambda x, p=p: word_to_updown(x, p), lambda y, p=p: updown_to_word(y, p)),
            }
            for name, (items, fwd, inv) in jobs.items():
                start = time.perf_counter()
                total, bad, distinct = sweep(items, fwd, inv)
                failures += bad + (distinct != total)
                rows.append((name, m, n, total, distinct, bad, time.perf_counter() - start))
    plain = AlphabetParams(0, 0, args.q + 2)
    for name, cls, fwd, inv in [("Burge", BURGE, burge_forward, burge_inverse),
                                ("dual Burge", DUAL_BURGE, dual_burge_forward, dual_burge_inverse)]:
        start = time.perf_counter()
        items = [l for c in range(args.cols) for l in enumerate_arrays(cls, plain, c)]
        total, bad, distinct = sweep(items, fwd, inv)
        failures += bad + (distinct != total)
        rows.append((name, "-", "-", total, distinct, bad, time.perf_counter() - start))

    print(f"{'map':<11}{'m':>3}{'n':>3}{'inputs':>9}{'images':>9}{'bad':>6}{'secs':>8}")
    for name, m, n, total, distinct, bad, secs in rows:
        print(f"{name:<11}{m:>3}{n:>3}{total:>9}{distinct:>9}{bad:>6}{secs:>8.2f}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
