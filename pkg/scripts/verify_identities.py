#!/usr/bin/env python3
"""Run every identity check over a small parameter grid and print one summary per run.

    python3 scripts/verify_identities.py --max-m 2 --max-n 2 --max-q 2 --k 3
"""
import argparse
import json
import sys

from ospkit.alphabet import AlphabetParams
from ospkit.characters import VERIFIERS


def grid(max_m, max_n, max_q):
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            for q in range(1, max_q + 1):
                yield AlphabetParams(m, n, q)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=1)
    ap.add_argument("--max-q", type=int, default=2)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--only", choices=sorted(VERIFIERS), action="append", help="restrict to these identities")
    ap.add_argument("--json", action="store_true", help="emit one JSON report per line")
    args = ap.parse_args(argv)

    names = args.only or sorted(VERIFIERS)
    mismatches = 0
    for name in names:
        seen = set()
        for params in grid(args.max_m, args.max_n, args.max_q):
            if name == "power":
                # no y variables; q is irrelevant
                params = AlphabetParams(params.m, params.n, 1)
                if (params.m, params.n) in seen:
                    continue
                seen.add((params.m, params.n))
            report = VERIFIERS[name](params, args.k)
            mismatches += not report.ok
            if args.json:
                print(json.dumps(report.to_json()))
            else:
                print(report.summary())
    print(f"{mismatches} mismatching run(s)", file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
