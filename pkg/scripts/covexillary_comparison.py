#!/usr/bin/env python3
"""Compare fiber-product counts with translation-state counts.

Runs the covexillary comparison over all covexillary permutations in S_n
for a range of n, summarizes matches and mismatches, and optionally tests
whether every mismatch contains the smallest mismatching permutation
(5,2,3,4,1) as a pattern.

    python scripts/covexillary_comparison.py --max-n 6 --pattern-check
"""

from __future__ import annotations

import argparse
import itertools
import json

from nashblowup import sweeps


def contains_pattern(w: tuple[int, ...], pat: tuple[int, ...]) -> bool:
    m = len(pat)
    order = tuple(sorted(range(m), key=lambda i: pat[i]))
    for sub in itertools.combinations(range(len(w)), m):
        vals = [w[i] for i in sub]
        if tuple(sorted(range(m), key=lambda i: vals[i])) == order:
            return True
    return False


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--pattern-check", action="store_true")
    ap.add_argument("--json", action="store_true", dest="as_json")
    args = ap.parse_args()

    pat = (5, 2, 3, 4, 1)
    bad = False
    for n in range(args.min_n, args.max_n + 1):
        out = sweeps.conjecture_sweep(n, jobs=args.jobs)
        mism = list(out.failures)
        print(f"S_{n}: {out.checked} covexillary permutations, {len(mism)} mismatches")
        for f in mism:
            bad = True
            w = tuple(f["w"])
            worst = max(f["points"], key=lambda pt: pt["product"] - pt["peterson_count"])
            line = (
                f"  w = {w}: product {worst['product']} vs "
                f"{worst['peterson_count']} states at v = {tuple(worst['v'])}"
            )
            if args.pattern_check:
                line += f"  [contains {pat}: {contains_pattern(w, pat)}]"
            print(line)
            if args.as_json:
                print(json.dumps(f, sort_keys=True))
        if args.pattern_check and mism:
            holders = [
                w
                for w in sweeps.covexillary_perms(n)
                if contains_pattern(w, pat)
            ]
            bad_set = {tuple(f["w"]) for f in mism}
            extra = [w for w in holders if w not in bad_set]
            print(
                f"  pattern {pat}: found in {len(holders)} covexillary permutations, "
                f"{len(extra)} of which match anyway"
            )
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
