#!/usr/bin/env python3
"""Render the translation graph of a Schubert datum as DOT or JSON.

Defaults reproduce the rank-3 example whose graph has eight states:

    python scripts/render_translation_graph.py
    python scripts/render_translation_graph.py --type B --rank 3 --node 1 \
        --word 3,2,1 --format json
"""

from __future__ import annotations

import argparse
import json
import sys

from nashblowup import peterson, rootsystem, weyl


def parse_args() -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--type", default="A")
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--levi", default=None, help="e.g. 1,3")
    ap.add_argument("--node", type=int, default=None)
    ap.add_argument("--word", default="1,3,2")
    ap.add_argument("--format", choices=("dot", "json"), default="dot")
    ap.add_argument("--output", default=None)
    return ap.parse_args()


def main() -> int:
    args = parse_args()
    rs = rootsystem.root_system(args.type.upper(), args.rank)
    if args.levi:
        levi = frozenset(int(s) for s in args.levi.split(","))
    elif args.node:
        levi = frozenset(range(1, args.rank + 1)) - {args.node}
    else:
        levi = frozenset({1, 3})
    p = weyl.ParabolicSubset(levi)
    word = [int(s) for s in args.word.split(",")]
    w = weyl.min_coset_rep(weyl.from_word(rs, word), p)
    graph = peterson.eventual_translates(w, p)
    if args.format == "dot":
        text = peterson.graph_to_dot(graph)
    else:
        text = json.dumps(peterson.graph_to_json(graph), indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(
        f"# {len(graph.nodes)} states, {len(graph.edges)} edges "
        f"for w = {weyl.format_word(weyl.reduced_word(w))}",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
