"""Command line interface.

Subcommands
-----------
nash        Nash blow-up data of one Schubert datum: the simple roots kept
            by w, the parabolic they generate, fixed points, fibers and the
            singular locus.
peterson    Translation graph of a (w, P) pair; optionally the fixed-point
            table when the datum is cominuscule.  Formats: text, json, dot.
grassmann   Type-A report for a Grassmannian permutation: partition,
            coessential boxes, the Nash levi set, the induced flag variety
            and incidence conditions, and the smoothness verdict.
conjecture  Check the fiber-product count against translate counts, for one
            covexillary permutation or a full symmetric group sweep.
verify      Run the exhaustive small-rank sweeps.
types       Show the supported Dynkin diagrams and their cominuscule nodes.

Exit codes: 0 success, 1 a verification failed or an internal invariant was
violated, 2 usage error (bad arguments, malformed input).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import grassmann, nashcore, peterson, sweeps, zelevinsky
from .rootsystem import (
    CartanType,
    InvariantViolation,
    build,
    dynkin_diagram,
    format_root,
)
from .weyl import (
    ParabolicSubset,
    format_word,
    from_word,
    is_min_coset_rep,
    min_coset_rep,
    reduced_word,
)

USAGE_ERROR = 2
CHECK_FAILED = 1


class UsageError(Exception):
    pass


def _parse_ints(text: str, what: str) -> list[int]:
    parts = [p for p in text.replace(",", " ").split() if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"could not parse {what} from {text!r}") from None


def _parse_perm(text: str) -> grassmann.Permutation:
    if "," in text or " " in text:
        vals = _parse_ints(text, "permutation")
    else:
        # compact one-line form, only unambiguous for n <= 9
        vals = [int(ch) for ch in text.strip() if ch.isdigit()]
    perm = tuple(vals)
    try:
        grassmann.check_permutation(perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return perm


def _build_datum(args: argparse.Namespace) -> nashcore.SchubertDatum:
    if args.type is None or args.rank is None:
        # a type-A permutation input determines the type and rank
        if args.perm is None:
            raise UsageError("need --type and --rank (or a type-A --perm)")
        args.type = "A"
        args.rank = len(_parse_perm(args.perm)) - 1
    if args.levi is None and args.node is None and args.perm is not None:
        k = grassmann.grassmannian_descent(_parse_perm(args.perm))
        if k:
            args.node = k
    try:
        ct = CartanType(args.type.upper(), args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rs = build(ct)
    if args.levi is not None:
        levi = frozenset(_parse_ints(args.levi, "levi set"))
    else:
        # default: the unique maximal choice when only one node is cominuscule
        nodes = sorted(rs.cominuscule_simples)
        if len(nodes) != 1 and args.node is None:
            raise UsageError(
                f"{ct} has several cominuscule nodes {nodes}; "
                "pass --node or --levi explicitly"
            )
        node = args.node if args.node is not None else nodes[0]
        levi = frozenset(range(1, rs.rank + 1)) - {node}
    if args.node is not None:
        expect = frozenset(range(1, rs.rank + 1)) - {args.node}
        if args.levi is not None and levi != expect:
            raise UsageError("--levi and --node disagree")
        levi = expect
    p = ParabolicSubset(levi)

    if args.perm is not None:
        if ct.family != "A":
            raise UsageError("--perm only makes sense in type A")
        perm = _parse_perm(args.perm)
        if len(perm) != rs.rank + 1:
            raise UsageError(
                f"permutation of length {len(perm)} does not match A{rs.rank}"
            )
        w = grassmann.perm_to_weyl(rs, perm)
    elif args.word is not None:
        word = _parse_ints(args.word, "word")
        bad = [i for i in word if not 1 <= i <= rs.rank]
        if bad:
            raise UsageError(f"letters {bad} outside 1..{rs.rank}")
        w = from_word(rs, word)
    else:
        raise UsageError("need one of --word or --perm")

    if not is_min_coset_rep(w, p):
        rep = min_coset_rep(w, p)
        raise UsageError(
            f"w = {format_word(reduced_word(w))} is not the minimal "
            f"representative of its coset; use {format_word(reduced_word(rep))}"
        )
    try:
        return nashcore.SchubertDatum(system=rs, p=p, w=w)
    except (ValueError, nashcore.NotCominusculeError) as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, args: argparse.Namespace) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_dumps(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


# -- nash ------------------------------------------------------------------


def _nash_text(d: nashcore.SchubertDatum, report: dict) -> str:
    rs = d.system
    lines = [
        f"type: {rs.cartan_type}",
        f"levi: {sorted(d.p.levi)}  cominuscule node: {d.cominuscule_index}",
        f"w: {format_word(reduced_word(d.w))}  length: {d.w.length}",
        f"kept simple roots: {report['delta_w']}",
        f"Nash parabolic levi: {report['Q_levi']}",
        f"fixed points: {report['fixed_point_count']}",
    ]
    for fiber in report["fibers"]:
        mark = "smooth" if fiber["smooth"] else "singular"
        members = ", ".join(format_word(wd) for wd in fiber["fiber_words"])
        lines.append(
            f"  over {format_word(fiber['v_word'])}: {{{members}}}  [{mark}]"
        )
    singular = [
        format_word(f["v_word"]) for f in report["fibers"] if not f["smooth"]
    ]
    lines.append(
        "singular fixed points: "
        + (", ".join(singular) if singular else "(none)")
    )
    data = nashcore.nash_data(d)
    lines.append(
        "tangent roots: "
        + ", ".join(format_root(b) for b in data.tangent_roots)
    )
    return "\n".join(lines)


def cmd_nash(args: argparse.Namespace) -> int:
    d = _build_datum(args)
    report = nashcore.nash_report(d)
    if args.format == "json":
        _emit(_json_dumps(report), args)
    else:
        _emit(_nash_text(d, report), args)
    return 0


# -- peterson --------------------------------------------------------------


def _peterson_graph(args: argparse.Namespace):
    d = _build_datum(args)
    graph = peterson.eventual_translates(d.w, d.p)
    return d, graph


def cmd_peterson(args: argparse.Namespace) -> int:
    d, graph = _peterson_graph(args)
    if args.format == "dot":
        _emit(peterson.graph_to_dot(graph), args)
        return 0
    if args.format == "json":
        payload = peterson.graph_to_json(graph)
        payload["fixed_point_table"] = [
            {
                "v": row["v"],
                "v_tilde": row["v_tilde"],
                "weights": row["weights"],
            }
            for row in peterson.fixed_point_table(d)
        ]
        _emit(_json_dumps(payload), args)
        return 0
    rs = d.system
    lines = [
        f"translation graph for w = {format_word(reduced_word(d.w))}, "
        f"levi {sorted(d.p.levi)}",
        f"states: {len(graph.nodes)}  edges: {len(graph.edges)}",
        "",
        "fixed point table (v, translate, weight set):",
    ]
    for row in peterson.fixed_point_table(d):
        weights = ", ".join(format_root(tuple(b)) for b in row["weights"])
        v_str = format_word(row["v"])
        vt_str = format_word(row["v_tilde"])
        lines.append(f"  {v_str:<16} {vt_str:<16} {{{weights}}}")
    lines.append("")
    lines.append("edges:")
    for src, label, dst in graph.edges:
        lines.append(
            f"  {format_word(reduced_word(src.z)):<16} "
            f"--{format_root(label)}--> "
            f"{format_word(reduced_word(dst.z))}"
        )
    _emit("\n".join(lines), args)
    return 0


# -- grassmann -------------------------------------------------------------


def _grassmann_payload(w: grassmann.Permutation, k: int) -> dict:
    n = len(w)
    lam = grassmann.partition_of(w, k)
    levi_q = grassmann.delta_w_perm(w, k)
    vq = grassmann.max_coset_rep_perm(w, levi_q)
    vp = grassmann.grassmannian_max_rep(w, k)
    config = grassmann.config_description(w, k)
    return {
        "n": n,
        "k": k,
        "w": list(w),
        "partition": list(lam),
        "inner_corners": sorted(grassmann.inner_corners(lam, k, n)),
        "coessential_vp": [
            [b.p, b.q, b.r] for b in sorted(grassmann.coessential_set(vp))
        ],
        "delta_w": sorted(levi_q),
        "v_q": list(vq),
        "coessential_vq": [
            [b.p, b.q, b.r] for b in sorted(grassmann.coessential_set(vq))
        ],
        "smooth": grassmann.nash_blowup_smooth(w, k),
        "config": config.to_json(),
    }


def cmd_grassmann(args: argparse.Namespace) -> int:
    w = _parse_perm(args.perm)
    n = len(w)
    if args.n is not None and args.n != n:
        raise UsageError(f"--n {args.n} does not match a permutation of {n}")
    if w == tuple(range(1, n + 1)):
        _emit(
            "identity permutation: the variety is a point and its "
            "Nash blow-up is trivially smooth",
            args,
        )
        return 0
    k = args.k
    if k is None:
        k = grassmann.grassmannian_descent(w)
        if k is None:
            raise UsageError(
                f"{w} is not Grassmannian; it has more than one descent"
            )
    if not grassmann.is_grassmannian(w, k) or k not in grassmann.descent_set(w):
        raise UsageError(f"{w} is not Grassmannian with descent at {k}")
    payload = _grassmann_payload(w, k)
    if args.format == "json":
        _emit(_json_dumps(payload), args)
        return 0
    lines = [
        f"w: {''.join(str(x) for x in w) if n <= 9 else list(w)}  "
        f"n: {n}  k: {k}",
        f"partition: {tuple(payload['partition'])}",
        f"inner corners: {payload['inner_corners']}",
        "coessential boxes of the maximal representative: "
        + "; ".join(f"({p},{q}) rank {r}" for p, q, r in payload["coessential_vp"]),
        f"kept levi set: {payload['delta_w']}",
        f"flag steps: {tuple(payload['config']['flag_steps'])}",
        "conditions: " + "; ".join(payload["config"]["conditions_pretty"]),
        f"Nash blow-up smooth: {'yes' if payload['smooth'] else 'no'}",
    ]
    _emit("\n".join(lines), args)
    return 0


# -- conjecture ------------------------------------------------------------


def cmd_conjecture(args: argparse.Namespace) -> int:
    if args.perm is None and args.n is None:
        raise UsageError("need --perm or --n")
    if args.perm is not None:
        w = _parse_perm(args.perm)
        if not grassmann.is_covexillary(w):
            raise UsageError(f"{w} is not covexillary")
        report = zelevinsky.conjecture_check(w)
        if args.format == "json":
            _emit(_json_dumps(report.to_json()), args)
        else:
            lines = [
                f"w: {list(report.w)}  covexillary: yes",
                f"seed representative: {list(report.seed)}",
                f"points checked: {len(report.points)}",
            ]
            for pt in report.points:
                mark = "ok" if pt.match else "MISMATCH"
                lines.append(
                    f"  v = {list(pt.v)}: product {pt.product} "
                    f"(chains {pt.z_count} x {pt.zdual_count}), "
                    f"translates {pt.peterson_count}  [{mark}]"
                )
            lines.append("verdict: " + ("pass" if report.ok else "fail"))
            _emit("\n".join(lines), args)
        return 0 if report.ok else CHECK_FAILED

    outcome = sweeps.conjecture_sweep(args.n, jobs=args.jobs)
    if args.format == "json":
        _emit(
            _json_dumps(
                {
                    "label": outcome.label,
                    "checked": outcome.checked,
                    "failures": outcome.failures,
                }
            ),
            args,
        )
    else:
        _emit(outcome.summary(), args)
    return 0 if outcome.ok else CHECK_FAILED


# -- verify ----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    outcomes = []
    if not args.skip_translates:
        outcomes.append(
            sweeps.theorem2_sweep(args.max_rank_a, args.max_rank_bc, not args.skip_d4)
        )
        outcomes.append(
            sweeps.singular_agreement_sweep(
                args.max_rank_a, args.max_rank_bc, not args.skip_d4
            )
        )
    if not args.skip_coess:
        outcomes.append(sweeps.coess_formula_sweep(args.max_n_coess))
    if not args.skip_fibers:
        outcomes.append(sweeps.fiberproduct_sweep(args.max_n_fibers))
    if args.conjecture_n:
        outcomes.append(sweeps.conjecture_sweep(args.conjecture_n, jobs=args.jobs))
    lines = [o.summary() for o in outcomes]
    bad = [o for o in outcomes if not o.ok]
    if args.format == "json":
        _emit(
            _json_dumps(
                [
                    {
                        "label": o.label,
                        "checked": o.checked,
                        "ok": o.ok,
                        "failures": o.failures,
                    }
                    for o in outcomes
                ]
            ),
            args,
        )
    else:
        _emit("\n".join(lines), args)
    return CHECK_FAILED if bad else 0


# -- types -----------------------------------------------------------------


def cmd_types(args: argparse.Namespace) -> int:
    if args.type:
        if args.rank is None:
            raise UsageError("--type needs --rank")
        try:
            specs = [CartanType(args.type.upper(), args.rank)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        specs = [
            CartanType("A", 3),
            CartanType("B", 3),
            CartanType("C", 3),
            CartanType("D", 4),
            CartanType("E", 6),
            CartanType("E", 7),
        ]
    blocks = []
    for ct in specs:
        rs = build(ct)
        blocks.append(
            dynkin_diagram(ct)
            + f"\ncominuscule nodes: {sorted(rs.cominuscule_simples)}"
            + f"\nhighest root: {format_root(rs.highest_root)}"
        )
    _emit("\n\n".join(blocks), args)
    return 0


# -- parser ----------------------------------------------------------------


def _add_datum_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--type", help="A, B, C, D, E; inferred from --perm")
    sub.add_argument("--rank", type=int)
    sub.add_argument(
        "--levi", help="comma separated levi node indices, e.g. 1,3"
    )
    sub.add_argument(
        "--node",
        type=int,
        help="cominuscule node omitted from the levi (alternative to --levi)",
    )
    sub.add_argument(
        "--k", type=int, dest="node", help="synonym for --node in type A"
    )
    sub.add_argument("--word", help="reduced word for w, e.g. 1,3,2")
    sub.add_argument("--perm", help="one-line permutation (type A only)")
    sub.add_argument("--output", help="write the report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nashblowup",
        description="combinatorics of Nash blow-ups of cominuscule Schubert varieties",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_nash = subs.add_parser("nash", help="fixed points and fibers")
    _add_datum_args(p_nash)
    p_nash.add_argument("--format", choices=("text", "json"), default="text")
    p_nash.set_defaults(func=cmd_nash)

    p_pet = subs.add_parser("peterson", help="translation graph")
    _add_datum_args(p_pet)
    p_pet.add_argument(
        "--format", choices=("text", "json", "dot"), default="text"
    )
    p_pet.set_defaults(func=cmd_peterson)

    p_gr = subs.add_parser("grassmann", help="type-A Grassmannian report")
    p_gr.add_argument("--perm", required=True)
    p_gr.add_argument("--k", type=int, help="descent position")
    p_gr.add_argument("--n", type=int, help="optional check on the length")
    p_gr.add_argument("--format", choices=("text", "json"), default="text")
    p_gr.add_argument("--output")
    p_gr.set_defaults(func=cmd_grassmann)

    p_conj = subs.add_parser("conjecture", help="fiber-product count check")
    p_conj.add_argument("--perm", help="one covexillary permutation")
    p_conj.add_argument("--n", type=int, help="sweep all covexillary in S_n")
    p_conj.add_argument("--jobs", type=int, default=1)
    p_conj.add_argument("--format", choices=("text", "json"), default="text")
    p_conj.add_argument("--output")
    p_conj.set_defaults(func=cmd_conjecture)

    p_ver = subs.add_parser("verify", help="small-rank verification sweeps")
    p_ver.add_argument("--max-rank-a", type=int, default=5)
    p_ver.add_argument("--max-rank-bc", type=int, default=3)
    p_ver.add_argument("--skip-d4", action="store_true")
    p_ver.add_argument("--max-n-coess", type=int, default=8)
    p_ver.add_argument("--max-n-fibers", type=int, default=7)
    p_ver.add_argument("--conjecture-n", type=int, default=0)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--skip-translates", action="store_true")
    p_ver.add_argument("--skip-coess", action="store_true")
    p_ver.add_argument("--skip-fibers", action="store_true")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--output")
    p_ver.set_defaults(func=cmd_verify)

    p_ty = subs.add_parser("types", help="supported Dynkin diagrams")
    p_ty.add_argument("--type")
    p_ty.add_argument("--rank", type=int)
    p_ty.add_argument("--output")
    p_ty.set_defaults(func=cmd_types)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
