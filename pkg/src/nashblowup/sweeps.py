"""Exhaustive small-rank verification sweeps.

Each sweep returns a :class:`SweepOutcome` whose ``failures`` list is empty
exactly when the property holds on the whole range.  The sweeps are the
library form of the CLI ``verify`` subcommand and of the acceptance tests:

* translate-bijection sweep: the closed-form map is a bijection onto the
  eventual translates for every cominuscule datum in range;
* singular-locus agreement: fiber-size singularity equals the
  translate-multiplicity criterion;
* coessential closed form: the box formula for the Nash parabolic's maximal
  representative agrees with the direct computation, ranks included;
* fiber-product counts: Nash fiber size, resolution fiber product and
  per-point translate count agree on every Grassmannian fixed point.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import grassmann, nashcore, peterson, zelevinsky
from .rootsystem import CartanType, build, root_system
from .weyl import (
    ParabolicSubset,
    format_word,
    interval_min_reps,
    longest_element,
    min_coset_rep,
    reduced_word,
)

__all__ = [
    "SweepOutcome",
    "cominuscule_data",
    "theorem2_sweep",
    "singular_agreement_sweep",
    "coess_formula_sweep",
    "fiberproduct_sweep",
    "conjecture_sweep",
    "grassmannian_perms",
    "covexillary_perms",
]


@dataclass
class SweepOutcome:
    label: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "ok" if self.ok else f"{len(self.failures)} failure(s)"
        return f"{self.label}: checked {self.checked}, {verdict}"


def _sweep_types(
    max_rank_a: int, max_rank_bc: int, include_d4: bool
) -> list[CartanType]:
    types = [CartanType("A", n) for n in range(1, max_rank_a + 1)]
    types += [CartanType("B", n) for n in range(2, max_rank_bc + 1)]
    types += [CartanType("C", n) for n in range(2, max_rank_bc + 1)]
    if include_d4:
        types.append(CartanType("D", 4))
    return types


def cominuscule_data(
    max_rank_a: int = 5, max_rank_bc: int = 3, include_d4: bool = True
) -> Iterator[nashcore.SchubertDatum]:
    """Every (type, cominuscule node, w in W^P) in the stated range."""
    for ct in _sweep_types(max_rank_a, max_rank_bc, include_d4):
        rs = build(ct)
        w0 = longest_element(rs)
        for node in sorted(rs.cominuscule_simples):
            p = ParabolicSubset(frozenset(range(1, rs.rank + 1)) - {node})
            reps = sorted(
                interval_min_reps(w0, p, max_length=w0.length),
                key=lambda w: (w.length, reduced_word(w)),
            )
            for w in reps:
                yield nashcore.SchubertDatum(system=rs, p=p, w=w)


def _datum_tag(d: nashcore.SchubertDatum) -> dict:
    return {
        "type": str(d.system.cartan_type),
        "node": d.cominuscule_index,
        "w": format_word(reduced_word(d.w)),
    }


def theorem2_sweep(
    max_rank_a: int = 5, max_rank_bc: int = 3, include_d4: bool = True
) -> SweepOutcome:
    out = SweepOutcome("translate bijection")
    for d in cominuscule_data(max_rank_a, max_rank_bc, include_d4):
        report = peterson.verify_theorem2(d)
        out.checked += 1
        if not report.ok:
            out.failures.append(
                _datum_tag(d)
                | {
                    "missing": len(report.missing),
                    "extra": len(report.extra),
                    "collisions": len(report.collisions),
                }
            )
    return out


def singular_agreement_sweep(
    max_rank_a: int = 5, max_rank_bc: int = 3, include_d4: bool = True
) -> SweepOutcome:
    out = SweepOutcome("singular locus agreement")
    for d in cominuscule_data(max_rank_a, max_rank_bc, include_d4):
        via_fibers = nashcore.singular_fixed_points(d)
        via_translates = peterson.ck_singular_points(d.w, d.p)
        out.checked += 1
        if via_fibers != via_translates:
            out.failures.append(
                _datum_tag(d)
                | {
                    "fiber_route": sorted(
                        format_word(reduced_word(v)) for v in via_fibers
                    ),
                    "translate_route": sorted(
                        format_word(reduced_word(v)) for v in via_translates
                    ),
                }
            )
    return out


def grassmannian_perms(n: int, k: int) -> Iterator[grassmann.Permutation]:
    """All Grassmannian permutations of 1..n with descent set inside {k}."""
    universe = range(1, n + 1)
    for chosen in combinations(universe, k):
        rest = tuple(x for x in universe if x not in chosen)
        yield chosen + rest


def coess_formula_sweep(max_n: int = 8) -> SweepOutcome:
    out = SweepOutcome("coessential closed form")
    for n in range(2, max_n + 1):
        ident = tuple(range(1, n + 1))
        for k in range(1, n):
            for w in grassmannian_perms(n, k):
                if w == ident:
                    continue
                levi_q = grassmann.delta_w_perm(w, k)
                direct = grassmann.coessential_set(
                    grassmann.max_coset_rep_perm(w, levi_q)
                )
                formula = grassmann.coess_nash_formula(w, k)
                out.checked += 1
                if direct != formula:
                    out.failures.append(
                        {
                            "n": n,
                            "k": k,
                            "w": list(w),
                            "direct": sorted(
                                (b.p, b.q, b.r) for b in direct
                            ),
                            "formula": sorted(
                                (b.p, b.q, b.r) for b in formula
                            ),
                        }
                    )
    return out


def _fiberproduct_point_counts(
    n: int, k: int, w: grassmann.Permutation
) -> list[tuple[grassmann.Permutation, int, int, int]]:
    """(v, nash fiber size, resolution product, translate count) per point."""
    rs = root_system("A", n - 1)
    p = ParabolicSubset(frozenset(range(1, n)) - {k})
    w_el = grassmann.perm_to_weyl(rs, w)
    datum = nashcore.SchubertDatum(system=rs, p=p, w=w_el)

    # the resolutions live over the flag variety with steps at the box
    # columns, so each Grassmannian point is evaluated at its image flag
    cov = zelevinsky.covexillary_datum(grassmann.grassmannian_max_rep(w, k))

    graph = peterson.eventual_translates(w_el, p)
    translate_counts: dict[grassmann.Permutation, int] = {}
    for state in graph.nodes:
        key = grassmann.weyl_to_perm(state.z)
        translate_counts[key] = translate_counts.get(key, 0) + 1

    rows = []
    for v_el in sorted(
        interval_min_reps(w_el, p), key=lambda z: (z.length, reduced_word(z))
    ):
        v = grassmann.weyl_to_perm(v_el)
        fiber = len(nashcore.nash_fiber(v_el, datum))
        flag = zelevinsky.CoordFlag(
            steps=tuple(tuple(sorted(v[: b.q])) for b in cov.boxes)
        )
        product = zelevinsky.fiberproduct_count(flag, cov)
        rows.append((v, fiber, product, translate_counts.get(v, 0)))
    return rows


def fiberproduct_sweep(max_n: int = 7) -> SweepOutcome:
    out = SweepOutcome("fiber product counts")
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for w in grassmannian_perms(n, k):
                rows = _fiberproduct_point_counts(n, k, w)
                out.checked += 1
                bad = [
                    row for row in rows if not (row[1] == row[2] == row[3])
                ]
                if bad:
                    out.failures.append(
                        {
                            "n": n,
                            "k": k,
                            "w": list(w),
                            "points": [
                                {
                                    "v": list(v),
                                    "nash_fiber": fib,
                                    "product": prod,
                                    "translates": tr,
                                }
                                for v, fib, prod, tr in bad
                            ],
                        }
                    )
    return out


def covexillary_perms(n: int) -> Iterator[grassmann.Permutation]:
    from itertools import permutations

    for w in permutations(range(1, n + 1)):
        if grassmann.is_covexillary(w):
            yield w


def _conjecture_verdict(w: grassmann.Permutation) -> tuple[tuple[int, ...], list[dict]]:
    report = zelevinsky.conjecture_check(w)
    bad = [
        {
            "v": list(pt.v),
            "product": pt.product,
            "peterson_count": pt.peterson_count,
        }
        for pt in report.mismatches
    ]
    return w, bad


def conjecture_sweep(n: int, jobs: int = 1) -> SweepOutcome:
    out = SweepOutcome(f"fiber-product conjecture on S_{n}")
    perms = list(covexillary_perms(n))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_conjecture_verdict, perms, chunksize=16))
    else:
        results = [_conjecture_verdict(w) for w in perms]
    for w, bad in results:
        out.checked += 1
        if bad:
            out.failures.append({"w": list(w), "points": bad})
    return out
