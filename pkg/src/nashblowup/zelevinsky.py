"""Paired small resolutions of covexillary Schubert varieties, and the
fiber-product conjecture check.

A covexillary permutation w, taken as the maximal representative of w W_P
for the parabolic generated by its descents, has sortable coessential boxes
(p_i, q_i, r_i).  Two resolution spaces sit over X_w^P:

    Z  : flags F with F_{r_i} inside E_{p_i} intersect V_{q_i},
    Z' : flags F with F_{q_i + p_i - r_i} containing E_{p_i} + V_{q_i},

where E is the fixed reference flag and V runs over the variety.  Both
project to X_w^P; over a torus-fixed point every fiber is a finite set of
coordinate-subspace chains, counted here by a bitmask dynamic program over
subset containments.

The conjecture check compares, at every fixed point, the product of the two
fiber counts with the number of eventual Peterson translates of the minimal
representative of w W_P sitting at that point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .grassmann import (
    CoessBox,
    Permutation,
    bruhat_leq_perm,
    check_permutation,
    coessential_set,
    descent_set,
    is_covexillary,
    min_coset_rep_perm,
    perm_to_weyl,
    weyl_to_perm,
)
from .peterson import eventual_translates
from .rootsystem import root_system
from .weyl import ParabolicSubset

__all__ = [
    "CovexillaryDatum",
    "CoordFlag",
    "covexillary_datum",
    "min_reps_perm",
    "schubert_fixed_points",
    "schubert_fixed_flags",
    "z_fiber_count",
    "zdual_fiber_count",
    "fiberproduct_count",
    "ConjecturePoint",
    "ConjectureReport",
    "conjecture_check",
]


@dataclass(frozen=True)
class CovexillaryDatum:
    """A covexillary permutation with its descent parabolic and sorted boxes."""

    w: Permutation
    n: int
    levi: frozenset[int]
    boxes: tuple[CoessBox, ...]


@dataclass(frozen=True)
class CoordFlag:
    """Coordinate subspaces S_{q_1} <= ... <= S_{q_m}, one step per box."""

    steps: tuple[tuple[int, ...], ...]


def covexillary_datum(w: Permutation) -> CovexillaryDatum:
    n = check_permutation(w)
    if not is_covexillary(w):
        raise ValueError(f"{w} is not covexillary")
    levi = descent_set(w)
    boxes = tuple(sorted(coessential_set(w), key=lambda b: (b.p, b.q)))
    qs = [b.q for b in boxes]
    if qs != sorted(qs):
        raise ValueError(f"boxes of {w} are not simultaneously sortable")
    # every ascent of w carries at least one box, so the distinct q's are
    # exactly the flag steps of G/P
    ascents = {j for j in range(1, n) if j not in levi}
    if set(qs) != ascents:
        raise ValueError(f"box columns {sorted(set(qs))} differ from ascents")
    rs = [b.r for b in boxes]
    if rs != sorted(rs):
        raise ValueError(f"box ranks of {w} are not monotone")
    return CovexillaryDatum(w=w, n=n, levi=levi, boxes=boxes)


def min_reps_perm(n: int, levi: frozenset[int]):
    """All minimal coset representatives for W_levi, as one-line tuples."""
    blocks: list[list[int]] = [[1]]
    for i in range(2, n + 1):
        if (i - 1) in levi:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    sizes = [len(b) for b in blocks]

    def fill(remaining: frozenset[int], idx: int):
        if idx == len(sizes):
            yield ()
            return
        for vals in combinations(sorted(remaining), sizes[idx]):
            for rest in fill(remaining - set(vals), idx + 1):
                yield vals + rest

    yield from fill(frozenset(range(1, n + 1)), 0)


def schubert_fixed_points(d: CovexillaryDatum) -> list[tuple[Permutation, CoordFlag]]:
    """(v, flag of v) for every torus-fixed point of X_w^P, v in W^P, v <= w."""
    out = []
    for v in min_reps_perm(d.n, d.levi):
        if bruhat_leq_perm(v, d.w):
            steps = tuple(tuple(sorted(v[: b.q])) for b in d.boxes)
            out.append((v, CoordFlag(steps=steps)))
    out.sort(key=lambda t: t[0])
    flags = [f for _, f in out]
    if len(set(flags)) != len(flags):
        raise RuntimeError("fixed flags failed to separate fixed points")
    return out


def schubert_fixed_flags(d: CovexillaryDatum) -> tuple[CoordFlag, ...]:
    return tuple(f for _, f in schubert_fixed_points(d))


def _mask(vals) -> int:
    m = 0
    for x in vals:
        m |= 1 << (x - 1)
    return m


def _bit_list(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _validate_flag(flag: CoordFlag, d: CovexillaryDatum) -> None:
    if len(flag.steps) != len(d.boxes):
        raise ValueError("flag has the wrong number of steps")
    prev: frozenset[int] = frozenset()
    prev_q = 0
    for step, box in zip(flag.steps, d.boxes):
        s = frozenset(step)
        if len(s) != box.q or not all(1 <= x <= d.n for x in s):
            raise ValueError(f"step {step} is not a {box.q}-subset of 1..{d.n}")
        if box.q >= prev_q and not prev <= s:
            raise ValueError("flag steps are not nested")
        if sum(1 for x in s if x <= box.p) < box.r:
            raise ValueError(
                f"flag violates the rank condition of box "
                f"({box.p},{box.q},{box.r}); not a point of the variety"
            )
        prev, prev_q = s, box.q


def z_fiber_count(flag: CoordFlag, d: CovexillaryDatum) -> int:
    """Fixed points of the Z-fiber: chains T_i of size r_i inside
    {1..p_i} intersect S_{q_i}."""
    _validate_flag(flag, d)
    counts: dict[int, int] = {0: 1}
    prev_r = 0
    for step, box in zip(flag.steps, d.boxes):
        upper = _mask(step) & _mask(range(1, box.p + 1))
        need = box.r - prev_r
        nxt: dict[int, int] = {}
        for t_mask, ways in counts.items():
            if t_mask & ~upper:
                continue  # previous stage must sit inside this bound
            avail = _bit_list(upper & ~t_mask)
            for extra in combinations(avail, need):
                new = t_mask
                for b in extra:
                    new |= 1 << b
                nxt[new] = nxt.get(new, 0) + ways
        counts = nxt
        prev_r = box.r
    return sum(counts.values())


def zdual_fiber_count(flag: CoordFlag, d: CovexillaryDatum) -> int:
    """Fixed points of the Z'-fiber: chains T_i of size q_i + p_i - r_i
    containing {1..p_i} union S_{q_i}."""
    _validate_flag(flag, d)
    full = _mask(range(1, d.n + 1))
    counts: dict[int, int] = {0: 1}
    for step, box in zip(flag.steps, d.boxes):
        lower = _mask(step) | _mask(range(1, box.p + 1))
        size = box.q + box.p - box.r
        nxt: dict[int, int] = {}
        for t_mask, ways in counts.items():
            base = t_mask | lower
            need = size - bin(base).count("1")
            if need < 0:
                continue
            avail = _bit_list(full & ~base)
            for extra in combinations(avail, need):
                new = base
                for b in extra:
                    new |= 1 << b
                nxt[new] = nxt.get(new, 0) + ways
        counts = nxt
    return sum(counts.values())


def fiberproduct_count(flag: CoordFlag, d: CovexillaryDatum) -> int:
    """Fixed points of the fiber of Z x_X Z' over the flag."""
    return z_fiber_count(flag, d) * zdual_fiber_count(flag, d)


@dataclass(frozen=True)
class ConjecturePoint:
    v: Permutation
    z_count: int
    zdual_count: int
    product: int
    peterson_count: int

    @property
    def match(self) -> bool:
        return self.product == self.peterson_count


@dataclass(frozen=True)
class ConjectureReport:
    w: Permutation
    seed: Permutation  # the minimal representative fed to the translation engine
    points: tuple[ConjecturePoint, ...]

    @property
    def ok(self) -> bool:
        return all(pt.match for pt in self.points)

    @property
    def mismatches(self) -> tuple[ConjecturePoint, ...]:
        return tuple(pt for pt in self.points if not pt.match)

    def to_json(self) -> dict:
        return {
            "w": list(self.w),
            "seed": list(self.seed),
            "covexillary": True,
            "points": [
                {
                    "v": list(pt.v),
                    "z_count": pt.z_count,
                    "zdual_count": pt.zdual_count,
                    "product": pt.product,
                    "peterson_count": pt.peterson_count,
                    "match": pt.match,
                }
                for pt in self.points
            ],
            "verdict": "pass" if self.ok else "fail",
        }


def conjecture_check(w: Permutation) -> ConjectureReport:
    """Compare fiber-product counts with per-point Peterson translate counts.

    The translation engine is seeded with the minimal representative of
    w W_P, which indexes the same Schubert variety as w.
    """
    d = covexillary_datum(w)
    seed = min_coset_rep_perm(w, d.levi)
    rs = root_system("A", d.n - 1)
    graph = eventual_translates(
        perm_to_weyl(rs, seed), ParabolicSubset(d.levi)
    )
    per_point: dict[Permutation, int] = {}
    for state in graph.nodes:
        key = weyl_to_perm(state.z)
        per_point[key] = per_point.get(key, 0) + 1
    points = []
    for v, flag in schubert_fixed_points(d):
        zc = z_fiber_count(flag, d)
        zdc = zdual_fiber_count(flag, d)
        points.append(
            ConjecturePoint(
                v=v,
                z_count=zc,
                zdual_count=zdc,
                product=zc * zdc,
                peterson_count=per_point.get(v, 0),
            )
        )
    return ConjectureReport(w=w, seed=seed, points=tuple(points))
