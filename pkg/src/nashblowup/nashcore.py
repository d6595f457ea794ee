"""Nash blow-ups of cominuscule Schubert varieties, combinatorially.

A datum is a cominuscule maximal parabolic P (its Levi omits exactly one
simple index, which must carry coefficient 1 in the highest root) together
with a minimal coset representative w.  The Nash blow-up of the Schubert
variety X_w^P is again a Schubert variety X_w^Q for the parabolic Q
generated by

    Delta_w = {alpha in Delta_L : w(alpha) is simple},

and the blow-down map is the coset projection W^Q -> W^P on torus-fixed
points.  This module computes Q, the fixed points, the fibers over fixed
points of X_w^P, and hence the smooth locus.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import Root, RootSystem, format_root
from .weyl import (
    ParabolicSubset,
    WeylElement,
    bruhat_leq,
    format_word,
    identity,
    interval_min_reps,
    inverse,
    is_min_coset_rep,
    left_inversions,
    min_coset_rep,
    multiply,
    reduced_word,
    _check_levi,
    _right_mult,
)

__all__ = [
    "SchubertDatum",
    "NotCominusculeError",
    "NashData",
    "delta_w",
    "nash_parabolic",
    "nash_fixed_points",
    "nash_fiber",
    "is_smooth_point",
    "singular_fixed_points",
    "nash_data",
    "nash_report",
]


class NotCominusculeError(ValueError):
    """The omitted simple root is not cominuscule for this type."""

    def __init__(self, system: RootSystem, index: int) -> None:
        self.index = index
        self.coefficient = system.highest_root[index - 1]
        super().__init__(
            f"simple root a{index} of {system.cartan_type} has coefficient "
            f"{self.coefficient} in the highest root {format_root(system.highest_root)}; "
            f"cominuscule choices are {sorted(system.cominuscule_simples)}"
        )


@dataclass(frozen=True)
class SchubertDatum:
    """A cominuscule maximal parabolic P and a minimal coset representative w."""

    system: RootSystem
    p: ParabolicSubset
    w: WeylElement

    def __post_init__(self) -> None:
        rs = self.system
        _check_levi(rs, self.p)
        missing = frozenset(range(1, rs.rank + 1)) - self.p.levi
        if len(missing) != 1:
            raise ValueError(
                f"levi {sorted(self.p.levi)} must omit exactly one of 1..{rs.rank}"
            )
        (idx,) = missing
        if idx not in rs.cominuscule_simples:
            raise NotCominusculeError(rs, idx)
        if self.w.system is not rs:
            raise ValueError("w belongs to a different root system")
        if not is_min_coset_rep(self.w, self.p):
            raise ValueError(
                f"w = {format_word(reduced_word(self.w))} is not a minimal coset "
                f"representative for levi {sorted(self.p.levi)}"
            )

    @property
    def cominuscule_index(self) -> int:
        (idx,) = frozenset(range(1, self.system.rank + 1)) - self.p.levi
        return idx


@dataclass(frozen=True)
class NashData:
    """Assembled combinatorial payload of one Nash blow-up."""

    delta_w: frozenset[int]
    q: ParabolicSubset
    fixed_points: frozenset[WeylElement]
    tangent_roots: frozenset[Root]  # E = w^{-1}(LInv(w)), inside R^- minus R_L^-
    tangent_weights: frozenset[Root]  # weights of the tangent space at the base point


@lru_cache(maxsize=None)
def delta_w(d: SchubertDatum) -> frozenset[int]:
    """Levi indices whose simple root stays simple under w."""
    rs = d.system
    out = []
    for i in sorted(d.p.levi):
        if rs.is_simple(d.w.column(i)):
            out.append(i)
    return frozenset(out)


def nash_parabolic(d: SchubertDatum) -> ParabolicSubset:
    return ParabolicSubset(delta_w(d))


def nash_fixed_points(d: SchubertDatum) -> frozenset[WeylElement]:
    """Torus-fixed points of the Nash blow-up: {z in W^Q : z <= w}."""
    return interval_min_reps(d.w, nash_parabolic(d))


def nash_fiber(v: WeylElement, d: SchubertDatum) -> frozenset[WeylElement]:
    """Fixed points of the blow-up lying over the fixed point v of X_w^P.

    Enumerated by breadth-first search inside W_P: the set
    {u in W_P : v u <= w} is a lower order ideal, so growing reduced words
    letter by letter under the Bruhat bound reaches all of it.
    """
    if v.system is not d.system:
        raise ValueError("v belongs to a different root system")
    if not is_min_coset_rep(v, d.p):
        raise ValueError(f"{format_word(reduced_word(v))} is not in W^P")
    if not bruhat_leq(v, d.w):
        raise ValueError(
            f"{format_word(reduced_word(v))} is not a fixed point of the variety"
        )
    q_levi = delta_w(d)
    e = identity(d.system)
    seen: set[WeylElement] = {e}
    queue: deque[WeylElement] = deque([e])
    fiber = []
    while queue:
        u = queue.popleft()
        # v u is in W^Q iff u has no right descent inside Delta_w
        if not any(any(c < 0 for c in u.column(i)) for i in q_levi):
            fiber.append(multiply(v, u))
        for i in d.p.levi:
            nxt = _right_mult(u, i)
            if nxt.length <= u.length or nxt in seen:
                continue
            if bruhat_leq(multiply(v, nxt), d.w):
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(fiber)


def is_smooth_point(v: WeylElement, d: SchubertDatum) -> bool:
    """The blow-down is an isomorphism over v iff the fiber is a single point."""
    return len(nash_fiber(v, d)) == 1


def _fibers_by_projection(
    d: SchubertDatum,
) -> dict[WeylElement, frozenset[WeylElement]]:
    groups: dict[WeylElement, set[WeylElement]] = {}
    for z in nash_fixed_points(d):
        groups.setdefault(min_coset_rep(z, d.p), set()).add(z)
    return {v: frozenset(g) for v, g in groups.items()}


def singular_fixed_points(d: SchubertDatum) -> frozenset[WeylElement]:
    """{v in W^P : v <= w, the Nash fiber over v has more than one point}."""
    return frozenset(
        v for v, g in _fibers_by_projection(d).items() if len(g) > 1
    )


def nash_data(d: SchubertDatum) -> NashData:
    rs = d.system
    linv = left_inversions(d.w)
    winv = inverse(d.w)
    tangent_roots = frozenset(winv(g) for g in linv)
    levi = d.p.levi
    tangent_weights = frozenset(
        tuple(-c for c in a)
        for a in rs.positive_roots
        if not rs.in_levi(a, levi) and not rs.is_positive(d.w(a))
    )
    return NashData(
        delta_w=delta_w(d),
        q=nash_parabolic(d),
        fixed_points=nash_fixed_points(d),
        tangent_roots=tangent_roots,
        tangent_weights=tangent_weights,
    )


def _sort_elements(els) -> list[WeylElement]:
    return sorted(els, key=lambda z: (z.length, reduced_word(z)))


def nash_report(d: SchubertDatum) -> dict:
    """JSON-ready summary with deterministic ordering."""
    fibers = _fibers_by_projection(d)
    rows = []
    for v in _sort_elements(fibers):
        members = fibers[v]
        rows.append(
            {
                "v_word": list(reduced_word(v)),
                "fiber_words": sorted(
                    [list(reduced_word(z)) for z in members],
                    key=lambda wd: (len(wd), wd),
                ),
                "smooth": len(members) == 1,
            }
        )
    return {
        "delta_w": sorted(delta_w(d)),
        "Q_levi": sorted(nash_parabolic(d).levi),
        "fixed_point_count": len(nash_fixed_points(d)),
        "fibers": rows,
    }
