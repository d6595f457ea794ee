"""Weyl group elements, Bruhat order and parabolic coset representatives.

An element is stored as its integer action matrix on simple-root coordinates
(column j holds the coordinates of w(alpha_j)), which makes equality, hashing
and composition exact and cheap at the ranks this package targets.  Elements
are interned per root system, so repeated products hit caches instead of
recomputing lengths and reduced words.

Conventions: all products compose as functions, so from_word([1, 3, 2]) is
s_1 s_3 s_2 and sends x to s_1(s_3(s_2(x))).  "Minimal coset representative"
always refers to right cosets w W_P.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .rootsystem import Root, RootSystem, format_root

__all__ = [
    "WeylElement",
    "ParabolicSubset",
    "parabolic",
    "elements_of_parabolic",
    "identity",
    "simple_reflection",
    "from_word",
    "multiply",
    "inverse",
    "apply_to_root",
    "reduced_word",
    "format_word",
    "right_descents",
    "left_inversions",
    "left_inversions_p",
    "bruhat_leq",
    "lower_interval",
    "interval_min_reps",
    "is_min_coset_rep",
    "min_coset_rep",
    "max_coset_rep",
    "reflection_from_root",
    "longest_element",
    "weyl_group",
    "INTERVAL_GUARD_ENV",
    "DEFAULT_INTERVAL_GUARD",
]

INTERVAL_GUARD_ENV = "NASHBLOWUP_INTERVAL_MAX"
DEFAULT_INTERVAL_GUARD = 20


class WeylElement:
    """A Weyl group element as an action matrix on the root lattice."""

    __slots__ = ("system", "mat", "_hash", "_length", "_word")

    def __init__(self, system: RootSystem, mat: tuple[tuple[int, ...], ...]) -> None:
        self.system = system
        self.mat = mat
        self._hash = hash(mat)
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeylElement)
            and self.system is other.system
            and self.mat == other.mat
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<{format_word(reduced_word(self))} in {self.system.cartan_type}>"

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(
                1 for b in self.system.positive_roots if not self.system.is_positive(self(b))
            )
        return self._length

    def __call__(self, root: Root) -> Root:
        m = self.mat
        n = self.system.rank
        return tuple(sum(m[i][j] * root[j] for j in range(n)) for i in range(n))

    def column(self, j: int) -> Root:
        """Image of alpha_j (1-based), read off without a matrix product."""
        return tuple(row[j - 1] for row in self.mat)


@dataclass(frozen=True)
class ParabolicSubset:
    """A standard parabolic, named by the simple indices inside its Levi."""

    levi: frozenset[int]

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.levi)) + "}"


def parabolic(*indices: int) -> ParabolicSubset:
    return ParabolicSubset(frozenset(indices))


def _check_levi(system: RootSystem, p: ParabolicSubset) -> None:
    bad = [i for i in p.levi if not 1 <= i <= system.rank]
    if bad:
        raise ValueError(f"levi indices {sorted(bad)} out of range 1..{system.rank}")


@lru_cache(maxsize=None)
def _element(system: RootSystem, mat: tuple[tuple[int, ...], ...]) -> WeylElement:
    return WeylElement(system, mat)


@lru_cache(maxsize=None)
def identity(system: RootSystem) -> WeylElement:
    n = system.rank
    mat = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    e = _element(system, mat)
    e._length = 0
    e._word = ()
    return e


@lru_cache(maxsize=None)
def simple_reflection(system: RootSystem, i: int) -> WeylElement:
    """s_i, acting by s_i(alpha_j) = alpha_j - a[i][j] alpha_i."""
    if not 1 <= i <= system.rank:
        raise ValueError(f"simple index {i} out of range 1..{system.rank}")
    n = system.rank
    a = system.cartan_matrix
    cols = []
    for j in range(n):
        col = [int(r == j) for r in range(n)]
        col[i - 1] -= a[i - 1][j]
        cols.append(col)
    mat = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
    return _element(system, mat)


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    if u.system is not v.system:
        raise ValueError("cannot multiply elements of different root systems")
    n = u.system.rank
    a, b = u.mat, v.mat
    mat = tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return _element(u.system, mat)


@lru_cache(maxsize=None)
def _right_mult(w: WeylElement, i: int) -> WeylElement:
    return multiply(w, simple_reflection(w.system, i))


def from_word(system: RootSystem, word: Iterable[int]) -> WeylElement:
    w = identity(system)
    for i in word:
        w = _right_mult(w, i)
    return w


def right_descents(w: WeylElement) -> frozenset[int]:
    """{i : w(alpha_i) is a negative root}, read from matrix columns."""
    out = []
    for i in range(1, w.system.rank + 1):
        col = w.column(i)
        if any(c < 0 for c in col):
            out.append(i)
    return frozenset(out)


def reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Lexicographically greedy reduced word, cached on the element."""
    if w._word is not None:
        return w._word
    word: list[int] = []
    cur = w
    while True:
        ds = right_descents(cur)
        if not ds:
            break
        i = min(ds)
        word.append(i)
        cur = _right_mult(cur, i)
    word.reverse()
    w._word = tuple(word)
    return w._word


def format_word(word: Iterable[int]) -> str:
    """'s1s3s2' style rendering; the identity prints as 'e'."""
    word = tuple(word)
    return "".join(f"s{i}" for i in word) if word else "e"


@lru_cache(maxsize=None)
def inverse(w: WeylElement) -> WeylElement:
    return from_word(w.system, reversed(reduced_word(w)))


def apply_to_root(w: WeylElement, root: Root) -> Root:
    return w(root)


@lru_cache(maxsize=None)
def left_inversions(w: WeylElement) -> frozenset[Root]:
    """LInv(w) = w(R^-) intersected with R^+."""
    rs = w.system
    return frozenset(g for b in rs.negative_roots if rs.is_positive(g := w(b)))


@lru_cache(maxsize=None)
def left_inversions_p(w: WeylElement, p: ParabolicSubset) -> frozenset[Root]:
    """LInv^P(w) = w(R^- minus R_L^-) intersected with R^+.

    Constant on cosets w W_P, and equal to left_inversions(w) exactly when w
    is the minimal coset representative.
    """
    rs = w.system
    _check_levi(rs, p)
    out = []
    for b in rs.negative_roots:
        if rs.in_levi(b, p.levi):
            continue
        g = w(b)
        if rs.is_positive(g):
            out.append(g)
    return frozenset(out)


def is_min_coset_rep(w: WeylElement, p: ParabolicSubset) -> bool:
    _check_levi(w.system, p)
    return not (right_descents(w) & p.levi)


@lru_cache(maxsize=None)
def min_coset_rep(w: WeylElement, p: ParabolicSubset) -> WeylElement:
    """The minimal length representative of w W_P."""
    _check_levi(w.system, p)
    cur = w
    while True:
        ds = right_descents(cur) & p.levi
        if not ds:
            return cur
        cur = _right_mult(cur, min(ds))


@lru_cache(maxsize=None)
def max_coset_rep(w: WeylElement, p: ParabolicSubset) -> WeylElement:
    """The maximal length representative of w W_P (= min rep times w_0 of W_P)."""
    _check_levi(w.system, p)
    cur = w
    while True:
        ups = p.levi - right_descents(cur)
        if not ups:
            return cur
        cur = _right_mult(cur, min(ups))


def _bruhat_same_system(v: WeylElement, w: WeylElement) -> None:
    if v.system is not w.system:
        raise ValueError("Bruhat comparison across different root systems")


@lru_cache(maxsize=None)
def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat order by the descent recursion."""
    _bruhat_same_system(v, w)
    if v.length == 0:
        return True
    if v.length > w.length:
        return False
    i = min(right_descents(w))
    wsi = _right_mult(w, i)
    vsi = _right_mult(v, i)
    if vsi.length < v.length:
        return bruhat_leq(vsi, wsi)
    return bruhat_leq(v, wsi)


def _interval_guard(max_length: int | None) -> int:
    if max_length is not None:
        return max_length
    env = os.environ.get(INTERVAL_GUARD_ENV)
    return int(env) if env else DEFAULT_INTERVAL_GUARD


@lru_cache(maxsize=64)
def _lower_interval(w: WeylElement) -> frozenset[WeylElement]:
    # subword products of one reduced word, deduplicated prefix by prefix
    current: set[WeylElement] = {identity(w.system)}
    for i in reduced_word(w):
        current |= {_right_mult(v, i) for v in current}
    return frozenset(current)


def lower_interval(w: WeylElement, max_length: int | None = None) -> frozenset[WeylElement]:
    """All v <= w.  Guarded by length to avoid accidental huge enumerations."""
    bound = _interval_guard(max_length)
    if w.length > bound:
        raise ValueError(
            f"length {w.length} exceeds the interval guard {bound}; "
            f"raise it via the max_length argument or ${INTERVAL_GUARD_ENV}"
        )
    return _lower_interval(w)


def interval_min_reps(
    w: WeylElement, p: ParabolicSubset, max_length: int | None = None
) -> frozenset[WeylElement]:
    """{v in W^P : v <= w}."""
    return frozenset(
        v for v in lower_interval(w, max_length) if is_min_coset_rep(v, p)
    )


@lru_cache(maxsize=None)
def reflection_from_root(system: RootSystem, alpha: Root) -> WeylElement:
    """The reflection r_alpha as a group element."""
    if not system.is_root(alpha):
        raise ValueError(f"{alpha} is not a root of {system.cartan_type}")
    n = system.rank
    cols = [system.reflect(alpha, system.simple_root(j)) for j in range(1, n + 1)]
    mat = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
    return _element(system, mat)


def longest_element(system: RootSystem) -> WeylElement:
    return max_coset_rep(
        identity(system), ParabolicSubset(frozenset(range(1, system.rank + 1)))
    )


def weyl_group(system: RootSystem) -> frozenset[WeylElement]:
    """The whole group, by breadth-first closure over right multiplication."""
    e = identity(system)
    seen: set[WeylElement] = {e}
    queue: deque[WeylElement] = deque([e])
    while queue:
        w = queue.popleft()
        for i in range(1, system.rank + 1):
            nxt = _right_mult(w, i)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def elements_of_parabolic(
    system: RootSystem, p: ParabolicSubset
) -> Iterator[WeylElement]:
    """All elements of W_P, by closure over the Levi generators."""
    _check_levi(system, p)
    e = identity(system)
    seen: set[WeylElement] = {e}
    queue: deque[WeylElement] = deque([e])
    while queue:
        w = queue.popleft()
        yield w
        for i in p.levi:
            nxt = _right_mult(w, i)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
