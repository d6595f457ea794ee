"""Fixed points, fibers and the smooth locus of the blow-up."""

import pytest

from nashblowup import nashcore, rootsystem, weyl
from nashblowup.nashcore import (
    NotCominusculeError,
    SchubertDatum,
    delta_w,
    nash_data,
    nash_fiber,
    nash_fixed_points,
    nash_parabolic,
    nash_report,
    singular_fixed_points,
)
from nashblowup.weyl import from_word, identity, parabolic, reduced_word


def words(elements):
    return sorted(reduced_word(z) for z in elements)


class TestA3Golden:
    """Hand-checked datum: w = s1*s3*s2, levi {1, 3}."""

    def test_delta_is_empty(self, a3_datum):
        assert delta_w(a3_datum) == frozenset()

    def test_nash_parabolic_is_borel(self, a3_datum):
        assert nash_parabolic(a3_datum).levi == frozenset()

    def test_fixed_points(self, a3_datum):
        # Q = B, so the fixed points are the whole lower interval
        assert len(nash_fixed_points(a3_datum)) == 8

    def test_fiber_over_identity(self, a3, a3_datum):
        fib = nash_fiber(identity(a3), a3_datum)
        assert words(fib) == [(), (1,), (3,), (3, 1)]

    def test_fibers_over_smooth_points(self, a3, a3_datum):
        for word in [(2,), (1, 2), (3, 2), (3, 1, 2)]:
            v = from_word(a3, list(word))
            assert len(nash_fiber(v, a3_datum)) == 1
            assert nashcore.is_smooth_point(v, a3_datum)

    def test_singular_locus(self, a3, a3_datum):
        assert singular_fixed_points(a3_datum) == frozenset({identity(a3)})
        assert not nashcore.is_smooth_point(identity(a3), a3_datum)

    def test_fibers_partition_fixed_points(self, a3, a3_datum):
        total = 0
        for v in weyl.interval_min_reps(a3_datum.w, a3_datum.p):
            total += len(nash_fiber(v, a3_datum))
        assert total == len(nash_fixed_points(a3_datum))

    def test_tangent_roots(self, a3_datum):
        data = nash_data(a3_datum)
        assert set(data.tangent_roots) == {
            (0, -1, 0), (-1, -1, 0), (0, -1, -1),
        }
        assert len(data.tangent_weights) == 3

    def test_report_shape(self, a3_datum):
        report = nash_report(a3_datum)
        assert report["fixed_point_count"] == 8
        assert report["delta_w"] == []
        assert report["Q_levi"] == []
        assert len(report["fibers"]) == 5
        smooth_flags = [f["smooth"] for f in report["fibers"]]
        assert smooth_flags.count(False) == 1


def test_datum_validates_cominuscule():
    rs = rootsystem.root_system("B", 3)
    w = weyl.simple_reflection(rs, 2)
    # omitting node 2 in B3 is not cominuscule (only node 1 is)
    with pytest.raises(NotCominusculeError):
        SchubertDatum(rs, parabolic(1, 3), w)


def test_datum_validates_min_rep(a3):
    w = from_word(a3, [1, 2, 1])  # has a right descent inside the levi
    with pytest.raises(ValueError):
        SchubertDatum(a3, parabolic(1, 3), w)


def test_datum_validates_levi_range(a3):
    with pytest.raises(ValueError):
        SchubertDatum(a3, parabolic(1, 5), identity(a3))


def test_cominuscule_index(a3_datum):
    assert a3_datum.cominuscule_index == 2


def test_identity_datum_is_smooth(a3):
    d = SchubertDatum(a3, parabolic(1, 3), identity(a3))
    assert nash_fixed_points(d) == frozenset({identity(a3)})
    assert singular_fixed_points(d) == frozenset()


def test_delta_keeps_simple_images():
    # Gr(3,8): w sends alpha_5 from the levi to a simple root, keeping node 5
    rs = rootsystem.root_system("A", 7)
    from nashblowup import grassmann

    w = grassmann.perm_to_weyl(rs, (2, 5, 7, 1, 3, 4, 6, 8))
    levi = frozenset(range(1, 8)) - {3}
    d = SchubertDatum(rs, weyl.ParabolicSubset(levi), w)
    assert delta_w(d) == frozenset({5})
    assert nash_parabolic(d).levi == frozenset({5})


def test_full_grassmannian_sweep_b2():
    """Every w in B2/P1: fibers partition the fixed points."""
    rs = rootsystem.root_system("B", 2)
    p = parabolic(2)
    w0 = weyl.longest_element(rs)
    for w in weyl.interval_min_reps(w0, p):
        d = SchubertDatum(rs, p, w)
        count = sum(
            len(nash_fiber(v, d)) for v in weyl.interval_min_reps(w, p)
        )
        assert count == len(nash_fixed_points(d))


def test_fiber_requires_base_point(a3, a3_datum):
    # s1 is not a minimal coset representative for the levi {1, 3}
    with pytest.raises(ValueError):
        nash_fiber(weyl.simple_reflection(a3, 1), a3_datum)


def test_c3_top_cell_smooth():
    # the full flag-variety point w0^P: the variety is G/P itself
    rs = rootsystem.root_system("C", 3)
    p = parabolic(1, 2)
    w = weyl.min_coset_rep(weyl.longest_element(rs), p)
    d = SchubertDatum(rs, p, w)
    assert singular_fixed_points(d) == frozenset()
    assert delta_w(d) == frozenset({1, 2})
