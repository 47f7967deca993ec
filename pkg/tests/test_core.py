"""Metric, region, and symmetry primitives."""

import dataclasses
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from taxicassini.core import (
    GeometryError,
    Isometry,
    ORIGIN,
    Point,
    PointGroup,
    RegionId,
    apply_isometry,
    classify_region,
    closer_to,
    coordinate_signs,
    foci_frame,
    standardize,
    taxicab_distance,
)

# Dyadic rationals keep every sum, difference, and halving exact in floats,
# so the property tests can assert equality without tolerances.
dyadic = st.integers(-320, 320).map(lambda k: k / 16.0)
dyadic_points = st.builds(Point, dyadic, dyadic)


class TestPoint:
    def test_rejects_non_finite(self):
        with pytest.raises(GeometryError):
            Point(float("nan"), 0.0)
        with pytest.raises(GeometryError):
            Point(0.0, float("inf"))

    def test_frozen_and_hashable(self):
        p = Point(1.0, 2.0)
        with pytest.raises(dataclasses.FrozenInstanceError):
            p.x1 = 3.0
        assert len({Point(1.0, 2.0), Point(1.0, 2.0)}) == 1

    def test_iteration_negation_coord(self):
        p = Point(3.0, -4.0)
        assert tuple(p) == (3.0, -4.0)
        assert -p == Point(-3.0, 4.0)
        assert p.coord(1) == 3.0
        assert p.coord(2) == -4.0


class TestDistance:
    def test_known_value(self):
        assert taxicab_distance(Point(8, 3), Point(-8, -3)) == 22.0

    def test_zero_iff_equal(self):
        assert taxicab_distance(Point(1.5, -2.0), Point(1.5, -2.0)) == 0.0
        assert taxicab_distance(Point(1.5, -2.0), Point(1.5, -1.0)) == 1.0

    @given(dyadic_points, dyadic_points)
    def test_symmetry(self, a, b):
        assert taxicab_distance(a, b) == taxicab_distance(b, a)

    @given(dyadic_points, dyadic_points, dyadic_points)
    def test_triangle_inequality(self, a, b, c):
        assert taxicab_distance(a, c) <= taxicab_distance(a, b) + taxicab_distance(b, c)

    @given(dyadic_points, dyadic_points, dyadic_points)
    def test_translation_invariance(self, a, b, t):
        shifted = taxicab_distance(
            Point(a.x1 + t.x1, a.x2 + t.x2), Point(b.x1 + t.x1, b.x2 + t.x2)
        )
        assert shifted == taxicab_distance(a, b)


class TestSignsAndHalfPlanes:
    def test_signs_at_focus_are_zero(self):
        assert coordinate_signs(Point(4, 1), Point(4, 1)) == (0, 0)

    def test_signs_quadrant(self):
        assert coordinate_signs(Point(4, 1), Point(10, 10)) == (1, 1)
        assert coordinate_signs(Point(4, 1), Point(-10, 10)) == (-1, 1)
        assert coordinate_signs(Point(4, 1), Point(4, -10)) == (0, -1)

    def test_closer_to_tie_is_inclusive(self):
        a, b = Point(1, 0), Point(-1, 0)
        assert closer_to(a, b, ORIGIN)
        assert closer_to(b, a, ORIGIN)

    @given(dyadic_points, dyadic_points, dyadic_points)
    def test_closer_to_matches_distances(self, a, b, x):
        assert closer_to(a, b, x) == (taxicab_distance(x, a) <= taxicab_distance(x, b))


class TestFociFrame:
    def test_centered_instance(self):
        frame = foci_frame(Point(4, 1), Point(-4, -1))
        assert frame.c1 == Point(4, -1)
        assert frame.c2 == Point(-4, 1)
        assert frame.g_plus == Point(-1, -4)
        assert frame.g_minus == Point(1, 4)
        assert frame.mid == ORIGIN

    def test_wide_instance(self):
        frame = foci_frame(Point(8, 3), Point(-8, -3))
        assert frame.g_plus == Point(-3, -8)
        assert frame.g_minus == Point(3, 8)

    def test_offset_instance(self):
        frame = foci_frame(Point(1, 2), Point(4, 3))
        assert frame.g_plus == Point(3, 4)
        assert frame.g_minus == Point(2, 1)
        assert frame.c1 == Point(1, 3)
        assert frame.c2 == Point(4, 2)

    @given(dyadic_points, dyadic_points)
    def test_guide_complements_lie_on_guide_lines(self, p, q):
        frame = foci_frame(p, q)
        # g+ is on the slope +1 line through p and the slope -1 line through q.
        assert frame.g_plus.x1 - p.x1 == frame.g_plus.x2 - p.x2
        assert frame.g_plus.x1 - q.x1 == -(frame.g_plus.x2 - q.x2)
        assert frame.g_minus.x1 - p.x1 == -(frame.g_minus.x2 - p.x2)
        assert frame.g_minus.x1 - q.x1 == frame.g_minus.x2 - q.x2


class TestClassifyRegion:
    frame = foci_frame(Point(4, 1), Point(-4, -1))

    @pytest.mark.parametrize(
        "x,region",
        [
            (Point(10, 10), RegionId.QUADRANT_P),
            (Point(10, 0), RegionId.STRIP_P_C1),
            (Point(10, -10), RegionId.QUADRANT_C1),
            (Point(0, 10), RegionId.STRIP_P_C2),
            (Point(0, 0), RegionId.CENTRAL_RECTANGLE),
            (Point(0, -10), RegionId.STRIP_Q_C1),
            (Point(-10, 10), RegionId.QUADRANT_C2),
            (Point(-10, 0), RegionId.STRIP_Q_C2),
            (Point(-10, -10), RegionId.QUADRANT_Q),
        ],
    )
    def test_interior_points_get_one_region(self, x, region):
        assert classify_region(self.frame, x) == frozenset({region})

    def test_focus_is_a_four_corner(self):
        regions = classify_region(self.frame, Point(4, 1))
        assert regions == frozenset(
            {
                RegionId.QUADRANT_P,
                RegionId.STRIP_P_C1,
                RegionId.STRIP_P_C2,
                RegionId.CENTRAL_RECTANGLE,
            }
        )

    def test_collapsed_frame_keeps_identities(self):
        frame = foci_frame(Point(5, 0), Point(-5, 0))
        regions = classify_region(frame, Point(0, 0))
        assert regions == frozenset(
            {
                RegionId.STRIP_P_C2,
                RegionId.CENTRAL_RECTANGLE,
                RegionId.STRIP_Q_C1,
            }
        )

    @given(dyadic_points, dyadic_points, dyadic_points)
    def test_every_point_is_covered(self, p, q, x):
        assert classify_region(foci_frame(p, q), x)


class TestPointGroup:
    def test_basis_images(self):
        images = {g: (g.apply(1.0, 0.0), g.apply(0.0, 1.0)) for g in PointGroup}
        assert images[PointGroup.IDENTITY] == ((1, 0), (0, 1))
        assert images[PointGroup.ROT90] == ((0, 1), (-1, 0))
        assert images[PointGroup.ROT180] == ((-1, 0), (0, -1))
        assert images[PointGroup.ROT270] == ((0, -1), (1, 0))
        assert images[PointGroup.FLIP_X1] == ((-1, 0), (0, 1))
        assert images[PointGroup.FLIP_X2] == ((1, 0), (0, -1))
        assert images[PointGroup.FLIP_DIAG] == ((0, 1), (1, 0))
        assert images[PointGroup.FLIP_ANTIDIAG] == ((0, -1), (-1, 0))

    def test_compose_matches_function_composition(self):
        samples = [(1.0, 0.0), (0.0, 1.0), (2.5, -3.25)]
        for g in PointGroup:
            for h in PointGroup:
                combined = g.compose(h)
                for x, y in samples:
                    assert combined.apply(x, y) == g.apply(*h.apply(x, y))

    def test_inverse(self):
        for g in PointGroup:
            assert g.compose(g.inverse()) is PointGroup.IDENTITY
            assert g.inverse().compose(g) is PointGroup.IDENTITY

    def test_rotation_order(self):
        r = PointGroup.ROT90
        assert r.compose(r) is PointGroup.ROT180
        assert r.compose(r.compose(r)) is PointGroup.ROT270

    @given(dyadic_points)
    def test_elements_preserve_distance(self, x):
        for g in PointGroup:
            y = Point(*g.apply(x.x1, x.x2))
            assert taxicab_distance(y, ORIGIN) == taxicab_distance(x, ORIGIN)


class TestIsometry:
    @given(dyadic_points, dyadic_points)
    def test_inverse_roundtrip(self, t, x):
        for g in PointGroup:
            iso = Isometry(g, t)
            assert iso.inverse().apply(iso.apply(x)) == x
            assert iso.apply(iso.inverse().apply(x)) == x

    @given(dyadic_points, dyadic_points, dyadic_points)
    def test_compose_acts_like_sequencing(self, t1, t2, x):
        first = Isometry(PointGroup.ROT90, t1)
        second = Isometry(PointGroup.FLIP_DIAG, t2)
        assert second.compose(first).apply(x) == second.apply(first.apply(x))

    def test_is_identity(self):
        assert Isometry(PointGroup.IDENTITY).is_identity
        assert not Isometry(PointGroup.IDENTITY, Point(1, 0)).is_identity
        assert not Isometry(PointGroup.ROT180).is_identity

    @given(dyadic_points, dyadic_points, dyadic_points)
    def test_preserves_distance(self, t, a, b):
        for g in PointGroup:
            iso = Isometry(g, t)
            assert taxicab_distance(iso.apply(a), iso.apply(b)) == taxicab_distance(a, b)


class TestStandardize:
    def test_known_pair(self):
        iso, p_std, q_std = standardize(Point(1, 2), Point(3, 4))
        assert iso.element is PointGroup.ROT180
        assert p_std == Point(1, 1)
        assert q_std == Point(-1, -1)
        assert apply_isometry(iso, Point(1, 2)) == p_std
        assert apply_isometry(iso, Point(3, 4)) == q_std

    def test_already_standard_gets_identity(self):
        iso, p_std, q_std = standardize(Point(4, 1), Point(-4, -1))
        assert iso.element is PointGroup.IDENTITY
        assert iso.translation == ORIGIN
        assert p_std == Point(4, 1)
        assert q_std == Point(-4, -1)

    def test_coincident_foci(self):
        iso, p_std, q_std = standardize(Point(2, -7), Point(2, -7))
        assert p_std == ORIGIN == q_std
        assert apply_isometry(iso, Point(2, -7)) == ORIGIN

    @given(dyadic_points, dyadic_points)
    def test_octant_normal_form(self, p, q):
        iso, p_std, q_std = standardize(p, q)
        assert p_std.x1 >= p_std.x2 >= 0
        assert q_std == -p_std
        assert apply_isometry(iso, p) == p_std
        assert apply_isometry(iso, q) == q_std
        # Round trip through the inverse recovers the original foci.
        assert apply_isometry(iso.inverse(), p_std) == p
        assert apply_isometry(iso.inverse(), q_std) == q
