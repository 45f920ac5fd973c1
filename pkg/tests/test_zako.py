import math

import numpy as np
import pytest

from floatkit import (
    AmbiguousArcError,
    ArcSplineCurve,
    InvalidCurveError,
    NotConcyclicError,
    ZaKoPolygon,
    arch_profile,
    constant_angle_diagnostic,
    is_convex,
    midpoint_polygon,
    zako_construct,
    zako_validate,
)

import oracles

TWO_PI = 2.0 * math.pi


def flower():
    return zako_construct(midpoint_polygon(3))


def arc_points(arc, m=200):
    """Sample an arc from its public fields, independent of spline code."""
    t0, t1 = arc.start_angle, arc.end_angle
    extent = (t1 - t0) % TWO_PI if arc.ccw else (t0 - t1) % TWO_PI
    sgn = 1.0 if arc.ccw else -1.0
    ang = t0 + sgn * extent * np.linspace(0.0, 1.0, m)
    return np.stack(
        [
            arc.center[0] + arc.radius * np.cos(ang),
            arc.center[1] + arc.radius * np.sin(ang),
        ],
        axis=1,
    )


def test_polygon_validation():
    with pytest.raises(InvalidCurveError):
        ZaKoPolygon(vertices=((0, 0), (1, 0), (0, 1)), k=2)
    with pytest.raises(InvalidCurveError):
        ZaKoPolygon(vertices=((0, 0), (1, 0), (1, 1), (0, 1)), k=2)
    hexa = midpoint_polygon(3)
    assert hexa.n == 3
    assert hexa.k == 3
    # the step is a diagonal: 1 < k <= n
    with pytest.raises(InvalidCurveError):
        ZaKoPolygon(vertices=hexa.vertices, k=1)
    with pytest.raises(InvalidCurveError):
        ZaKoPolygon(vertices=hexa.vertices, k=4)
    assert ZaKoPolygon(vertices=hexa.vertices, k=2).k == 2
    with pytest.raises(InvalidCurveError):
        ZaKoPolygon(vertices=((0, 0), (0, 0), (1, 0), (1, 1), (0, 1), (-1, 0)), k=2)


def test_midpoint_polygon_layout():
    p = midpoint_polygon(3, circumradius=2.0)
    arr = p.as_array()
    radii = np.hypot(arr[:, 0], arr[:, 1])
    np.testing.assert_allclose(radii[0::2], 2.0, atol=1e-12)
    np.testing.assert_allclose(radii[1::2], 2.0 * math.cos(math.pi / 3),
                               atol=1e-12)
    assert midpoint_polygon(4).k == 3
    assert midpoint_polygon(5).k == 5
    assert midpoint_polygon(6).k == 5


def test_validate_odd_midpoint_polygons():
    for n in (3, 5, 7):
        diag = zako_validate(midpoint_polygon(n))
        assert diag.admissible
        assert diag.condition_i and diag.condition_i_prime and diag.condition_ii
        assert diag.simple
        assert diag.side_spread < 1e-12
        assert diag.side_deviation < 1e-12
        assert diag.diagonal_deviation < 1e-12
        assert diag.concyclicity_residual < 1e-12
        assert all(diag.concyclic)
        assert len(diag.circles) == n
        assert len(diag.concyclicity_residuals) == n


def test_even_midpoint_polygons_fail_concyclicity():
    # with the odd step k = n - 1 every length condition holds, but the
    # fourth vertex of each opposite-side quadrilateral misses the circle
    # through the other three by (sqrt(5) - 1) / 2 at circumradius 1
    diag = zako_validate(midpoint_polygon(4))
    assert diag.condition_i and diag.condition_i_prime and diag.condition_ii
    assert not any(diag.concyclic)
    assert diag.concyclicity_residual == pytest.approx(
        (math.sqrt(5.0) - 1.0) / 2.0, abs=1e-12)
    assert not diag.admissible
    diag6 = zako_validate(midpoint_polygon(6))
    assert diag6.condition_ii
    assert not diag6.admissible


def test_construct_rejects_inadmissible():
    with pytest.raises(NotConcyclicError):
        zako_construct(midpoint_polygon(4))


def test_validate_handles_degenerate_quadrilateral():
    # vertices 0, 1, 3 are collinear, so the first fit triple has no
    # circle; validation records that instead of raising
    p = ZaKoPolygon(
        vertices=((0, 0), (1, 0), (2, 1), (3, 0), (1.5, -2), (0.5, -1.5)),
        k=3,
    )
    diag = zako_validate(p)
    assert not diag.admissible
    assert math.isinf(diag.concyclicity_residual)
    assert any(c is None for c in diag.circles)
    with pytest.raises(AmbiguousArcError):
        zako_construct(p)


def test_flower_geometry():
    f = flower()
    assert isinstance(f, ArcSplineCurve)
    assert len(f.arcs) == 6
    assert f.perimeter == pytest.approx(math.sqrt(3.0) * math.pi)
    # each petal bite is a quarter-circle segment of radius sqrt(3)/2 on
    # a unit-side triangle scaled by circumradius 1
    assert f.enclosed_area() == pytest.approx(
        3.0 * (math.pi / 4.0 - math.sqrt(3.0) / 8.0), abs=1e-12)
    pts = oracles.polyline(f, 200_000)
    assert f.enclosed_area() == pytest.approx(oracles.shoelace_area(pts),
                                              rel=1e-8)
    turns = f.junction_exterior_angles()
    np.testing.assert_allclose(np.abs(turns), math.pi / 3.0, atol=1e-12)
    assert np.sum(turns > 0) == 3
    assert np.sum(turns < 0) == 3
    assert not is_convex(f)
    assert f.validate_simple()


def test_vertices_on_adjacent_circles():
    for n in (3, 5):
        p = midpoint_polygon(n)
        f = zako_construct(p)
        a = p.as_array()
        for m in range(2 * n):
            for arc in (f.arcs[(m - 1) % (2 * n)], f.arcs[m]):
                d = math.hypot(a[m][0] - arc.center[0], a[m][1] - arc.center[1])
                assert abs(d - arc.radius) < 1e-9


def test_arcs_avoid_paired_vertices():
    # the chosen arc must stay clear of the opposite side's endpoints,
    # which lie on the same circle
    p = midpoint_polygon(3)
    f = zako_construct(p)
    a = p.as_array()
    n = p.n
    for m, arc in enumerate(f.arcs):
        partner = (m + n) % (2 * n)
        avoid = a[[partner, (partner + 1) % (2 * n)]]
        pts = arc_points(arc)
        d = np.linalg.norm(pts[:, None, :] - avoid[None, :, :], axis=2)
        assert float(np.min(d)) > 0.1


def test_flower_floats_at_half():
    f = flower()
    p = arch_profile(f, 0.5, n_samples=240, tol=1e-6)
    assert p.verdict
    assert p.max_abs_deviation < 1e-9
    # halving chords ride a single circle: constant length 1.5 at
    # circumradius 1
    assert p.stats["chord_length"].mean == pytest.approx(1.5, abs=1e-9)
    assert p.stats["cap_area"].mean == pytest.approx(
        0.5 * f.enclosed_area(), abs=1e-9)


def test_flower_fails_other_fractions():
    f = flower()
    p = arch_profile(f, 1.0 / 3.0, n_samples=240, tol=1e-6)
    assert not p.verdict
    assert p.max_abs_deviation > 1e-3


def test_flower_floats_after_rigid_motion():
    f = flower().transformed(angle=0.613, translation=(3.2, -1.1), scale=2.7)
    p = arch_profile(f, 0.5, n_samples=240, tol=1e-6)
    assert p.verdict
    assert p.stats["chord_length"].mean == pytest.approx(2.7 * 1.5, abs=1e-8)


def test_pentagon_flower_floats():
    f = zako_construct(midpoint_polygon(5))
    assert len(f.arcs) == 10
    p = arch_profile(f, 0.5, n_samples=200, tol=1e-6)
    assert p.verdict, p.max_abs_deviation
    assert not is_convex(f)


def test_flower_angle_alternates_so_diagnostic_stays_quiet():
    # each halving chord meets the two boundary points at equal angles,
    # but the value seen from the sweep alternates between pi/3 and
    # 2 pi/3 as the start point hops between convex and reflex lobes,
    # so the constant-angle flag must not fire
    prof = arch_profile(flower(), 0.5, n_samples=240, tol=1e-6)
    d = constant_angle_diagnostic(prof)
    assert not d["triggered"]
    assert not d["constant"]
    assert d["angle_spread"] == pytest.approx(math.pi / 3.0, abs=1e-6)
    assert math.pi / 3.0 - 1e-6 < d["mean_angle"] < 2.0 * math.pi / 3.0 + 1e-6
