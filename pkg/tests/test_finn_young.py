import math

import numpy as np
import pytest

from floatkit import (
    FourierConvexCurve,
    NonConvexError,
    NotARootError,
    fy_curve,
    fy_curve_multi,
    fy_equilibrium_count,
    fy_floats_everywhere,
    fy_orientation_defect,
    gamma_roots,
    shoot_chord,
    shoot_table,
)

TWO_PI = 2.0 * math.pi


def test_fy_curve_gates():
    with pytest.raises(NotARootError):
        fy_curve(4, 0.5, 0.3)
    root = gamma_roots(4)[0].gamma
    with pytest.raises(NonConvexError):
        fy_curve(4, root, 1.0)
    c = fy_curve(4, root, 0.3)
    assert c.harmonics == ((4, 0.3, 0.0),)
    assert fy_curve(4, root, 0.0).harmonics == ()


def test_fy_curves_float_at_their_roots():
    for n in (4, 5, 6, 8):
        for root in gamma_roots(n):
            c = fy_curve(n, root.gamma, 0.3)
            p = fy_floats_everywhere(c, root.gamma, n_samples=240, tol=1e-7)
            assert p.verdict, (n, root.gamma, p.max_abs_deviation)
            assert p.max_abs_deviation < 1e-9


def test_entry_angle_domain():
    root = gamma_roots(4)[0].gamma
    c = fy_curve(4, root, 0.3)
    for bad in (0.0, -0.2, 0.5 * math.pi, 2.0):
        with pytest.raises(ValueError):
            fy_floats_everywhere(c, bad)
    with pytest.raises(ValueError):
        fy_floats_everywhere(c, root, n_samples=4)


def test_exit_normal_identity_at_root():
    # for a floating curve the chord from normal angle phi exits exactly
    # at phi + 2 gamma
    root = gamma_roots(5)[0].gamma
    c = fy_curve(5, root, 0.25)
    s = c.perimeter * np.arange(40) / 40
    t = shoot_table(c, s, root)
    gap = np.mod(t["phi_end"] - t["phi_start"] - 2 * root, TWO_PI)
    gap = np.minimum(gap, TWO_PI - gap)
    assert np.max(gap) < 1e-10


def test_off_root_angle_fails():
    root = gamma_roots(4)[0].gamma
    c = fy_curve(4, root, 0.3)
    p = fy_floats_everywhere(c, root + 0.01, n_samples=240, tol=1e-6)
    assert not p.verdict
    assert p.max_abs_deviation > 1e-4


def test_profile_report_shape():
    root = gamma_roots(4)[0].gamma
    c = fy_curve(4, root, 0.3)
    profile = fy_floats_everywhere(c, root, n_samples=120, tol=1e-6)
    rep = profile.report()
    assert rep["model"] == "finn-young"
    assert rep["verdict"] is True
    assert rep["n_samples"] == 120
    assert set(rep) == {"model", "parameter", "n_samples",
                        "max_abs_deviation", "mean", "stddev", "verdict",
                        "tol"}
    # statistics are recomputable from the samples themselves
    samples = profile.samples
    assert len(samples) == 120
    ends = np.array([smp.angle_end for smp in samples])
    assert rep["mean"] == pytest.approx(float(np.mean(ends)), abs=0.0)
    assert rep["stddev"] == pytest.approx(float(np.std(ends)), abs=0.0)


def test_fy_curve_multi():
    root = gamma_roots(4)[0].gamma
    c = fy_curve_multi(root, [(4, 0.2, 0.15)])
    assert fy_floats_everywhere(c, root, n_samples=240, tol=1e-7).verdict
    with pytest.raises(NotARootError):
        fy_curve_multi(root, [(4, 0.2, 0.0), (5, 0.1, 0.0)])
    with pytest.raises(NonConvexError):
        fy_curve_multi(root, [(4, 0.8, 0.6)])


def test_defect_matches_position_route():
    """The closed-form defect must equal the symmetric-chord projection
    -Re(e^{-ic} (P(c + g) - P(c - g))) computed from positions."""
    c = FourierConvexCurve(1.0, [(2, 0.15, 0.05), (3, 0.1, -0.08),
                                 (7, 0.0, 0.03)])
    gamma = 0.7
    cs = np.linspace(0.0, TWO_PI, 41)
    h = fy_orientation_defect(c, gamma, cs)
    d = c.position_at_angle(cs + gamma) - c.position_at_angle(cs - gamma)
    geom = -(np.cos(cs) * d[:, 0] + np.sin(cs) * d[:, 1])
    np.testing.assert_allclose(h, geom, atol=1e-14)
    # scalar call agrees with the vectorized one
    assert fy_orientation_defect(c, gamma, 0.9) == pytest.approx(
        float(fy_orientation_defect(c, gamma, np.array([0.9]))[0]))


def test_defect_vanishes_for_disc_and_admissible_curves():
    assert fy_orientation_defect(FourierConvexCurve(1.0, []), 0.8, 1.0) == 0.0
    root = gamma_roots(6)[1].gamma
    c = fy_curve(6, root, 0.4)
    cs = np.linspace(0.0, TWO_PI, 64)
    assert np.max(np.abs(fy_orientation_defect(c, root, cs))) < 1e-14


def test_equilibrium_scan_single_harmonic():
    # rho = 1 + 0.2 cos(3 t) at a generic angle: the symmetric-chord
    # defect is a pure sin(3c), so equilibria sit at orientations
    # c = k pi/3 and their chords point along alpha = c + pi/2
    c = FourierConvexCurve(1.0, [(3, 0.2, 0.0)])
    scan = fy_equilibrium_count(c, 0.8)
    assert not scan.all_orientations
    assert scan.count == 6
    expect = np.sort((np.arange(6) * math.pi / 3.0 + 0.5 * math.pi) % TWO_PI)
    np.testing.assert_allclose(np.sort(scan.orientations), expect, atol=1e-7)
    assert len(scan.arc_positions) == 6


def test_equilibrium_scan_all_orientations():
    root = gamma_roots(4)[0].gamma
    scan = fy_equilibrium_count(fy_curve(4, root, 0.3), root)
    assert scan.all_orientations
    assert scan.count == math.inf
    assert scan.orientations == ()


def test_equilibrium_scan_input_gates():
    c = FourierConvexCurve(1.0, [(3, 0.2, 0.0)])
    with pytest.raises(ValueError):
        fy_equilibrium_count(c, 0.8, n_samples=200)
    with pytest.raises(ValueError):
        fy_equilibrium_count(c, 1.6)


def test_equilibria_are_equal_angle_chords():
    """Chords shot from the refined equilibrium positions leave the curve
    at the entry angle, and the closed-form defect vanishes at the
    matching orientation."""
    gamma = 0.7
    c = FourierConvexCurve(1.0, [(2, 0.15, 0.05), (3, 0.1, -0.08)])
    scan = fy_equilibrium_count(c, gamma)
    assert scan.count >= 4
    for s in scan.arc_positions:
        sample = shoot_chord(c, s, gamma)
        assert sample.angle_end == pytest.approx(gamma, abs=1e-7)
        t = shoot_table(c, [s], gamma)
        orient = 0.5 * (t["phi_start"][0] + t["phi_end"][0]) % TWO_PI
        assert abs(fy_orientation_defect(c, gamma, orient)) < 1e-7


def test_equilibrium_count_at_least_four():
    rng = np.random.default_rng(11)
    for _ in range(10):
        terms = []
        for n in rng.choice(np.arange(2, 8), size=2, replace=False):
            terms.append((int(n), rng.normal() * 0.1, rng.normal() * 0.1))
        c = FourierConvexCurve(1.0, terms)
        scan = fy_equilibrium_count(c, float(rng.uniform(0.3, 1.2)))
        assert scan.all_orientations or scan.count >= 4