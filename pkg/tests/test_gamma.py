import math

import pytest

from floatkit import (
    PoleProximityError,
    gamma_residual,
    gamma_roots,
    gamma_set,
    nearest_root_distance,
)

import oracles


def test_no_roots_below_four():
    assert gamma_roots(2) == ()
    assert gamma_roots(3) == ()


def test_first_roots_match_closed_forms():
    """tan 4g = 4 tan g reduces to tan^2 g = 5; similar radicals exist
    for n = 5 and 6."""
    (r4,) = gamma_roots(4)
    assert r4.gamma == pytest.approx(math.atan(math.sqrt(5.0)), abs=1e-14)
    assert r4.branch_index == 1
    (r5,) = gamma_roots(5)
    assert r5.gamma == pytest.approx(math.atan(math.sqrt(5.0 / 3.0)),
                                     abs=1e-14)
    r6 = gamma_roots(6)
    assert len(r6) == 2
    lo = math.atan(math.sqrt((42.0 - 8.0 * math.sqrt(21.0)) / 6.0))
    hi = math.atan(math.sqrt((42.0 + 8.0 * math.sqrt(21.0)) / 6.0))
    assert r6[0].gamma == pytest.approx(lo, abs=1e-14)
    assert r6[1].gamma == pytest.approx(hi, abs=1e-14)


def test_root_counts_follow_floor_pattern():
    for n in range(2, 13):
        assert len(gamma_roots(n)) == (n - 2) // 2


def test_counts_agree_with_sign_scan():
    for n in (7, 10, 13):
        assert len(gamma_roots(n)) == oracles.gamma_count_by_scan(n)


def test_roots_are_certified():
    for root in gamma_set(12):
        assert 0.0 < root.gamma < math.pi / 2
        assert root.residual < 1e-10
        # the double-precision residual may be much looser on steep
        # branches; it must still vanish relative to the local slope
        raw = abs(gamma_residual(root.n, root.gamma))
        slope = root.n / math.cos(root.n * root.gamma) ** 2
        assert raw <= 1e-12 * max(1.0, slope)
        # roots stay strictly inside their pole-free branch
        poles = [p for j in range(root.n)
                 if (p := (2 * j + 1) * math.pi / (2 * root.n)) < math.pi / 2]
        poles.append(math.pi / 2)
        assert min(abs(root.gamma - p) for p in poles) > 1e-9


def test_tolerance_parameter():
    with pytest.raises(ValueError):
        gamma_roots(6, tol=1e-15)
    # the solver always runs the bisection to extended-precision width,
    # so looser tolerances return the same certified roots
    tight = gamma_roots(9)
    loose = gamma_roots(9, tol=1e-10)
    assert tuple(r.gamma for r in tight) == tuple(r.gamma for r in loose)
    assert gamma_set(7, tol=1e-12) == gamma_set(7)


def test_roots_sorted_and_distinct():
    roots = gamma_roots(12)
    gammas = [r.gamma for r in roots]
    assert gammas == sorted(gammas)
    assert len(set(gammas)) == len(gammas)
    assert all(r.n == 12 for r in roots)
    assert [r.branch_index for r in roots] == sorted(
        r.branch_index for r in roots)


def test_gamma_set_merges_and_sorts():
    roots = gamma_set(8)
    assert len(roots) == sum((n - 2) // 2 for n in range(2, 9))
    gammas = [r.gamma for r in roots]
    assert gammas == sorted(gammas)


def test_residual_pole_guard():
    with pytest.raises(PoleProximityError):
        gamma_residual(4, math.pi / 8)
    with pytest.raises(PoleProximityError):
        gamma_residual(3, math.pi / 2)
    # a plain evaluation works and is antisymmetric-free of guards
    assert gamma_residual(4, 0.3) == pytest.approx(
        math.tan(1.2) - 4 * math.tan(0.3))


def test_nearest_root_distance():
    (r4,) = gamma_roots(4)
    assert nearest_root_distance(r4.gamma) == pytest.approx(0.0, abs=1e-15)
    d = nearest_root_distance(0.2, n_max=6)
    roots = [r.gamma for r in gamma_set(6)]
    assert d == pytest.approx(min(abs(0.2 - g) for g in roots))
    assert nearest_root_distance(1.0, n_max=3) == math.inf
