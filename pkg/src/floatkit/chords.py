"""Chord sampling and shooting on closed curves.

A chord is recorded together with the data the floating models care about:
the angles it makes with the boundary at both ends, its length, and the
area it cuts off.  Angles are measured between the chord direction (from
start to end) and the forward unit tangent at each endpoint, so they lie in
(0, pi) and a chord meeting the boundary symmetrically reports the same
value twice.  The cut-off area is the region enclosed by the forward
boundary arc from start to end and the chord closing it, computed from the
curve's exact Green antiderivative.

``shoot_chord`` launches a chord into a strictly convex curve at a
prescribed entry angle and returns the full record for the chord it lands
on.  Strict convexity makes the exit unique, so a guarded bisection in the
normal-angle parameter is exact and needs no initial guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import TWO_PI, FourierConvexCurve
from .errors import (
    DegenerateChordError,
    NearTangencyError,
    NoIntersectionError,
    NonConvexError,
)

# Samples closer than this (arc length) to a junction are flagged as corner
# samples; angle statistics exclude them because the tangent jumps there.
CORNER_TOL = 1e-6

# Entry or exit angles outside (ANGLE_GUARD, pi - ANGLE_GUARD) count as
# tangential and are refused.
ANGLE_GUARD = 1e-6


@dataclass(frozen=True)
class ChordSample:
    """One chord with its floating-model observables."""

    s_start: float
    s_end: float
    p_start: tuple
    p_end: tuple
    direction_alpha: float
    angle_start: float
    angle_end: float
    chord_length: float
    cap_area: float
    corner_start: bool
    corner_end: bool


def chord_table(curve, s_start, s_end):
    """Vectorized chord observables for paired arc-length arrays.

    Returns a dict of numpy arrays keyed by the ``ChordSample`` field
    names, with endpoints stored as ``(N, 2)`` arrays.
    """
    s1 = np.atleast_1d(np.asarray(s_start, dtype=float))
    s2 = np.atleast_1d(np.asarray(s_end, dtype=float))
    if s1.shape != s2.shape:
        raise ValueError("start and end arrays must have matching shapes")
    p1 = np.atleast_2d(curve.point_at(s1))
    p2 = np.atleast_2d(curve.point_at(s2))
    t1 = np.atleast_2d(curve.tangent_at(s1))
    t2 = np.atleast_2d(curve.tangent_at(s2))
    return _assemble(curve, s1, s2, p1, p2, t1, t2)


def _assemble(curve, s1, s2, p1, p2, t1, t2):
    d = p2 - p1
    length = np.hypot(d[:, 0], d[:, 1])
    if np.any(length < 1e-12 * max(1.0, curve.perimeter)):
        raise DegenerateChordError("chord endpoints coincide")
    dhat = d / length[:, None]
    angle_start = np.arccos(np.clip(np.sum(dhat * t1, axis=1), -1.0, 1.0))
    angle_end = np.arccos(np.clip(np.sum(dhat * t2, axis=1), -1.0, 1.0))
    alpha = np.mod(np.arctan2(d[:, 1], d[:, 0]), TWO_PI)

    per = curve.perimeter
    s1m = np.mod(s1, per)
    s2m = np.mod(s2, per)
    g1 = np.atleast_1d(curve.green_prefix(s1m))
    g2 = np.atleast_1d(curve.green_prefix(s2m))
    wrap = (s2m < s1m).astype(float)
    closing = 0.5 * (p2[:, 0] * p1[:, 1] - p2[:, 1] * p1[:, 0])
    # Magnitude: the sweep is oriented, but a cap is reported as an area.
    cap = np.abs(g2 - g1 + wrap * curve.enclosed_area() + closing)

    corner1 = np.atleast_1d(curve.corner_distance(s1)) < CORNER_TOL
    corner2 = np.atleast_1d(curve.corner_distance(s2)) < CORNER_TOL
    return {
        "s_start": s1,
        "s_end": s2,
        "p_start": p1,
        "p_end": p2,
        "direction_alpha": alpha,
        "angle_start": angle_start,
        "angle_end": angle_end,
        "chord_length": length,
        "cap_area": cap,
        "corner_start": corner1,
        "corner_end": corner2,
    }


def _sample_from_table(table, i):
    return ChordSample(
        s_start=float(table["s_start"][i]),
        s_end=float(table["s_end"][i]),
        p_start=tuple(map(float, table["p_start"][i])),
        p_end=tuple(map(float, table["p_end"][i])),
        direction_alpha=float(table["direction_alpha"][i]),
        angle_start=float(table["angle_start"][i]),
        angle_end=float(table["angle_end"][i]),
        chord_length=float(table["chord_length"][i]),
        cap_area=float(table["cap_area"][i]),
        corner_start=bool(table["corner_start"][i]),
        corner_end=bool(table["corner_end"][i]),
    )


def chord_at_fraction(curve, s_start, fraction):
    """Chord from arc length ``s_start`` to the point ``fraction`` of the
    perimeter further along the boundary."""
    if not 0.0 < fraction < 1.0:
        raise DegenerateChordError("perimeter fraction must lie strictly in (0, 1)")
    s_start = float(s_start)
    table = chord_table(curve, [s_start], [s_start + fraction * curve.perimeter])
    return _sample_from_table(table, 0)


def chord_samples(curve, fraction, n_samples, s_offset=0.0):
    """List of chords at a fixed perimeter fraction, starts equally spaced."""
    if not 0.0 < fraction < 1.0:
        raise DegenerateChordError("perimeter fraction must lie strictly in (0, 1)")
    if n_samples < 1:
        raise ValueError("need at least one sample")
    s1 = s_offset + curve.perimeter * np.arange(n_samples) / n_samples
    table = chord_table(curve, s1, s1 + fraction * curve.perimeter)
    return [_sample_from_table(table, i) for i in range(n_samples)]


def fraction_sweep(curve, fraction, n_samples, s_offset=0.0):
    """Vectorized form of ``chord_samples`` returning the raw table."""
    if not 0.0 < fraction < 1.0:
        raise DegenerateChordError("perimeter fraction must lie strictly in (0, 1)")
    s1 = s_offset + curve.perimeter * np.arange(n_samples) / n_samples
    return chord_table(curve, s1, s1 + fraction * curve.perimeter)


def _exit_angles(curve, phi0, gamma):
    """Normal angles where chords entering at angle gamma leave the curve.

    The line through the entry point A = P(phi0) with direction
    u = exp(i(phi0 + pi/2 + gamma)) meets a strictly convex curve in
    exactly one further point, so g(phi) = Im(conj(u) (P(phi) - A)) has a
    single sign change on (phi0, phi0 + 2 pi).  Writing the entry and exit
    angles as g_in and g_out, the exit sits at phi0 + g_in + g_out, which
    pins it inside (phi0 + gamma, phi0 + gamma + pi); bisection on that
    bracket is then unconditionally safe.
    """
    phi0 = np.asarray(phi0, dtype=float)
    z0 = curve._position_complex(phi0)
    u = np.exp(1j * (phi0 + 0.5 * math.pi + gamma))

    def g(phi):
        return np.imag(np.conj(u) * (curve._position_complex(phi) - z0))

    lo = phi0 + gamma
    hi = phi0 + gamma + math.pi
    if np.any(g(lo) >= 0.0) or np.any(g(hi) <= 0.0):
        raise NoIntersectionError(
            "chord bracketing failed; curve is not strictly convex"
        )
    for _ in range(56):
        mid = 0.5 * (lo + hi)
        neg = g(mid) < 0.0
        lo = np.where(neg, mid, lo)
        hi = np.where(neg, hi, mid)
    return 0.5 * (lo + hi)


def shoot_table(curve, s_start, gamma):
    """Shoot chords at entry angle gamma from each start, vectorized.

    Only strictly convex Fourier curves support shooting; the bisection
    relies on the single-crossing property convexity guarantees.
    """
    if not isinstance(curve, FourierConvexCurve):
        raise NonConvexError("shooting requires a strictly convex smooth curve")
    gamma = float(gamma)
    if not ANGLE_GUARD < gamma < math.pi - ANGLE_GUARD:
        raise NearTangencyError(
            f"entry angle {gamma:.3e} is too close to tangency"
        )
    s1 = np.atleast_1d(np.asarray(s_start, dtype=float))
    phi0 = curve.angle_at_arc_length(s1)
    phi1 = _exit_angles(curve, phi0, gamma)
    s2 = curve.arc_length_at_angle(phi1)
    p1 = np.atleast_2d(curve.position_at_angle(phi0))
    p2 = np.atleast_2d(curve.position_at_angle(phi1))
    t1 = np.atleast_2d(curve.tangent_at_angle(phi0))
    t2 = np.atleast_2d(curve.tangent_at_angle(phi1))
    table = _assemble(curve, s1, s2, p1, p2, t1, t2)
    bad = (table["angle_end"] < ANGLE_GUARD) | (
        table["angle_end"] > math.pi - ANGLE_GUARD
    )
    if np.any(bad):
        raise NearTangencyError("chord exits tangentially")
    table["phi_start"] = phi0
    table["phi_end"] = phi1
    return table


def shoot_chord(curve, s_start, gamma):
    """Chord entering the curve at arc length ``s_start`` at angle ``gamma``."""
    table = shoot_table(curve, [float(s_start)], gamma)
    return _sample_from_table(table, 0)
