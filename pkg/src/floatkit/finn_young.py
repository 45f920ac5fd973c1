"""Capillary-model floating: constructors, verifier, equilibrium scan.

A strictly convex domain floats in the capillary model at entry angle
gamma when every chord meeting the boundary at gamma at one end also
leaves it at gamma.  Verification shoots chords from a uniform sweep of
boundary points and checks the exit angles; the equilibrium scan counts
the isolated start positions where the exit angle matches when the curve
does not float everywhere.

A closed-form cross-check is available: with the radius of curvature
expanded in harmonics, the chord spanning normal angles
(c - gamma, c + gamma) meets the boundary symmetrically exactly when

    sum_n w_n(gamma) (a_n sin(n c) - b_n cos(n c)) = 0,
    w_n = sin((n+1) gamma)/(n+1) - sin((n-1) gamma)/(n-1).

The weight w_n vanishes identically exactly when tan(n gamma) =
n tan(gamma), which is why single-harmonic curves at admissible angles
float at every orientation, and why the defect is a trigonometric
polynomial with no constant or first-harmonic part; by the Sturm-Hurwitz
count it has at least four sign changes whenever it is not identically
zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chords import _exit_angles, shoot_table
from .curves import FourierConvexCurve
from .errors import NonConvexError, NotARootError
from .gamma import gamma_residual
from .profiles import profile_finn_young

# A (n, gamma) pair is accepted as admissible when the defining relation
# holds to this accuracy at double precision.
ROOT_RESIDUAL_TOL = 1e-8

# Orientation defects below this across a full scan mean the curve floats
# at every orientation (within numerical resolution).
EVERYWHERE_TOL = 1e-9


def fy_curve(n, gamma, tau):
    """Single-harmonic curve floating at every orientation at angle gamma.

    The radius of curvature is 1 + tau cos(n t); gamma must satisfy
    tan(n gamma) = n tan(gamma) and |tau| must stay below 1 to keep the
    curve strictly convex.
    """
    n = int(n)
    tau = float(tau)
    residual = gamma_residual(n, gamma)
    if abs(residual) > ROOT_RESIDUAL_TOL:
        raise NotARootError(
            f"tan({n} g) - {n} tan(g) = {residual:.3e} at g={gamma!r}; "
            "not an admissible angle"
        )
    if abs(tau) >= 1.0:
        raise NonConvexError("harmonic amplitude must satisfy |tau| < 1")
    harmonics = [(n, tau, 0.0)] if tau != 0.0 else []
    return FourierConvexCurve(1.0, harmonics)


def fy_curve_multi(gamma, terms):
    """Curve mixing several harmonics, each admissible at the same gamma."""
    cleaned = []
    total = 0.0
    for n, a, b in terms:
        n = int(n)
        residual = gamma_residual(n, gamma)
        if abs(residual) > ROOT_RESIDUAL_TOL:
            raise NotARootError(
                f"harmonic {n} is not admissible at g={gamma!r} "
                f"(residual {residual:.3e})"
            )
        total += math.hypot(a, b)
        if a != 0.0 or b != 0.0:
            cleaned.append((n, float(a), float(b)))
    if total >= 1.0:
        raise NonConvexError("combined harmonic amplitude must stay below 1")
    return FourierConvexCurve(1.0, cleaned)


def fy_floats_everywhere(curve, gamma, n_samples=360, tol=1e-6, s_offset=0.0):
    """Shoot a uniform sweep at entry angle gamma and profile the exits.

    Returns a ``FloatProfile`` whose verdict is True exactly when every
    sampled chord leaves the curve within ``tol`` of the entry angle.
    The entry angle must lie strictly between 0 and pi/2: at pi/2 the
    two chord families merge and the check degenerates.
    """
    gamma = float(gamma)
    if not 0.0 < gamma < 0.5 * math.pi:
        raise ValueError("entry angle must lie strictly in (0, pi/2)")
    if n_samples < 8:
        raise ValueError("need at least eight samples")
    s = s_offset + curve.perimeter * np.arange(n_samples) / n_samples
    table = shoot_table(curve, s, gamma)
    return profile_finn_young(table, gamma, tol, curve=curve)


def _weights(ns, gamma):
    return np.sin((ns + 1) * gamma) / (ns + 1) - np.sin((ns - 1) * gamma) / (ns - 1)


def fy_orientation_defect(curve, gamma, orientation):
    """Closed-form asymmetry of the chord spanning (c - gamma, c + gamma)."""
    if not isinstance(curve, FourierConvexCurve):
        raise NonConvexError("orientation defect needs a strictly convex curve")
    c, scalar = np.atleast_1d(np.asarray(orientation, dtype=float)), np.ndim(orientation) == 0
    if not curve.harmonics:
        out = np.zeros_like(c)
        return float(out[0]) if scalar else out
    ns = np.array([h[0] for h in curve.harmonics], dtype=float)
    a = np.array([h[1] for h in curve.harmonics])
    b = np.array([h[2] for h in curve.harmonics])
    w = _weights(ns, float(gamma))
    phase = c[:, None] * ns
    out = np.sin(phase) @ (w * a) - np.cos(phase) @ (w * b)
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class EquilibriumScan:
    """Start positions and chord directions of capillary equilibria.

    ``orientations`` holds the chord direction alpha at each isolated
    equilibrium; ``arc_positions`` the arc length of the entry point.
    When the exit-angle defect vanishes everywhere both are empty and
    ``all_orientations`` is set.
    """

    all_orientations: bool
    orientations: tuple
    arc_positions: tuple = ()

    @property
    def count(self):
        if self.all_orientations:
            return math.inf
        return len(self.orientations)


# Equilibria are located in arc length to this absolute resolution.
EQUILIBRIUM_S_TOL = 1e-9


def _exit_defect(curve, gamma, s):
    # the chord direction is pinned at phi0 + pi/2 + gamma and the exit
    # tangent at phi1 + pi/2, so angle_end = phi1 - phi0 - gamma; the scan
    # therefore only needs the exit solve, not the full chord record
    s = np.atleast_1d(np.asarray(s, dtype=float))
    phi0 = curve.angle_at_arc_length(s)
    phi1 = _exit_angles(curve, phi0, gamma)
    return phi1 - phi0 - 2.0 * gamma


def fy_equilibrium_count(curve, gamma, n_samples=720, tol=EVERYWHERE_TOL):
    """Count orientations in capillary equilibrium by shooting.

    Shoots a chord at entry angle gamma from every point of a uniform
    arc-length grid and studies h(s) = exit angle - gamma.  When h stays
    within ``tol`` everywhere the curve floats at every orientation and
    the scan says so; otherwise each cyclic sign change of h is refined
    by bisection to an arc-length window of 1e-9 and reported with the
    direction alpha of the chord at the crossing.
    """
    gamma = float(gamma)
    if not isinstance(curve, FourierConvexCurve):
        raise NonConvexError("equilibrium scan requires a strictly convex curve")
    if not 0.0 < gamma < 0.5 * math.pi:
        raise ValueError("entry angle must lie strictly in (0, pi/2)")
    if n_samples < 360:
        raise ValueError("equilibrium scan needs at least 360 samples")
    per = curve.perimeter
    grid = per * np.arange(n_samples) / n_samples
    h = _exit_defect(curve, gamma, grid)
    if np.max(np.abs(h)) <= tol:
        return EquilibriumScan(all_orientations=True, orientations=())
    nxt = np.roll(h, -1)
    flips = np.nonzero(h * nxt < 0.0)[0]
    lo = grid[flips]
    hi = grid[flips] + per / n_samples
    flo = h[flips]
    while lo.size and np.max(hi - lo) > EQUILIBRIUM_S_TOL:
        mid = 0.5 * (lo + hi)
        fm = _exit_defect(curve, gamma, mid)
        same = (fm > 0.0) == (flo > 0.0)
        lo = np.where(same, mid, lo)
        flo = np.where(same, fm, flo)
        hi = np.where(same, hi, mid)
    zeros = 0.5 * (lo + hi)
    exact = grid[h == 0.0]
    if exact.size:
        zeros = np.concatenate([zeros, exact])
    zeros = np.sort(np.mod(zeros, per))
    alphas = shoot_table(curve, zeros, gamma)["direction_alpha"] if zeros.size else []
    return EquilibriumScan(
        all_orientations=False,
        orientations=tuple(map(float, alphas)),
        arc_positions=tuple(map(float, zeros)),
    )
