"""Area-model floating: verifier, constancy equivalence, angle diagnostic.

In the area model a domain of relative density delta floats in
equilibrium at every orientation exactly when the chords joining boundary
points a fixed fraction delta of the perimeter apart all cut off the same
area.  The verifier sweeps those chords and checks the cap areas; chord
lengths and meeting angles ride along because the three constancy
properties (equal caps, equal chords, equal meeting angles at the two
endpoints) hold or fail together, which ``arch_equivalence_report``
checks verdict by verdict.

``constant_angle_diagnostic`` covers a boundary case: if the sweep meets
the boundary at one constant angle different from a right angle, the
curve must be a disc. The diagnostic inspects a profile for that
signature and cross-checks the curvature, reporting an inconsistency
rather than staying quiet when the curvature check fails.
"""

from __future__ import annotations

import math

import numpy as np

from .chords import fraction_sweep
from .curves import ArcSplineCurve, FourierConvexCurve
from .errors import FloatkitError
from .profiles import profile_archimedean

HALF_PI = 0.5 * math.pi

# The constant-angle conclusion only fires away from a right angle; the
# exclusion zone is absolute in radians.
PI_HALF_EXCLUSION = 1e-3

# Relative curvature spread below which a curve counts as a disc.
DISC_CURVATURE_TOL = 1e-6


def arch_profile(curve, delta, n_samples=360, tol=1e-6, s_offset=0.0):
    """Sweep chords at perimeter fraction delta and profile the caps.

    Fractions in (1/2, 1) are accepted; they describe the complementary
    density 1 - delta with the sweep running the long way around.
    """
    if not 0.0 < delta < 1.0:
        raise ValueError("perimeter fraction must lie strictly in (0, 1)")
    if n_samples < 8:
        raise ValueError("need at least eight samples")
    table = fraction_sweep(curve, delta, n_samples, s_offset)
    return profile_archimedean(table, delta, tol, curve=curve)


def arch_floats_everywhere(curve, delta, n_samples=360, tol=1e-6, s_offset=0.0):
    """True when the cut-off areas are constant across the sweep."""
    return arch_profile(curve, delta, n_samples, tol, s_offset).verdict


def arch_complement_defect(curve, delta, n_samples=360, s_offset=0.0):
    """Worst violation of cap(delta) + mirrored cap(1 - delta) = area.

    The two caps share their boundary integrals and the straight closing
    segments cancel, so this is an exact identity; the returned defect is
    numerical noise and a useful integrity check on the Green machinery.
    """
    fwd = arch_profile(curve, delta, n_samples, tol=1.0, s_offset=s_offset)
    shift = s_offset + delta * curve.perimeter
    back = arch_profile(curve, 1.0 - delta, n_samples, tol=1.0, s_offset=shift)
    total = curve.enclosed_area()
    return float(
        np.max(np.abs(fwd.table["cap_area"] + back.table["cap_area"] - total))
    )


def is_convex(curve):
    """Whether the curve is convex (no reflex junctions, uniform turning)."""
    if isinstance(curve, FourierConvexCurve):
        return True
    if isinstance(curve, ArcSplineCurve):
        turns = curve.junction_exterior_angles()
        ccw_arcs = all(arc.ccw for arc in curve.arcs)
        return ccw_arcs and bool(np.min(turns) > -1e-12)
    raise FloatkitError(f"unsupported curve type {type(curve).__name__}")


def arch_equivalence_report(curve, delta, n_samples=360, tol=1e-3, s_offset=0.0):
    """Check the three constancy properties of one chord sweep together.

    Constant cap area, constant chord length, and equal meeting angles at
    the two chord endpoints stand or fall together; this report grades
    each on the same sweep (relative spread below tol for areas and
    lengths, endpoint angle mismatch below tol * pi) and flags whether
    the verdicts agree.  Corner samples are excluded from the angle
    clause only.
    """
    profile = arch_profile(curve, delta, n_samples, tol, s_offset)
    cap_spread = profile.stats["cap_area"].relative_spread
    chord_spread = profile.stats["chord_length"].relative_spread
    mismatch = profile.angle_mismatch_max
    area_constant = bool(cap_spread < tol)
    chord_constant = bool(chord_spread < tol)
    angles_equal = bool(mismatch < tol * math.pi)
    return {
        "delta": float(delta),
        "n_samples": int(n_samples),
        "tol": float(tol),
        "area_constant": area_constant,
        "chord_constant": chord_constant,
        "angles_equal": angles_equal,
        "agree": bool(area_constant == chord_constant == angles_equal),
        "cap_area_spread": float(cap_spread),
        "chord_length_spread": float(chord_spread),
        "angle_mismatch_max": float(mismatch),
        "corner_excluded": profile.corner_excluded,
    }


def _disc_like(curve, s_kept):
    """Constant curvature and no corners, sampled along the sweep."""
    curv = np.atleast_1d(curve.curvature_at(s_kept))
    if curv.size == 0:
        return False, float("nan")
    scale = 1.0 + abs(float(np.mean(curv)))
    spread = float(np.max(curv) - np.min(curv)) / scale
    if isinstance(curve, ArcSplineCurve):
        turns = curve.junction_exterior_angles()
        if turns.size and float(np.max(np.abs(turns))) > 1e-9:
            return False, spread
    return bool(spread < DISC_CURVATURE_TOL), spread


def constant_angle_diagnostic(profile, tol=1e-4):
    """Look for a constant non-right meeting angle in a chord sweep.

    Uses the start angle theta(s) of each corner-free sample.  When
    theta is constant within ``tol`` and its mean sits further than the
    exclusion zone from pi/2, the curve has to be a disc; the finding
    then verifies constant curvature and reports ``consistent = False``
    instead of passing silently when that check fails.
    """
    st = profile.stats["angle_start"]
    spread = st.spread
    mean = st.mean
    constant = bool(spread < tol)
    pi_half_excluded = bool(abs(mean - HALF_PI) > PI_HALF_EXCLUSION)
    triggered = constant and pi_half_excluded
    curve = profile.curve
    if curve is None:
        disc, curv_spread = False, float("nan")
    else:
        keep = ~(profile.table["corner_start"] | profile.table["corner_end"])
        disc, curv_spread = _disc_like(curve, profile.table["s_start"][keep])
    if not triggered:
        message = "no constant non-right meeting angle detected"
        consistent = True
    elif disc:
        message = "constant meeting angle on a disc; consistent"
        consistent = True
    else:
        message = (
            "constant non-right meeting angle on a non-disc curve; "
            "curvature check failed"
        )
        consistent = False
    return {
        "delta": profile.parameter,
        "n_samples": profile.n_samples,
        "tol": float(tol),
        "mean_angle": mean,
        "angle_spread": spread,
        "constant": constant,
        "pi_half_excluded": pi_half_excluded,
        "triggered": bool(triggered),
        "curvature_spread": float(curv_spread),
        "consistent": bool(consistent),
        "message": message,
    }
