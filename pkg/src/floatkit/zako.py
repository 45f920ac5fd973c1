"""Arc-flower construction from admissible even-sided polygons.

Take a polygon with 2n vertices A_0 .. A_{2n-1}.  Pair each side with the
side n steps further along and form the quadrilateral

    Q_j = (A_j, A_{j+1}, A_{j+n}, A_{j+n+1}),   j = 0 .. n-1.

The polygon is admissible when every Q_j is concyclic; the construction
replaces each polygon side by the arc of its quadrilateral's circle that
avoids the two paired vertices.  Opposite sides then ride the same circle,
so the chord joining boundary points half a perimeter apart keeps both
endpoints on one circle at a fixed central angle: its length and the area
it cuts off are constant, which is exactly the area-model floating
condition at relative density one half.  The junctions alternate between
convex and reflex turns, so the flowers are the standard examples of
non-convex floating domains.

Interleaving a regular polygon with its edge midpoints yields admissible
input for odd vertex counts.  For even counts the equal-length side and
diagonal conditions still hold (with an odd pairing step), but the
quadrilaterals fail the concyclicity test, so validation reports the
conditions honestly while construction refuses the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import ArcSplineCurve, CircularArc
from .errors import AmbiguousArcError, InvalidCurveError, NotConcyclicError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ZaKoPolygon:
    """Even-sided polygon with its largest odd pairing step recorded."""

    vertices: tuple
    k: int

    def __post_init__(self):
        if len(self.vertices) < 6 or len(self.vertices) % 2:
            raise InvalidCurveError("polygon needs an even vertex count, at least 6")
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        arr = np.array(verts)
        closing = np.roll(arr, -1, axis=0) - arr
        if np.any(np.hypot(closing[:, 0], closing[:, 1]) < 1e-12):
            raise InvalidCurveError("consecutive vertices coincide")
        if not 1 < int(self.k) <= len(verts) // 2:
            raise InvalidCurveError(
                "diagonal step must satisfy 1 < k <= half the vertex count"
            )

    @property
    def n(self):
        """Half the vertex count, the step used to pair opposite sides."""
        return len(self.vertices) // 2

    def as_array(self):
        return np.array(self.vertices)


def midpoint_polygon(n, circumradius=1.0):
    """Regular n-gon interleaved with its edge midpoints.

    The 2n-gon lists vertex, midpoint, vertex, ... counterclockwise with
    the first vertex on the +x axis.  The recorded step k is the largest
    odd step with equal diagonals throughout: n itself when n is odd,
    n - 1 otherwise.
    """
    n = int(n)
    if n < 3:
        raise InvalidCurveError("need at least a triangle")
    if circumradius <= 0.0:
        raise InvalidCurveError("circumradius must be positive")
    angles = TWO_PI * np.arange(n) / n
    v = circumradius * np.stack([np.cos(angles), np.sin(angles)], axis=1)
    m = 0.5 * (v + np.roll(v, -1, axis=0))
    verts = np.empty((2 * n, 2))
    verts[0::2] = v
    verts[1::2] = m
    k = n if n % 2 else n - 1
    return ZaKoPolygon(vertices=tuple(map(tuple, verts)), k=k)


def _circumcircle(p, q, r):
    """Center and radius of the circle through three points.

    Returns None for a collinear triple; callers decide whether that is
    a recorded failure or an error.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    r = np.asarray(r, dtype=float)
    a = 2.0 * np.array([q - p, r - p])
    rhs = np.array(
        [q @ q - p @ p, r @ r - p @ p]
    )
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if abs(det) < 1e-14 * (1.0 + np.max(np.abs(a))) ** 2:
        return None
    center = np.linalg.solve(a, rhs)
    return center, float(np.linalg.norm(p - center))


def _is_simple_polygon(a):
    from shapely.geometry import LineString

    ring = np.vstack([a, a[:1]])
    return bool(LineString(ring).is_simple)


@dataclass(frozen=True)
class ZaKoDiagnostics:
    """Admissibility measurements for a candidate polygon.

    Records the three equal-length conditions (all sides equal, opposite
    sides equal, step-k diagonals equal), the per-pair concyclicity of
    the quadrilaterals on opposite sides, and simplicity.  A degenerate
    quadrilateral (collinear fit triple) carries an infinite residual and
    a missing circle rather than raising.
    """

    side_spread: float
    side_deviation: float
    diagonal_deviation: float
    condition_i: bool
    condition_i_prime: bool
    condition_ii: bool
    concyclicity_residuals: tuple
    concyclic: tuple
    circles: tuple
    simple: bool
    admissible: bool
    tol: float

    @property
    def concyclicity_residual(self):
        """Worst fourth-vertex distance from its fitted circle."""
        return max(self.concyclicity_residuals)


def zako_validate(polygon, tol=1e-9):
    """Measure how far the polygon is from admissibility.

    side_spread: spread of all side lengths (all-sides-equal condition).
    side_deviation: worst mismatch between a side and its opposite side,
    the weaker condition that suffices for the construction.
    diagonal_deviation: spread of the step-k diagonal lengths.
    concyclicity residuals: per opposite-side pair, the distance of the
    fourth quadrilateral vertex from the circle through the other three.
    """
    a = polygon.as_array()
    n = polygon.n
    k = int(polygon.k)
    sides = np.linalg.norm(np.roll(a, -1, axis=0) - a, axis=1)
    side_spread = float(np.max(sides) - np.min(sides))
    side_dev = float(np.max(np.abs(sides - np.roll(sides, -n))))
    diagonals = np.linalg.norm(np.roll(a, -k, axis=0) - a, axis=1)
    diag_dev = float(np.max(diagonals) - np.min(diagonals))
    residuals = []
    flags = []
    circles = []
    for j in range(n):
        quad = a[[j, (j + 1) % (2 * n), (j + n) % (2 * n), (j + n + 1) % (2 * n)]]
        fit = _circumcircle(quad[0], quad[1], quad[2])
        if fit is None:
            residuals.append(float("inf"))
            flags.append(False)
            circles.append(None)
            continue
        center, radius = fit
        residual = abs(float(np.linalg.norm(quad[3] - center)) - radius)
        residuals.append(residual)
        flags.append(residual < tol)
        circles.append((float(center[0]), float(center[1]), radius))
    simple = _is_simple_polygon(a)
    condition_i = side_spread < tol
    condition_i_prime = side_dev < tol
    condition_ii = diag_dev < tol
    admissible = condition_i_prime and condition_ii and all(flags) and simple
    return ZaKoDiagnostics(
        side_spread=side_spread,
        side_deviation=side_dev,
        diagonal_deviation=diag_dev,
        condition_i=condition_i,
        condition_i_prime=condition_i_prime,
        condition_ii=condition_ii,
        concyclicity_residuals=tuple(residuals),
        concyclic=tuple(flags),
        circles=tuple(circles),
        simple=simple,
        admissible=admissible,
        tol=float(tol),
    )


def _arc_between(center, radius, start, end, avoid, buffer=1e-9):
    """Arc from start to end on the circle, not passing the avoid points."""
    cx, cy = center
    t0 = math.atan2(start[1] - cy, start[0] - cx)
    t1 = math.atan2(end[1] - cy, end[0] - cx)
    blocked = [math.atan2(p[1] - cy, p[0] - cx) for p in avoid]

    def clear(ccw):
        extent = (t1 - t0) % TWO_PI if ccw else (t0 - t1) % TWO_PI
        if not buffer < extent < TWO_PI - buffer:
            return False
        for tb in blocked:
            rel = (tb - t0) % TWO_PI if ccw else (t0 - tb) % TWO_PI
            if rel < extent - buffer:
                return False
        return True

    ok_ccw = clear(True)
    ok_cw = clear(False)
    if ok_ccw == ok_cw:
        raise AmbiguousArcError(
            "no unique arc between the side endpoints avoids the paired side"
        )
    return CircularArc(
        center=(cx, cy), radius=radius, start_angle=t0, end_angle=t1, ccw=ok_ccw
    )


def zako_construct(polygon, tol=1e-9):
    """Replace each polygon side by its quadrilateral-circle arc.

    Raises AmbiguousArcError when a quadrilateral is degenerate (three
    collinear vertices give no circle) and NotConcyclicError when the
    polygon fails admissibility at the given tolerance; the resulting
    curve keeps the polygon vertices as arc junctions.
    """
    diag = zako_validate(polygon, tol=tol)
    if any(c is None for c in diag.circles):
        raise AmbiguousArcError(
            "degenerate quadrilateral: three collinear vertices admit no circle"
        )
    if not diag.admissible:
        raise NotConcyclicError(
            "polygon is not admissible: "
            f"sides {diag.side_deviation:.3e}, "
            f"diagonals {diag.diagonal_deviation:.3e}, "
            f"concyclicity {diag.concyclicity_residual:.3e} (tol {tol:.1e})"
        )
    a = polygon.as_array()
    n = polygon.n
    arcs = []
    for m in range(2 * n):
        j = m % n
        cx, cy, radius = diag.circles[j]
        partner = m - n if m >= n else m + n
        avoid = (a[partner % (2 * n)], a[(partner + 1) % (2 * n)])
        arcs.append(
            _arc_between(
                (cx, cy),
                radius,
                a[m],
                a[(m + 1) % (2 * n)],
                avoid,
            )
        )
    return ArcSplineCurve(arcs)
