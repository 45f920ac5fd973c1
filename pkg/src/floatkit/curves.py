"""Closed plane curves used throughout the toolkit.

Two concrete representations are provided.

``FourierConvexCurve`` describes a smooth strictly convex curve through the
Fourier series of its radius of curvature as a function of the outward normal
angle.  With the normal at parameter ``t`` equal to ``(cos t, sin t)`` the
forward (counterclockwise) tangent is ``(-sin t, cos t)`` and arc length obeys
``ds = rho dt``, so every harmonic integrates in closed form and positions,
arc length and curvature are all available to machine precision.  The first
harmonic is excluded, which makes the curve close automatically.

``ArcSplineCurve`` is a closed chain of circular arcs with exact piecewise
formulas and optional corners at the junctions.

Both expose the same sampling surface: ``perimeter``, ``point_at(s)``,
``tangent_at(s)``, ``curvature_at(s)`` and ``enclosed_area()``, with ``s``
arc length from the basepoint taken modulo the perimeter and positive
enclosed area for counterclockwise orientation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidCurveError, NonSimpleCurveError

TWO_PI = 2.0 * math.pi

# Endpoints of consecutive arcs must agree to this distance.
JUNCTION_TOL = 1e-9

# Dense grid used for convexity validation and polyline fallbacks.
VALIDATION_GRID = 4096


@lru_cache(maxsize=32)
def _gauss_rule(n: int):
    """Gauss-Legendre nodes and weights remapped to [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _as_batch(s):
    """Return (1d float array, was_scalar)."""
    arr = np.asarray(s, dtype=float)
    scalar = arr.ndim == 0
    return np.atleast_1d(arr), scalar


def _unbatch(values, scalar):
    if scalar:
        return values[0]
    return values


class FourierConvexCurve:
    """Strictly convex closed curve from radius-of-curvature Fourier data.

    Parameters
    ----------
    mean_radius : float
        Constant term of the series.  The perimeter is exactly
        ``2 pi * mean_radius``.
    harmonics : iterable of (n, a_n, b_n)
        Cosine and sine coefficients for integer harmonics n >= 2.

    The curve starts at arc length 0 where the outward normal points along
    +x; for the unit disc this is the point (1, 0) with tangent (0, 1).
    """

    def __init__(self, mean_radius, harmonics=()):
        mean_radius = float(mean_radius)
        if not math.isfinite(mean_radius) or mean_radius <= 0.0:
            raise InvalidCurveError("mean radius must be positive and finite")
        cleaned = []
        seen = set()
        for entry in harmonics:
            n, a, b = entry
            n = int(n)
            a = float(a)
            b = float(b)
            if n < 2:
                raise InvalidCurveError(
                    "harmonic index must be >= 2 (index 1 would break closure)"
                )
            if n in seen:
                raise InvalidCurveError(f"harmonic {n} listed twice")
            if not (math.isfinite(a) and math.isfinite(b)):
                raise InvalidCurveError("harmonic coefficients must be finite")
            seen.add(n)
            cleaned.append((n, a, b))
        cleaned.sort()
        self.mean_radius = mean_radius
        self.harmonics = tuple(cleaned)
        self._ns = np.array([h[0] for h in cleaned], dtype=float)
        self._as = np.array([h[1] for h in cleaned], dtype=float)
        self._bs = np.array([h[2] for h in cleaned], dtype=float)
        # position series: each harmonic contributes exp(i k theta) terms
        # with k = n + 1 and k = 1 - n; fold the constant parts so the hot
        # path is a single exp and matmul
        k = np.concatenate([self._ns + 1.0, 1.0 - self._ns])
        w = np.concatenate(
            [0.5j * self._as + 0.5 * self._bs, 0.5j * self._as - 0.5 * self._bs]
        )
        self._pos_k = k
        self._pos_w = w / (1j * k) if k.size else w
        self._pos_w_sum = complex(np.sum(self._pos_w))
        grid = np.linspace(0.0, TWO_PI, VALIDATION_GRID, endpoint=False)
        self._min_rho = float(np.min(self.rho(grid)))
        if self._min_rho <= 1e-9 * mean_radius:
            raise InvalidCurveError(
                f"radius of curvature reaches {self._min_rho:.3e}; "
                "curve is not strictly convex"
            )

    # -- scalar series -----------------------------------------------------

    @property
    def n_max(self):
        return int(self._ns[-1]) if self._ns.size else 0

    @property
    def min_rho(self):
        return self._min_rho

    @property
    def perimeter(self):
        return TWO_PI * self.mean_radius

    def rho(self, theta):
        """Radius of curvature at normal angle theta."""
        th, scalar = _as_batch(theta)
        if self._ns.size:
            phase = th[..., None] * self._ns
            out = self.mean_radius + np.cos(phase) @ self._as + np.sin(phase) @ self._bs
        else:
            out = np.full(th.shape, self.mean_radius)
        return _unbatch(out, scalar)

    def arc_length_at_angle(self, theta):
        """Arc length s(theta) from the basepoint, exact antiderivative."""
        th, scalar = _as_batch(theta)
        out = self.mean_radius * th
        if self._ns.size:
            phase = th[..., None] * self._ns
            out = out + np.sin(phase) @ (self._as / self._ns)
            out = out + (1.0 - np.cos(phase)) @ (self._bs / self._ns)
        return _unbatch(out, scalar)

    def angle_at_arc_length(self, s):
        """Invert s(theta) by safeguarded Newton iteration, tolerance 1e-12 in s."""
        sv, scalar = _as_batch(s)
        target = np.mod(sv, self.perimeter)
        theta = target / self.mean_radius
        lo = np.zeros_like(target)
        hi = np.full_like(target, TWO_PI)
        tol = 1e-12 * max(1.0, self.perimeter)
        for _ in range(80):
            f = self.arc_length_at_angle(theta) - target
            if np.max(np.abs(f)) <= tol:
                break
            lo = np.where(f < 0.0, theta, lo)
            hi = np.where(f > 0.0, theta, hi)
            step = f / self.rho(theta)
            nxt = theta - step
            bad = (nxt <= lo) | (nxt >= hi) | ~np.isfinite(nxt)
            theta = np.where(bad, 0.5 * (lo + hi), nxt)
        return _unbatch(theta, scalar)

    # -- positions ---------------------------------------------------------

    def _position_complex(self, theta):
        th = np.asarray(theta, dtype=float)
        z = self.mean_radius * np.exp(1j * th)
        if self._ns.size:
            e = np.exp(1j * th[..., None] * self._pos_k)
            z = z + e @ self._pos_w - self._pos_w_sum
        return z

    def position_at_angle(self, theta):
        """Point with outward normal angle theta, from exact antiderivatives."""
        th, scalar = _as_batch(theta)
        z = self._position_complex(th)
        pts = np.stack([z.real, z.imag], axis=-1)
        return _unbatch(pts, scalar)

    def point_at(self, s):
        return self.position_at_angle(self.angle_at_arc_length(s))

    def tangent_at_angle(self, theta):
        th, scalar = _as_batch(theta)
        t = np.stack([-np.sin(th), np.cos(th)], axis=-1)
        return _unbatch(t, scalar)

    def tangent_at(self, s):
        return self.tangent_at_angle(self.angle_at_arc_length(s))

    def curvature_at(self, s):
        theta = self.angle_at_arc_length(s)
        rho = self.rho(theta)
        return 1.0 / rho

    # -- integrals ---------------------------------------------------------

    def green_prefix_at_angle(self, theta):
        """Signed Green integral (1/2) int_0^theta (P x T) rho dt.

        Evaluated by Gauss-Legendre quadrature sized for the highest
        harmonic; the integrand is a trigonometric polynomial so the result
        is accurate to roundoff.
        """
        th, scalar = _as_batch(theta)
        nodes, weights = _gauss_rule(max(48, 16 + 8 * self.n_max))
        t = th[:, None] * nodes[None, :]
        z = self._position_complex(t)
        tangent = 1j * np.exp(1j * t)
        integrand = np.imag(np.conj(z) * tangent) * self.rho(t)
        out = 0.5 * th * (integrand @ weights)
        return _unbatch(out, scalar)

    def green_prefix(self, s):
        return self.green_prefix_at_angle(self.angle_at_arc_length(s))

    def enclosed_area(self):
        """Area via the Green line integral (1/2) closed-int (x dy - y dx)."""
        return float(self.green_prefix_at_angle(TWO_PI))

    # -- misc --------------------------------------------------------------

    def corner_distance(self, s):
        """Smooth curve: no corners, so every sample is infinitely far from one."""
        sv, scalar = _as_batch(s)
        return _unbatch(np.full(sv.shape, np.inf), scalar)

    def rotated(self, beta):
        """Same shape with the basepoint normal rotated by beta (phase shift)."""
        beta = float(beta)
        shifted = []
        for n, a, b in self.harmonics:
            c = math.cos(n * beta)
            sn = math.sin(n * beta)
            shifted.append((n, a * c - b * sn, a * sn + b * c))
        return FourierConvexCurve(self.mean_radius, shifted)

    def validate_simple(self):
        """Strict convexity already implies the curve is simple."""
        return True

    def __repr__(self):
        return (
            f"FourierConvexCurve(mean_radius={self.mean_radius!r}, "
            f"harmonics={self.harmonics!r})"
        )


@dataclass(frozen=True)
class CircularArc:
    """Directed circular arc.

    ``start_angle`` and ``end_angle`` are angular positions on the circle
    (radians); traversal runs from start to end counterclockwise around the
    center when ``ccw`` is true, clockwise otherwise.  The swept angle is
    required to lie strictly between 0 and 2 pi.
    """

    center: tuple
    radius: float
    start_angle: float
    end_angle: float
    ccw: bool = True

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise InvalidCurveError("arc radius must be positive and finite")
        cx, cy = self.center
        if not (math.isfinite(cx) and math.isfinite(cy)):
            raise InvalidCurveError("arc center must be finite")
        object.__setattr__(self, "center", (float(cx), float(cy)))
        if not (0.0 < self.extent < TWO_PI):
            raise InvalidCurveError(
                "arc sweep must lie strictly between 0 and 2 pi"
            )

    @property
    def extent(self):
        if self.ccw:
            return (self.end_angle - self.start_angle) % TWO_PI
        return (self.start_angle - self.end_angle) % TWO_PI

    @property
    def sweep(self):
        """Signed swept angle, positive for counterclockwise arcs."""
        return self.extent if self.ccw else -self.extent

    @property
    def length(self):
        return self.radius * self.extent

    def angle_at_local(self, u):
        """Angular position after arc length u from the start."""
        sign = 1.0 if self.ccw else -1.0
        return self.start_angle + sign * np.asarray(u, dtype=float) / self.radius

    def point_at_local(self, u):
        psi = self.angle_at_local(u)
        cx, cy = self.center
        return np.stack(
            [cx + self.radius * np.cos(psi), cy + self.radius * np.sin(psi)], axis=-1
        )

    @property
    def start_point(self):
        return self.point_at_local(0.0)

    @property
    def end_point(self):
        return self.point_at_local(self.length)

    def green_prefix_local(self, u):
        """Green integral along the arc from its start to arc length u, exact."""
        psi = self.angle_at_local(u)
        cx, cy = self.center
        a = self.start_point
        bx = cx + self.radius * np.cos(psi)
        by = cy + self.radius * np.sin(psi)
        sign = 1.0 if self.ccw else -1.0
        dpsi = sign * np.asarray(u, dtype=float) / self.radius
        return 0.5 * (
            cx * (by - a[..., 1]) - cy * (bx - a[..., 0]) + self.radius**2 * dpsi
        )


class ArcSplineCurve:
    """Closed chain of circular arcs traversed counterclockwise overall.

    Consecutive arc endpoints must agree within ``JUNCTION_TOL`` and the
    chain must close.  The enclosed signed area must be positive, which pins
    the orientation convention shared with the Fourier curves.
    """

    def __init__(self, arcs):
        arcs = tuple(arcs)
        if len(arcs) < 2:
            raise InvalidCurveError("an arc spline needs at least two arcs")
        self.arcs = arcs
        starts = np.array([a.start_point for a in arcs])
        ends = np.array([a.end_point for a in arcs])
        gaps = np.linalg.norm(ends - np.roll(starts, -1, axis=0), axis=1)
        worst = float(np.max(gaps))
        if worst > JUNCTION_TOL:
            raise InvalidCurveError(
                f"arc junction gap {worst:.3e} exceeds {JUNCTION_TOL:.0e}"
            )
        lengths = np.array([a.length for a in arcs])
        self._lengths = lengths
        self._cum = np.concatenate([[0.0], np.cumsum(lengths)])
        self.perimeter = float(self._cum[-1])
        greens = np.array([a.green_prefix_local(a.length) for a in arcs])
        self._green_cum = np.concatenate([[0.0], np.cumsum(greens)])
        self._centers = np.array([a.center for a in arcs])
        self._radii = np.array([a.radius for a in arcs])
        self._start_angles = np.array([a.start_angle for a in arcs])
        self._signs = np.array([1.0 if a.ccw else -1.0 for a in arcs])
        area = float(self._green_cum[-1])
        if not area > 1e-12:
            raise InvalidCurveError(
                "arc spline must enclose positive area (counterclockwise orientation)"
            )
        self._area = area

    def _locate(self, s):
        sv = np.mod(np.asarray(s, dtype=float), self.perimeter)
        idx = np.searchsorted(self._cum, sv, side="right") - 1
        idx = np.clip(idx, 0, len(self.arcs) - 1)
        local = sv - self._cum[idx]
        return idx, local

    def point_at(self, s):
        sv, scalar = _as_batch(s)
        idx, local = self._locate(sv)
        psi = self._start_angles[idx] + self._signs[idx] * local / self._radii[idx]
        pts = self._centers[idx] + self._radii[idx, None] * np.stack(
            [np.cos(psi), np.sin(psi)], axis=-1
        )
        return _unbatch(pts, scalar)

    def tangent_at(self, s):
        """Forward unit tangent; at a junction this is the outgoing side."""
        sv, scalar = _as_batch(s)
        idx, local = self._locate(sv)
        psi = self._start_angles[idx] + self._signs[idx] * local / self._radii[idx]
        t = np.stack([-np.sin(psi), np.cos(psi)], axis=-1) * self._signs[idx, None]
        return _unbatch(t, scalar)

    def curvature_at(self, s):
        """Signed curvature, +1/r on arcs turning with the global orientation."""
        sv, scalar = _as_batch(s)
        idx, _ = self._locate(sv)
        return _unbatch(self._signs[idx] / self._radii[idx], scalar)

    def green_prefix(self, s):
        sv, scalar = _as_batch(s)
        idx, local = self._locate(sv)
        psi0 = self._start_angles[idx]
        dpsi = self._signs[idx] * local / self._radii[idx]
        psi1 = psi0 + dpsi
        r = self._radii[idx]
        cx = self._centers[idx, 0]
        cy = self._centers[idx, 1]
        ax = cx + r * np.cos(psi0)
        ay = cy + r * np.sin(psi0)
        bx = cx + r * np.cos(psi1)
        by = cy + r * np.sin(psi1)
        partial = 0.5 * (cx * (by - ay) - cy * (bx - ax) + r**2 * dpsi)
        out = self._green_cum[idx] + partial
        return _unbatch(out, scalar)

    def enclosed_area(self):
        return self._area

    @property
    def junctions(self):
        """Arc-length positions of the junctions, basepoint included."""
        return self._cum[:-1]

    def corner_distance(self, s):
        """Cyclic arc-length distance from s to the nearest junction."""
        sv, scalar = _as_batch(s)
        sv = np.mod(sv, self.perimeter)
        d = np.abs(sv[:, None] - self._cum[None, :])
        d = np.minimum(d, self.perimeter - d)
        return _unbatch(np.min(d, axis=1), scalar)

    def junction_exterior_angles(self):
        """Signed turn of the tangent at each junction, in (-pi, pi].

        Negative turns are reflex corners, the non-convexity witness for
        piecewise-circular floating domains whose arcs all curve the same
        way.
        """
        turns = []
        for i, arc in enumerate(self.arcs):
            prev = self.arcs[i - 1]
            sign_in = 1.0 if prev.ccw else -1.0
            psi_in = prev.end_angle
            tin = math.atan2(sign_in * math.cos(psi_in), -sign_in * math.sin(psi_in))
            sign_out = 1.0 if arc.ccw else -1.0
            psi_out = arc.start_angle
            tout = math.atan2(
                sign_out * math.cos(psi_out), -sign_out * math.sin(psi_out)
            )
            turn = (tout - tin + math.pi) % TWO_PI - math.pi
            turns.append(turn)
        return np.array(turns)

    def validate_simple(self, samples=VALIDATION_GRID):
        """Reject self-intersecting chains via a dense polyline check."""
        from shapely.geometry import LineString

        s = np.linspace(0.0, self.perimeter, samples, endpoint=False)
        pts = self.point_at(s)
        ring = np.vstack([pts, pts[:1]])
        if not LineString(ring).is_simple:
            raise NonSimpleCurveError("arc spline intersects itself")
        return True

    def transformed(self, angle=0.0, translation=(0.0, 0.0), scale=1.0):
        """Rigid motion plus positive uniform scaling."""
        if scale <= 0.0:
            raise InvalidCurveError("scale must be positive")
        c, sn = math.cos(angle), math.sin(angle)
        tx, ty = translation
        arcs = []
        for a in self.arcs:
            cx, cy = a.center
            arcs.append(
                CircularArc(
                    center=(
                        scale * (c * cx - sn * cy) + tx,
                        scale * (sn * cx + c * cy) + ty,
                    ),
                    radius=scale * a.radius,
                    start_angle=a.start_angle + angle,
                    end_angle=a.end_angle + angle,
                    ccw=a.ccw,
                )
            )
        return ArcSplineCurve(arcs)

    def __repr__(self):
        return f"ArcSplineCurve({len(self.arcs)} arcs, perimeter={self.perimeter:.6g})"
