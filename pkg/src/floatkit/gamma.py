"""Roots of tan(n g) = n tan(g) on (0, pi/2).

These angles are exactly the entry angles at which a single radius
harmonic leaves the chord condition invariant, so curves floating in the
capillary model at non-right angles exist precisely for them.  There are
no roots for n = 2 or 3; the first appears at n = 4 where the unique root
is arctan(sqrt(5)).

The residual tan(n g) - n tan(g) is steep near the upper roots (its slope
grows like n tan^2), so the solver works in extended precision and each
returned root carries the residual certified at the internal
extended-precision value; the ``gamma`` field is the nearest double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PoleProximityError

POLE_TOL = 1e-12
# Roots this close to zero are the trivial tangency at the origin.
ORIGIN_EXCLUSION = 1e-6


@dataclass(frozen=True)
class GammaRoot:
    """One admissible angle.

    branch_index counts the open intervals between consecutive poles of
    tan(n g) inside (0, pi/2), starting at 0 for (0, pi/(2n)).
    """

    n: int
    gamma: float
    residual: float
    branch_index: int


def gamma_residual(n, gamma):
    """tan(n gamma) - n tan(gamma), refusing near-pole evaluations."""
    n = int(n)
    gamma = float(gamma)
    if abs(math.cos(gamma)) < POLE_TOL or abs(math.cos(n * gamma)) < POLE_TOL:
        raise PoleProximityError(
            f"angle {gamma!r} sits on a tangent pole for n={n}"
        )
    return math.tan(n * gamma) - n * math.tan(gamma)


def _poles(n):
    """Poles of tan(n g) inside (0, pi/2), ascending."""
    out = []
    j = 0
    while True:
        p = (2 * j + 1) * math.pi / (2 * n)
        if p >= math.pi / 2 - 1e-15:
            break
        out.append(p)
        j += 1
    return out


def gamma_roots(n, tol=1e-14, scan_points=512):
    """All roots for one harmonic, as a tuple sorted by angle.

    Each branch between consecutive poles is scanned on a uniform grid,
    sign changes are bisected to extended-precision width, and a root at
    the origin is discarded as trivial.  ``tol`` is an upper bound on the
    accepted bracket width; the bisection always runs to extended
    precision, so any tol down to 1e-14 yields the same roots.
    """
    n = int(n)
    if n < 2:
        raise ValueError("harmonic index must be at least 2")
    if not float(tol) >= 1e-14:
        raise ValueError("bracket tolerance must be at least 1e-14")
    one = np.longdouble(1.0)
    nn = np.longdouble(n)
    half_pi = np.longdouble(math.pi) / 2

    def f(g):
        return np.tan(nn * g) - nn * np.tan(g)

    edges = [np.longdouble(0.0)]
    edges += [np.longdouble((2 * j + 1)) * np.longdouble(math.pi) / (2 * nn)
              for j in range(len(_poles(n)))]
    edges.append(half_pi)

    roots = []
    buffer = np.longdouble(1e-9)
    for branch, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        a = lo + buffer * (hi - lo)
        b = hi - buffer * (hi - lo)
        grid = np.linspace(a, b, scan_points, dtype=np.longdouble)
        vals = f(grid)
        sign = np.sign(vals)
        flips = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
        for i in flips:
            x0, x1 = grid[i], grid[i + 1]
            f0 = vals[i]
            for _ in range(120):
                xm = (x0 + x1) / 2
                if xm == x0 or xm == x1:
                    break
                fm = f(xm)
                if fm == 0:
                    x0 = x1 = xm
                    break
                if (fm > 0) == (f0 > 0):
                    x0, f0 = xm, fm
                else:
                    x1 = xm
            root = (x0 + x1) / 2
            if float(root) <= ORIGIN_EXCLUSION:
                continue
            roots.append(
                GammaRoot(
                    n=n,
                    gamma=float(root),
                    residual=abs(float(f(root))),
                    branch_index=branch,
                )
            )
    roots.sort(key=lambda r: r.gamma)
    return tuple(roots)


def gamma_set(n_max, tol=1e-14, scan_points=512):
    """Roots for every harmonic 2..n_max, sorted by angle then harmonic."""
    n_max = int(n_max)
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    out = []
    for n in range(2, n_max + 1):
        out.extend(gamma_roots(n, tol=tol, scan_points=scan_points))
    out.sort(key=lambda r: (r.gamma, r.n))
    return tuple(out)


def nearest_root_distance(gamma, n_max=12):
    """Distance from gamma to the closest admissible angle with n <= n_max."""
    roots = gamma_set(n_max)
    if not roots:
        return float("inf")
    return min(abs(gamma - r.gamma) for r in roots)
