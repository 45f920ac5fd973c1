"""Least-squares search for floating curves over radius harmonics.

The unknowns are the Fourier coefficients of the radius of curvature for a
chosen set of harmonics (mean radius fixed at 1).  The residual vector
stacks the model's constancy defects over a fixed sweep (cap-area
deviations from their mean in the area model, exit-angle deviations from
the entry angle in the capillary model) plus a soft barrier keeping the
radius of curvature above a margin, and a damped Gauss-Newton loop
(Levenberg style, finite-difference Jacobian) drives it to zero.
Rotating a solution yields another one, so the sine coefficient of the
lowest harmonic is pinned to zero to fix the phase.

Iterates that leave the strictly convex region are given a large penalty
residual instead of being evaluated, which lets the damping shrink the
step until the iterate is feasible again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chords import fraction_sweep, shoot_table
from .curves import TWO_PI, FourierConvexCurve
from .errors import FloatkitError
from .profiles import MODEL_ARCHIMEDEAN, MODEL_FINN_YOUNG

# Iterates with radius of curvature at or below this are not evaluated.
FEASIBLE_RHO = 1e-3

BARRIER_WEIGHT = 1e3
PENALTY = 1e6
STEP_TOL = 1e-12

# The damping parameter never drops below this; it keeps the normal
# equations well conditioned along the nearly flat directions that appear
# when whole coefficient families are admissible.
LAMBDA_FLOOR = 1e-3


@dataclass(frozen=True)
class SearchProblem:
    """Search configuration; value is the entry angle or the fraction."""

    mode: str
    value: float
    harmonics: tuple
    n_samples: int = 256
    margin: float = 0.1
    seed: int = 0
    max_iter: int = 200
    objective_tol: float = 1e-8
    init_scale: float = 0.08
    fd_step: float = 1e-6

    def __post_init__(self):
        if self.mode not in (MODEL_FINN_YOUNG, MODEL_ARCHIMEDEAN):
            raise ValueError(f"unknown mode {self.mode!r}")
        hs = tuple(sorted(int(n) for n in self.harmonics))
        if not hs or len(set(hs)) != len(hs) or hs[0] < 2:
            raise ValueError("harmonics must be distinct integers >= 2")
        object.__setattr__(self, "harmonics", hs)
        if self.mode == MODEL_FINN_YOUNG:
            if not 1e-6 < self.value < 0.5 * math.pi - 1e-6:
                raise ValueError("entry angle out of range")
        else:
            if not 0.0 < self.value < 1.0:
                raise ValueError("perimeter fraction out of range")
        if not 0.0 < self.margin < 1.0:
            raise ValueError("margin must lie in (0, 1)")

    @property
    def dim(self):
        return 2 * len(self.harmonics) - 1

    @property
    def residual_size(self):
        return self.n_samples + 1


def coefficients_from_vector(problem, x):
    """Unpack the parameter vector; the lowest harmonic's b is pinned at 0."""
    x = np.asarray(x, dtype=float)
    out = []
    i = 0
    for idx, n in enumerate(problem.harmonics):
        a = x[i]
        i += 1
        if idx == 0:
            b = 0.0
        else:
            b = x[i]
            i += 1
        out.append((n, float(a), float(b)))
    return tuple(out)


def vector_from_coefficients(problem, coefficients):
    """Pack coefficient triples into the gauge-fixed parameter vector."""
    terms = {int(n): (float(a), float(b)) for n, a, b in coefficients}
    if sorted(terms) != list(problem.harmonics):
        raise ValueError(
            "coefficient harmonics must match the problem's harmonic set"
        )
    x = []
    for idx, n in enumerate(problem.harmonics):
        a, b = terms[n]
        x.append(a)
        if idx == 0:
            if b != 0.0:
                raise ValueError(
                    "phase gauge: the lowest harmonic's sine coefficient "
                    "must be zero"
                )
        else:
            x.append(b)
    return np.array(x, dtype=float)


def _terms_min_rho(terms):
    grid = np.linspace(0.0, TWO_PI, 1024, endpoint=False)
    rho = np.ones_like(grid)
    for n, a, b in terms:
        rho += a * np.cos(n * grid) + b * np.sin(n * grid)
    return float(np.min(rho))


def _penalty_vector(problem, violation):
    return np.full(problem.residual_size, PENALTY * (1.0 + violation))


def floating_defect(coefficients, problem):
    """Residual vector for coefficient triples (penalized when infeasible).

    Archimedean mode: cap_area(s_i) minus the sweep mean over the N-grid;
    Finn-Young mode: angle_end(s_i) minus the entry angle; both with one
    appended barrier residual 10^3 * max(0, margin - min rho).
    """
    terms = tuple((int(n), float(a), float(b)) for n, a, b in coefficients)
    min_rho = _terms_min_rho(terms)
    if min_rho <= FEASIBLE_RHO:
        return _penalty_vector(problem, FEASIBLE_RHO - min_rho)
    active = [t for t in terms if t[1] or t[2]]
    try:
        curve = FourierConvexCurve(1.0, active)
        s = curve.perimeter * np.arange(problem.n_samples) / problem.n_samples
        if problem.mode == MODEL_FINN_YOUNG:
            table = shoot_table(curve, s, problem.value)
            res = table["angle_end"] - problem.value
        else:
            table = fraction_sweep(curve, problem.value, problem.n_samples)
            cap = table["cap_area"]
            res = cap - np.mean(cap)
    except FloatkitError:
        return _penalty_vector(problem, 1.0)
    barrier = BARRIER_WEIGHT * max(0.0, problem.margin - min_rho)
    return np.concatenate([res, [barrier]])


def _defect_from_vector(problem, x):
    return floating_defect(coefficients_from_vector(problem, x), problem)


def _jacobian(problem, x, r0):
    h = problem.fd_step
    cols = []
    for i in range(x.size):
        xp = x.copy()
        xp[i] += h
        cols.append((_defect_from_vector(problem, xp) - r0) / h)
    return np.stack(cols, axis=1)


def _initial_vector(problem):
    """Seeded random start, deterministically shrunk onto the margin."""
    rng = np.random.default_rng(problem.seed)
    x = problem.init_scale * rng.standard_normal(problem.dim)
    for _ in range(60):
        terms = coefficients_from_vector(problem, x)
        if _terms_min_rho(terms) >= problem.margin:
            break
        x = 0.5 * x
    return x


@dataclass(frozen=True)
class SearchResult:
    problem: SearchProblem
    coefficients: tuple
    curve: object
    objective: float
    iterations: int
    converged: bool
    reason: str
    min_rho: float
    max_coefficient: float
    verified: bool
    verify_tol: float

    def to_dict(self):
        return {
            "schema": 1,
            "mode": self.problem.mode,
            "value": self.problem.value,
            "harmonics": [[n, a, b] for n, a, b in self.coefficients],
            "objective": self.objective,
            "iterations": self.iterations,
            "converged": self.converged,
            "reason": self.reason,
            "min_rho": self.min_rho,
            "max_coefficient": self.max_coefficient,
            "verified": self.verified,
            "verify_tol": self.verify_tol,
        }


def search_floating(problem, init=None):
    """Damped Gauss-Newton loop from a seeded random or explicit start.

    ``init`` takes coefficient triples over exactly the problem's
    harmonic set, with the phase gauge respected and the convexity margin
    satisfied; when omitted the start is drawn from the problem's seed.
    """
    if init is None:
        x = _initial_vector(problem)
    else:
        x = vector_from_coefficients(problem, init)
        if _terms_min_rho(coefficients_from_vector(problem, x)) < problem.margin:
            raise ValueError("initial coefficients violate the convexity margin")
    r = _defect_from_vector(problem, x)
    cost = float(r @ r)
    lam = 1e-3
    reason = "max_iter"
    iterations = 0
    for iterations in range(1, problem.max_iter + 1):
        if cost < problem.objective_tol:
            reason = "objective_tol"
            break
        jac = _jacobian(problem, x, r)
        grad = jac.T @ r
        hess = jac.T @ jac
        step = None
        while True:
            try:
                step = np.linalg.solve(
                    hess + lam * np.eye(problem.dim), -grad
                )
            except np.linalg.LinAlgError:
                step = None
            if step is not None:
                x_try = x + step
                r_try = _defect_from_vector(problem, x_try)
                cost_try = float(r_try @ r_try)
                if cost_try < cost:
                    x, r, cost = x_try, r_try, cost_try
                    lam = max(lam * 0.1, LAMBDA_FLOOR)
                    break
            lam *= 10.0
            if lam > 1e12:
                reason = "stalled"
                break
        if reason == "stalled":
            break
        if np.linalg.norm(step) < STEP_TOL:
            reason = "step_tol"
            break
    else:
        iterations = problem.max_iter
    if cost < problem.objective_tol:
        reason = "objective_tol"

    coefficients = coefficients_from_vector(problem, x)
    min_rho = _terms_min_rho(coefficients)
    curve = None
    if min_rho > FEASIBLE_RHO:
        try:
            curve = FourierConvexCurve(
                1.0, [t for t in coefficients if t[1] or t[2]]
            )
        except FloatkitError:
            curve = None
    converged = reason in ("objective_tol", "step_tol") and curve is not None

    verify_tol = 10.0 * math.sqrt(problem.objective_tol)
    verified = False
    if curve is not None:
        from .archimedean import arch_floats_everywhere
        from .finn_young import fy_floats_everywhere

        try:
            if problem.mode == MODEL_FINN_YOUNG:
                verified = fy_floats_everywhere(
                    curve, problem.value, n_samples=720, tol=verify_tol
                ).verdict
            else:
                verified = arch_floats_everywhere(
                    curve, problem.value, n_samples=720, tol=verify_tol
                )
        except FloatkitError:
            verified = False
    max_coefficient = max(
        (max(abs(a), abs(b)) for _, a, b in coefficients), default=0.0
    )
    return SearchResult(
        problem=problem,
        coefficients=coefficients,
        curve=curve,
        objective=cost,
        iterations=iterations,
        converged=converged,
        reason=reason,
        min_rho=min_rho,
        max_coefficient=max_coefficient,
        verified=verified,
        verify_tol=verify_tol,
    )
