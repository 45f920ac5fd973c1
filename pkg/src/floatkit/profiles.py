"""Aggregate statistics for chord sweeps and the pass/fail verdicts.

A ``FloatProfile`` packages one verification sweep: which model was
checked, the model parameter (entry angle or perimeter fraction), the
chord samples themselves, summary statistics for every observable, the
worst deviation from the model's constancy requirement, and the boolean
verdict at the requested tolerance.

``report()`` flattens the profile to a fixed JSON-ready dict with keys
``model, parameter, n_samples, max_abs_deviation, mean, stddev, verdict,
tol``; mean and stddev describe the observable the verdict is based on
(exit angle for the capillary check, cap area for the area-model check).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MODEL_FINN_YOUNG = "finn-young"
MODEL_ARCHIMEDEAN = "archimedean"


@dataclass(frozen=True)
class ObservableStats:
    """Population summary of one observable over a sweep."""

    minimum: float
    maximum: float
    mean: float
    stddev: float

    @classmethod
    def from_values(cls, values):
        v = np.asarray(values, dtype=float)
        if v.size == 0:
            nan = float("nan")
            return cls(nan, nan, nan, nan)
        return cls(
            minimum=float(np.min(v)),
            maximum=float(np.max(v)),
            mean=float(np.mean(v)),
            stddev=float(np.std(v)),
        )

    @property
    def spread(self):
        return self.maximum - self.minimum

    @property
    def relative_spread(self):
        """(max - min) / mean, the scale-free constancy defect."""
        return self.spread / abs(self.mean)


@dataclass(frozen=True, eq=False)
class FloatProfile:
    """Result of one floating verification sweep."""

    model: str
    parameter: float
    tol: float
    n_samples: int
    stats: dict
    max_abs_deviation: float
    verdict: bool
    corner_excluded: int
    angle_mismatch_max: float
    table: dict
    curve: object = field(default=None, repr=False)

    @property
    def samples(self):
        """The sweep as ``ChordSample`` objects, one per start position."""
        from .chords import _sample_from_table

        return tuple(
            _sample_from_table(self.table, i) for i in range(self.n_samples)
        )

    def report(self):
        primary = (
            "angle_end" if self.model == MODEL_FINN_YOUNG else "cap_area"
        )
        st = self.stats[primary]
        return {
            "model": self.model,
            "parameter": self.parameter,
            "n_samples": self.n_samples,
            "max_abs_deviation": self.max_abs_deviation,
            "mean": st.mean,
            "stddev": st.stddev,
            "verdict": self.verdict,
            "tol": self.tol,
        }


def _angle_mask(table):
    """Keep samples whose endpoints are both away from corners."""
    return ~(table["corner_start"] | table["corner_end"])


def _angle_mismatch(table, keep):
    """Worst tangent-chord asymmetry over the corner-free samples."""
    if not np.any(keep):
        return 0.0
    diff = table["angle_start"][keep] - table["angle_end"][keep]
    return float(np.max(np.abs(diff)))


def profile_finn_young(table, gamma, tol, curve=None):
    """Profile for a shooting sweep: exit angles must all equal gamma."""
    keep = _angle_mask(table)
    angle_end = table["angle_end"][keep]
    deviation = float(np.max(np.abs(angle_end - gamma))) if angle_end.size else 0.0
    stats = {
        "angle_start": ObservableStats.from_values(table["angle_start"][keep]),
        "angle_end": ObservableStats.from_values(angle_end),
        "chord_length": ObservableStats.from_values(table["chord_length"]),
        "cap_area": ObservableStats.from_values(table["cap_area"]),
    }
    return FloatProfile(
        model=MODEL_FINN_YOUNG,
        parameter=float(gamma),
        tol=float(tol),
        n_samples=int(table["s_start"].size),
        stats=stats,
        max_abs_deviation=deviation,
        verdict=bool(deviation < tol),
        corner_excluded=int(np.count_nonzero(~keep)),
        angle_mismatch_max=_angle_mismatch(table, keep),
        table=table,
        curve=curve,
    )


def profile_archimedean(table, delta, tol, curve=None):
    """Profile for a perimeter-fraction sweep.

    The model requires the caps cut off by chords joining boundary points
    a fixed fraction of the perimeter apart to have constant area; the
    deviation is the relative spread of the cap areas.  Chord-length and
    angle statistics ride along for the equivalence report but do not
    enter the verdict.
    """
    keep = _angle_mask(table)
    stats = {
        "angle_start": ObservableStats.from_values(table["angle_start"][keep]),
        "angle_end": ObservableStats.from_values(table["angle_end"][keep]),
        "chord_length": ObservableStats.from_values(table["chord_length"]),
        "cap_area": ObservableStats.from_values(table["cap_area"]),
    }
    deviation = stats["cap_area"].relative_spread
    return FloatProfile(
        model=MODEL_ARCHIMEDEAN,
        parameter=float(delta),
        tol=float(tol),
        n_samples=int(table["s_start"].size),
        stats=stats,
        max_abs_deviation=float(deviation),
        verdict=bool(deviation < tol),
        corner_excluded=int(np.count_nonzero(~keep)),
        angle_mismatch_max=_angle_mismatch(table, keep),
        table=table,
        curve=curve,
    )
