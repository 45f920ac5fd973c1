"""Tools for plane domains that float in equilibrium at every orientation.

The package covers both classical floating models: the capillary model,
where the waterline must meet the boundary at a prescribed angle on both
sides, and the area model, where the waterline cuts off a prescribed area
fraction.  It provides exact curve representations (radius-of-curvature
Fourier series and circular-arc splines), chord sampling and shooting,
the admissible-angle enumeration for the capillary model, verifiers for
both models, the arc-flower construction from admissible polygons, a
least-squares search over radius harmonics, and deterministic SVG output.
"""

from .archimedean import (
    arch_complement_defect,
    arch_equivalence_report,
    arch_floats_everywhere,
    arch_profile,
    constant_angle_diagnostic,
    is_convex,
)
from .chords import (
    ChordSample,
    chord_at_fraction,
    chord_samples,
    chord_table,
    fraction_sweep,
    shoot_chord,
    shoot_table,
)
from .curves import ArcSplineCurve, CircularArc, FourierConvexCurve
from .errors import (
    AmbiguousArcError,
    CurveFormatError,
    DegenerateChordError,
    FloatkitError,
    InvalidCurveError,
    NearTangencyError,
    NoIntersectionError,
    NonConvexError,
    NonSimpleCurveError,
    NotARootError,
    NotConcyclicError,
    PoleProximityError,
)
from .finn_young import (
    EquilibriumScan,
    fy_curve,
    fy_curve_multi,
    fy_equilibrium_count,
    fy_floats_everywhere,
    fy_orientation_defect,
)
from .gamma import (GammaRoot, gamma_residual, gamma_roots, gamma_set,
                    nearest_root_distance)
from .io import (
    curve_from_dict,
    curve_to_dict,
    dump_curve,
    dumps_curve,
    dumps_polygon,
    load_curve,
    loads_curve,
    loads_polygon,
    polygon_from_dict,
    polygon_to_dict,
)
from .profiles import FloatProfile, ObservableStats
from .render import render_svg
from .search import (
    SearchProblem,
    SearchResult,
    coefficients_from_vector,
    floating_defect,
    search_floating,
    vector_from_coefficients,
)
from .zako import (
    ZaKoDiagnostics,
    ZaKoPolygon,
    midpoint_polygon,
    zako_construct,
    zako_validate,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousArcError",
    "ArcSplineCurve",
    "ChordSample",
    "CircularArc",
    "CurveFormatError",
    "DegenerateChordError",
    "EquilibriumScan",
    "FloatkitError",
    "FloatProfile",
    "FourierConvexCurve",
    "GammaRoot",
    "InvalidCurveError",
    "NearTangencyError",
    "NoIntersectionError",
    "NonConvexError",
    "NonSimpleCurveError",
    "NotARootError",
    "NotConcyclicError",
    "ObservableStats",
    "PoleProximityError",
    "SearchProblem",
    "SearchResult",
    "ZaKoDiagnostics",
    "ZaKoPolygon",
    "arch_complement_defect",
    "arch_equivalence_report",
    "arch_floats_everywhere",
    "arch_profile",
    "chord_at_fraction",
    "chord_samples",
    "chord_table",
    "coefficients_from_vector",
    "constant_angle_diagnostic",
    "curve_from_dict",
    "curve_to_dict",
    "dump_curve",
    "dumps_curve",
    "dumps_polygon",
    "floating_defect",
    "fraction_sweep",
    "fy_curve",
    "fy_curve_multi",
    "fy_equilibrium_count",
    "fy_floats_everywhere",
    "fy_orientation_defect",
    "gamma_residual",
    "gamma_roots",
    "gamma_set",
    "nearest_root_distance",
    "is_convex",
    "load_curve",
    "loads_curve",
    "loads_polygon",
    "midpoint_polygon",
    "polygon_from_dict",
    "polygon_to_dict",
    "render_svg",
    "search_floating",
    "shoot_chord",
    "shoot_table",
    "vector_from_coefficients",
    "zako_construct",
    "zako_validate",
]
