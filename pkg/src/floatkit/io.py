"""JSON serialization for curves and polygons.

Curve documents carry a ``kind`` tag:

* ``{"kind": "fourier", "a0": r, "harmonics": [[n, a, b], ...]}``
* ``{"kind": "arcs", "arcs": [{"cx": x, "cy": y, "r": r,
  "start": t0, "end": t1, "ccw": true}, ...]}``
* ``{"kind": "polygon", "vertices": [[x, y], ...], "k": n}``

Angles are radians.  Floats round-trip exactly because Python serializes
the shortest decimal that parses back to the same double.
"""

from __future__ import annotations

import json

from .curves import ArcSplineCurve, CircularArc, FourierConvexCurve
from .errors import CurveFormatError


def curve_to_dict(curve):
    if isinstance(curve, FourierConvexCurve):
        return {
            "kind": "fourier",
            "a0": curve.mean_radius,
            "harmonics": [[n, a, b] for n, a, b in curve.harmonics],
        }
    if isinstance(curve, ArcSplineCurve):
        return {
            "kind": "arcs",
            "arcs": [
                {
                    "cx": a.center[0],
                    "cy": a.center[1],
                    "r": a.radius,
                    "start": a.start_angle,
                    "end": a.end_angle,
                    "ccw": a.ccw,
                }
                for a in curve.arcs
            ],
        }
    raise CurveFormatError(f"cannot serialize object of type {type(curve).__name__}")


def curve_from_dict(doc):
    if not isinstance(doc, dict):
        raise CurveFormatError("curve document must be a JSON object")
    kind = doc.get("kind")
    if kind == "fourier":
        try:
            return FourierConvexCurve(
                doc["a0"],
                [(int(n), float(a), float(b)) for n, a, b in doc.get("harmonics", [])],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CurveFormatError(f"malformed fourier document: {exc}") from exc
    if kind == "arcs":
        try:
            arcs = [
                CircularArc(
                    center=(float(a["cx"]), float(a["cy"])),
                    radius=float(a["r"]),
                    start_angle=float(a["start"]),
                    end_angle=float(a["end"]),
                    ccw=bool(a.get("ccw", True)),
                )
                for a in doc["arcs"]
            ]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise CurveFormatError(f"malformed arcs document: {exc}") from exc
        return ArcSplineCurve(arcs)
    raise CurveFormatError(f"unknown curve kind: {kind!r}")


def dump_curve(curve, fp):
    json.dump(curve_to_dict(curve), fp, indent=2)
    fp.write("\n")


def dumps_curve(curve):
    return json.dumps(curve_to_dict(curve), indent=2) + "\n"


def load_curve(fp):
    try:
        doc = json.load(fp)
    except json.JSONDecodeError as exc:
        raise CurveFormatError(f"invalid JSON: {exc}") from exc
    return curve_from_dict(doc)


def loads_curve(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFormatError(f"invalid JSON: {exc}") from exc
    return curve_from_dict(doc)


def polygon_to_dict(polygon):
    return {
        "kind": "polygon",
        "vertices": [[float(x), float(y)] for x, y in polygon.vertices],
        "k": polygon.k,
    }


def polygon_from_dict(doc):
    from .zako import ZaKoPolygon

    if not isinstance(doc, dict) or doc.get("kind") != "polygon":
        raise CurveFormatError("polygon document must have kind 'polygon'")
    try:
        vertices = tuple((float(x), float(y)) for x, y in doc["vertices"])
        k = int(doc["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CurveFormatError(f"malformed polygon document: {exc}") from exc
    return ZaKoPolygon(vertices=vertices, k=k)


def loads_polygon(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFormatError(f"invalid JSON: {exc}") from exc
    return polygon_from_dict(doc)


def dumps_polygon(polygon):
    return json.dumps(polygon_to_dict(polygon), indent=2) + "\n"
