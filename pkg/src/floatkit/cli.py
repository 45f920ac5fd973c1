"""Command-line interface.

Machine-readable JSON goes to stdout, one-line human summaries to stderr.
Exit status: 0 on success (verification passed, search converged), 1 when
a verification or search ran but the verdict is negative, 2 on input
errors (malformed documents, inadmissible parameters, unusable files).
JSON reports carry a "schema": 1 version tag.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as curve_io
from .archimedean import arch_profile
from .chords import chord_samples, shoot_chord
from .errors import FloatkitError
from .finn_young import fy_curve, fy_floats_everywhere
from .gamma import gamma_roots, gamma_set
from .profiles import MODEL_ARCHIMEDEAN, MODEL_FINN_YOUNG
from .render import render_svg
from .search import SearchProblem, search_floating
from .zako import midpoint_polygon, zako_construct
from .curves import FourierConvexCurve

# Shooting degrades near the convexity limit, so the CLI stays clear of it.
TAU_CLI_CAP = 0.95


def _emit(doc, summary):
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _load_curve(path):
    try:
        with open(path, "r", encoding="utf-8") as fp:
            return curve_io.load_curve(fp)
    except OSError as exc:
        raise FloatkitError(f"cannot read {path}: {exc}") from exc


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(text)


def _parse_harmonics(text):
    """Harmonic budgets like '2..6', '4', or '2,4,6' (mixable)."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if ".." in token:
                lo, hi = token.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(token))
        except ValueError as exc:
            raise FloatkitError(f"bad harmonic budget {text!r}") from exc
    if not out:
        raise FloatkitError(f"bad harmonic budget {text!r}")
    return tuple(out)


def _base_polygon(spec, circumradius):
    """'regular:<n>' for the midpoint construction, else a JSON path."""
    if spec.startswith("regular:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError as exc:
            raise FloatkitError(f"bad base polygon {spec!r}") from exc
        return midpoint_polygon(n, circumradius)
    try:
        with open(spec, "r", encoding="utf-8") as fp:
            return curve_io.polygon_from_dict(json.load(fp))
    except OSError as exc:
        raise FloatkitError(f"cannot read {spec}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FloatkitError(f"invalid JSON in {spec}: {exc}") from exc


def _cmd_gamma(args):
    roots = (
        gamma_set(args.n_max, tol=args.tol)
        if args.n is None
        else gamma_roots(args.n, tol=args.tol)
    )
    doc = [{"n": r.n, "gamma": r.gamma, "residual": r.residual} for r in roots]
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(f"{len(doc)} admissible angle(s)", file=sys.stderr)
    return 0


def _cmd_construct(args):
    if args.what == "fy":
        if abs(args.tau) > TAU_CLI_CAP:
            raise FloatkitError(
                f"|tau| is capped at {TAU_CLI_CAP} here; near-degenerate "
                "curvature makes verification ill-conditioned"
            )
        gamma = args.gamma
        if gamma is None:
            roots = gamma_roots(args.n)
            if not roots:
                raise FloatkitError(f"no admissible angles exist for n={args.n}")
            gamma = roots[0].gamma
        curve = fy_curve(args.n, gamma, args.tau)
        summary = f"capillary curve n={args.n} gamma={gamma:.12g} tau={args.tau}"
    elif args.what == "zako":
        polygon = _base_polygon(args.base_polygon, args.circumradius)
        curve = zako_construct(polygon)
        summary = f"arc flower with {len(curve.arcs)} arcs"
    else:
        harmonics = []
        for spec_str in args.harmonic or []:
            try:
                n, a, b = spec_str.split(":")
                harmonics.append((int(n), float(a), float(b)))
            except ValueError as exc:
                raise FloatkitError(
                    f"harmonic must look like n:a:b, got {spec_str!r}"
                ) from exc
        curve = FourierConvexCurve(args.mean_radius, harmonics)
        summary = f"fourier curve with {len(harmonics)} harmonic(s)"
    _write_text(args.output, curve_io.dumps_curve(curve))
    print(summary, file=sys.stderr)
    return 0


def _cmd_verify(args):
    curve = _load_curve(args.curve)
    if args.model == "fy":
        profile = fy_floats_everywhere(
            curve, args.gamma, n_samples=args.samples, tol=args.tol,
            s_offset=args.offset,
        )
    else:
        profile = arch_profile(
            curve, args.delta, n_samples=args.samples, tol=args.tol,
            s_offset=args.offset,
        )
    report = {"schema": 1, **profile.report()}
    verdict = "PASS" if report["verdict"] else "FAIL"
    _emit(
        report,
        f"{report['model']} @ {report['parameter']:.12g}: {verdict} "
        f"(max deviation {report['max_abs_deviation']:.3e}, tol {report['tol']:.1e})",
    )
    return 0 if report["verdict"] else 1


def _cmd_search(args):
    if args.mode == "fy":
        if args.gamma is None:
            raise FloatkitError("finn-young search needs --gamma")
        mode, value = MODEL_FINN_YOUNG, args.gamma
    else:
        if args.delta is None:
            raise FloatkitError("archimedean search needs --delta")
        mode, value = MODEL_ARCHIMEDEAN, args.delta
    try:
        problem = SearchProblem(
            mode=mode,
            value=value,
            harmonics=_parse_harmonics(args.harmonics),
            n_samples=args.samples,
            margin=args.margin,
            seed=args.seed,
            max_iter=args.max_iter,
            init_scale=args.init_scale,
        )
    except ValueError as exc:
        raise FloatkitError(str(exc)) from exc
    result = search_floating(problem)
    doc = result.to_dict()
    status = "converged" if result.converged else f"stopped ({result.reason})"
    _emit(
        doc,
        f"search {status}: objective {result.objective:.3e}, "
        f"max coefficient {result.max_coefficient:.3e}",
    )
    if args.output is not None and result.curve is not None:
        _write_text(args.output, curve_io.dumps_curve(result.curve))
    return 0 if result.converged else 1


def _cmd_render(args):
    curve = _load_curve(args.curve)
    if args.gamma is not None and args.delta is not None:
        raise FloatkitError("choose either --gamma chords or --delta chords")
    chords = []
    labels = []
    if args.delta is not None:
        chords = chord_samples(curve, args.delta, args.chords)
        if args.annotate and chords:
            c = chords[0]
            mx = 0.5 * (c.p_start[0] + c.p_end[0])
            my = 0.5 * (c.p_start[1] + c.p_end[1])
            labels.append((mx, my, f"delta={args.delta:g}"))
    elif args.gamma is not None:
        per = curve.perimeter
        chords = [
            shoot_chord(curve, i * per / args.chords, args.gamma)
            for i in range(args.chords)
        ]
        if args.annotate and chords:
            c = chords[0]
            labels.append((c.p_start[0], c.p_start[1], f"gamma={args.gamma:g}"))
            labels.append((c.p_end[0], c.p_end[1], f"gamma={args.gamma:g}"))
    shaded = chords if args.shade else ()
    svg = render_svg(
        curve, chords=chords, shaded=shaded, labels=labels, stroke=args.stroke
    )
    _write_text(args.output, svg)
    print(f"rendered {args.curve}", file=sys.stderr)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="floatkit",
        description="Construct and verify plane domains that float "
        "in equilibrium at every orientation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="enumerate admissible entry angles")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--n", type=int, default=None,
                   help="restrict to a single harmonic")
    p.add_argument("--tol", type=float, default=1e-14,
                   help="root bracket width bound (cannot go below 1e-14)")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("construct", help="build a curve document")
    what = p.add_subparsers(dest="what", required=True)

    q = what.add_parser("fy", help="single-harmonic capillary floater")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--gamma", type=float, default=None,
                   help="defaults to the smallest admissible angle for n")
    q.add_argument("--tau", type=float, default=0.3)
    q.add_argument("-o", "--output", default=None)
    q.set_defaults(func=_cmd_construct)

    q = what.add_parser("zako", help="arc flower from an admissible polygon")
    q.add_argument("--base-polygon", default="regular:3", metavar="SPEC",
                   help="regular:<n> midpoint construction or a polygon JSON path")
    q.add_argument("--circumradius", type=float, default=1.0)
    q.add_argument("-o", "--output", default=None)
    q.set_defaults(func=_cmd_construct)

    q = what.add_parser("fourier", help="explicit radius-harmonic curve")
    q.add_argument("--mean-radius", type=float, default=1.0)
    q.add_argument("--harmonic", action="append", metavar="N:A:B")
    q.add_argument("-o", "--output", default=None)
    q.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run a floating verification sweep")
    model = p.add_subparsers(dest="model", required=True)

    q = model.add_parser("fy", help="capillary model at an entry angle")
    q.add_argument("--curve", required=True)
    q.add_argument("--gamma", type=float, required=True)
    q.add_argument("--samples", type=int, default=360)
    q.add_argument("--tol", type=float, default=1e-6)
    q.add_argument("--offset", type=float, default=0.0)
    q.set_defaults(func=_cmd_verify)

    q = model.add_parser("arch", help="area model at a perimeter fraction")
    q.add_argument("--curve", required=True)
    q.add_argument("--delta", type=float, required=True)
    q.add_argument("--samples", type=int, default=360)
    q.add_argument("--tol", type=float, default=1e-6)
    q.add_argument("--offset", type=float, default=0.0)
    q.set_defaults(func=_cmd_verify)

    defaults = SearchProblem(
        mode=MODEL_ARCHIMEDEAN, value=0.5, harmonics=(2,)
    )
    p = sub.add_parser("search", help="least-squares search for a floater")
    p.add_argument("--mode", choices=("fy", "arch"), required=True)
    p.add_argument("--gamma", type=float, default=None,
                   help="entry angle for fy mode")
    p.add_argument("--delta", type=float, default=None,
                   help="perimeter fraction for arch mode")
    p.add_argument("--harmonics", default="2..6", metavar="A..B|N,N",
                   help="harmonic budget, e.g. 2..6 or 3,4,5")
    p.add_argument("--samples", type=int, default=defaults.n_samples)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--max-iter", type=int, default=defaults.max_iter)
    p.add_argument("--margin", type=float, default=defaults.margin)
    p.add_argument("--init-scale", type=float, default=defaults.init_scale)
    p.add_argument("-o", "--output", default=None,
                   help="also write the found curve document here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("render", help="write a deterministic SVG")
    p.add_argument("--curve", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--stroke", default="#1a1a1a")
    p.add_argument("--delta", type=float, default=None,
                   help="draw chords at this perimeter fraction")
    p.add_argument("--gamma", type=float, default=None,
                   help="draw chords shot at this entry angle")
    p.add_argument("--chords", type=int, default=12,
                   help="how many chords to draw")
    p.add_argument("--shade", action="store_true",
                   help="shade the caps cut off by the drawn chords")
    p.add_argument("--annotate", action="store_true",
                   help="label the first chord with its parameter")
    p.set_defaults(func=_cmd_render)

    return parser


def cli_main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FloatkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
