"""Command-line front end: analyze, verify, generate, render, catalan.

Exit codes: 0 all good, 1 a verification property failed, 2 bad input,
3 a documented size cap was exceeded, 4 a generator could not certify its
output.  All output is deterministic: identical invocations produce
byte-identical bytes.  Floating point appears only in SVG rendering.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalan import (
    alternating_sum_check,
    brute_a_diagonal_fvector,
    d_closed,
    d_recurrence_check,
    identity14_check,
)
from .chords import Chord, ChordKind, diagonals, epigonals, universe_of
from .classes import class_report, verify_theorem1, verify_theorem3
from .exact_scalar import QSqrt3
from .geometry import Point, Polygon, PolygonError, validate_polygon
from .generators import (
    GeneratorError,
    class_exemplar,
    convex_ngon,
    random_simple_polygon,
    verify_zigzag_structure,
    zigzag_chi_target,
)
from .nc_euler import euler_brute, euler_recursive, f_vector
from .partition import (
    InstanceTooLarge,
    chi_epigonal_pockets,
    chi_removed_direct,
    chi_removed_lemma1,
    chi_removed_lemma_d2,
    chi_removed_theorem2,
)
from .nc_euler import iter_nc_masks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_GENERATOR = 4

CAPS = {"theorem2_n": 10, "lemmae_n": 10, "theorem3_n": 12, "theorem1_n": 12,
        "zigzag_l": 10, "catalan_n": 64, "catalan_a": 8}


class CliInputError(Exception):
    pass


class CapExceeded(Exception):
    pass


# ---------------------------------------------------------------------------
# Polygon file format


def polygon_to_json(poly: Polygon) -> dict:
    return {"vertices": [{"x": str(p.x), "y": str(p.y)} for p in poly.vertices]}


def polygon_from_json(doc: dict) -> Polygon:
    try:
        verts = [
            Point(QSqrt3.parse(v["x"]), QSqrt3.parse(v["y"]))
            for v in doc["vertices"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise CliInputError(f"malformed polygon document: {exc}") from exc
    return validate_polygon(verts)


def load_polygon(path: str) -> Polygon:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliInputError(f"cannot read polygon file {path}: {exc}") from exc
    return polygon_from_json(doc)


def _dump_json(doc: dict, out) -> None:
    json.dump(doc, out, indent=2, sort_keys=True)
    out.write("\n")


def _thread_cap() -> int:
    raw = os.environ.get("CHORD_EULER_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError as exc:
        raise CliInputError(f"CHORD_EULER_THREADS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise CliInputError("CHORD_EULER_THREADS must be >= 1")
    return cap


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(args) -> int:
    poly = load_polygon(args.file)
    report: dict = {
        "n": poly.n,
        "convex": poly.is_convex,
        "reflex": sorted(poly.reflex_vertices),
        "diagonals": [str(c) for c in diagonals(poly)],
        "epigonals": [str(c) for c in epigonals(poly)],
    }
    if args.cut is not None:
        from .partition import PartitionError, subdivide

        try:
            cut = universe_of(poly).set_of(
                [Chord.parse(tok) for tok in args.cut.split(",") if tok]
            )
            res = subdivide(poly, cut)
        except (KeyError, ValueError, PartitionError) as exc:
            raise CliInputError(f"bad cut: {exc}") from exc
        report["partition"] = [" ".join(map(str, part)) for part in res.parts]
    if args.fvector:
        report["f_vector_d"] = list(f_vector(diagonals(poly)).counts)
        report["f_vector_e"] = list(f_vector(epigonals(poly)).counts)
    if args.chi:
        report["chi_d"] = euler_recursive(diagonals(poly))
        report["chi_e"] = euler_recursive(epigonals(poly))
    if args.classes:
        if poly.n < 5 or args.vertex is None:
            raise CliInputError("--classes needs n >= 5 and --vertex")
        cr = class_report(poly, args.vertex)
        report["classes"] = sorted(cr.memberships)
        report["theorem3"] = _theorem3_json(verify_theorem3(poly, args.vertex))
    if args.json:
        _dump_json(report, sys.stdout)
    else:
        for key in sorted(report):
            if key == "partition":
                print("partition:")
                for line in report[key]:
                    print(f"  {line}")
            else:
                print(f"{key}: {report[key]}")
    return EXIT_OK


def _theorem3_json(rep) -> dict:
    return {
        "vertex": rep.vertex,
        "chi": [rep.chi_d_star, rep.chi_e_star, rep.chi_d_ear, rep.chi_e_ear],
        "detectors": [rep.detector_a, rep.detector_b, rep.detector_c, rep.detector_d],
        "clauses": list(rep.clauses),
        "ok": rep.ok,
    }


# ---------------------------------------------------------------------------
# verify campaigns


def _campaign_polygons(n_lo, n_hi, count, seed, min_n=3):
    for idx in range(count):
        n = n_lo + idx % (n_hi - n_lo + 1)
        if n < min_n:
            raise CliInputError(f"n = {n} below the minimum {min_n}")
        yield idx, random_simple_polygon(n, seed + idx)


def _verify_theorem1(args) -> list[str]:
    n_lo, n_hi = _parse_range(args.n)
    if n_hi > CAPS["theorem1_n"]:
        raise CapExceeded(f"theorem1 cap: n <= {CAPS['theorem1_n']}")
    failures = []
    for n in range(max(3, n_lo), n_hi + 1):
        rep = verify_theorem1(convex_ngon(n))
        if not rep.ok:
            failures.append(f"convex n={n}: {rep}")
    for idx, poly in _campaign_polygons(n_lo, n_hi, args.random, args.seed):
        rep = verify_theorem1(poly)
        if not rep.ok:
            failures.append(f"random item={idx} seed={args.seed + idx} n={poly.n}")
    return failures


def _verify_theorem2(args) -> list[str]:
    n_lo, n_hi = _parse_range(args.n)
    if n_hi > CAPS["theorem2_n"]:
        raise CapExceeded(f"theorem2 cap: n <= {CAPS['theorem2_n']}")
    failures = []
    for idx, poly in _campaign_polygons(n_lo, n_hi, args.random, args.seed, min_n=4):
        uni = universe_of(poly)
        d_mask = uni.kind_mask(ChordKind.DIAGONAL)
        for j_mask in iter_nc_masks(uni.crossing_masks, d_mask):
            j = uni.set_of_mask(j_mask)
            direct = chi_removed_direct(poly, j, "d")
            ok = chi_removed_theorem2(poly, j) == direct
            ok = ok and chi_removed_lemma1(poly, j) == direct
            if j_mask:
                ok = ok and chi_removed_lemma_d2(poly, j) == direct
            if not ok:
                failures.append(
                    f"item={idx} seed={args.seed + idx} n={poly.n} J={j}"
                )
    return failures


def _verify_theorem3(args) -> list[str]:
    n_lo, n_hi = _parse_range(args.n)
    if n_hi > CAPS["theorem3_n"]:
        raise CapExceeded(f"theorem3 cap: n <= {CAPS['theorem3_n']}")
    failures = []
    for idx, poly in _campaign_polygons(n_lo, n_hi, args.random, args.seed, min_n=5):
        for i in range(poly.n):
            rep = verify_theorem3(poly, i)
            if not rep.ok:
                failures.append(
                    f"item={idx} seed={args.seed + idx} n={poly.n} i={i} "
                    f"clauses={rep.failing_clauses()} polygon={json.dumps(polygon_to_json(poly))}"
                )
    return failures


def _verify_lemmae(args) -> list[str]:
    n_lo, n_hi = _parse_range(args.n)
    if n_hi > CAPS["lemmae_n"]:
        raise CapExceeded(f"lemmae cap: n <= {CAPS['lemmae_n']}")
    failures = []
    for idx, poly in _campaign_polygons(n_lo, n_hi, args.random, args.seed, min_n=4):
        uni = universe_of(poly)
        e_mask = uni.kind_mask(ChordKind.EPIGONAL)
        for j_mask in iter_nc_masks(uni.crossing_masks, e_mask):
            j = uni.set_of_mask(j_mask)
            if chi_epigonal_pockets(poly, j) != chi_removed_direct(poly, j, "e"):
                failures.append(f"item={idx} seed={args.seed + idx} n={poly.n} J={j}")
    return failures


def _verify_catalan(args) -> list[str]:
    n_lo, n_hi = _parse_range(args.n)
    a_lo, a_hi = _parse_range(args.a)
    if n_hi > CAPS["catalan_n"] or a_hi > CAPS["catalan_a"]:
        raise CapExceeded("catalan caps: n <= 64, a <= 8")
    failures = []
    for n in range(max(1, n_lo), n_hi + 1):
        for a in range(max(1, a_lo), a_hi + 1):
            if not alternating_sum_check(n, a):
                failures.append(f"alternating n={n} a={a}")
            for k in range(1, n + 1):
                if not d_recurrence_check(n, k, a):
                    failures.append(f"recurrence n={n} k={k} a={a}")
                if not identity14_check(n, k, a):
                    failures.append(f"identity14 n={n} i={k} a={a}")
            size = a * (n + 1) + 2
            if size <= 12:
                fv = brute_a_diagonal_fvector(convex_ngon(size), a)
                want = [d_closed(n, k, a) for k in range(len(fv.counts))]
                if list(fv.counts) != want or fv.euler != (-1) ** n * d_closed(n, n, a - 1):
                    failures.append(f"geometric n={n} a={a}")
    return failures


def _verify_zigzag(args) -> list[str]:
    l_lo, l_hi = _parse_range(args.l)
    if max(abs(l_lo), abs(l_hi)) > CAPS["zigzag_l"]:
        raise CapExceeded(f"zigzag cap: |l| <= {CAPS['zigzag_l']}")
    failures = []
    for l in range(l_lo, l_hi + 1):
        if abs(l) < 2:
            continue
        z = zigzag_chi_target(l)
        rep = verify_zigzag_structure(z)
        if not rep.ok:
            failures.append(f"l={l} structure")
        if abs(l) <= 5 and chi_removed_direct(z.polygon, z.j_set, "d") != l:
            failures.append(f"l={l} direct chi")
    return failures


def cmd_verify(args) -> int:
    _thread_cap()  # validates the env var; campaigns run serially
    runners = {
        "theorem1": _verify_theorem1,
        "theorem2": _verify_theorem2,
        "theorem3": _verify_theorem3,
        "lemmae": _verify_lemmae,
        "catalan": _verify_catalan,
        "zigzag": _verify_zigzag,
    }
    failures = runners[args.target](args)
    if failures:
        for f in failures:
            print(f"FAIL {f}")
        return EXIT_FAIL
    print(f"PASS {args.target}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate


def cmd_generate(args) -> int:
    sidecar_doc = None
    if args.kind == "convex":
        poly = convex_ngon(args.n)
    elif args.kind == "random":
        poly = random_simple_polygon(args.n, args.seed)
    elif args.kind == "zigzag":
        z = zigzag_chi_target(args.l)
        poly = z.polygon
        sidecar_doc = {
            "chords": [str(c) for c in z.j_set],
            "labels": {name: str(c) for name, c in sorted(z.labels.items())},
            "target": z.target,
        }
    elif args.kind.startswith("class"):
        kind = int(args.kind[5:])
        options = {}
        if args.pockets is not None:
            if kind != 3:
                raise CliInputError("--pockets only applies to class3")
            options["pockets"] = args.pockets
        if args.region is not None:
            if kind != 1:
                raise CliInputError("--region only applies to class1")
            options["region"] = args.region
        poly = class_exemplar(kind, args.i, args.n, **options)
    else:
        raise CliInputError(f"unknown kind {args.kind}")
    doc = polygon_to_json(poly)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _dump_json(doc, fh)
    else:
        _dump_json(doc, sys.stdout)
    if sidecar_doc is not None:
        side_path = args.sidecar or (args.out + ".chords.json" if args.out else None)
        if side_path:
            with open(side_path, "w", encoding="utf-8") as fh:
                _dump_json(sidecar_doc, fh)
        else:
            _dump_json(sidecar_doc, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# render


def _svg_coord(v: QSqrt3) -> float:
    return float(v)


def cmd_render(args) -> int:
    poly = load_polygon(args.file)
    chords: list[Chord] = []
    if args.chords:
        try:
            with open(args.chords, "r", encoding="utf-8") as fh:
                side = json.load(fh)
            chords = [Chord.parse(c) for c in side.get("chords", [])]
        except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
            raise CliInputError(f"cannot read chord sidecar: {exc}") from exc
    svg = render_svg(poly, chords)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def render_svg(poly: Polygon, chords: list[Chord]) -> str:
    """Static SVG: solid boundary, dashed diagonals, dotted epigonals."""
    xs = [_svg_coord(p.x) for p in poly.vertices]
    ys = [_svg_coord(p.y) for p in poly.vertices]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    margin = 0.08 * span

    def sx(x: float) -> float:
        return (x - lo_x + margin) * 640.0 / (span + 2 * margin)

    def sy(y: float) -> float:
        return 640.0 - (y - lo_y + margin) * 640.0 / (span + 2 * margin)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" width="640" height="640" '
        'viewBox="0 0 640 640">',
    ]
    pts = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in zip(xs, ys))
    out.append(
        f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="2"/>'
    )
    uni = universe_of(poly)
    styles = {
        ChordKind.DIAGONAL: 'stroke="#1f4e9c" stroke-dasharray="8 5"',
        ChordKind.EPIGONAL: 'stroke="#9c1f1f" stroke-dasharray="2 4"',
        ChordKind.BOUNDARY_CROSSING: 'stroke="#777777" stroke-dasharray="8 3 2 3"',
    }
    for c in sorted(chords):
        kind = uni.kinds[uni.index[Chord.of(c.i, c.j)]]
        a, b = poly.vertices[c.i], poly.vertices[c.j]
        out.append(
            f'<line x1="{sx(_svg_coord(a.x)):.3f}" y1="{sy(_svg_coord(a.y)):.3f}" '
            f'x2="{sx(_svg_coord(b.x)):.3f}" y2="{sy(_svg_coord(b.y)):.3f}" '
            f'{styles[kind]} stroke-width="1.5"/>'
        )
    for i, (x, y) in enumerate(zip(xs, ys)):
        out.append(
            f'<circle cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="3" fill="black"/>'
        )
        out.append(
            f'<text x="{sx(x) + 6:.3f}" y="{sy(y) - 6:.3f}" font-size="14">{i}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# catalan


def cmd_catalan(args) -> int:
    print(d_closed(args.n, args.k, args.a))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chord-euler")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="report chord structure of a polygon file")
    pa.add_argument("file")
    pa.add_argument("--fvector", action="store_true")
    pa.add_argument("--chi", action="store_true")
    pa.add_argument("--classes", action="store_true")
    pa.add_argument("--vertex", type=int, default=None)
    pa.add_argument("--cut", default=None, help='subdivide by chords "i-j,i-j,..."')
    pa.add_argument("--json", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run an identity/property campaign")
    pv.add_argument(
        "target",
        choices=["theorem1", "theorem2", "theorem3", "lemmae", "catalan", "zigzag"],
    )
    pv.add_argument("--n", default="3..8")
    pv.add_argument("--a", default="1..3")
    pv.add_argument("--l", default="-5..5")
    pv.add_argument("--random", type=int, default=100)
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("generate", help="emit a polygon JSON file")
    pg.add_argument(
        "kind",
        choices=["convex", "class1", "class2", "class3", "class4", "class5",
                 "class6", "zigzag", "random"],
    )
    pg.add_argument("--n", type=int, default=6)
    pg.add_argument("--i", type=int, default=0)
    pg.add_argument("--l", type=int, default=2)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--pockets", type=int, default=None)
    pg.add_argument("--region", default=None)
    pg.add_argument("--out", default=None)
    pg.add_argument("--sidecar", default=None)
    pg.set_defaults(func=cmd_generate)

    pr = sub.add_parser("render", help="emit a static SVG figure")
    pr.add_argument("file")
    pr.add_argument("--chords", default=None)
    pr.add_argument("--out", default=None)
    pr.set_defaults(func=cmd_render)

    pc = sub.add_parser("catalan", help="print d_k(n, a)")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--a", type=int, required=True)
    pc.set_defaults(func=cmd_catalan)

    return p


def _join_negative_ranges(argv: list[str]) -> list[str]:
    # argparse mistakes "-5..5" for an option; fold it into "--l=-5..5".
    out = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--l", "--n", "--a") and k + 1 < len(argv) and argv[k + 1].startswith("-"):
            out.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_negative_ranges(list(argv)))
    try:
        return args.func(args)
    except (CliInputError, PolygonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CapExceeded, InstanceTooLarge) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GeneratorError as exc:
        print(f"generator failure: {exc}", file=sys.stderr)
        return EXIT_GENERATOR


if __name__ == "__main__":
    sys.exit(main())
