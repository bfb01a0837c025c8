"""Command-line front end.

Subcommands: count, enumerate, invariants, classify, canon, local, render.
All outputs are deterministic given argv: JSON keys are sorted, collections
are emitted in canonical order, and nothing depends on locale or time.
Exit status: 0 success, 1 domain error (one machine-readable line on
stderr), 2 usage error (argparse prints the grammar).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import (
    GROUPS,
    ProfileMismatch,
    UnsupportedClassification,
    canonical_form,
    classify,
)
from .counting import count_atoms_pformula, count_atoms_recurrence
from .diagram import (
    DiagramError,
    diagram_to_json,
    format_diagram,
    parse_diagram,
)
from .enumeration import enumerate_diagrams
from .localmodel import build_local_model
from .surface import NotCloseable, build_atom, find_full_ways

THREADS_ENV = "ATOMFORGE_THREADS"


class DomainError(Exception):
    pass


def _workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise DomainError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cmd_count(args) -> int:
    fn = count_atoms_pformula if args.method == "pformula" else count_atoms_recurrence
    print(fn(args.k))
    return 0


def cmd_enumerate(args) -> int:
    for d in enumerate_diagrams(args.k, args.chords):
        if args.format == "jsonl":
            print(_dump(diagram_to_json(d)))
        else:
            print(format_diagram(d))
    return 0


def cmd_invariants(args) -> int:
    diagram = parse_diagram(args.diagram)
    atom = build_atom(diagram)
    try:
        closed = atom.close_up()
        closeable = True
    except NotCloseable as exc:
        closed = None
        closeable = False
        if args.close_up:
            raise DomainError(f"NotCloseable: {exc}") from exc
    surface = closed if args.close_up else atom
    inv = surface.invariants()
    out = {
        "orientable": inv.orientable,
        "euler": inv.euler_characteristic,
        "boundary": inv.boundary_components,
        "closeable": closeable,
        "full_ways": len(find_full_ways(diagram)),
    }
    if inv.orientable:
        out["genus"] = inv.genus
    else:
        out["crosscap"] = inv.crosscap_number
    print(_dump(out))
    return 0


def cmd_classify(args) -> int:
    mode = "fatom" if args.mode == "fatom" else "atom"
    catalog = classify(
        args.genus, True, mode, group=args.group, workers=_workers()
    )
    if args.jsonl:
        for rep in catalog.classes:
            print(_dump(diagram_to_json(rep)))
    print(
        _dump(
            {
                "genus": catalog.genus,
                "mode": catalog.mode,
                "count": catalog.count,
                "group_used": catalog.group_used,
            }
        )
    )
    return 0


def cmd_canon(args) -> int:
    diagram = parse_diagram(args.diagram)
    print(canonical_form(diagram, args.mode, args.group).decode("ascii"))
    return 0


def cmd_local(args) -> int:
    model = build_local_model(args.k)
    print(
        _dump(
            {
                "k": model.k,
                "coefficients": list(model.coefficients),
                "rays": [f"{a.numerator}/{a.denominator}" for a in model.ray_angles],
                "sector_signs": list(model.sector_signs),
            }
        )
    )
    return 0


def cmd_render(args) -> int:
    diagram = parse_diagram(args.diagram)
    _render(diagram, args.out)
    print(args.out)
    return 0


def _render(diagram, path: str):
    """Static image: circle, numbered matched points, chords, colored arcs.

    Positive arcs are drawn thick black, negative ones thin grey.
    """
    import math

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = diagram.k + 1
    colors = diagram.arc_coloring()
    fig, ax = plt.subplots(figsize=(4, 4))
    ax.set_aspect("equal")
    ax.axis("off")

    def angle(i: float) -> float:
        return math.pi / 2 - 2 * math.pi * i / n

    for j in range(n):
        theta = [angle(j + t / 64) for t in range(65)]
        xs = [math.cos(t) for t in theta]
        ys = [math.sin(t) for t in theta]
        if colors[j] > 0:
            ax.plot(xs, ys, color="black", linewidth=2.5)
        else:
            ax.plot(xs, ys, color="grey", linewidth=1.0)
    for i in range(n):
        x, y = math.cos(angle(i)), math.sin(angle(i))
        ax.plot([x], [y], marker="o", color="black", markersize=4)
        ax.annotate(str(i), (1.12 * x, 1.12 * y), ha="center", va="center")
    for a, b in diagram.chords:
        xa, ya = math.cos(angle(a)), math.sin(angle(a))
        xb, yb = math.cos(angle(b)), math.sin(angle(b))
        ax.plot([xa, xb], [ya, yb], color="tab:blue", linewidth=1.2)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atomforge",
        description="Chord-diagram calculus for boundary critical points",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of atoms for a given k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "pformula"), default="recurrence")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream every diagram for a given k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--chords", type=int, default=None)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("invariants", help="surface invariants of a diagram's atom")
    p.add_argument("--diagram", required=True)
    p.add_argument("--close-up", action="store_true", dest="close_up")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="catalog of optimal diagram classes")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--mode", choices=("atom", "fatom"), required=True)
    p.add_argument("--group", choices=GROUPS, default=None)
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canon", help="canonical form of a diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--mode", choices=("atom", "fatom"), required=True)
    p.add_argument("--group", choices=GROUPS, default=None)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("local", help="local model Re(x+iy)^k data")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("render", help="draw a diagram to a static image file")
    p.add_argument("--diagram", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        DomainError,
        DiagramError,
        NotCloseable,
        ProfileMismatch,
        UnsupportedClassification,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
