"""Deterministic SVG figures for planar instances.

Three-dimensional inputs are drawn as their xy-projection; points whose
projections coincide (the pole pairs of the lifted gadgets) collapse to a
single cross.  Output depends only on the input, so figures can be pinned
byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import UnsupportedDimensionError
from .geometry import Point, PointSet, SubsetHull, hull2d
from .ranges import BoxRange, WeightedNet

_SIZE = 480
_PALETTE = ("#4c78a8", "#f58518", "#54a24b", "#b279a2", "#e45756")

Extra = Union[SubsetHull, BoxRange, Sequence[Point]]


def _project(p: Point) -> tuple[Fraction, Fraction]:
    return (p[0], p[1])


def _extra_vertices(extra: Extra) -> list[tuple[Fraction, Fraction]]:
    if isinstance(extra, SubsetHull):
        pts = [_project(p) for p in extra.points]
    elif isinstance(extra, BoxRange):
        if len(extra.intervals) != 2:
            raise UnsupportedDimensionError("only planar boxes can be drawn")
        (x0, x1), (y0, y1) = extra.intervals
        return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    else:
        pts = [_project(p) for p in extra]
    distinct = sorted(set(pts))
    if len(distinct) >= 3:
        return list(hull2d(distinct))
    return distinct


def render_svg(
    P: PointSet,
    net: Optional[WeightedNet] = None,
    extras: Iterable[Extra] = (),
) -> str:
    """Point cloud as dots, net points as crosses, witnesses as regions."""
    if P.dim not in (2, 3):
        raise UnsupportedDimensionError(f"cannot draw dimension {P.dim}")
    dots = [_project(p) for p in P.points]
    crosses: list[tuple[Fraction, Fraction]] = []
    if net is not None:
        crosses.extend(_project(p) for p in net.points)
    if P.dim == 3:
        # projection collisions mark the lifted pole pairs
        seen: dict[tuple[Fraction, Fraction], int] = {}
        for q in dots:
            seen[q] = seen.get(q, 0) + 1
        crosses.extend(q for q, count in sorted(seen.items()) if count > 1)
        dots = [q for q in dots if seen[q] == 1]
    regions = [_extra_vertices(e) for e in extras]

    everything = dots + crosses + [v for region in regions for v in region]
    if not everything:
        raise ValueError("nothing to draw")
    xs = [q[0] for q in everything]
    ys = [q[1] for q in everything]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, Fraction(1))
    margin = span / 20
    scale = Fraction(_SIZE) / (span + 2 * margin)
    # centre the shorter axis inside the square viewport, y pointing up
    off_x = (span - (hi_x - lo_x)) / 2
    off_y = (span - (hi_y - lo_y)) / 2

    def sx(x: Fraction) -> str:
        return f"{float((x - lo_x + margin + off_x) * scale):.2f}"

    def sy(y: Fraction) -> str:
        return f"{float(_SIZE - (y - lo_y + margin + off_y) * scale):.2f}"

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="#ffffff"/>',
    ]
    for i, region in enumerate(regions):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in region)
        if len(region) >= 3:
            out.append(
                f'<polygon points="{pts}" fill="{color}" fill-opacity="0.25" '
                f'stroke="{color}" stroke-width="1"/>'
            )
        elif len(region) == 2:
            (x0, y0), (x1, y1) = region
            out.append(
                f'<line x1="{sx(x0)}" y1="{sy(y0)}" x2="{sx(x1)}" y2="{sy(y1)}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
    for x, y in dots:
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3.5" fill="#1f2430"/>')
    for x, y in crosses:
        cx, cy = float(sx(x)), float(sy(y))
        arm = 6.0
        out.append(
            f'<path d="M {cx - arm:.2f} {cy - arm:.2f} L {cx + arm:.2f} {cy + arm:.2f} '
            f'M {cx - arm:.2f} {cy + arm:.2f} L {cx + arm:.2f} {cy - arm:.2f}" '
            f'stroke="#c0392b" stroke-width="2.5" fill="none"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
