"""
SVG pictures of planar point sets with overlays: hulls, segments, lines, and
wedge regions. Coordinates stay exact until the moment they are written.
"""

from __future__ import annotations

import itertools
import xml.etree.ElementTree as ET
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TypeAlias

from strif import atomic_output_file

from avoidkit.avoidance.avoid_types import AvoidingPair
from avoidkit.errors import InputError
from avoidkit.fractional.frac_types import Wedge
from avoidkit.geometry.geom_types import Point, PointSeq
from avoidkit.geometry.hull import convex_hull_2d

MARGIN = Fraction(1, 20)

POINT_RADIUS = Fraction(1, 200)


def fmt(x: Fraction) -> str:
    return f"{float(x):.6f}"


class Canvas:
    """Maps exact coordinates into the viewBox, with y pointing up."""

    def __init__(self, P: PointSeq):
        xs = [p[0] for p in P]
        ys = [p[1] for p in P]
        self.min_x, self.max_x = min(xs), max(xs)
        self.min_y, self.max_y = min(ys), max(ys)
        extent = max(self.max_x - self.min_x, self.max_y - self.min_y) or Fraction(1)
        self.extent = extent
        self.margin = extent * MARGIN
        self.width = self.max_x - self.min_x + 2 * self.margin
        self.height = self.max_y - self.min_y + 2 * self.margin
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            version="1.1",
            viewBox=f"0 0 {fmt(self.width)} {fmt(self.height)}",
        )
        self.stroke = fmt(extent / 400)

    def xy(self, p: Sequence[Fraction]) -> tuple[str, str]:
        return fmt(p[0] - self.min_x + self.margin), fmt(self.max_y - p[1] + self.margin)

    def box(self) -> list[Point]:
        x0, x1 = self.min_x - self.margin, self.max_x + self.margin
        y0, y1 = self.min_y - self.margin, self.max_y + self.margin
        return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]

    def group(self, color: str, fill: str = "none") -> ET.Element:
        return ET.SubElement(self.root, "g", stroke=color, fill=fill, **{"stroke-width": self.stroke})

    def polygon(self, parent: ET.Element, pts: Sequence[Sequence[Fraction]]) -> None:
        ET.SubElement(parent, "polygon", points=" ".join(",".join(self.xy(p)) for p in pts))

    def line(self, parent: ET.Element, p: Sequence[Fraction], q: Sequence[Fraction]) -> None:
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        ET.SubElement(parent, "line", x1=x1, y1=y1, x2=x2, y2=y2)


@dataclass(frozen=True)
class HullOverlay:
    indices: tuple[int, ...]
    color: str = "#1f77b4"

    def draw(self, P: PointSeq, canvas: Canvas) -> None:
        if not self.indices:
            return
        hull = convex_hull_2d(P.subset(self.indices))
        canvas.polygon(canvas.group(self.color, fill=self.color + "22"), [P[self.indices[i]] for i in hull])


@dataclass(frozen=True)
class SegmentsOverlay:
    segments: tuple[tuple[int, int], ...]
    color: str = "#d62728"

    def draw(self, P: PointSeq, canvas: Canvas) -> None:
        g = canvas.group(self.color)
        for i, j in self.segments:
            canvas.line(g, P[i], P[j])


@dataclass(frozen=True)
class LinesOverlay:
    """Full lines through point pairs, cut off past the picture."""

    pairs: tuple[tuple[int, int], ...]
    color: str = "#7f7f7f"

    def draw(self, P: PointSeq, canvas: Canvas) -> None:
        g = canvas.group(self.color)
        for i, j in self.pairs:
            p, q = P[i], P[j]
            length = max(abs(q[0] - p[0]), abs(q[1] - p[1]))
            t = 4 * canvas.extent / length
            far_p = (p[0] - t * (q[0] - p[0]), p[1] - t * (q[1] - p[1]))
            far_q = (q[0] + t * (q[0] - p[0]), q[1] + t * (q[1] - p[1]))
            canvas.line(g, far_p, far_q)


def _line_value(p: Point, q: Point, x: Point) -> Fraction:
    return (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])


def clip_to_wedge(polygon: list[Point], wedge: Wedge) -> list[Point]:
    """Cut a convex polygon down to the closure of a wedge, exactly."""
    for (p, q), required in wedge.constraints:
        clipped: list[Point] = []
        for a, b in zip(polygon, polygon[1:] + polygon[:1], strict=True):
            fa, fb = _line_value(p, q, a) * required, _line_value(p, q, b) * required
            if fa >= 0:
                clipped.append(a)
            if (fa > 0 > fb) or (fb > 0 > fa):
                t = fa / (fa - fb)
                clipped.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
        polygon = clipped
        if not polygon:
            break
    return polygon


@dataclass(frozen=True)
class WedgeOverlay:
    wedge: Wedge
    color: str = "#2ca02c"

    def draw(self, P: PointSeq, canvas: Canvas) -> None:
        region = clip_to_wedge(canvas.box(), self.wedge)
        if len(region) >= 3:
            canvas.polygon(canvas.group(self.color, fill=self.color + "33"), region)


Overlay: TypeAlias = HullOverlay | SegmentsOverlay | LinesOverlay | WedgeOverlay


def avoiding_pair_overlays(pair: AvoidingPair) -> list[Overlay]:
    """Hulls of both sides and the lines spanned by each side."""
    return [
        LinesOverlay(tuple(itertools.combinations(pair.a, 2)), color="#aec7e8"),
        LinesOverlay(tuple(itertools.combinations(pair.b, 2)), color="#ffbb78"),
        HullOverlay(pair.a, color="#1f77b4"),
        HullOverlay(pair.b, color="#ff7f0e"),
    ]


def svg_text(P: PointSeq, overlays: Sequence[Overlay] = ()) -> str:
    if P.dim != 2:
        raise InputError(f"Only planar point sets can be rendered, got dimension {P.dim}")
    if not len(P):
        raise InputError("Nothing to render")
    canvas = Canvas(P)
    for overlay in overlays:
        overlay.draw(P, canvas)
    points = canvas.group("none", fill="#000000")
    r = fmt(canvas.extent * POINT_RADIUS)
    for p in P:
        cx, cy = canvas.xy(p)
        ET.SubElement(points, "circle", cx=cx, cy=cy, r=r)
    ET.indent(canvas.root)
    return ET.tostring(canvas.root, encoding="unicode") + "\n"


def render_svg(P: PointSeq, overlays: Sequence[Overlay], path: Path) -> None:
    text = svg_text(P, overlays)
    with atomic_output_file(path, make_parents=True) as tmp:
        Path(tmp).write_text(text)
