"""Resolution-independent drawing primitives, palettes and circular layout."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Point = tuple[float, float]

FALLBACK_CYCLE = ("purple", "teal", "goldenrod", "deeppink", "saddlebrown", "slateblue")

# Colors of the optical-table furniture and vertex glyphs.
NEUTRAL_COLORS = frozenset(
    {"black", "white", "gray", "dimgray", "lightgray", "gold", "lightyellow", "darkviolet", "whitesmoke"}
)


@dataclass(frozen=True)
class ModePalette:
    """Mode index to color name; modes without an entry cycle through a fixed list."""

    colors: Mapping[int, str]

    def color(self, mode: int) -> str:
        if mode in self.colors:
            return self.colors[mode]
        return FALLBACK_CYCLE[(mode - len(self.colors)) % len(FALLBACK_CYCLE)]


# Native graphs use limegreen for mode 2, optical tables forestgreen.
NATIVE_PALETTE = ModePalette({0: "dodgerblue", 1: "firebrick", 2: "limegreen", 3: "darkorange"})
OPTICAL_PALETTE = ModePalette({0: "dodgerblue", 1: "firebrick", 2: "forestgreen", 3: "darkorange"})

NAMED_COLORS = (
    NEUTRAL_COLORS
    | set(NATIVE_PALETTE.colors.values())
    | set(OPTICAL_PALETTE.colors.values())
    | set(FALLBACK_CYCLE)
)

KINDS = ("circle", "diamond", "rect", "semicircle", "polyline", "cubic", "text")


@dataclass(frozen=True)
class Element:
    """One drawing primitive.

    The meaning of ``points`` and ``size`` depends on ``kind``: the center
    and radius for circles, diamonds and semicircles; the top-left corner
    plus ``(width, height)`` in ``extent`` for rectangles; the vertex list
    for polylines; four control points for cubic curves; the anchor for text.
    """

    kind: str
    points: tuple[Point, ...]
    stroke: str | None = "black"
    fill: str | None = None
    stroke_width: float = 1.0
    dash: tuple[float, ...] | None = None
    size: float = 0.0
    extent: Point = (0.0, 0.0)
    text: str | None = None
    facing: str = "up"
    tags: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown element kind {self.kind!r}")
        for p in self.points:
            if not (math.isfinite(p[0]) and math.isfinite(p[1])):
                raise ValueError(f"non-finite coordinate {p} in {self.kind}")
        for color in (self.stroke, self.fill):
            if color is not None and color not in NAMED_COLORS:
                raise ValueError(f"color {color!r} is not in the named palette")

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags


@dataclass(frozen=True)
class Scene:
    width: float
    height: float
    elements: tuple[Element, ...] = field(default_factory=tuple)

    def find(self, *tags: str, kind: str | None = None) -> list[Element]:
        return [
            el for el in self.elements
            if all(t in el.tags for t in tags) and (kind is None or el.kind == kind)
        ]


def circle(center: Point, radius: float, *, stroke="black", fill="white", width=1.0, tags: Iterable[str] = ()) -> Element:
    return Element("circle", (center,), stroke=stroke, fill=fill, stroke_width=width, size=radius, tags=tuple(tags))


def diamond(center: Point, half: float, *, stroke="black", fill="gold", width=1.0, tags: Iterable[str] = ()) -> Element:
    return Element("diamond", (center,), stroke=stroke, fill=fill, stroke_width=width, size=half, tags=tuple(tags))


def rect(corner: Point, w: float, h: float, *, stroke="black", fill=None, width=1.0, dash=None, tags: Iterable[str] = ()) -> Element:
    return Element("rect", (corner,), stroke=stroke, fill=fill, stroke_width=width, dash=dash, extent=(w, h), tags=tuple(tags))


def semicircle(center: Point, radius: float, facing: str = "up", *, stroke="black", fill="dimgray", width=1.0, tags: Iterable[str] = ()) -> Element:
    return Element("semicircle", (center,), stroke=stroke, fill=fill, stroke_width=width, size=radius, facing=facing, tags=tuple(tags))


def polyline(points: Sequence[Point], *, stroke="black", width=1.0, dash=None, tags: Iterable[str] = ()) -> Element:
    return Element("polyline", tuple(points), stroke=stroke, stroke_width=width, dash=dash, tags=tuple(tags))


def cubic(p0: Point, p1: Point, p2: Point, p3: Point, *, stroke="black", width=1.0, dash=None, tags: Iterable[str] = ()) -> Element:
    return Element("cubic", (p0, p1, p2, p3), stroke=stroke, stroke_width=width, dash=dash, tags=tuple(tags))


def label(anchor: Point, text: str, *, size=12.0, fill="black", tags: Iterable[str] = ()) -> Element:
    return Element("text", (anchor,), stroke=None, fill=fill, size=size, text=text, tags=tuple(tags))


def layout_circular(vertices: Sequence[int], radius: float, center: Point) -> dict[int, Point]:
    """Place vertex rank ``k`` of ``n`` at angle ``90 - 360 k / n`` degrees.

    Angles are measured counter-clockwise in the usual mathematical sense,
    with the y axis pointing down as in SVG, so rank 0 sits at the top and
    ranks proceed clockwise.
    """
    n = len(vertices)
    cx, cy = center
    out = {}
    for k, v in enumerate(vertices):
        theta = math.radians(90.0 - 360.0 * k / n)
        out[v] = (cx + radius * math.cos(theta), cy - radius * math.sin(theta))
    return out


def split_cubic(p0: Point, p1: Point, p2: Point, p3: Point) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    """Split a cubic Bezier at t = 1/2 (de Casteljau)."""

    def mid(a: Point, b: Point) -> Point:
        return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)

    q0, q1, q2 = mid(p0, p1), mid(p1, p2), mid(p2, p3)
    r0, r1 = mid(q0, q1), mid(q1, q2)
    s = mid(r0, r1)
    return (p0, q0, r0, s), (s, r1, q2, p3)
