"""Byte-stable SVG 1.1 serialization of a :class:`Scene`.

Numbers are printed with two decimals and attributes in a fixed order, so
identical scenes always serialize to identical bytes.
"""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .scene import Element, Scene

HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def _num(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _pt(p) -> str:
    return f"{_num(p[0])},{_num(p[1])}"


def _style(el: Element) -> list[tuple[str, str]]:
    attrs = [
        ("fill", el.fill or "none"),
        ("stroke", el.stroke or "none"),
        ("stroke-width", _num(el.stroke_width)),
    ]
    if el.dash:
        attrs.append(("stroke-dasharray", ",".join(_num(d) for d in el.dash)))
    return attrs


def _semicircle_path(el: Element) -> str:
    (cx, cy), r = el.points[0], el.size
    # endpoints of the flat side, ordered so a clockwise arc bulges toward `facing`
    ends = {
        "up": ((cx - r, cy), (cx + r, cy)),
        "down": ((cx + r, cy), (cx - r, cy)),
        "left": ((cx, cy + r), (cx, cy - r)),
        "right": ((cx, cy - r), (cx, cy + r)),
    }[el.facing]
    a, b = ends
    return f"M {_pt(a)} A {_num(r)},{_num(r)} 0 0 1 {_pt(b)} Z"


def _element(el: Element) -> str:
    attrs: list[tuple[str, str]] = []
    if el.tags:
        attrs.append(("class", " ".join(el.tags)))
    body = None
    if el.kind == "circle":
        (cx, cy) = el.points[0]
        tag = "circle"
        attrs += [("cx", _num(cx)), ("cy", _num(cy)), ("r", _num(el.size))]
    elif el.kind == "diamond":
        (cx, cy), h = el.points[0], el.size
        tag = "polygon"
        pts = [(cx, cy - h), (cx + h, cy), (cx, cy + h), (cx - h, cy)]
        attrs.append(("points", " ".join(_pt(p) for p in pts)))
    elif el.kind == "rect":
        (x, y), (w, h) = el.points[0], el.extent
        tag = "rect"
        attrs += [("x", _num(x)), ("y", _num(y)), ("width", _num(w)), ("height", _num(h))]
    elif el.kind == "semicircle":
        tag = "path"
        attrs.append(("d", _semicircle_path(el)))
    elif el.kind == "polyline":
        tag = "polyline"
        attrs.append(("points", " ".join(_pt(p) for p in el.points)))
    elif el.kind == "cubic":
        p0, p1, p2, p3 = el.points
        tag = "path"
        attrs.append(("d", f"M {_pt(p0)} C {_pt(p1)} {_pt(p2)} {_pt(p3)}"))
    else:
        (x, y) = el.points[0]
        tag = "text"
        attrs += [
            ("x", _num(x)),
            ("y", _num(y)),
            ("font-family", "sans-serif"),
            ("font-size", _num(el.size)),
            ("text-anchor", "middle"),
            ("dominant-baseline", "central"),
            ("fill", el.fill or "black"),
        ]
        body = escape(el.text or "")
    if el.kind != "text":
        attrs += _style(el)
    rendered = " ".join(f"{k}={quoteattr(v)}" for k, v in attrs)
    if body is None:
        return f"  <{tag} {rendered}/>"
    return f"  <{tag} {rendered}>{body}</{tag}>"


def serialize_svg(scene: Scene) -> str:
    w, h = _num(scene.width), _num(scene.height)
    root = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0.00 0.00 {w} {h}">'
    )
    if not scene.elements:
        return HEADER + root[:-1] + "/>\n"
    lines = [HEADER + root]
    lines.extend(_element(el) for el in scene.elements)
    lines.append("</svg>\n")
    return "\n".join(lines)
