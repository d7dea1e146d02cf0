"""Deterministic vector drawings of interpreted networks."""

from .native import render_native_graph
from .optical import glyph_roles, render_optical_table
from .scene import NATIVE_PALETTE, OPTICAL_PALETTE, Element, ModePalette, Scene, layout_circular
from .svg import serialize_svg

__all__ = [
    "Element",
    "ModePalette",
    "NATIVE_PALETTE",
    "OPTICAL_PALETTE",
    "Scene",
    "glyph_roles",
    "layout_circular",
    "render_native_graph",
    "render_optical_table",
    "serialize_svg",
]
