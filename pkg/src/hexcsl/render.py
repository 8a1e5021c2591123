"""Static SVG figures of lattices, shifted lattices, the honeycomb and coincidence overlays."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .coincidence import IDENTITY, CoincidenceIsometry
from .eisenstein import EisensteinInt, EisensteinRational
from .multilattice import HONEYCOMB_SHIFT, csml, honeycomb
from .shifted import as_point, is_member, shifted_csl

SCENES = ("lattice", "shifted-lattice", "honeycomb", "csl-overlay", "csml-overlay")

DEFAULT_STYLE = {
    "lattice": "#9e9e9e",
    "shifted": "#000000",
    "rotated": "#3f6fb5",
    "coincidence": "#c62828",
    "bond": "#000000",
    "domain": "#d0d0d0",
    "radius_px": 4.0,
    "scale": 40.0,
}

SQRT3_2 = math.sqrt(3) / 2


@dataclass
class RenderSpec:
    scene: str = "lattice"
    rotation: CoincidenceIsometry = IDENTITY
    shift: EisensteinRational | None = None
    radius: Fraction = Fraction(4)
    domain: bool = False
    style: dict = field(default_factory=lambda: dict(DEFAULT_STYLE))

    def __post_init__(self) -> None:
        if self.scene not in SCENES:
            raise ValueError(f"unknown scene {self.scene!r}; choose from {', '.join(SCENES)}")
        self.radius = Fraction(self.radius)
        if self.radius <= 0:
            raise ValueError("radius must be positive")


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


class _Canvas:
    def __init__(self, spec: RenderSpec):
        self.spec = spec
        self.scale = float(spec.style["scale"])
        r = float(spec.radius) + 0.5
        self.half = r * self.scale
        size = _fmt(2 * self.half)
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            version="1.1",
            width=size,
            height=size,
            viewBox=f"0 0 {size} {size}",
        )

    def xy(self, a, b) -> tuple[str, str]:
        a, b = float(a), float(b)
        x = (a - b / 2) * self.scale + self.half
        y = self.half - b * SQRT3_2 * self.scale
        return _fmt(x), _fmt(y)

    def group(self, name: str) -> ET.Element:
        return ET.SubElement(self.root, "g", id=name)

    def dots(self, name: str, pts, color: str, radius: float, hollow: bool = False) -> None:
        g = self.group(name)
        for a, b in sorted(pts):
            cx, cy = self.xy(a, b)
            attrs = {"cx": cx, "cy": cy, "r": _fmt(radius)}
            if hollow:
                attrs.update(fill="none", stroke=color)
                attrs["stroke-width"] = "1.5"
            else:
                attrs["fill"] = color
            ET.SubElement(g, "circle", attrs)

    def polyline(self, g: ET.Element, pts, color: str, closed: bool = False, dashed: bool = False, fill="none") -> None:
        coords = " ".join(",".join(self.xy(a, b)) for a, b in pts)
        attrs = {"points": coords, "fill": fill, "stroke": color}
        if dashed:
            attrs["stroke-dasharray"] = "4 4"
        ET.SubElement(g, "polygon" if closed else "polyline", attrs)

    def tostring(self) -> str:
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def _points(shift, radius) -> set:
    return oracle.patch(shift, radius).rationals()


def _image(r: CoincidenceIsometry, pts) -> set:
    iso = oracle.isometry_of(r)
    return {iso.image(a, b) for a, b in pts}


def _bonds(canvas: _Canvas, radius) -> None:
    g = canvas.group("bonds")
    x = HONEYCOMB_SHIFT.coords()
    # each point of x + Γ bonds to three nearest points of Γ
    for a, b in sorted(_points(HONEYCOMB_SHIFT, radius)):
        for da, db in ((0, 0), (1, 0), (1, 1)):
            ga, gb = a - x[0] + da, b - x[1] + db
            if ga * ga - ga * gb + gb * gb <= radius * radius:
                canvas.polyline(g, [(a, b), (ga, gb)], canvas.spec.style["bond"])


def render_svg(spec: RenderSpec) -> str:
    st = spec.style
    c = _Canvas(spec)
    dot = float(st["radius_px"])
    R = spec.rotation
    zero = EisensteinRational(EisensteinInt(0))

    if spec.domain:
        g = c.group("fundamental-domain")
        third = Fraction(1, 3)
        c.polyline(g, [(0, 0), (Fraction(1, 2), 0), (2 * third, third)], "#000000", closed=True, fill=st["domain"])

    if spec.scene == "lattice":
        c.dots("lattice", _points(zero, spec.radius), st["lattice"], dot)
    elif spec.scene == "shifted-lattice":
        x = as_point(spec.shift if spec.shift is not None else HONEYCOMB_SHIFT)
        c.dots("lattice", _points(zero, spec.radius), st["lattice"], dot)
        c.dots("shifted", _points(x, spec.radius), st["shifted"], dot)
    elif spec.scene == "honeycomb":
        _bonds(c, spec.radius)
        c.dots("lattice", _points(zero, spec.radius), st["lattice"], dot)
        c.dots("shifted", _points(HONEYCOMB_SHIFT, spec.radius), st["shifted"], dot)
    elif spec.scene == "csl-overlay":
        x = as_point(spec.shift) if spec.shift is not None else zero
        base = _points(x, spec.radius)
        c.dots("lattice", base, st["lattice"], dot * 0.75)
        c.dots("rotated", _image(R, base), st["rotated"], dot * 0.75, hollow=True)
        if is_member(R, x):
            cc = shifted_csl(R, x)
            hits = {p for p in base if EisensteinRational.from_coords(*p) in cc}
            c.dots("coincidence", hits, st["coincidence"], dot * 1.6, hollow=True)
    else:  # csml-overlay
        lat = honeycomb()
        base = set().union(*(_points(s, spec.radius) for s in lat.shifts))
        c.dots("multilattice", base, st["shifted"], dot * 0.75)
        c.dots("rotated", _image(R, base), st["rotated"], dot * 0.75, hollow=True)
        cm = csml(lat, R)
        hits = {p for p in base if EisensteinRational.from_coords(*p) in cm}
        c.dots("coincidence", hits, st["coincidence"], dot * 1.6, hollow=True)
    return c.tostring()
