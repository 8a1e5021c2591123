from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from hexcsl.coincidence import CoincidenceIsometry
from hexcsl.eisenstein import EisensteinInt, Unit
from hexcsl.render import SCENES, RenderSpec, render_svg

NS = "{http://www.w3.org/2000/svg}"
Z7 = CoincidenceIsometry(EisensteinInt(3, 1))


def groups(svg: str) -> dict[str, ET.Element]:
    root = ET.fromstring(svg)
    assert root.get("version") == "1.1"
    return {g.get("id"): g for g in root.iter(f"{NS}g")}


@pytest.mark.parametrize("scene", SCENES)
def test_scenes_render_deterministically(scene):
    spec = RenderSpec(scene=scene, rotation=Z7, radius=3)
    a, b = render_svg(spec), render_svg(RenderSpec(scene=scene, rotation=Z7, radius=3))
    assert a == b
    for num in re.findall(r'(?:cx|cy|r|points)="([^"]*)"', a):
        for v in re.split(r"[ ,]", num):
            assert re.fullmatch(r"-?\d+\.\d{6}", v)


def test_lattice_with_domain():
    g = groups(render_svg(RenderSpec("lattice", radius=1, domain=True)))
    assert len(g["lattice"]) == 7
    assert len(g["fundamental-domain"]) == 1


def test_honeycomb_bonds():
    g = groups(render_svg(RenderSpec("honeycomb", radius=Fraction(5, 2))))
    assert {"bonds", "lattice", "shifted"} <= set(g)
    assert len(g["bonds"]) > 0


def test_csl_overlay_marks_sigma7_points():
    g = groups(render_svg(RenderSpec("csl-overlay", rotation=Z7, radius=3)))
    # points of (3+xi)Z[xi] within radius 3: 0 and the six associates of 3+xi (norm 7 <= 9)
    assert len(g["coincidence"]) == 7
    styles = {(g[k][0].get("fill"), g[k][0].get("stroke")) for k in ("lattice", "rotated", "coincidence")}
    assert len(styles) == 3


def test_csml_overlay():
    g = groups(render_svg(RenderSpec("csml-overlay", rotation=CoincidenceIsometry(EisensteinInt(3, 1), Unit(3)), radius=3)))
    assert len(g["coincidence"]) >= 1


def test_bad_render_arguments():
    with pytest.raises(ValueError):
        RenderSpec("nope")
    with pytest.raises(ValueError):
        RenderSpec("lattice", radius=0)
