import math
import xml.etree.ElementTree as ET

from hypothesis import given, settings

from accordion.bijection import phi
from accordion.complex import facets
from accordion.core import HollowDissection
from accordion.render import RenderSpec, render_svg, vertex_xy
from strategies import dissections

NS = "{http://www.w3.org/2000/svg}"


def test_vertex_layout():
    style = RenderSpec(size=200, margin=0)
    x, y = vertex_xy(1, 4, style)
    assert math.isclose(x, 100) and math.isclose(y, 0)
    x, y = vertex_xy(3, 4, style)  # a quarter turn clockwise
    assert math.isclose(x, 200) and math.isclose(y, 100, abs_tol=1e-9)


def test_circle_count_and_colours():
    root = ET.fromstring(render_svg(HollowDissection.of(4, [(1, 5)])))
    circles = root.findall(f".//{NS}circle")
    assert len(circles) == 8
    assert [c.get("stroke") for c in circles[::2]] == ["red"] * 4
    assert [c.get("fill") for c in circles[1::2]] == ["blue"] * 4
    chords = root.find(f".//{NS}g[@id='dissection']")
    assert len(chords) == 1


@settings(max_examples=20, deadline=None)
@given(dissections(max_n=7))
def test_well_formed_with_overlays(D):
    F = facets(D)[0]
    N = phi(D, F)
    root = ET.fromstring(render_svg(D, facet=F, nest=N))
    assert len(root.findall(f".//{NS}circle")) == 2 * D.n
    assert len(root.findall(f".//{NS}polyline")) == len(N)
