import re
import xml.etree.ElementTree as ET

import pytest

from realdelpezzo.corpus import three_parabolas
from realdelpezzo.plot import Window, default_window, render_svg

NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def svg():
    return render_svg(three_parabolas())


def test_well_formed(svg):
    root = ET.fromstring(svg)
    assert root.tag == NS + "svg"
    assert root.findall(f".//{NS}line") or root.findall(f".//{NS}polyline") or root.findall(f".//{NS}path")


def test_singular_markers(svg):
    shapes = re.findall(r'data-shape="(\w+)"', svg)
    assert shapes.count("tacnode") == 2 and shapes.count("node") == 2


def test_deterministic(svg):
    assert render_svg(three_parabolas()) == svg


def test_window():
    w = default_window(three_parabolas())
    assert w.x0 < 0 < 1 < w.x1
    with pytest.raises(ValueError):
        Window(1, 0, 0, 1)
    small = render_svg(three_parabolas(), window=Window(-0.5, 0.5, -1, 1))
    assert re.findall(r'data-shape="(\w+)"', small) == ["tacnode"]
