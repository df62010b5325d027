import re
import xml.etree.ElementTree as ET

import pytest

from hfix.cli import build_analyze, build_harmonic, build_quadratic
from hfix.config import DEFAULT
from hfix.document import decode_complex
from hfix.plot import FILL, PlotError, locations_plotted, render_plot

NS = "{http://www.w3.org/2000/svg}"


def _svg(doc):
    return ET.fromstring(render_plot(doc))


def _bounds(root):
    return [float(v) for v in root.get("data-bounds").split()]


def _ids(root, prefix):
    return [g.get("id") for g in root.iter(f"{NS}g") if (g.get("id") or "").startswith(prefix)]


def test_fixed_point_markers_and_classes():
    doc, _ = build_analyze("2*z/(z^2+z+1)", DEFAULT)
    root = _svg(doc)
    assert root.get("viewBox") == "0 0 800 800"
    assert _ids(root, "fp-") == ["fp-0", "fp-1", "fp-2"]
    for i, p in enumerate(doc["fixed_points"]):
        g = root.find(f".//{NS}g[@id='fp-{i}']")
        circles = g.findall(f"{NS}circle")
        assert circles[0].get("fill") == FILL[p["class"]]
        assert (len(circles) == 2) == p["weakly_repelling"]


def test_all_points_inside_bounds():
    doc, _ = build_analyze("z^5-z+0.3i", DEFAULT)
    root = _svg(doc)
    x0, y0, x1, y1 = _bounds(root)
    assert abs((x1 - x0) - (y1 - y0)) < 1e-12
    for z in locations_plotted(doc):
        assert x0 < z.real < x1 and y0 < z.imag < y1


def test_infinity_skipped():
    doc, _ = build_analyze("z^2", DEFAULT)
    assert len(locations_plotted(doc)) == 2
    assert len(_ids(_svg(doc), "fp-")) == 2


def test_multiplicity_label():
    doc, _ = build_analyze("z^2+0.25", DEFAULT)
    text = render_plot(doc).decode()
    assert "λ=1, m=2" in text


def test_harmonic_plot_elements():
    doc, a = build_harmonic("z^3", "z^3", DEFAULT)
    root = _svg(doc)
    assert len(_ids(root, "hfp-")) == 9
    assert len(_ids(root, "mu-")) == 3 and len(_ids(root, "omega-")) == 3
    text = render_plot(doc).decode()
    assert text.count("λ=3, θ=3") == 4
    x0, y0, x1, y1 = _bounds(root)
    assert x0 < -2 and x1 > 2


def test_single_point_degenerate_span():
    doc, _ = build_analyze("z^2+0.25", DEFAULT)  # one finite point, 0.5
    x0, y0, x1, y1 = _bounds(_svg(doc))
    assert abs((x1 - x0) - 1) < 1e-12 and x0 < 0.5 < x1
    doc, _ = build_quadratic("0.25", DEFAULT)  # zeta = 1, mu = omega = 0.5
    x0, y0, x1, y1 = _bounds(_svg(doc))
    assert abs((x1 - x0) - 0.7) < 1e-12 and x0 < 0.5 and 1 < x1


def test_no_finite_points():
    doc, _ = build_analyze("z+1", DEFAULT)
    with pytest.raises(PlotError):
        render_plot(doc)


def test_deterministic_and_custom_size():
    doc, _ = build_harmonic("z^2-1", "z^3+0.5i*z", DEFAULT)
    assert render_plot(doc) == render_plot(doc)
    root = ET.fromstring(render_plot(doc, 400, 300))
    assert root.get("width") == "400" and root.get("height") == "300"


def test_coordinates_are_plain_numbers():
    doc, _ = build_analyze("z^3-1", DEFAULT)
    text = render_plot(doc).decode()
    for v in re.findall(r'c[xy]="([^"]+)"', text):
        float(v)
    assert "nan" not in text.lower()


def test_z_squared_markers():
    doc, _ = build_analyze("z^2", DEFAULT)
    root = _svg(doc)
    fills = {}
    for i, p in enumerate(doc["fixed_points"]):
        if p["location"] != "inf":
            g = root.find(f".//{NS}g[@id='fp-{i}']")
            fills[decode_complex(p["location"])] = g.find(f"{NS}circle").get("fill")
    assert fills == {0: FILL["super-attracting"], 1: FILL["repelling"]}
