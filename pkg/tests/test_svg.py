import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from conftest import zs_of
from setmosaic import (
    PaletteError, Style, generate_palette, linear_layout, mosaic_layout, order_exact, render_linear, render_mosaic,
    segment_count,
)

GOLDEN = Path(__file__).parent / "golden"
NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg.encode())


def by_class(root, cls):
    return [el for el in root.iter() if el.get("class") == cls]


@pytest.fixture
def palette(fig2):
    return generate_palette(len(fig2.set_labels), labels=fig2.set_labels)


def fig2_linear(fig2, palette):
    return render_linear(linear_layout(fig2, order_exact(fig2)), palette, Style())


def fig2_mosaic(fig2, palette):
    return render_mosaic(mosaic_layout(fig2, order_exact(fig2)), palette, Style())


def test_linear_counts(fig2, palette):
    root = parse(fig2_linear(fig2, palette))
    order = order_exact(fig2)
    assert len(by_class(root, "segment")) == segment_count(fig2, order) == 3
    assert len(by_class(root, "guide")) == len(linear_layout(fig2, order).guides)
    assert [t.text for t in root.iter(NS + "text")] == ["Books", "Cars", "Technology"]
    ys = sorted({el.get("y1") for el in by_class(root, "segment")}, key=float)
    assert len(ys) == 3


def test_single_zone_has_two_guides():
    zs = zs_of("A")
    root = parse(render_linear(linear_layout(zs, [0]), generate_palette(1, labels=["A"])))
    assert len(by_class(root, "guide")) == 2


def test_mosaic_counts(fig2, palette):
    root = parse(fig2_mosaic(fig2, palette))
    tiles = by_class(root, "tile")
    assert len(tiles) == sum(len(z.signature) for z in fig2.zones) == 7
    allowed = {c.hex for c in palette.colors}
    fills = {el.get("fill") for el in root.iter() if el.get("fill") not in (None, "none")}
    assert fills - allowed == {Style().background, Style().text_color}
    assert {t.get("fill") for t in tiles} <= allowed


def test_mosaic_single_zone_fills_plot():
    s = Style()
    root = parse(render_mosaic(mosaic_layout(zs_of("A"), [0]), generate_palette(1, labels=["A"]), s))
    (tile,) = by_class(root, "tile")
    assert float(tile.get("width")) == pytest.approx(s.plot_width)
    assert float(tile.get("height")) == pytest.approx(s.plot_height)


def test_mosaic_has_no_gaps(fig2, palette):
    s = Style()
    root = parse(fig2_mosaic(fig2, palette))
    area = sum(float(t.get("width")) * float(t.get("height")) for t in by_class(root, "tile"))
    assert area == pytest.approx(s.plot_width * s.plot_height, rel=1e-3)


def test_emission_order(fig2, palette):
    root = parse(fig2_mosaic(fig2, palette))
    classes = [el.get("class") for el in root if el.get("class")]
    assert classes == ["background", "tiles", "borders", "legend", "labels"]
    root = parse(fig2_linear(fig2, palette))
    assert [el.get("class") for el in root if el.get("class")] == [
        "background", "guides", "segments", "legend", "labels"]


def test_missing_colour(fig2):
    with pytest.raises(PaletteError, match="Technology"):
        render_mosaic(mosaic_layout(fig2, [0, 1, 2, 3]), generate_palette(2, labels=["Books", "Cars"]))


def test_label_escaping():
    zs = zs_of(["<a&b>"])
    svg = render_linear(linear_layout(zs, [0]), generate_palette(1, labels=["<a&b>"]))
    assert parse(svg).find(f".//{NS}text").text == "<a&b>"


def test_numbers_have_two_decimals(fig2, palette):
    import re
    for svg in (fig2_linear(fig2, palette), fig2_mosaic(fig2, palette)):
        for attr, value in re.findall(r' (x1|x2|y1|y2|x|y|width|height|stroke-width)="([^"]+)"', svg):
            if value.isdigit() and attr in ("width", "height"):
                continue  # root element canvas size
            assert re.fullmatch(r"-?\d+\.\d\d", value), (attr, value)


@pytest.mark.parametrize("name,render", [("fig2_linear.svg", fig2_linear), ("fig2_mosaic.svg", fig2_mosaic)])
def test_golden(fig2, palette, name, render):
    first = render(fig2, palette)
    assert render(fig2, palette) == first
    assert first == (GOLDEN / name).read_text(encoding="utf-8")
