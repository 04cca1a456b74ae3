"""Deterministic SVG output for linear and mosaic layouts.

Documents are assembled as plain text so identical inputs always give
byte-identical output.  Elements are emitted in a fixed order:
background, guides, shapes, borders, legend swatches, labels.  Every
number is written with two decimals.
"""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .color import Palette, Style
from .linear import LinearLayout
from .mosaic import MosaicLayout


def fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _attrs(**kw) -> str:
    return "".join(f" {k.rstrip('_').replace('_', '-')}={quoteattr(str(v))}" for k, v in kw.items())


def _open(style: Style, title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
        f"<title>{escape(title)}</title>",
        f'<rect class="background" x="0.00" y="0.00" width="{fmt(style.width)}" height="{fmt(style.height)}"'
        f'{_attrs(fill=style.background)}/>',
    ]


def _legend(labels, palette: Palette, style: Style, row_y) -> list[str]:
    size = min(style.font_size, style.plot_height / len(labels) * 0.8)
    out = ['<g class="legend">']
    for label, y in zip(labels, row_y):
        out.append(
            f'<rect class="swatch" x="{fmt(style.margin)}" y="{fmt(y - size / 2)}" width="{fmt(size)}" '
            f'height="{fmt(size)}"{_attrs(fill=palette.color_of(label))}/>')
    out.append("</g>")
    out.append(f'<g class="labels"{_attrs(font_family=style.font_family, font_size=fmt(style.font_size), fill=style.text_color)}>')
    for label, y in zip(labels, row_y):
        out.append(
            f'<text x="{fmt(style.margin + size + 4)}" y="{fmt(y)}" dominant-baseline="middle">{escape(label)}</text>')
    out.append("</g>")
    return out


def _check_palette(labels, palette: Palette):
    for label in labels:
        palette.color_of(label)


def render_linear(layout: LinearLayout, palette: Palette, style: Style = Style()) -> str:
    """One row per set in legend order, one thin line per run, guides at run ends."""
    labels = layout.legend
    _check_palette(labels, palette)
    style.check_thin(len(labels))
    n = len(layout.order)
    px, py, pw, ph = style.plot_x, style.plot_y, style.plot_width, style.plot_height
    col_w = pw / n
    row_h = ph / len(labels)
    row_y = [py + row_h * (k + 0.5) for k in range(len(labels))]

    out = _open(style, "linear diagram")
    out.append(f'<g class="guides"{_attrs(stroke=style.guide_color, stroke_width=fmt(style.guide_width))}>')
    for g in layout.guides:
        x = fmt(px + g * col_w)
        out.append(f'<line class="guide" x1="{x}" y1="{fmt(py)}" x2="{x}" y2="{fmt(py + ph)}"/>')
    out.append("</g>")
    out.append(f'<g class="segments"{_attrs(stroke_width=fmt(style.line_thickness), stroke_linecap="butt")}>')
    for label, y in zip(labels, row_y):
        color = palette.color_of(label)
        for start, end in layout.runs[label]:
            out.append(
                f'<line class="segment" x1="{fmt(px + start * col_w)}" y1="{fmt(y)}" '
                f'x2="{fmt(px + end * col_w)}" y2="{fmt(y)}"{_attrs(stroke=color)}/>')
    out.append("</g>")
    out += _legend(labels, palette, style, row_y)
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_mosaic(layout: MosaicLayout, palette: Palette, style: Style = Style()) -> str:
    """One filled rectangle per tile, outlined by thin contrasting borders."""
    labels = layout.legend
    _check_palette(labels, palette)
    px, py, pw, ph = style.plot_x, style.plot_y, style.plot_width, style.plot_height
    boxes = []
    for t in layout.tiles:
        x0, x1 = px + t.x * pw, px + (t.x + t.width) * pw
        y0, y1 = py + t.y * ph, py + (t.y + t.height) * ph
        boxes.append((t, fmt(x0), fmt(y0), fmt(x1 - x0), fmt(y1 - y0)))

    out = _open(style, "mosaic diagram")
    out.append('<g class="tiles">')
    for t, x, y, w, h in boxes:
        out.append(f'<rect class="tile" x="{x}" y="{y}" width="{w}" height="{h}"{_attrs(fill=palette.color_of(t.set_label))}/>')
    out.append("</g>")
    if style.border_width > 0:
        out.append(f'<g class="borders"{_attrs(fill="none", stroke=style.border_color, stroke_width=fmt(style.border_width))}>')
        for _, x, y, w, h in boxes:
            out.append(f'<rect class="border" x="{x}" y="{y}" width="{w}" height="{h}"/>')
        out.append("</g>")
    row_h = ph / len(labels)
    out += _legend(labels, palette, style, [py + row_h * (k + 0.5) for k in range(len(labels))])
    out.append("</svg>")
    return "\n".join(out) + "\n"
