# Mosaic columns of equal width, then widths proportional to zone sizes.
# Writes two SVG files into the working directory.

from setmosaic import ZoneSet, generate_palette, mosaic_layout, order_exact, render_mosaic

zs = ZoneSet.from_signatures(
    [{"Books"}, {"Books", "Technology"}, {"Books", "Technology", "Cars"}, {"Cars"}],
    ["Books", "Technology", "Cars"],
    cardinalities=[2, 1, 1, 1],
)
order = order_exact(zs)
palette = generate_palette(3, labels=zs.set_labels)

for mode in ("equal", "cardinality"):
    layout = mosaic_layout(zs, order, mode)
    widths = [round(b - a, 3) for a, b in zip(layout.column_edges, layout.column_edges[1:])]
    print(mode, "column widths:", widths)
    with open(f"mosaic_{mode}.svg", "w") as fh:
        fh.write(render_mosaic(layout, palette))
