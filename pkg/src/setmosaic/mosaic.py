"""Space-filling mosaic geometry in the unit square.

Each zone is a column whose full height is shared equally by the sets in
that zone, stacked top to bottom in legend order.  Column widths are
either equal or proportional to zone cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linear import check_order
from .model import InvalidSetData, ZoneSet

MODES = ("equal", "cardinality")


@dataclass(frozen=True)
class Tile:
    column: int
    set_label: str
    x: float
    width: float
    y: float
    height: float

    @property
    def area(self) -> float:
        return self.width * self.height


@dataclass(frozen=True)
class MosaicLayout:
    zones: ZoneSet
    order: tuple[int, ...]
    tiles: tuple[Tile, ...]
    column_edges: tuple[float, ...]
    mode: str

    @property
    def legend(self) -> tuple[str, ...]:
        return self.zones.set_labels

    @property
    def columns(self) -> list[frozenset[str]]:
        return [self.zones.zones[i].signature for i in self.order]

    def column_tiles(self, column: int) -> list[Tile]:
        return [t for t in self.tiles if t.column == column]

    def to_dict(self) -> dict:
        return {
            "diagram": "mosaic",
            "mode": self.mode,
            "legend": list(self.legend),
            "order": list(self.order),
            "columns": [self.zones.ordered(sig) for sig in self.columns],
            "column_edges": list(self.column_edges),
            "tiles": [
                {"column": t.column, "set": t.set_label, "x": t.x, "width": t.width, "y": t.y, "height": t.height}
                for t in self.tiles
            ],
        }


def mosaic_layout(zs: ZoneSet, order: Sequence[int], mode: str = "equal") -> MosaicLayout:
    order = check_order(zs, order)
    if mode not in MODES:
        raise InvalidSetData(f"unknown mosaic mode {mode!r}; expected one of {', '.join(MODES)}")
    n = len(order)
    if mode == "equal":
        weights = [1] * n
    else:
        weights = [zs.zones[i].cardinality for i in order]
    total = sum(weights)
    # integer prefix sums keep edges exact at both ends
    edges = [0.0]
    acc = 0
    for w in weights:
        acc += w
        edges.append(acc / total)

    tiles = []
    for col, zi in enumerate(order):
        present = zs.ordered(zs.zones[zi].signature)
        k = len(present)
        x, width = edges[col], edges[col + 1] - edges[col]
        for j, label in enumerate(present):
            top, bottom = j / k, (j + 1) / k
            tiles.append(Tile(col, label, x, width, top, bottom - top))
    return MosaicLayout(zs, order, tuple(tiles), tuple(edges), mode)
