"""Linear and mosaic diagrams of abstract set relationships."""

from .color import Palette, PaletteError, Style, generate_palette, palette_from_hex
from .ingest import ParseError, dump_zone_json, load_zones, parse_membership_tsv, parse_snap_circles, parse_zone_json
from .linear import LinearLayout, linear_layout, order_exact, order_heuristic, segment_count
from .model import (
    InvalidSetData,
    QuerySpec,
    RelationCounts,
    SetSystem,
    Zone,
    ZoneSet,
    count_pairwise_relations,
    disjoint,
    intersects,
    sets_satisfying,
    subset_of,
    zones_from_membership,
)
from .mosaic import MosaicLayout, Tile, mosaic_layout
from .quiz import TaskQuestion, TaskSet, generate_question, generate_task_set
from .svg import render_linear, render_mosaic

__version__ = "0.1.0"
