"""Zone ordering and linear-diagram geometry.

Columns of a linear diagram are zones; each set is drawn as horizontal
segments over the columns that contain it.  The order of the columns
decides how many segments are needed, so most of this module is about
finding orders with few segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import InvalidSetData, ZoneSet

MAX_EXACT_ZONES = 10


class InvalidOrder(InvalidSetData):
    pass


def check_order(zs: ZoneSet, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(len(zs.zones))):
        raise InvalidOrder(f"order {list(order)} is not a permutation of 0..{len(zs.zones) - 1}")
    return order


def _segments(masks: Sequence[int]) -> int:
    total = 0
    prev = 0
    for m in masks:
        total += (m & ~prev).bit_count()
        prev = m
    return total


def segment_count(zs: ZoneSet, order: Sequence[int]) -> int:
    """Total number of maximal runs over all sets when columns follow ``order``."""
    order = check_order(zs, order)
    return _segments([zs.masks[i] for i in order])


def order_exact(zs: ZoneSet) -> list[int]:
    """Segment-minimal order; ties go to the lexicographically smallest permutation.

    Depth-first search in lexicographic order with branch and bound.  A
    partial order can only gain segments, and every set not yet seen that
    still occurs in an unplaced zone will add at least one more.
    """
    n = len(zs.zones)
    if n > MAX_EXACT_ZONES:
        raise InvalidSetData(f"exact ordering is limited to {MAX_EXACT_ZONES} zones (got {n}); use the heuristic order")
    masks = zs.masks
    best_cost = _segments(masks) + 1
    best: list[int] = list(range(n))
    prefix: list[int] = []
    used = [False] * n

    def remaining_union() -> int:
        u = 0
        for i in range(n):
            if not used[i]:
                u |= masks[i]
        return u

    def search(cost: int, prev: int, seen: int):
        nonlocal best_cost, best
        if len(prefix) == n:
            if cost < best_cost:
                best_cost = cost
                best = prefix.copy()
            return
        if cost + (remaining_union() & ~seen).bit_count() >= best_cost:
            return
        for i in range(n):
            if used[i]:
                continue
            m = masks[i]
            step = cost + (m & ~prev).bit_count()
            if step >= best_cost:
                continue
            used[i] = True
            prefix.append(i)
            search(step, m, seen | m)
            prefix.pop()
            used[i] = False

    search(0, 0, 0)
    return best


def order_heuristic(zs: ZoneSet) -> list[int]:
    """Greedy chaining by shared sets, then local search.

    The chain starts at the zone with most sets and repeatedly appends the
    unplaced zone sharing most sets with the last one (ties: larger zone,
    then lower index).  Local search then sweeps adjacent swaps and
    single-zone relocations until a full sweep finds no move that lowers
    the segment count.
    """
    masks = zs.masks
    n = len(masks)
    size = [m.bit_count() for m in masks]
    start = min(range(n), key=lambda i: (-size[i], i))
    order = [start]
    left = [i for i in range(n) if i != start]
    while left:
        last = masks[order[-1]]
        nxt = min(left, key=lambda i: (-(masks[i] & last).bit_count(), -size[i], i))
        order.append(nxt)
        left.remove(nxt)
    return _local_search(masks, order)


def _local_search(masks: Sequence[int], order: list[int]) -> list[int]:
    n = len(order)
    if n < 2:
        return order
    # starts[a, b]: runs opening when column b follows column a; index n is the empty border
    ext = list(masks) + [0]
    starts = np.array([[(b & ~a).bit_count() for b in ext] for a in ext], dtype=np.int64)
    edge = n
    improved = True
    while improved:
        improved = False
        for i in range(n - 1):
            a = order[i - 1] if i > 0 else edge
            b = order[i + 2] if i + 2 < n else edge
            x, y = order[i], order[i + 1]
            delta = (starts[a, y] + starts[y, x] + starts[x, b]) - (starts[a, x] + starts[x, y] + starts[y, b])
            if delta < 0:
                order[i], order[i + 1] = y, x
                improved = True
        for i in range(n):
            x = order[i]
            rest = order[:i] + order[i + 1:]
            seq = np.array([edge] + rest + [edge])
            removed = starts[seq[i], x] + starts[x, seq[i + 1]] - starts[seq[i], seq[i + 1]]
            inserted = starts[seq[:-1], x] + starts[x, seq[1:]] - starts[seq[:-1], seq[1:]]
            delta = inserted - removed
            delta[i] = 0
            j = int(np.argmin(delta))
            if delta[j] < 0:
                order = rest[:j] + [x] + rest[j:]
                improved = True
    return order


@dataclass(frozen=True)
class LinearLayout:
    """Resolved linear diagram.

    ``runs[label]`` holds half-open column intervals ``(start, end)``;
    ``guides`` are the column boundaries where any run starts or ends.
    """

    zones: ZoneSet
    order: tuple[int, ...]
    runs: dict[str, tuple[tuple[int, int], ...]]
    guides: tuple[int, ...]

    @property
    def legend(self) -> tuple[str, ...]:
        return self.zones.set_labels

    @property
    def columns(self) -> list[frozenset[str]]:
        return [self.zones.zones[i].signature for i in self.order]

    @property
    def segment_count(self) -> int:
        return sum(len(r) for r in self.runs.values())

    def to_dict(self) -> dict:
        return {
            "diagram": "linear",
            "legend": list(self.legend),
            "order": list(self.order),
            "columns": [self.zones.ordered(sig) for sig in self.columns],
            "runs": {s: [list(r) for r in self.runs[s]] for s in self.legend},
            "guides": list(self.guides),
        }


def linear_layout(zs: ZoneSet, order: Sequence[int]) -> LinearLayout:
    order = check_order(zs, order)
    cols = [zs.zones[i].signature for i in order]
    runs = {}
    guides = {0, len(cols)}
    for label in zs.set_labels:
        spans = []
        start = None
        for k, sig in enumerate(cols + [frozenset()]):
            if label in sig and start is None:
                start = k
            elif label not in sig and start is not None:
                spans.append((start, k))
                guides.update((start, k))
                start = None
        runs[label] = tuple(spans)
    return LinearLayout(zs, order, runs, tuple(sorted(guides)))
