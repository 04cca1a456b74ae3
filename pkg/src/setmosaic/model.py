"""Set systems, zones and the set-relation queries built on them.

A *zone* is one exact combination of sets that at least one element
belongs to.  Every relation between two sets (intersection, containment,
disjointness) can be read off the list of non-empty zones, which is also
what both diagram types draw as columns.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class InvalidSetData(ValueError):
    """Input data violates a set-system or zone-set invariant."""


@dataclass(frozen=True)
class SetSystem:
    """Declared set labels plus (element, set) membership pairs.

    ``elements`` optionally declares element ids up front; any declared
    element that never appears in a membership is rejected.
    """

    set_labels: tuple[str, ...]
    memberships: tuple[tuple[str, str], ...]
    elements: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "set_labels", tuple(self.set_labels))
        object.__setattr__(self, "memberships", tuple((str(e), str(s)) for e, s in self.memberships))
        if self.elements is not None:
            object.__setattr__(self, "elements", tuple(self.elements))
        _check_labels(self.set_labels)
        known = set(self.set_labels)
        seen = set()
        for pair in self.memberships:
            element, label = pair
            if label not in known:
                raise InvalidSetData(f"membership ({element!r}, {label!r}) uses undeclared set {label!r}")
            if pair in seen:
                raise InvalidSetData(f"duplicate membership ({element!r}, {label!r})")
            seen.add(pair)
        used = {label for _, label in self.memberships}
        for label in self.set_labels:
            if label not in used:
                raise InvalidSetData(f"set {label!r} has no members")
        if self.elements is not None:
            members = {e for e, _ in self.memberships}
            for element in self.elements:
                if element not in members:
                    raise InvalidSetData(f"element {element!r} belongs to no set")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]], set_labels: Sequence[str] | None = None) -> SetSystem:
        """Build from membership pairs, dropping repeats; labels default to first appearance."""
        unique = list(dict.fromkeys((str(e), str(s)) for e, s in pairs))
        if set_labels is None:
            set_labels = list(dict.fromkeys(s for _, s in unique))
        return cls(tuple(set_labels), tuple(unique))

    @classmethod
    def from_dict(cls, mapping: dict[str, Iterable[str]]) -> SetSystem:
        """Build from ``{element: [labels...]}``; labels ordered by first appearance."""
        return cls.from_pairs((e, s) for e, labels in mapping.items() for s in labels)

    def element_sets(self) -> dict[str, frozenset[str]]:
        """Map each element to the sets it belongs to, in first-appearance order."""
        out: dict[str, set[str]] = {}
        for element, label in self.memberships:
            out.setdefault(element, set()).add(label)
        return {e: frozenset(s) for e, s in out.items()}


@dataclass(frozen=True)
class Zone:
    signature: frozenset[str]
    cardinality: int = 1

    def __post_init__(self):
        object.__setattr__(self, "signature", frozenset(self.signature))
        if not self.signature:
            raise InvalidSetData("zone signature must be non-empty")
        if isinstance(self.cardinality, bool) or not isinstance(self.cardinality, int) or self.cardinality < 1:
            raise InvalidSetData(f"zone cardinality must be an integer >= 1, got {self.cardinality!r}")


@dataclass(frozen=True)
class ZoneSet:
    """The non-empty zones of a set system together with its ordered labels."""

    zones: tuple[Zone, ...]
    set_labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "zones", tuple(self.zones))
        object.__setattr__(self, "set_labels", tuple(self.set_labels))
        _check_labels(self.set_labels)
        if not self.zones:
            raise InvalidSetData("a zone set needs at least one zone")
        known = set(self.set_labels)
        seen = set()
        for zone in self.zones:
            unknown = sorted(zone.signature - known)
            if unknown:
                raise InvalidSetData(f"zone member {unknown[0]!r} is not a declared set")
            if zone.signature in seen:
                raise InvalidSetData(f"duplicate zone signature {self.ordered(zone.signature)}")
            seen.add(zone.signature)
        used = set().union(*seen)
        for label in self.set_labels:
            if label not in used:
                raise InvalidSetData(f"set {label!r} occurs in no zone")

    @classmethod
    def from_signatures(cls, signatures: Iterable[Iterable[str]], set_labels: Sequence[str],
                        cardinalities: Sequence[int] | None = None) -> ZoneSet:
        signatures = [frozenset(s) for s in signatures]
        if cardinalities is None:
            cardinalities = [1] * len(signatures)
        return cls(tuple(Zone(s, c) for s, c in zip(signatures, cardinalities, strict=True)), tuple(set_labels))

    def __len__(self):
        return len(self.zones)

    @property
    def total(self) -> int:
        """Number of elements, i.e. the sum of zone cardinalities."""
        return sum(z.cardinality for z in self.zones)

    def ordered(self, signature: Iterable[str]) -> list[str]:
        """Labels of ``signature`` in legend order."""
        signature = set(signature)
        return [s for s in self.set_labels if s in signature]

    @cached_property
    def _columns(self) -> dict[str, frozenset[int]]:
        cols: dict[str, set[int]] = {s: set() for s in self.set_labels}
        for i, zone in enumerate(self.zones):
            for s in zone.signature:
                cols[s].add(i)
        return {s: frozenset(c) for s, c in cols.items()}

    def columns(self, label: str) -> frozenset[int]:
        """Indices of the zones containing ``label``."""
        self.check_label(label)
        return self._columns[label]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Zone signatures as bitmasks, bit ``k`` standing for ``set_labels[k]``."""
        index = {s: k for k, s in enumerate(self.set_labels)}
        return tuple(sum(1 << index[s] for s in z.signature) for z in self.zones)

    def check_label(self, label: str):
        if label not in self._columns:
            raise InvalidSetData(f"unknown set label {label!r}")

    def permuted(self, order: Sequence[int]) -> ZoneSet:
        return ZoneSet(tuple(self.zones[i] for i in order), self.set_labels)


@dataclass(frozen=True)
class RelationCounts:
    intersections: int
    disjoint: int
    subsets: int

    def __str__(self):
        return f"I={self.intersections} D={self.disjoint} S={self.subsets}"


RELATIONS = ("intersect", "subset", "disjoint")
DIFFICULTIES = ("easy", "hard")


@dataclass(frozen=True)
class QuerySpec:
    """A study-style question: which sets relate to X (easy) or to X and Y (hard).

    Hard intersect/subset read "X or Y" (union); hard disjoint reads
    "X and Y" (intersection).
    """

    relation: str
    targets: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        if self.relation not in RELATIONS:
            raise InvalidSetData(f"unknown relation {self.relation!r}; expected one of {', '.join(RELATIONS)}")
        if len(self.targets) not in (1, 2):
            raise InvalidSetData("a query needs one target (easy) or two (hard)")
        if len(self.targets) == 2 and self.targets[0] == self.targets[1]:
            raise InvalidSetData(f"hard query needs two distinct targets, got {self.targets[0]!r} twice")

    @property
    def difficulty(self) -> str:
        return "easy" if len(self.targets) == 1 else "hard"


def _check_labels(labels: Sequence[str]):
    if not labels:
        raise InvalidSetData("no set labels given")
    for label in labels:
        if not isinstance(label, str) or not label:
            raise InvalidSetData(f"set labels must be non-empty strings, got {label!r}")
    dupes = [s for s, n in Counter(labels).items() if n > 1]
    if dupes:
        raise InvalidSetData(f"duplicate set label {dupes[0]!r}")


def zones_from_membership(system: SetSystem) -> ZoneSet:
    """Group elements by their exact membership signature.

    Zones come out in the order their signature first occurs while
    scanning elements by first appearance in the membership list.
    """
    counts: dict[frozenset[str], int] = {}
    for signature in system.element_sets().values():
        counts[signature] = counts.get(signature, 0) + 1
    return ZoneSet(tuple(Zone(s, n) for s, n in counts.items()), system.set_labels)


def _pair(zs: ZoneSet, a: str, b: str) -> tuple[frozenset[int], frozenset[int]]:
    ca, cb = zs.columns(a), zs.columns(b)
    if a == b:
        raise InvalidSetData(f"cannot compare set {a!r} with itself")
    return ca, cb


def intersects(zs: ZoneSet, a: str, b: str) -> bool:
    ca, cb = _pair(zs, a, b)
    return not ca.isdisjoint(cb)


def subset_of(zs: ZoneSet, a: str, b: str) -> bool:
    """True iff every element of ``a`` is also in ``b`` (non-strict)."""
    ca, cb = _pair(zs, a, b)
    return ca <= cb


def disjoint(zs: ZoneSet, a: str, b: str) -> bool:
    return not intersects(zs, a, b)


def sets_satisfying(zs: ZoneSet, query: QuerySpec) -> list[str]:
    """Labels (in legend order, targets excluded) that answer ``query``."""
    cols = [zs.columns(t) for t in query.targets]
    if query.relation == "disjoint":
        target = frozenset.intersection(*cols)
    else:
        target = frozenset.union(*cols)
    out = []
    for label in zs.set_labels:
        if label in query.targets:
            continue
        mine = zs.columns(label)
        if query.relation == "intersect":
            hit = not mine.isdisjoint(target)
        elif query.relation == "subset":
            hit = mine <= target
        else:
            hit = mine.isdisjoint(target)
        if hit:
            out.append(label)
    return out


def count_pairwise_relations(zs: ZoneSet) -> RelationCounts:
    """Intersecting/disjoint unordered pairs, and ordered subset pairs."""
    i = d = s = 0
    for a, b in combinations(zs.set_labels, 2):
        ca, cb = zs.columns(a), zs.columns(b)
        if ca.isdisjoint(cb):
            d += 1
        else:
            i += 1
        s += (ca <= cb) + (cb <= ca)
    return RelationCounts(i, d, s)
