"""Readers for membership data.

Three formats are understood, always chosen explicitly by the caller:

``tsv``
    one ``element<TAB>set_label`` pair per line; ``#`` comments and blank
    lines are skipped.
``snap-circles``
    one circle per line, ``name<TAB>id<TAB>id...`` as in SNAP ego-network
    ``.circles`` files.
``zone-json``
    an abstract diagram, ``{"sets": [...], "zones": [{"members": [...],
    "cardinality": n}, ...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .model import InvalidSetData, SetSystem, Zone, ZoneSet, zones_from_membership

FORMATS = ("tsv", "snap-circles", "zone-json")


class ParseError(InvalidSetData):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
    return data.removeprefix("﻿")


def _lines(text: str):
    # splitlines() would also split on form feeds and other separators
    for number, line in enumerate(text.split("\n"), start=1):
        yield number, line.removesuffix("\r")


def parse_membership_tsv(data: bytes | str) -> SetSystem:
    pairs = []
    for number, line in _lines(_decode(data)):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError("expected 2 tab-separated fields", number)
        element, label = fields
        if not element:
            raise ParseError("empty element field", number)
        if not label:
            raise ParseError("empty set label field", number)
        pairs.append((element, label))
    if not pairs:
        raise ParseError("no membership records found")
    return SetSystem.from_pairs(pairs)


def parse_snap_circles(data: bytes | str) -> SetSystem:
    labels = []
    pairs = []
    seen = set()
    for number, line in _lines(_decode(data)):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) < 2:
            raise ParseError("expected a circle name followed by at least one id", number)
        name, ids = fields[0], fields[1:]
        if not name:
            raise ParseError("empty circle name", number)
        if name in seen:
            raise ParseError(f"duplicate circle name {name!r}", number)
        if any(not i for i in ids):
            raise ParseError("empty member id", number)
        seen.add(name)
        labels.append(name)
        pairs.extend((i, name) for i in ids)
    if not labels:
        raise ParseError("no circles found")
    return SetSystem.from_pairs(pairs, labels)


def parse_zone_json(data: bytes | str) -> ZoneSet:
    try:
        doc = json.loads(_decode(data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("sets"), list) or not isinstance(doc.get("zones"), list):
        raise ParseError('expected an object with "sets" and "zones" lists')
    sets = doc["sets"]
    if not all(isinstance(s, str) for s in sets):
        raise ParseError('"sets" must be a list of strings')
    known = set(sets)
    zones = []
    for k, entry in enumerate(doc["zones"]):
        if not isinstance(entry, dict) or not isinstance(entry.get("members"), list):
            raise ParseError(f'zone {k}: expected an object with a "members" list')
        for m in entry["members"]:
            if not isinstance(m, str) or m not in known:
                raise ParseError(f"zone {k}: member {m!r} not in sets")
        signature = frozenset(entry["members"])
        if len(signature) != len(entry["members"]):
            raise ParseError(f"zone {k}: repeated member")
        if any(z.signature == signature for z in zones):
            raise ParseError(f"zone {k}: duplicate zone signature {sorted(signature)}")
        try:
            zones.append(Zone(signature, entry.get("cardinality", 1)))
        except InvalidSetData as exc:
            raise ParseError(f"zone {k}: {exc}") from None
    return ZoneSet(tuple(zones), tuple(sets))


def dump_zone_json(zs: ZoneSet) -> str:
    doc = {
        "sets": list(zs.set_labels),
        "zones": [{"members": zs.ordered(z.signature), "cardinality": z.cardinality} for z in zs.zones],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_zones(path: str | Path, fmt: str) -> ZoneSet:
    """Read ``path`` in format ``fmt`` and return its zones."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    data = Path(path).read_bytes()
    try:
        if fmt == "zone-json":
            return parse_zone_json(data)
        reader = parse_membership_tsv if fmt == "tsv" else parse_snap_circles
        return zones_from_membership(reader(data))
    except InvalidSetData as exc:
        raise ParseError(f"{path}: {exc}") from None
