"""Brute-force reference computations and random instance generators.

Nothing here goes through the zone machinery being tested: relations are
evaluated on raw element memberships, segments by scanning rows, and
optimal orders by trying every permutation.
"""

import random
from itertools import groupby, permutations

from setmosaic import SetSystem, ZoneSet


def element_sets(memberships):
    out = {}
    for e, s in memberships:
        out.setdefault(s, set()).add(e)
    return out


def brute_zones(memberships):
    """Signature -> element count, grouping elements after sorting by signature."""
    per_element = {}
    for e, s in memberships:
        per_element.setdefault(e, set()).add(s)
    keyed = sorted((tuple(sorted(sig)), e) for e, sig in per_element.items())
    return {frozenset(k): len(list(g)) for k, g in groupby(keyed, key=lambda t: t[0])}


def brute_query(memberships, relation, targets):
    sets = element_sets(memberships)
    if relation == "disjoint":
        target = set.intersection(*(sets[t] for t in targets))
    else:
        target = set.union(*(sets[t] for t in targets))
    out = set()
    for label, elems in sets.items():
        if label in targets:
            continue
        if relation == "intersect" and elems & target:
            out.add(label)
        elif relation == "subset" and elems <= target:
            out.add(label)
        elif relation == "disjoint" and not elems & target:
            out.add(label)
    return out


def brute_counts(memberships):
    sets = element_sets(memberships)
    labels = list(sets)
    i = d = s = 0
    for x in range(len(labels)):
        for y in range(x + 1, len(labels)):
            a, b = sets[labels[x]], sets[labels[y]]
            if a & b:
                i += 1
            else:
                d += 1
            s += (a <= b) + (b <= a)
    return i, d, s


def runs_by_scan(signatures, label):
    """Maximal runs of columns containing ``label``, as (start, end) pairs."""
    runs = []
    k = 0
    for present, group in groupby(label in sig for sig in signatures):
        n = len(list(group))
        if present:
            runs.append((k, k + n))
        k += n
    return runs


def segments_by_scan(zs, order):
    sigs = [zs.zones[i].signature for i in order]
    return sum(len(runs_by_scan(sigs, s)) for s in zs.set_labels)


def brute_min_segments(zs):
    return min(segments_by_scan(zs, p) for p in permutations(range(len(zs.zones))))


def random_system(rng: random.Random, max_sets=12, max_elements=200):
    n_sets = rng.randint(1, max_sets)
    n_elements = rng.randint(n_sets, max_elements)
    labels = [f"S{k}" for k in range(n_sets)]
    pairs = set()
    for e in range(n_elements):
        if e < n_sets:
            chosen = {labels[e]}
        else:
            chosen = set(rng.sample(labels, rng.randint(1, min(3, n_sets))))
        pairs.update((f"e{e}", s) for s in chosen)
    pairs = sorted(pairs)
    rng.shuffle(pairs)
    rng.shuffle(labels)
    return SetSystem(tuple(labels), tuple(pairs))


def random_zone_set(rng: random.Random, max_sets=4, max_zones=6):
    while True:
        n_sets = rng.randint(1, max_sets)
        labels = [chr(ord("A") + k) for k in range(n_sets)]
        n_zones = rng.randint(1, min(max_zones, 2 ** n_sets - 1))
        masks = rng.sample(range(1, 2 ** n_sets), n_zones)
        sigs = [frozenset(labels[b] for b in range(n_sets) if m >> b & 1) for m in masks]
        if set().union(*sigs) == set(labels):
            cards = [rng.randint(1, 9) for _ in sigs]
            return ZoneSet.from_signatures(sigs, labels, cards)
