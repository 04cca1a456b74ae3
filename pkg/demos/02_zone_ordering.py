# Column order decides how many line segments a linear diagram needs.

import random

from setmosaic import ZoneSet, linear_layout, order_exact, order_heuristic, segment_count

labels = list("ABCDE")
rng = random.Random(1)
sigs = set()
while len(sigs) < 9:
    sigs.add(frozenset(rng.sample(labels, rng.randint(1, 3))))
zs = ZoneSet.from_signatures(sorted(sigs, key=sorted), labels)

identity = list(range(len(zs.zones)))
print("as given :", segment_count(zs, identity))
print("heuristic:", segment_count(zs, order_heuristic(zs)))
print("exact    :", segment_count(zs, order_exact(zs)))
print("lower bound (one segment per set):", len(labels))

layout = linear_layout(zs, order_exact(zs))
for s in layout.legend:
    row = ["-" if s in col else " " for col in layout.columns]
    print(f"{s} |{''.join(row)}|  runs={list(layout.runs[s])}")
print("guides at", layout.guides)
