# A counterbalanced 12-question task set over random six-set diagrams.

import json
import random

from setmosaic import SetSystem, generate_task_set, zones_from_membership

rng = random.Random(7)
labels = ["Books", "Cars", "Design", "Food", "Games", "Music", "News", "Travel"]


def diagram():
    six = rng.sample(labels, 6)
    pairs = [(f"p{k}", s) for k, s in enumerate(six)]
    for k in range(6, 40):
        pairs += [(f"p{k}", s) for s in rng.sample(six, rng.randint(1, 3))]
    return zones_from_membership(SetSystem.from_pairs(pairs, six))


inputs = [diagram() for _ in range(12)]
task_set = generate_task_set(inputs, replication=1, seed=2024)
print(" ".join(task_set.codes))
print(json.dumps(task_set.to_bundle()["tasks"][0], indent=2))
