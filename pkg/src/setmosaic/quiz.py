"""Study-style task questions with answer keys, and counterbalanced task sets.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014) with its
published constants, so a seed yields the same questions on any platform
and in any implementation that follows the same draw sequence:

1. targets: ``X = labels[below(n)]``, then for hard questions
   ``Y = rest[below(n - 1)]`` where ``rest`` is the legend without X;
2. choices: a partial Fisher-Yates shuffle over the remaining labels in
   legend order, taking the first ``k`` positions; choices are then
   listed alphabetically.
"""

from __future__ import annotations

from dataclasses import dataclass
from html import escape
from typing import Sequence

from .model import InvalidSetData, QuerySpec, ZoneSet, sets_satisfying

NONE_OF_THE_ABOVE = "None of the above"
MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

RELATION = {"I": "intersect", "S": "subset", "D": "disjoint"}
QUANTIFIER = {"I": "some", "S": "all", "D": "none"}
DEFAULT_CHOICES = {"E": 5, "H": 4}

# question number -> (type, difficulty)
QUESTION_KINDS = {
    1: ("I", "E"), 2: ("S", "E"), 3: ("D", "E"),
    4: ("I", "E"), 5: ("S", "E"), 6: ("D", "E"),
    7: ("I", "H"), 8: ("S", "H"), 9: ("D", "H"),
    10: ("I", "H"), 11: ("S", "H"), 12: ("D", "H"),
}
# presentation order of question numbers, shared by both replications
PRESENTATION = (1, 6, 2, 4, 3, 5, 7, 12, 8, 10, 9, 11)
FIRST_VISUALIZATION = {1: "L", 2: "M"}
VISUALIZATION_NAMES = {"L": "linear", "M": "mosaic"}


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection of the biased tail."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next()
            if x < limit:
                return x % n


def derive_seed(seed: int, stream: int) -> int:
    return SplitMix64((seed + stream * GAMMA) & MASK64).next()


@dataclass(frozen=True)
class TaskQuestion:
    type: str
    difficulty: str
    targets: tuple[str, ...]
    prompt: str
    prompt_markup: str
    choices: tuple[str, ...]
    answer_key: tuple[str, ...]

    @property
    def code(self) -> str:
        return self.difficulty + self.type

    @property
    def set_choices(self) -> tuple[str, ...]:
        return self.choices[:-1]

    def to_dict(self) -> dict:
        return {
            "type": self.type,
            "difficulty": self.difficulty,
            "targets": list(self.targets),
            "prompt": self.prompt,
            "prompt_markup": self.prompt_markup,
            "choices": list(self.choices),
            "answer_key": list(self.answer_key),
        }


def _prompt(qtype: str, targets: Sequence[str], mark) -> str:
    quantifier = mark(QUANTIFIER[qtype])
    if len(targets) == 1:
        tail = targets[0]
    elif qtype == "D":
        tail = f"{mark('both')} {targets[0]} {mark('and')} {targets[1]}"
    else:
        tail = f"{mark('either')} {targets[0]} {mark('or')} {targets[1]}"
    return f"Tick the check boxes where {quantifier} of the people are also interested in {tail}."


def generate_question(zs: ZoneSet, qtype: str, difficulty: str, seed: int, n_choices: int | None = None,
                      targets: Sequence[str] | None = None, choices: Sequence[str] | None = None) -> TaskQuestion:
    """Build one question; ``targets`` and ``choices`` override the seeded draws."""
    if qtype not in RELATION:
        raise InvalidSetData(f"unknown question type {qtype!r}; expected I, S or D")
    if difficulty not in DEFAULT_CHOICES:
        raise InvalidSetData(f"unknown difficulty {difficulty!r}; expected E or H")
    n_targets = 1 if difficulty == "E" else 2
    rng = SplitMix64(seed)
    labels = list(zs.set_labels)

    if targets is None:
        if len(labels) < n_targets:
            raise InvalidSetData(f"{len(labels)} sets are too few for a {difficulty}{qtype} question")
        pool = labels.copy()
        targets = []
        for _ in range(n_targets):
            targets.append(pool.pop(rng.below(len(pool))))
    targets = tuple(targets)
    if len(targets) != n_targets:
        raise InvalidSetData(f"{difficulty}{qtype} questions take {n_targets} target(s), got {len(targets)}")
    for t in targets:
        zs.check_label(t)

    if choices is None:
        k = DEFAULT_CHOICES[difficulty] if n_choices is None else n_choices
        pool = [s for s in labels if s not in targets]
        if k < 1 or len(pool) < k:
            raise InvalidSetData(
                f"{len(labels)} sets are too few for {k} choices plus {n_targets} target(s)")
        for i in range(k):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        choices = sorted(pool[:k])
    choices = tuple(choices)
    for c in choices:
        zs.check_label(c)
        if c in targets:
            raise InvalidSetData(f"choice {c!r} is also a target")

    qualifying = set(sets_satisfying(zs, QuerySpec(RELATION[qtype], targets)))
    key = tuple(c for c in choices if c in qualifying) or (NONE_OF_THE_ABOVE,)
    return TaskQuestion(
        qtype, difficulty, targets,
        prompt=_prompt(qtype, targets, lambda w: w),
        prompt_markup=_prompt(qtype, [escape(t) for t in targets], lambda w: f"<b>{w}</b>"),
        choices=choices + (NONE_OF_THE_ABOVE,),
        answer_key=key,
    )


@dataclass(frozen=True)
class TaskItem:
    position: int
    question_number: int
    visualization: str
    question: TaskQuestion

    @property
    def code(self) -> str:
        return self.visualization + self.question.code


@dataclass(frozen=True)
class TaskSet:
    replication: int
    seed: int
    items: tuple[TaskItem, ...]

    def __post_init__(self):
        vis = [it.visualization for it in self.items]
        if any(a == b for a, b in zip(vis, vis[1:])):
            raise InvalidSetData("visualizations must alternate")
        types = [it.question.type for it in self.items]
        if any(a == b for a, b in zip(types, types[1:])):
            raise InvalidSetData("consecutive questions share a task type")
        diffs = [it.question.difficulty for it in self.items]
        if diffs != sorted(diffs):  # "E" < "H"
            raise InvalidSetData("easy questions must precede hard ones")

    @property
    def codes(self) -> list[str]:
        return [it.code for it in self.items]

    def to_bundle(self, diagram_name: str = "q{number:02d}_{visualization}.svg") -> dict:
        tasks = []
        for it in self.items:
            vis = VISUALIZATION_NAMES[it.visualization]
            tasks.append({
                "position": it.position,
                "question_number": it.question_number,
                "code": it.code,
                "visualization": vis,
                "diagram": diagram_name.format(number=it.question_number, visualization=vis),
                **it.question.to_dict(),
            })
        return {"replication": self.replication, "seed": self.seed, "tasks": tasks}


def generate_task_set(inputs: Sequence[ZoneSet], replication: int, seed: int) -> TaskSet:
    """Twelve questions, one per zone set, in a counterbalanced presentation order.

    ``inputs[k]`` is the diagram for question number ``k + 1``.  Both
    replications show the same questions in the same order; the second
    swaps which of them are drawn as linear and which as mosaic.
    """
    if len(inputs) != 12:
        raise InvalidSetData(f"a task set needs exactly 12 zone sets, got {len(inputs)}")
    if replication not in FIRST_VISUALIZATION:
        raise InvalidSetData(f"replication must be 1 or 2, got {replication!r}")
    first = FIRST_VISUALIZATION[replication]
    other = "M" if first == "L" else "L"
    items = []
    for pos, number in enumerate(PRESENTATION, start=1):
        qtype, diff = QUESTION_KINDS[number]
        question = generate_question(inputs[number - 1], qtype, diff, derive_seed(seed, number))
        items.append(TaskItem(pos, number, first if pos % 2 else other, question))
    return TaskSet(replication, seed, tuple(items))
