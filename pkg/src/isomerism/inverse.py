"""Recover the subgroups of S_d (up to conjugacy) compatible with observed orbit counts."""
from __future__ import annotations

import json
import operator
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .groups import CycleCensus, PermGroup, is_transitive, subgroup_lattice
from .tabloids import Partition, burnside_count, partitions

THREADS_ENV = "ISOMERISM_THREADS"

_RELATIONS = {"=": operator.eq, "==": operator.eq, "<=": operator.le, ">=": operator.ge,
              "≤": operator.le, "≥": operator.ge}


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """``map`` that honours the thread-count override; result order is input order."""
    n = worker_count()
    if n == 1:
        return list(map(fn, items))
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class CountConstraint:
    shape: Partition
    relation: str
    value: int

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"relation must be one of =, <=, >=; got {self.relation!r}")
        if self.value < 0:
            raise ValueError("constraint value must be nonnegative")
        if self.value > self.shape.tabloid_count:
            raise ValueError(f"value {self.value} exceeds the {self.shape.tabloid_count} "
                             f"tabloids of shape {self.shape}")

    def holds(self, n: int) -> bool:
        return _RELATIONS[self.relation](n, self.value)

    @classmethod
    def from_json(cls, data: Mapping) -> CountConstraint:
        return cls(Partition(tuple(data["shape"])), str(data["relation"]), int(data["value"]))

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "relation": self.relation, "value": self.value}

    def __str__(self):
        return f"n_{self.shape} {self.relation} {self.value}"


def load_constraints(path) -> list[CountConstraint]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return [CountConstraint.from_json(c) for c in data]


@dataclass(frozen=True)
class SubgroupClass:
    representative: PermGroup
    counts: dict[Partition, int]
    census: CycleCensus
    label: str
    class_size: int = 0

    def to_json(self) -> dict:
        return {"label": self.label, "group": self.representative.to_json(),
                "class_size": self.class_size,
                "transitive": is_transitive(self.representative),
                "census": self.census.to_json(),
                "counts": {str(lam): n for lam, n in self.counts.items()}}


@dataclass(frozen=True)
class SearchReport:
    constraints: tuple[CountConstraint, ...]
    classes: tuple[SubgroupClass, ...]
    candidates: int
    pruned_transitive: int
    collisions: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def search_stats(self) -> dict:
        return {"candidates": self.candidates, "pruned_intransitive": self.pruned_transitive,
                "matched": len(self.classes)}

    def to_json(self) -> dict:
        # stats stay out of the payload so output is identical across runs
        return {"constraints": [c.to_json() for c in self.constraints],
                "classes": [c.to_json() for c in self.classes],
                "count_collisions": [list(c) for c in self.collisions]}


def describe(G: PermGroup, shapes: Iterable[Partition] | None = None, class_size: int = 0) -> SubgroupClass:
    shapes = partitions(G.degree) if shapes is None else list(shapes)
    counts = {lam: burnside_count(G, lam) for lam in shapes}
    return SubgroupClass(G, counts, G.census, G.label, class_size)


def solve(constraints: Sequence[CountConstraint], degree: int,
          transitive_only: bool = False) -> SearchReport:
    for c in constraints:
        if c.shape.degree != degree:
            raise ValueError(f"constraint {c} is not a degree-{degree} shape")
    lattice = subgroup_lattice(degree)
    reps = lattice.representatives
    shapes = partitions(degree)

    def evaluate(i: int):
        G = reps[i]
        if transitive_only and not is_transitive(G):
            return i, None, True
        if all(c.holds(burnside_count(G, c.shape)) for c in constraints):
            return i, describe(G, shapes, lattice.class_sizes[i]), False
        return i, None, False

    results = parallel_map(evaluate, range(len(reps)))
    classes = tuple(cls for _, cls, _ in results if cls is not None)
    pruned = sum(1 for _, _, p in results if p)

    seen: dict[tuple, list[int]] = {}
    for k, cls in enumerate(classes):
        seen.setdefault(tuple(cls.counts.values()), []).append(k)
    collisions = tuple(tuple(v) for v in seen.values() if len(v) > 1)
    return SearchReport(tuple(constraints), classes, len(reps), pruned, collisions)


# shapes reported by the derivative table, in the order they are discussed
COROLLARY_SHAPES = tuple(Partition.parse(s) for s in ["5,1", "4,2", "4,1,1", "3,3", "3,2,1", "2,2,2"])


@dataclass(frozen=True)
class DerivativeTable:
    group_label: str
    counts: dict[Partition, int]
    note: str = ("each count is the number of orbits, an upper bound for the number "
                 "of experimentally distinct derivatives of that composition")

    def rows(self) -> list[tuple[str, int]]:
        return [(str(lam), n) for lam, n in self.counts.items()]

    def to_json(self) -> dict:
        return {"group": self.group_label, "counts": dict(self.rows()), "note": self.note}

    def format(self) -> str:
        lines = [f"{self.group_label}", f"{'shape':<12}{'at most':>8}"]
        lines += [f"{s:<12}{n:>8}" for s, n in self.rows()]
        return "\n".join(lines) + "\n"


def corollary_report(cls: SubgroupClass, shapes: Sequence[Partition] = COROLLARY_SHAPES) -> DerivativeTable:
    G = cls.representative
    return DerivativeTable(cls.label, {lam: cls.counts.get(lam, burnside_count(G, lam)) for lam in shapes})
