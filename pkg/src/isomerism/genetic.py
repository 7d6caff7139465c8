"""Partial orders on shapes and tabloids, genetic digraphs between orbit spaces,
and the identification (distinguishability) refinement built on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import PermGroup
from .tabloids import OrbitSpace, Partition, Tabloid, orbit_space


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True when every prefix sum of ``lam`` is at most the matching one of ``mu``."""
    if lam.degree != mu.degree:
        raise ValueError(f"{lam} and {mu} partition different numbers")
    n = max(len(lam), len(mu))
    a = b = 0
    for x, y in zip(lam.padded(n), mu.padded(n)):
        a += x
        b += y
        if a > b:
            return False
    return True


@dataclass(frozen=True)
class SubstitutionMove:
    """Site ``moved_site`` leaves component ``from_component`` of ``source`` for the
    earlier component ``to_component`` (1-based), giving ``target``.

    ``component_order`` lists, for each component of the target, which component
    of the unsorted result it came from; it is the identity unless sizes had to
    be re-sorted.
    """

    source: Tabloid
    target: Tabloid
    moved_site: int
    from_component: int
    to_component: int
    component_order: tuple[int, ...]

    @property
    def resorted(self) -> bool:
        return self.component_order != tuple(range(1, len(self.component_order) + 1))


def _move(comps, s, i, j):
    new = [list(c) for c in comps]
    new[i].remove(s)
    new[j].append(s)
    kept = [(k + 1, tuple(sorted(c))) for k, c in enumerate(new) if c]
    kept.sort(key=lambda kc: -len(kc[1]))  # stable
    return tuple(c for _, c in kept), tuple(k for k, _ in kept)


def simple_moves(B: Tabloid) -> list[SubstitutionMove]:
    """Every way of moving one site into an earlier component.

    Each target sits above ``B`` in the substitution order.
    """
    out = []
    comps = B.components
    for i in range(1, len(comps)):
        for s in comps[i]:
            for j in range(i):
                target, order = _move(comps, s, i, j)
                out.append(SubstitutionMove(B, Tabloid(target), s, i + 1, j + 1, order))
    return out


def shape_moves(lam: Partition) -> set[Partition]:
    """Shapes reachable from ``lam`` by moving one box to an earlier row."""
    out = set()
    p = list(lam.parts)
    for i in range(1, len(p)):
        for j in range(i):
            q = p.copy()
            q[i] -= 1
            q[j] += 1
            out.add(Partition(tuple(sorted(q, reverse=True))))
    return out


def move_adjacent(lower: Partition, upper: Partition) -> bool:
    return lower.degree == upper.degree and upper in shape_moves(lower)


@dataclass(frozen=True)
class GeneticDigraph:
    """Edges upper-orbit -> lower-orbit, one per pair joined by a single move.

    ``multiplicity[(b, a)]`` counts the moves from the representative of lower
    orbit ``a`` that land in upper orbit ``b``.
    """

    upper: OrbitSpace
    lower: OrbitSpace
    multiplicity: dict[tuple[str, str], int]

    @property
    def upper_shape(self) -> Partition:
        return self.upper.shape

    @property
    def lower_shape(self) -> Partition:
        return self.lower.shape

    @property
    def group(self) -> PermGroup:
        return self.upper.group

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.multiplicity)

    def successors(self, upper_label: str) -> list[str]:
        return sorted(a for b, a in self.multiplicity if b == upper_label)

    def predecessors(self, lower_label: str) -> list[str]:
        return sorted(b for b, a in self.multiplicity if a == lower_label)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.multiplicity)

    def to_json(self, verbose: bool = False) -> dict:
        out = {"upper": list(self.upper_shape.parts), "lower": list(self.lower_shape.parts),
               "group": self.group.to_json(),
               "edges": [list(e) for e in self.sorted_edges()]}
        if verbose:
            out["multiplicity"] = [[b, a, m] for (b, a), m in sorted(self.multiplicity.items())]
            out["upper_orbits"] = [o.to_json() for o in self.upper]
            out["lower_orbits"] = [o.to_json() for o in self.lower]
        return out


def genetic_digraph(G: PermGroup, upper: Partition, lower: Partition,
                    spaces: dict[Partition, OrbitSpace] | None = None) -> GeneticDigraph:
    if not move_adjacent(lower, upper):
        raise ValueError(f"{lower} is not one simple move below {upper}")
    spaces = {} if spaces is None else spaces
    for lam in (upper, lower):
        if lam not in spaces:
            spaces[lam] = orbit_space(G, lam)
    up, low = spaces[upper], spaces[lower]
    mult: dict[tuple[str, str], int] = {}
    # moves commute with the action, so orbit representatives suffice
    for orbit in low:
        for mv in simple_moves(orbit.representative):
            if mv.target.shape == upper:
                key = (up.label_of(mv.target), orbit.label)
                mult[key] = mult.get(key, 0) + 1
    return GeneticDigraph(up, low, mult)


@dataclass(frozen=True)
class IdentificationPartition:
    shape: Partition
    blocks: tuple[tuple[str, ...], ...]

    def block_of(self, label: str) -> tuple[str, ...]:
        for b in self.blocks:
            if label in b:
                return b
        raise KeyError(label)

    def as_sets(self) -> list[set[str]]:
        return [set(b) for b in self.blocks]

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class Identification:
    partitions: dict[Partition, IdentificationPartition]
    digraphs: tuple[GeneticDigraph, ...]
    rounds: int

    def __getitem__(self, lam: Partition) -> IdentificationPartition:
        return self.partitions[lam]

    def to_json(self) -> dict:
        return {"partitions": [p.to_json() for p in self.partitions.values()],
                "digraphs": [g.to_json() for g in self.digraphs], "rounds": self.rounds}


def adjacent_pairs(shapes: Iterable[Partition]) -> list[tuple[Partition, Partition]]:
    """(upper, lower) pairs among ``shapes`` joined by one simple move."""
    shapes = list(shapes)
    return [(u, l) for u, l in itertools.permutations(shapes, 2) if move_adjacent(l, u)]


def identify(G: PermGroup, shapes: Sequence[Partition]) -> Identification:
    """Split each shape's orbits into blocks that neighbour counting cannot tell apart.

    Colour refinement on the union of all genetic digraphs among ``shapes``:
    start with one colour per shape, then repeatedly recolour each orbit by its
    colour together with the multisets of colours of its upper and lower
    neighbours, until the number of colours stops growing.
    """
    shapes = list(dict.fromkeys(shapes))
    spaces = {lam: orbit_space(G, lam) for lam in shapes}
    digraphs = tuple(genetic_digraph(G, u, l, spaces) for u, l in adjacent_pairs(shapes))

    nodes = [(k, o.label) for k, lam in enumerate(shapes) for o in spaces[lam]]
    kidx = {lam: k for k, lam in enumerate(shapes)}
    down: dict[tuple, list] = {v: [] for v in nodes}
    up: dict[tuple, list] = {v: [] for v in nodes}
    for dg in digraphs:
        ku, kl = kidx[dg.upper_shape], kidx[dg.lower_shape]
        for b, a in dg.sorted_edges():
            down[(ku, b)].append((kl, a))
            up[(kl, a)].append((ku, b))

    colour = {v: v[0] for v in nodes}
    rounds = 0
    while True:
        sig = {v: (colour[v],
                   tuple(sorted(colour[w] for w in down[v])),
                   tuple(sorted(colour[w] for w in up[v]))) for v in nodes}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in nodes}
        rounds += 1
        if len(set(new.values())) == len(set(colour.values())):
            break
        colour = new

    result = {}
    for k, lam in enumerate(shapes):
        groups: dict[int, list[str]] = {}
        for o in spaces[lam]:
            groups.setdefault(colour[(k, o.label)], []).append(o.label)
        blocks = sorted((tuple(b) for b in groups.values()), key=lambda b: spaces[lam].labels.index(b[0]))
        result[lam] = IdentificationPartition(lam, tuple(blocks))
    return Identification(result, digraphs, rounds)


def identification_partition(G: PermGroup, shapes: Sequence[Partition]) -> dict[Partition, IdentificationPartition]:
    return identify(G, shapes).partitions


# ---------------------------------------------------------------------------
# rendering

def _node_id(label: str, lam: Partition) -> str:
    return f"{label}_" + "_".join(map(str, lam.parts))


def _node_label(label: str, lam: Partition) -> str:
    return f"{label}_{lam}"


def to_dot(digraphs: Sequence[GeneticDigraph], name: str = "genetic") -> str:
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
    shapes: list[Partition] = []
    for dg in digraphs:
        for lam in (dg.upper_shape, dg.lower_shape):
            if lam not in shapes:
                shapes.append(lam)
    spaces = {}
    for dg in digraphs:
        spaces.setdefault(dg.upper_shape, dg.upper)
        spaces.setdefault(dg.lower_shape, dg.lower)
    for lam in shapes:
        ids = " ".join(f'{_node_id(o.label, lam)} [label="{_node_label(o.label, lam)}"];'
                       for o in spaces[lam])
        lines.append(f"  {{ rank=same; {ids} }}")
    for dg in digraphs:
        for b, a in dg.sorted_edges():
            lines.append(f"  {_node_id(b, dg.upper_shape)} -> {_node_id(a, dg.lower_shape)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(dg: GeneticDigraph) -> str:
    """Upper orbits in a row, each above the lower orbits it reaches."""
    cols = []
    for o in dg.upper:
        head = _node_label(o.label, dg.upper_shape)
        below = " ".join(dg.successors(o.label)) or "-"
        cols.append((head, below))
    width = max(max(len(h), len(b)) for h, b in cols) + 3
    rows = [
        "".join(h.ljust(width) for h, _ in cols),
        "".join("|".center(len(h)).ljust(width) for h, _ in cols),
        "".join("v".center(len(h)).ljust(width) for h, _ in cols),
        "".join(b.ljust(width) for _, b in cols),
    ]
    return "\n".join(r.rstrip() for r in rows) + f"\n(lower shape {dg.lower_shape})\n"
