"""Finite permutation groups given by generators, and the subgroups of S_d."""
from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterable, Mapping, Sequence

from .perm import CycleType, Permutation, cycle_type, parse_cycles

Raw = tuple[int, ...]

MAX_SUBGROUP_DEGREE = 7

PRESETS: dict[str, tuple[str, ...]] = {
    "thm21-d12": ("(123)(456)", "(14)(26)(35)", "(14)(25)(36)"),
    "thm21-c6": ("(123456)",),
    "thm21-s3": ("(123)(456)", "(14)(26)(35)"),
}


def _mul(p: Raw, q: Raw) -> Raw:
    return tuple([p[i] for i in q])


def _inv(p: Raw) -> Raw:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _conj(g: Raw, s: Raw) -> Raw:
    # s g s^-1
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[s[i]] = s[x]
    return tuple(out)


def _closure_raw(gens: Iterable[Raw], degree: int) -> frozenset[Raw]:
    gens = [g for g in dict.fromkeys(gens)]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = deque([ident])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = _mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def _raw_cycle_type(p: Raw) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


@dataclass(frozen=True)
class CycleCensus:
    """Number of group elements of each cycle type."""

    counts: Mapping[CycleType, int]

    def __getitem__(self, key) -> int:
        if not isinstance(key, CycleType):
            key = CycleType(tuple(key))
        return self.counts.get(key, 0)

    def items(self):
        return sorted(self.counts.items(), reverse=True)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def key(self) -> tuple:
        return tuple((ct.parts, n) for ct, n in self.items())

    def __eq__(self, other):
        return isinstance(other, CycleCensus) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self) -> dict[str, int]:
        return {str(ct): n for ct, n in self.items()}


class PermGroup:
    """A subgroup of S_d with its full element list.

    Equality and hashing go by element set, so two generating sets of the same
    subgroup compare equal.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], raw: frozenset[Raw]):
        self.degree = degree
        self.generators = tuple(generators)
        self._raw = raw

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._from_raw(x) for x in sorted(self._raw))

    @property
    def raw_elements(self) -> frozenset[Raw]:
        return self._raw

    @property
    def order(self) -> int:
        return len(self._raw)

    def __len__(self):
        return len(self._raw)

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and p.raw in self._raw

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.degree == other.degree and self._raw == other._raw

    def __hash__(self):
        return hash((self.degree, self._raw))

    def __repr__(self):
        gens = ", ".join(g.format() for g in self.generators) or "()"
        return f"<PermGroup degree={self.degree} order={self.order} <{gens}>>"

    @cached_property
    def census(self) -> CycleCensus:
        return CycleCensus(dict(Counter(CycleType(_raw_cycle_type(x)) for x in self._raw)))

    def conjugated(self, by: Permutation) -> PermGroup:
        s = by.raw
        gens = [Permutation._from_raw(_conj(g.raw, s)) for g in self.generators]
        return PermGroup(self.degree, gens, frozenset(_conj(x, s) for x in self._raw))

    def site_orbits(self) -> list[tuple[int, ...]]:
        """Orbits of G on the sites 1..d (1-based), ordered by least site."""
        gens = [g.raw for g in self.generators]
        seen: set[int] = set()
        orbits = []
        for start in range(self.degree):
            if start in seen:
                continue
            orbit = {start}
            stack = [start]
            while stack:
                i = stack.pop()
                for g in gens:
                    if g[i] not in orbit:
                        orbit.add(g[i])
                        stack.append(g[i])
            seen |= orbit
            orbits.append(tuple(sorted(x + 1 for x in orbit)))
        return orbits

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "generators": [g.format() for g in self.generators],
                "order": self.order}

    @classmethod
    def from_json(cls, data: Mapping) -> PermGroup:
        degree = int(data["degree"])
        G = closure([parse_cycles(s, degree) for s in data["generators"]], degree)
        if "order" in data and int(data["order"]) != G.order:
            raise ValueError(f"generators give order {G.order}, file says {data['order']}")
        return G

    @property
    def label(self) -> str:
        return group_label(self)


def closure(generators: Sequence[Permutation], degree: int) -> PermGroup:
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
    return PermGroup(degree, generators, _closure_raw((g.raw for g in generators), degree))


def group_from_strings(texts: Sequence[str], degree: int) -> PermGroup:
    return closure([parse_cycles(t, degree) for t in texts], degree)


def preset(name: str) -> PermGroup:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; known presets: {', '.join(PRESETS)}")
    return group_from_strings(PRESETS[name], 6)


def symmetric_group(degree: int) -> PermGroup:
    gens = [Permutation.from_cycles([(1, 2)], degree)] if degree > 1 else []
    if degree > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, degree + 1))], degree))
    raw = frozenset(itertools.permutations(range(degree)))
    return PermGroup(degree, gens, raw)


def trivial_group(degree: int) -> PermGroup:
    return closure([], degree)


def cycle_census(G: PermGroup) -> CycleCensus:
    return G.census


def is_transitive(G: PermGroup) -> bool:
    return len(G.site_orbits()[0]) == G.degree


def group_label(G: PermGroup) -> str:
    """Descriptive tag from element orders only; never used in any decision."""
    n = G.order
    if n == 1:
        return "trivial"
    orders = Counter(CycleType(_raw_cycle_type(x)).order for x in G.raw_elements)
    if orders.get(n):
        kind = "cyclic-like"
    elif n >= 4 and orders.get(n // 2) and orders.get(2, 0) >= n // 2:
        kind = "dihedral-like"
    else:
        return f"order {n}"
    return f"order {n}, {kind}"


@dataclass(frozen=True)
class ConjugacyWitness:
    """Some s with s G s^-1 = H, or None when the groups are not conjugate."""

    witness: Permutation | None

    def __bool__(self):
        return self.witness is not None


def _orbit_lengths(G: PermGroup) -> list[int]:
    return sorted(len(o) for o in G.site_orbits())


def are_conjugate(G: PermGroup, H: PermGroup) -> ConjugacyWitness:
    if G.degree != H.degree:
        raise ValueError("groups of different degree")
    if G.order != H.order or G.census != H.census or _orbit_lengths(G) != _orbit_lengths(H):
        return ConjugacyWitness(None)
    target = H.raw_elements
    gens = [g.raw for g in G.generators] or [tuple(range(G.degree))]
    for s in itertools.permutations(range(G.degree)):
        if all(_conj(g, s) in target for g in gens):
            return ConjugacyWitness(Permutation._from_raw(s))
    return ConjugacyWitness(None)


def normalizer(G: PermGroup) -> PermGroup:
    """Normalizer of G in S_d, by scanning all d! permutations."""
    gens = [g.raw for g in G.generators]
    raw = frozenset(s for s in itertools.permutations(range(G.degree))
                    if all(_conj(g, s) in G.raw_elements for g in gens))
    return PermGroup(G.degree, [Permutation._from_raw(s) for s in sorted(raw)], raw)


def _small_generating_set(raw: frozenset[Raw], degree: int) -> list[Raw]:
    # high-order elements first keeps e.g. the 6-cycle as the sole generator of C6
    ordered = sorted(raw, key=lambda x: (-math.lcm(*_raw_cycle_type(x)), x))
    gens: list[Raw] = []
    current = frozenset([tuple(range(degree))])
    for x in ordered:
        if x not in current:
            gens.append(x)
            current = _closure_raw(gens, degree)
            if len(current) == len(raw):
                break
    return gens


def _conjugacy_class_of(raw: frozenset[Raw], degree: int) -> set[frozenset[Raw]]:
    movers = [p.raw for p in symmetric_group(degree).generators]
    seen = {raw}
    frontier = [raw]
    while frontier:
        K = frontier.pop()
        for s in movers:
            L = frozenset(_conj(x, s) for x in K)
            if L not in seen:
                seen.add(L)
                frontier.append(L)
    return seen


@dataclass(frozen=True)
class SubgroupLattice:
    """All conjugacy classes of subgroups of S_d, with the size of each class."""

    degree: int
    representatives: tuple[PermGroup, ...]
    class_sizes: tuple[int, ...]
    closures_computed: int

    @property
    def total_subgroups(self) -> int:
        return sum(self.class_sizes)


@cache
def subgroup_lattice(degree: int) -> SubgroupLattice:
    """Classes of subgroups of S_d, found by growing known classes one element at a time.

    Each class is stored through its lexicographically least member (comparing
    sorted element lists), so the result does not depend on search order.
    """
    if not 1 <= degree <= MAX_SUBGROUP_DEGREE:
        raise ValueError(f"subgroup enumeration supports degrees 1..{MAX_SUBGROUP_DEGREE}, "
                         f"got {degree}; |S_{degree}| = {math.factorial(max(degree, 0))} is too large")
    everything = sorted(itertools.permutations(range(degree)))
    known: dict[frozenset[Raw], int] = {}
    reps: list[frozenset[Raw]] = []
    sizes: list[int] = []

    def register(raw: frozenset[Raw]) -> bool:
        if raw in known:
            return False
        conjugates = _conjugacy_class_of(raw, degree)
        idx = len(reps)
        for K in conjugates:
            known[K] = idx
        reps.append(min(conjugates, key=lambda K: sorted(K)))
        sizes.append(len(conjugates))
        return True

    register(frozenset([tuple(range(degree))]))
    queue = deque([0])
    n_closures = 0
    while queue:
        idx = queue.popleft()
        H = reps[idx]
        hgens = _small_generating_set(H, degree)
        covered: set[Raw] = set(H)
        for g in everything:
            if g in covered:
                continue
            # <H, g> depends only on the coset gH
            covered.update(_mul(g, h) for h in H)
            K = _closure_raw(hgens + [g], degree)
            n_closures += 1
            if register(K):
                queue.append(len(reps) - 1)

    order = sorted(range(len(reps)), key=lambda i: (len(reps[i]), sorted(reps[i])))
    groups = []
    for i in order:
        gens = _small_generating_set(reps[i], degree)
        groups.append(PermGroup(degree, [Permutation._from_raw(g) for g in gens], reps[i]))
    return SubgroupLattice(degree, tuple(groups), tuple(sizes[i] for i in order), n_closures)


def all_subgroups_up_to_conjugacy(degree: int) -> list[PermGroup]:
    return list(subgroup_lattice(degree).representatives)


def class_index(G: PermGroup) -> int:
    """Position of G's conjugacy class in ``all_subgroups_up_to_conjugacy(G.degree)``."""
    lattice = subgroup_lattice(G.degree)
    for i, R in enumerate(lattice.representatives):
        if R.order == G.order and are_conjugate(G, R):
            return i
    raise AssertionError("subgroup not found in the class list")
