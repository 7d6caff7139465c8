"""Partitions, tabloids, the group action on tabloids and its orbit spaces."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cache, cached_property
from typing import Iterator, Sequence

from .groups import PermGroup
from .perm import CycleType, Permutation, format_parts


class InternalConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        parts = tuple(p for p in parts if p != 0)
        if not parts or any(p < 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"{self.parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """``"4,1,1"``, ``"(4,1,1)"`` or ``"4,1^2"``."""
        body = text.strip().strip("()")
        parts: list[int] = []
        for chunk in re.split(r"[,\s]+", body):
            if not chunk:
                continue
            base, _, exp = chunk.partition("^")
            parts += [int(base)] * (int(exp) if exp else 1)
        return cls(tuple(parts))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def padded(self, length: int | None = None) -> tuple[int, ...]:
        length = self.degree if length is None else length
        return self.parts + (0,) * (length - len(self.parts))

    @property
    def tabloid_count(self) -> int:
        return multinomial(self.degree, self.parts)

    def __str__(self):
        return format_parts(self.parts)

    def compact(self) -> str:
        return ",".join(map(str, self.parts))


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def partitions(d: int) -> list[Partition]:
    """Partitions of d in reverse lexicographic order, (d) first."""
    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest
    return [Partition(p) for p in gen(d, d)]


_TABLOID_RE = re.compile(r"\{([^{}]*)\}")


@dataclass(frozen=True, order=True)
class Tabloid:
    """An ordered tuple of disjoint site sets covering 1..d, sizes weakly decreasing."""

    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(sorted(int(x) for x in c)) for c in self.components)
        sites = [x for c in comps for x in c]
        if not comps or any(not c for c in comps):
            raise ValueError("tabloid components must be nonempty")
        if sorted(sites) != list(range(1, len(sites) + 1)):
            raise ValueError(f"components {comps} do not partition 1..{len(sites)}")
        sizes = [len(c) for c in comps]
        if sizes != sorted(sizes, reverse=True):
            raise ValueError(f"component sizes {sizes} are not weakly decreasing")
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, text: str) -> Tabloid:
        comps = []
        for body in _TABLOID_RE.findall(text):
            comps.append(tuple(int(x) for x in re.split(r"[,\s]+", body.strip()) if x))
        if not comps:
            raise ValueError(f"no components in {text!r}")
        return cls(tuple(comps))

    @property
    def degree(self) -> int:
        return sum(len(c) for c in self.components)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(c) for c in self.components))

    def component_of(self, site: int) -> int:
        for i, c in enumerate(self.components):
            if site in c:
                return i
        raise ValueError(f"site {site} not in tabloid")

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, c)) + "}" for c in self.components) + ")"

    def __repr__(self):
        return f"Tabloid({str(self)!r})"


def shape(A: Tabloid) -> Partition:
    return A.shape


def enumerate_tabloids(lam: Partition, d: int | None = None) -> list[Tabloid]:
    if d is not None and d != lam.degree:
        raise ValueError(f"{lam} does not partition {d}")
    return [Tabloid(c) for c in _tabloid_tuples(lam.parts)]


@cache
def _tabloid_tuples(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    d = sum(parts)

    def rec(remaining: tuple[int, ...], k: int) -> Iterator[tuple]:
        if k == len(parts):
            yield ()
            return
        for comp in itertools.combinations(remaining, parts[k]):
            rest = tuple(x for x in remaining if x not in comp)
            for tail in rec(rest, k + 1):
                yield (comp,) + tail

    return tuple(rec(tuple(range(1, d + 1)), 0))


def _act_images(images: tuple[int, ...], comps: tuple[tuple[int, ...], ...]):
    return tuple(tuple(sorted(images[x - 1] for x in c)) for c in comps)


def act(sigma: Permutation, A: Tabloid) -> Tabloid:
    if sigma.degree != A.degree:
        raise ValueError(f"degree mismatch: permutation {sigma.degree}, tabloid {A.degree}")
    return Tabloid(_act_images(sigma.images, A.components))


def orbit_label(i: int) -> str:
    """a, b, ..., z, aa, ab, ..."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    out = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        out = letters[r] + out
    return out


@dataclass(frozen=True)
class Orbit:
    label: str
    representative: Tabloid
    members: tuple[Tabloid, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, A: Tabloid) -> bool:
        return A in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[Tabloid]:
        return frozenset(self.members)

    def to_json(self) -> dict:
        return {"label": self.label, "size": self.size,
                "representative": str(self.representative),
                "members": [str(m) for m in self.members]}


@dataclass(frozen=True)
class OrbitSpace:
    shape: Partition
    group: PermGroup
    orbits: tuple[Orbit, ...]
    _index: dict = field(repr=False, compare=False)

    @property
    def count(self) -> int:
        return len(self.orbits)

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def __getitem__(self, label: str) -> Orbit:
        for o in self.orbits:
            if o.label == label:
                return o
        raise KeyError(label)

    @property
    def labels(self) -> list[str]:
        return [o.label for o in self.orbits]

    def orbit_of(self, A: Tabloid) -> Orbit:
        return self.orbits[self._index[A.components]]

    def label_of(self, A: Tabloid) -> str:
        return self.orbit_of(A).label

    def to_json(self, members: bool = True) -> dict:
        orbits = []
        for o in self.orbits:
            entry = o.to_json()
            if not members:
                del entry["members"]
            orbits.append(entry)
        return {"shape": list(self.shape.parts), "group": self.group.to_json(), "orbits": orbits}


def orbit_space(G: PermGroup, lam: Partition) -> OrbitSpace:
    """Decompose the tabloids of shape ``lam`` into G-orbits by direct search."""
    if G.degree != lam.degree:
        raise ValueError(f"group of degree {G.degree} cannot act on shape {lam}")
    gens = [g.images for g in G.generators]
    index: dict[tuple, int] = {}
    orbits = []
    # lexicographic scan: the first unseen tabloid is its orbit's least member
    for comps in _tabloid_tuples(lam.parts):
        if comps in index:
            continue
        k = len(orbits)
        found = [comps]
        index[comps] = k
        stack = [comps]
        while stack:
            x = stack.pop()
            for g in gens:
                y = _act_images(g, x)
                if y not in index:
                    index[y] = k
                    found.append(y)
                    stack.append(y)
        members = tuple(Tabloid(c) for c in sorted(found))
        orbits.append(Orbit(orbit_label(k), members[0], members))
    return OrbitSpace(lam, G, tuple(orbits), index)


def fixed_tabloid_count(rho: CycleType | Sequence[int], lam: Partition) -> int:
    """Tabloids of shape ``lam`` fixed by a permutation of cycle type ``rho``.

    A tabloid is fixed exactly when every cycle lies inside one component, so
    this counts the ways to drop the cycles into components filling each to
    its prescribed size.
    """
    parts = rho.parts if isinstance(rho, CycleType) else tuple(rho)
    if sum(parts) != lam.degree:
        raise ValueError(f"cycle type {parts} and shape {lam} have different degrees")
    return _fill_count(tuple(sorted(parts, reverse=True)), lam.parts)


@cache
def _fill_count(cycles: tuple[int, ...], capacities: tuple[int, ...]) -> int:
    if not cycles:
        return int(all(c == 0 for c in capacities))
    head, rest = cycles[0], cycles[1:]
    total = 0
    for i, cap in enumerate(capacities):
        if cap >= head:
            caps = capacities[:i] + (cap - head,) + capacities[i + 1:]
            total += _fill_count(rest, caps)
    return total


def burnside_count(G: PermGroup, lam: Partition) -> int:
    if G.degree != lam.degree:
        raise ValueError(f"group of degree {G.degree} cannot act on shape {lam}")
    total = sum(n * fixed_tabloid_count(ct, lam) for ct, n in G.census.items())
    q, r = divmod(total, G.order)
    if r:
        raise InternalConsistencyError(
            f"fixed-point sum {total} for shape {lam} is not divisible by |G| = {G.order}")
    return q


def orbit_counts(G: PermGroup, shapes: Sequence[Partition] | None = None) -> dict[Partition, int]:
    shapes = partitions(G.degree) if shapes is None else shapes
    return {lam: burnside_count(G, lam) for lam in shapes}


# ---------------------------------------------------------------------------
# the orbit-counting linear system at degree 6

SYSTEM_ROWS = tuple(Partition.parse(s) for s in
                    ["6", "3,3", "4,2", "2,2,2", "5,1", "4,1,1",
                     "3,2,1", "2,2,1,1", "3,1,1,1", "2,1,1,1,1", "1,1,1,1,1,1"])

# only these cycle types survive once n_(5,1) = 1 and n_(4,2) >= 3
RESTRICTED_TYPES = frozenset(CycleType(p) for p in [(6,), (3, 3), (2, 2, 2), (2, 2, 1, 1), (1,) * 6])


@dataclass(frozen=True)
class SystemRow:
    shape: Partition
    terms: dict[CycleType, tuple[int, int]]   # cycle type -> (coefficient, g)
    order: int
    orbit_count: int
    tabloid_count: int

    @property
    def residual(self) -> int:
        lhs = sum(c * g for c, g in self.terms.values())
        return lhs - (self.order * self.orbit_count - self.tabloid_count)

    @property
    def ok(self) -> bool:
        return self.residual == 0

    def to_json(self) -> dict:
        return {"shape": str(self.shape),
                "terms": {str(ct): {"coefficient": c, "g": g} for ct, (c, g) in self.terms.items()},
                "order": self.order, "n": self.orbit_count, "tabloids": self.tabloid_count,
                "residual": self.residual, "ok": self.ok}


@dataclass(frozen=True)
class Check:
    name: str
    applicable: bool
    holds: bool | None
    detail: str

    @property
    def ok(self) -> bool:
        return not self.applicable or bool(self.holds)

    def to_json(self) -> dict:
        return {"name": self.name, "applicable": self.applicable, "holds": self.holds,
                "detail": self.detail}


@dataclass(frozen=True)
class SystemReport:
    group: PermGroup
    rows: tuple[SystemRow, ...]
    checks: tuple[Check, ...]
    restricted_census: bool

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "restricted_census": self.restricted_census,
                "rows": [r.to_json() for r in self.rows],
                "checks": [c.to_json() for c in self.checks], "ok": self.ok}


def verify_linear_system(G: PermGroup) -> SystemReport:
    """Evaluate every row sum_rho g_rho * fix(rho, lam) - (|G| n_lam - |T_lam|) = 0 at d = 6.

    The identity element is moved to the right-hand side as |T_lam|, the way
    the rows are usually printed.  Row terms cover every non-identity cycle
    type present in G.  The three derived identities only follow from the rows
    when G's census is confined to RESTRICTED_TYPES; otherwise they are
    reported as not applicable.
    """
    if G.degree != 6:
        raise ValueError("the linear system is stated for degree 6")
    census = G.census
    ident = CycleType((1,) * 6)
    n = {lam: burnside_count(G, lam) for lam in SYSTEM_ROWS}
    rows = []
    for lam in SYSTEM_ROWS:
        terms = {}
        for ct, g in census.items():
            if ct == ident:
                continue
            c = fixed_tabloid_count(ct, lam)
            if c:
                terms[ct] = (c, g)
        rows.append(SystemRow(lam, terms, G.order, n[lam], lam.tabloid_count))

    restricted = set(census.counts) <= RESTRICTED_TYPES
    p = Partition.parse
    n51, n42, n411, n222 = n[p("5,1")], n[p("4,2")], n[p("4,1,1")], n[p("2,2,2")]
    lhs = G.order * (n411 - 1)
    checks = [
        Check("mono_hetero_identity", restricted and n51 == 1,
              lhs == 24 if restricted and n51 == 1 else None,
              f"|G|(n_(4,1^2) - 1) = {lhs}, expected 24"),
        Check("dominance_bound", True, n42 <= n411,
              f"n_(4,2) = {n42} <= n_(4,1^2) = {n411}"),
    ]
    lhs = G.order * (n222 - 2 * n42)
    checks.append(Check("homogeneous_identity", restricted, lhs == 60 if restricted else None,
                        f"|G|(n_(2^3) - 2 n_(4,2)) = {lhs}, expected 60"))
    return SystemReport(G, tuple(rows), tuple(checks), restricted)
