"""Permutations of the sites 1..d, written and read in disjoint-cycle notation."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property


class CycleParseError(ValueError):
    """Malformed cycle notation.  ``position`` is the 0-based offset in the text."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True, order=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"invalid cycle type {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def order(self) -> int:
        return math.lcm(*self.parts) if self.parts else 1

    def __str__(self):
        return format_parts(self.parts)


def format_parts(parts) -> str:
    """Exponent notation used for partitions and cycle types, e.g. ``(4,1^2)``."""
    chunks = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        k = j - i
        chunks.append(str(parts[i]) if k == 1 else f"{parts[i]}^{k}")
        i = j
    return "(" + ",".join(chunks) + ")"


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1, ..., degree}; ``images[i-1]`` is the image of site i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        images = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            for site in cycle:
                if not 1 <= site <= degree:
                    raise ValueError(f"site {site} out of range 1..{degree}")
                if site in seen:
                    raise ValueError(f"site {site} repeated")
                seen.add(site)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def _from_raw(cls, raw: tuple[int, ...]) -> Permutation:
        # 0-based images from the group engine
        return cls(tuple(x + 1 for x in raw))

    @property
    def degree(self) -> int:
        return len(self.images)

    @cached_property
    def raw(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.images)

    def __call__(self, site: int) -> int:
        return self.images[site - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest site, ordered by that site."""
        out = []
        seen = set()
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    @property
    def order(self) -> int:
        return cycle_type(self).order

    def format(self, fixed_points: bool = False) -> str:
        """Cycle notation.  Uses digit-per-site form when degree <= 9."""
        cycles = list(self.cycles)
        if fixed_points:
            moved = {s for c in cycles for s in c}
            cycles += [(s,) for s in range(1, self.degree + 1) if s not in moved]
            cycles.sort(key=lambda c: c[0])
        if not cycles:
            return "()"
        sep = "" if self.degree <= 9 else " "
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Permutation({self.format()!r}, degree={self.degree})"


def _check_degrees(p: Permutation, q: Permutation):
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation i -> p(q(i))."""
    _check_degrees(p, q)
    return Permutation(tuple(p.images[x - 1] for x in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """by * p * by^-1, i.e. p with every site relabelled through ``by``."""
    _check_degrees(p, by)
    return compose(compose(by, p), inverse(by))


def cycle_type(p: Permutation) -> CycleType:
    lengths = [len(c) for c in p.cycles]
    lengths += [1] * (p.degree - sum(lengths))
    return CycleType(tuple(sorted(lengths, reverse=True)))


_TOKEN = re.compile(r"\s*(\(|\)|\d+|,)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse ``"(123)(456)"``, ``"(1 2 3)(4,5,6)"`` or ``"()"``.

    Multi-digit sites need a separator inside the cycle; an unseparated run of
    digits is read one site per digit, which only makes sense for degree <= 9.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    cycles: list[list[int]] = []
    seen: dict[int, int] = {}
    current: list[int] | None = None
    pos = 0
    stripped = text.rstrip()
    if not stripped.strip():
        raise CycleParseError("empty permutation text", text, 0)
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            bad = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise CycleParseError(f"unexpected character {stripped[bad]!r}", text, bad)
        tok = m.group(1)
        start = m.start(1)
        pos = m.end()
        if tok == "(":
            if current is not None:
                raise CycleParseError("nested '('", text, start)
            current = []
        elif tok == ")":
            if current is None:
                raise CycleParseError("unmatched ')'", text, start)
            if current:
                cycles.append(current)
            current = None
        elif tok == ",":
            if current is None:
                raise CycleParseError("separator outside a cycle", text, start)
        else:
            if current is None:
                raise CycleParseError("site outside a cycle", text, start)
            # below degree 10 a digit run is one site per digit
            if len(tok) > 1 and degree <= 9:
                sites = [(int(ch), start + k) for k, ch in enumerate(tok)]
            else:
                sites = [(int(tok), start)]
            for site, where in sites:
                if not 1 <= site <= degree:
                    raise CycleParseError(f"site {site} out of range 1..{degree}", text, where)
                if site in seen:
                    raise CycleParseError(f"site {site} repeated", text, where)
                seen[site] = where
                current.append(site)
    if current is not None:
        raise CycleParseError("unterminated cycle", text, len(stripped))
    return Permutation.from_cycles([tuple(c) for c in cycles], degree)
