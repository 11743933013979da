"""Temperature-1 abstract tile assembly: tile types, assemblies, attachment, growth."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

Point = tuple[int, int]

# side name -> unit vector
DIRS: dict[str, Point] = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}
SIDES = ("N", "E", "S", "W")
OPPOSITE = {"N": "S", "S": "N", "E": "W", "W": "E"}
VEC_TO_SIDE = {v: k for k, v in DIRS.items()}


class TilelabError(Exception):
    """Base class for errors raised by this package."""


class CapExceeded(TilelabError):
    """An exhaustive search produced more results than its cap allows."""


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def neighbors(p: Point) -> Iterator[tuple[str, Point]]:
    for side in SIDES:
        yield side, add(p, DIRS[side])


@dataclass(frozen=True)
class GlueSide:
    label: str | None = None
    strength: int = 1

    def __post_init__(self):
        if self.strength < 0:
            raise ValueError("glue strength must be nonnegative")
        # strengths above 1 behave exactly like 1 at temperature 1
        s = 0 if self.label is None else min(self.strength, 1)
        object.__setattr__(self, "strength", s)

    @property
    def active(self) -> bool:
        return self.label is not None and self.strength >= 1


BLANK = GlueSide()


@dataclass(frozen=True)
class TileType:
    id: int
    name: str
    north: GlueSide = BLANK
    east: GlueSide = BLANK
    south: GlueSide = BLANK
    west: GlueSide = BLANK

    def glue(self, side: str) -> GlueSide:
        return {"N": self.north, "E": self.east, "S": self.south, "W": self.west}[side]

    def with_glue(self, side: str, g: GlueSide) -> "TileType":
        key = {"N": "north", "E": "east", "S": "south", "W": "west"}[side]
        return TileType(**{**self.__dict__, key: g})

    def __repr__(self):
        return f"TileType({self.id}:{self.name})"


def binds(a: TileType, side: str, b: TileType) -> bool:
    """True iff `a` placed with `b` on its `side` interact with strength >= 1."""
    ga = a.glue(side)
    gb = b.glue(OPPOSITE[side])
    return ga.active and gb.active and ga.label == gb.label


class Assembly:
    """Immutable partial map from Z^2 to tile types."""

    __slots__ = ("_m", "_hash")

    def __init__(self, placements: Mapping[Point, TileType] | Iterable[tuple[Point, TileType]] = ()):
        self._m: dict[Point, TileType] = dict(placements)
        self._hash = None

    @classmethod
    def single(cls, pos: Point, t: TileType) -> "Assembly":
        return cls({pos: t})

    def __contains__(self, pos) -> bool:
        return pos in self._m

    def __getitem__(self, pos: Point) -> TileType:
        return self._m[pos]

    def get(self, pos: Point, default=None):
        return self._m.get(pos, default)

    def __len__(self) -> int:
        return len(self._m)

    def __iter__(self):
        return iter(self._m)

    def items(self):
        return self._m.items()

    def positions(self) -> frozenset[Point]:
        return frozenset(self._m)

    def sorted_items(self) -> list[tuple[Point, TileType]]:
        return sorted(self._m.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def key(self) -> tuple:
        """Canonical hashable encoding (sorted placement list)."""
        return tuple(sorted((p, t.id) for p, t in self._m.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Assembly) and self._m == other._m

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._m.items()))
        return self._hash

    def __repr__(self):
        return f"Assembly({len(self._m)} tiles)"

    def with_tile(self, pos: Point, t: TileType) -> "Assembly":
        m = dict(self._m)
        m[pos] = t
        return Assembly(m)

    def union(self, other: "Assembly") -> "Assembly":
        m = dict(self._m)
        for p, t in other.items():
            if p in m and m[p] != t:
                raise TilelabError(f"assemblies conflict at {p}")
            m[p] = t
        return Assembly(m)

    def translate(self, v: Point) -> "Assembly":
        return Assembly({add(p, v): t for p, t in self._m.items()})

    def conflicts_with(self, other: "Assembly") -> list[Point]:
        """Positions where both place a tile but of different types."""
        return sorted(p for p, t in other.items() if p in self._m and self._m[p] != t)

    def is_connected(self) -> bool:
        if not self._m:
            return True
        start = next(iter(self._m))
        seen = {start}
        todo = [start]
        while todo:
            p = todo.pop()
            for _, q in neighbors(p):
                if q in self._m and q not in seen:
                    seen.add(q)
                    todo.append(q)
        return len(seen) == len(self._m)

    def is_stable(self) -> bool:
        """Binding graph connected (every cut has weight >= 1 at temperature 1)."""
        if not self._m:
            return True
        start = next(iter(self._m))
        seen = {start}
        todo = [start]
        while todo:
            p = todo.pop()
            for side, q in neighbors(p):
                if q in self._m and q not in seen and binds(self._m[p], side, self._m[q]):
                    seen.add(q)
                    todo.append(q)
        return len(seen) == len(self._m)

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in self._m]
        ys = [p[1] for p in self._m]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class Tas:
    tileset: tuple[TileType, ...]
    seed: Assembly
    temperature: int = 1

    def __post_init__(self):
        if self.temperature != 1:
            raise TilelabError("only temperature 1 is supported")
        for k, t in enumerate(self.tileset):
            if t.id != k:
                raise TilelabError(f"tile ids must be dense in declaration order (got {t.id} at {k})")
        names = [t.name for t in self.tileset]
        if len(set(names)) != len(names):
            raise TilelabError("duplicate tile names")
        if len(self.seed) == 0:
            raise TilelabError("empty seed")
        if not self.seed.is_stable():
            raise TilelabError("seed is not 1-stable")

    def by_name(self, name: str) -> TileType:
        for t in self.tileset:
            if t.name == name:
                return t
        raise KeyError(name)


@dataclass(frozen=True)
class AssemblySequence:
    start: Assembly
    steps: tuple[tuple[Point, TileType], ...] = field(default_factory=tuple)

    def final(self) -> Assembly:
        m = dict(self.start.items())
        for p, t in self.steps:
            m[p] = t
        return Assembly(m)

    def is_valid(self) -> bool:
        asm = dict(self.start.items())
        for p, t in self.steps:
            if p in asm:
                return False
            if not any(q in asm and binds(t, side, asm[q]) for side, q in neighbors(p)):
                return False
            asm[p] = t
        return True


def attachable(tas: Tas, asm: Assembly, pos: Point, t: TileType) -> bool:
    if pos in asm:
        return False
    return any(q in asm and binds(t, side, asm[q]) for side, q in neighbors(pos))


def _candidates_at(tileset, asm_map, pos) -> set[tuple[Point, int]]:
    found = set()
    for side, q in neighbors(pos):
        if q in asm_map:
            nb = asm_map[q]
            for t in tileset:
                if binds(t, side, nb):
                    found.add((pos, t.id))
    return found


def frontier(tas: Tas, asm: Assembly) -> list[tuple[Point, TileType]]:
    """All attachable (position, type) pairs, in a stable order."""
    m = dict(asm.items())
    cands = set()
    for p in m:
        for _, q in neighbors(p):
            if q not in m:
                cands |= _candidates_at(tas.tileset, m, q)
    return [(p, tas.tileset[k]) for p, k in sorted(cands, key=lambda c: (c[0][1], c[0][0], c[1]))]


def grow(tas: Tas, asm: Assembly | None = None, steps: int = 0, rng_seed: int = 0) -> AssemblySequence:
    """Sample one trajectory: each step picks uniformly among attachable pairs."""
    start = tas.seed if asm is None else asm
    rng = random.Random(rng_seed)
    m = dict(start.items())
    cands: set[tuple[Point, int]] = set()
    for p in m:
        for _, q in neighbors(p):
            if q not in m:
                cands |= _candidates_at(tas.tileset, m, q)
    out = []
    for _ in range(steps):
        if not cands:
            break
        ordered = sorted(cands, key=lambda c: (c[0][1], c[0][0], c[1]))
        pos, tid = ordered[rng.randrange(len(ordered))]
        t = tas.tileset[tid]
        m[pos] = t
        out.append((pos, t))
        cands = {c for c in cands if c[0] != pos}
        for _, q in neighbors(pos):
            if q not in m:
                cands |= _candidates_at(tas.tileset, m, q)
    return AssemblySequence(start, tuple(out))


def is_terminal(tas: Tas, asm: Assembly) -> bool:
    return not frontier(tas, asm)


def is_producible(tas: Tas, asm: Assembly) -> bool:
    """Can `asm` be grown from the seed by single attachments?"""
    for p, t in tas.seed.items():
        if asm.get(p) != t:
            return False
    placed = dict(tas.seed.items())
    todo = deque(placed)
    while todo:
        p = todo.popleft()
        for _, q in neighbors(p):
            if q in asm and q not in placed and attachable(tas, Assembly(placed), q, asm[q]):
                placed[q] = asm[q]
                todo.append(q)
    return len(placed) == len(asm)


def terminal_extension(tas: Tas, asm: Assembly, max_steps: int = 10_000) -> tuple[Assembly, bool]:
    """Grow deterministically (lowest candidate first) until terminal or out of steps."""
    m = dict(asm.items())
    for _ in range(max_steps):
        fr = frontier(tas, Assembly(m))
        if not fr:
            return Assembly(m), True
        p, t = fr[0]
        m[p] = t
    return Assembly(m), not frontier(tas, Assembly(m))


def extract_path(tas: Tas, asm: Assembly, target: Point):
    """Seed-anchored binding path ending at `target`.

    The first tile is a seed tile; the remaining tiles form a producible path.
    A target inside the seed yields a length-1 path.
    """
    from .paths import Path, Tile

    if target not in asm:
        raise TilelabError(f"target {target} is not occupied")
    if target in tas.seed:
        return Path((Tile(target, asm[target]),))
    # BFS over binding edges, leaving the seed only once
    prev: dict[Point, Point | None] = {}
    todo = deque()
    for p in sorted(tas.seed.positions()):
        prev[p] = None
        todo.append(p)
    while todo:
        p = todo.popleft()
        if p == target:
            break
        for side, q in neighbors(p):
            if q in asm and q not in prev and q not in tas.seed and binds(asm[p], side, asm[q]):
                prev[q] = p
                todo.append(q)
    if target not in prev:
        raise TilelabError(f"{target} is not bound to the seed")
    chain = []
    p = target
    while p is not None:
        chain.append(p)
        if p in tas.seed:
            break
        p = prev[p]
    chain.reverse()
    return Path(tuple(Tile(p, asm[p]) for p in chain))
