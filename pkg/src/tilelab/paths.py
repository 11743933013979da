"""Paths: producibility, turns, right/left priority and pumping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    DIRS,
    OPPOSITE,
    SIDES,
    VEC_TO_SIDE,
    Assembly,
    Point,
    Tas,
    TileType,
    TilelabError,
    add,
    binds,
    neighbors,
    sub,
)


@dataclass(frozen=True)
class Tile:
    pos: Point
    type: TileType

    def shift(self, v: Point) -> "Tile":
        return Tile(add(self.pos, v), self.type)

    def __repr__(self):
        return f"Tile({self.pos},{self.type.name})"


def step_side(a: Point, b: Point) -> str:
    """Side of `a` facing the adjacent position `b`."""
    try:
        return VEC_TO_SIDE[sub(b, a)]
    except KeyError:
        raise TilelabError(f"{a} and {b} are not adjacent") from None


def interacts(a: Tile, b: Tile) -> bool:
    d = sub(b.pos, a.pos)
    if d not in VEC_TO_SIDE:
        return False
    return binds(a.type, VEC_TO_SIDE[d], b.type)


def path_violation(tiles: Sequence[Tile]) -> int | None:
    """Index of the first tile that breaks the path conditions, or None."""
    seen = set()
    for k, t in enumerate(tiles):
        if t.pos in seen:
            return k
        if k > 0 and not interacts(tiles[k - 1], t):
            return k
        seen.add(t.pos)
    return None


@dataclass(frozen=True)
class Path:
    tiles: tuple[Tile, ...]

    def __post_init__(self):
        object.__setattr__(self, "tiles", tuple(self.tiles))
        bad = path_violation(self.tiles)
        if bad is not None:
            raise TilelabError(f"not a path: tile {bad} repeats a position or does not bind")

    def __len__(self):
        return len(self.tiles)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self.tiles[k]
        return self.tiles[k]

    def __iter__(self):
        return iter(self.tiles)

    def pos(self, k: int) -> Point:
        return self.tiles[k].pos

    def positions(self) -> list[Point]:
        return [t.pos for t in self.tiles]

    def sub(self, a: int, b: int) -> "Path":
        """Subpath with indices a..b inclusive."""
        return Path(self.tiles[a : b + 1])

    def prefix(self, n: int) -> "Path":
        return Path(self.tiles[:n])

    def translate(self, v: Point) -> "Path":
        return Path(tuple(t.shift(v) for t in self.tiles))

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.tiles)))

    def assembly(self) -> Assembly:
        return Assembly({t.pos: t.type for t in self.tiles})

    def glue(self, k: int) -> "GlueOnPath":
        a, b = self.tiles[k], self.tiles[k + 1]
        d = sub(b.pos, a.pos)
        label = a.type.glue(VEC_TO_SIDE[d]).label
        mid = (4 * a.pos[0] + 2 * d[0], 4 * a.pos[1] + 2 * d[1])
        return GlueOnPath(k, label, (a.pos, b.pos), mid, d)

    def glues(self) -> list["GlueOnPath"]:
        return [self.glue(k) for k in range(len(self.tiles) - 1)]

    def key(self) -> tuple:
        return tuple((t.pos, t.type.id) for t in self.tiles)

    def __repr__(self):
        return "Path[" + " ".join(f"{t.pos}:{t.type.name}" for t in self.tiles) + "]"


@dataclass(frozen=True)
class GlueOnPath:
    index: int
    label: str | None
    edge: tuple[Point, Point]
    midpoint: tuple[int, int]  # quarter units
    direction: Point


@dataclass(frozen=True)
class PumpSpec:
    i: int
    j: int

    def period_vector(self, p: Path) -> Point:
        return sub(p.pos(self.j), p.pos(self.i))


@dataclass(frozen=True)
class Pumpable:
    witness_horizon: int


@dataclass(frozen=True)
class Blocked:
    first_conflict_index: int


def is_producible_path(tas: Tas, p: Path | Sequence[Tile]) -> bool:
    tiles = p.tiles if isinstance(p, Path) else tuple(p)
    if not tiles:
        return False
    ids = {t.id: t for t in tas.tileset}
    for t in tiles:
        if ids.get(t.type.id) != t.type or t.pos in tas.seed:
            return False
    if path_violation(tiles) is not None:
        return False
    first = tiles[0]
    return any(q in tas.seed and binds(first.type, side, tas.seed[q]) for side, q in neighbors(first.pos))


def pumping_tile(p: Path | Sequence[Tile], i: int, j: int, k: int) -> Tile:
    tiles = p.tiles if isinstance(p, Path) else p
    if k <= i:
        return tiles[k]
    per = j - i
    v = sub(tiles[j].pos, tiles[i].pos)
    r, q = (k - i - 1) % per, (k - i - 1) // per
    return tiles[i + 1 + r].shift((q * v[0], q * v[1]))


def pumping_sequence(p: Path, spec: PumpSpec, length: int) -> list[Tile]:
    if not 0 <= spec.i < spec.j < len(p):
        raise TilelabError("need 0 <= i < j < |p|")
    return [pumping_tile(p, spec.i, spec.j, k) for k in range(length)]


def _bbox(points) -> tuple[int, int, int, int]:
    xs = [q[0] for q in points]
    ys = [q[1] for q in points]
    return min(xs), min(ys), max(xs), max(ys)


def pumping_horizon(tas: Tas, p: Path, spec: PumpSpec) -> int:
    """Number of periods after which no further conflict can first appear.

    Two ingredients: the period index from which every translate of the
    segment clears the bounding box of seed + P_{0..j}, and the largest
    offset r at which a segment can still meet its own r-th translate.
    """
    i, j = spec.i, spec.j
    v = spec.period_vector(p)
    if v == (0, 0):
        raise TilelabError("degenerate pump spec: zero period vector")
    seg = [p.pos(k) for k in range(i + 1, j + 1)]
    sx0, sy0, sx1, sy1 = _bbox(seg)
    bx0, by0, bx1, by1 = _bbox(list(tas.seed.positions()) + p.positions()[: j + 1])
    clear = []
    if v[0] > 0:
        clear.append((bx1 - sx0) // v[0] + 1)
    if v[0] < 0:
        clear.append((sx1 - bx0) // (-v[0]) + 1)
    if v[1] > 0:
        clear.append((by1 - sy0) // v[1] + 1)
    if v[1] < 0:
        clear.append((sy1 - by0) // (-v[1]) + 1)
    n_clear = max(min(clear), 1)
    diam = max(sx1 - sx0, sy1 - sy0)
    r_max = diam // max(abs(v[0]), abs(v[1])) + 1
    return max(n_clear, r_max) + 1


def is_pumpable(tas: Tas, p: Path, spec: PumpSpec) -> Pumpable | Blocked:
    """Exact decision whether the pumping of p between i and j is an infinite producible path."""
    if not 0 <= spec.i < spec.j < len(p):
        raise TilelabError("need 0 <= i < j < |p|")
    periods = pumping_horizon(tas, p, spec)
    horizon = spec.j + 1 + periods * (spec.j - spec.i)
    k = first_pumping_conflict(tas, p, spec, horizon)
    if k is None:
        return Pumpable(horizon)
    return Blocked(k)


def first_pumping_conflict(tas: Tas, p: Path, spec: PumpSpec, length: int) -> int | None:
    """First index in q_0..q_{length-1} that overlaps seed/earlier tiles or fails to bind."""
    seen = set(tas.seed.positions())
    prev = None
    for k in range(length):
        t = pumping_tile(p, spec.i, spec.j, k)
        if t.pos in seen:
            return k
        if prev is not None and not interacts(prev, t):
            return k
        seen.add(t.pos)
        prev = t
    return None


def maximal_pumped_prefix(tas: Tas, p: Path, spec: PumpSpec, limit: int | None = None) -> tuple[Path, bool]:
    """Longest prefix of the pumping that is a producible path (truncated at `limit`).

    Returns (prefix, infinite) where infinite means the pumping is pumpable.
    """
    res = is_pumpable(tas, p, spec)
    if isinstance(res, Pumpable):
        n = res.witness_horizon if limit is None else limit
        return Path(pumping_sequence(p, spec, n)), True
    n = res.first_conflict_index
    if limit is not None:
        n = min(n, limit)
    return Path(pumping_sequence(p, spec, n)), False


# rotation rho = [[0,1],[-1,0]] (clockwise)
def rho(u: Point) -> Point:
    return (u[1], -u[0])


def turn_order(back: Point) -> tuple[Point, Point, Point]:
    """tau = (rho u, rho^2 u, rho^3 u) for u pointing back to the previous tile."""
    a = rho(back)
    b = rho(a)
    return (a, b, rho(b))


def turn_between(prev: Point, here: Point, ref_next: Point, x: Point) -> str:
    """Is stepping here->x a right turn, left turn or the same as here->ref_next?"""
    tau = turn_order(sub(prev, here))
    a = tau.index(sub(ref_next, here))
    b = tau.index(sub(x, here))
    if a == b:
        return "same"
    return "right" if b > a else "left"


def turn_kind(p: Path, i: int, x: Tile | Point) -> str:
    """Classify stepping from P_i to x relative to the incoming heading."""
    if not 0 < i < len(p):
        raise TilelabError("turn_kind needs 0 < i < |p|")
    xp = x.pos if isinstance(x, Tile) else x
    here, prev = p.pos(i), p.pos(i - 1)
    heading = sub(here, prev)
    d = sub(xp, here)
    if d == heading:
        return "straight"
    if d == rho(heading):
        return "right"
    if d == (-heading[1], heading[0]):
        return "left"
    raise TilelabError("x must be adjacent to P_i and differ from P_{i-1}")


def first_difference(a: Sequence[Tile], b: Sequence[Tile]) -> int | None:
    n = min(len(a), len(b))
    for k in range(n):
        if a[k] != b[k]:
            return k
    return None if len(a) == len(b) else n


def _priority(p: Sequence[Tile], q: Sequence[Tile], side: str) -> int:
    """+1 if p wins, -1 if q wins, for side 'right' or 'left'."""
    k = first_difference(p, q)
    if k is None:
        raise TilelabError("priority undefined for identical paths")
    if k >= len(p) or k >= len(q):
        # one is a proper prefix of the other; treat the shorter one as losing
        return 1 if len(p) > len(q) else -1
    if p[k].pos == q[k].pos:
        return 1 if p[k].type.id < q[k].type.id else -1
    if k < 2:
        raise TilelabError("paths must share their first two positions")
    t = turn_between(p[k - 2].pos, p[k - 1].pos, q[k].pos, p[k].pos)
    return 1 if t == side else -1


def right_priority(p: Path | Sequence[Tile], q: Path | Sequence[Tile]):
    """Return whichever of p, q is the right-priority path."""
    a = p.tiles if isinstance(p, Path) else tuple(p)
    b = q.tiles if isinstance(q, Path) else tuple(q)
    if len(a) < 2 or len(b) < 2 or a[0].pos != b[0].pos or a[1].pos != b[1].pos:
        raise TilelabError("right_priority needs paths sharing their first two positions")
    return p if _priority(a, b, "right") > 0 else q


def left_priority(p: Path | Sequence[Tile], q: Path | Sequence[Tile]):
    a = p.tiles if isinstance(p, Path) else tuple(p)
    b = q.tiles if isinstance(q, Path) else tuple(q)
    if len(a) < 2 or len(b) < 2 or a[0].pos != b[0].pos or a[1].pos != b[1].pos:
        raise TilelabError("left_priority needs paths sharing their first two positions")
    return p if _priority(a, b, "left") > 0 else q


def most_priority(paths: Sequence[Path], side: str = "right") -> Path:
    pick = right_priority if side == "right" else left_priority
    best = paths[0]
    for q in paths[1:]:
        best = pick(best, q)
    return best


def turns_from(w: Sequence[Tile], ref: Sequence[Tile], side: str) -> bool:
    """Does w turn `side` from the reference sequence at its first difference?

    The first differing tile must sit at a different position than the
    reference tile; a same-position type change is not a turn.
    """
    k = first_difference(w, ref)
    if k is None or k >= len(w) or k >= len(ref) or k < 2:
        return False
    if w[k].pos == ref[k].pos:
        return False
    return turn_between(w[k - 2].pos, w[k - 1].pos, ref[k].pos, w[k].pos) == side


def io_sides(p: Path, i: int) -> tuple[str | None, str | None, frozenset[str]]:
    if not 0 <= i < len(p):
        raise TilelabError("index out of range")
    inp = step_side(p.pos(i), p.pos(i - 1)) if i > 0 else None
    out = step_side(p.pos(i), p.pos(i + 1)) if i < len(p) - 1 else None
    free = frozenset(s for s in SIDES if s not in (inp, out))
    return inp, out, free


__all__ = [
    "Tile",
    "Path",
    "GlueOnPath",
    "PumpSpec",
    "Pumpable",
    "Blocked",
    "is_producible_path",
    "pumping_sequence",
    "pumping_tile",
    "is_pumpable",
    "first_pumping_conflict",
    "maximal_pumped_prefix",
    "right_priority",
    "left_priority",
    "most_priority",
    "turn_kind",
    "turns_from",
    "io_sides",
    "interacts",
    "DIRS",
    "OPPOSITE",
]
