"""m-block representations, clean mapping, bounded equivalence checks, T_N and its zone."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Assembly, GlueSide, Point, Tas, TileType, TilelabError, frontier

Pattern = tuple[tuple[str | None, ...], ...]  # rows north to south, m cells each


def gen_tn(n: int) -> Tas:
    """The flipped-L system: N+1 east of the seed, then north forever."""
    if n < 1:
        raise TilelabError("n must be >= 1")
    tiles = [TileType(0, "seed", east=GlueSide("g0", 1))]
    for k in range(1, n + 1):
        tiles.append(TileType(k, f"r{k}", east=GlueSide(f"g{k}", 1), west=GlueSide(f"g{k - 1}", 1)))
    tiles.append(TileType(n + 1, "corner", north=GlueSide("c", 1), west=GlueSide(f"g{n}", 1)))
    tiles.append(TileType(n + 2, "col", north=GlueSide("c", 1), south=GlueSide("c", 1)))
    return Tas(tuple(tiles), Assembly.single((0, 0), tiles[0]))


def disjoint_union(systems: Mapping[str, Tas], seed_of: str) -> tuple[Tas, dict[str, dict[str, TileType]]]:
    """Union of tilesets with names and glue labels prefixed per component.

    Returns the union system seeded like component `seed_of`, and for each
    component the map from union tile name to the component's tile type.
    """
    tiles: list[TileType] = []
    back: dict[str, dict[str, TileType]] = {}
    renamed: dict[tuple[str, str], TileType] = {}

    def pre(tag, g: GlueSide) -> GlueSide:
        return GlueSide(None if g.label is None else f"{tag}.{g.label}", g.strength)

    for tag, tas in systems.items():
        back[tag] = {}
        for t in tas.tileset:
            u = TileType(len(tiles), f"{tag}.{t.name}", pre(tag, t.north), pre(tag, t.east), pre(tag, t.south), pre(tag, t.west))
            tiles.append(u)
            renamed[(tag, t.name)] = u
            back[tag][u.name] = t
    src = systems[seed_of]
    seed = Assembly({p: renamed[(seed_of, t.name)] for p, t in src.seed.items()})
    return Tas(tuple(tiles), seed), back


def _leq(a: Pattern, b: Pattern) -> bool:
    """a is a sub-pattern of b (every tile of a is in b at the same cell)."""
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if x is not None and x != y:
                return False
    return True


@dataclass(frozen=True)
class BlockRepr:
    m: int
    table: tuple[tuple[Pattern, TileType], ...]

    def __post_init__(self):
        for pat, _ in self.table:
            if len(pat) != self.m or any(len(r) != self.m for r in pat):
                raise TilelabError(f"pattern {pat} is not {self.m}x{self.m}")
            if all(c is None for r in pat for c in r):
                raise TilelabError("empty pattern cannot be mapped")
        keys = [p for p, _ in self.table]
        if len(set(keys)) != len(keys):
            raise TilelabError("duplicate pattern in repr table")
        for pa, ta in self.table:
            for pb, tb in self.table:
                if pa != pb and _leq(pa, pb) and ta != tb:
                    raise TilelabError(f"invalid repr: {pa} is under {pb} but maps elsewhere")

    @classmethod
    def from_dict(cls, m: int, d: Mapping[Pattern, TileType]) -> "BlockRepr":
        return cls(m, tuple(sorted(d.items(), key=lambda kv: repr(kv[0]))))

    def lookup(self, pat: Pattern) -> TileType | None:
        for p, t in self.table:
            if p == pat:
                return t
        # partially grown blocks inherit from any mapped sub-pattern
        for p, t in self.table:
            if _leq(p, pat):
                return t
        return None

    def without(self, k: int) -> "BlockRepr":
        return BlockRepr(self.m, self.table[:k] + self.table[k + 1 :])


def block_of(pos: Point, m: int) -> Point:
    return (pos[0] // m, pos[1] // m)


def blocks(asm: Assembly, m: int) -> dict[Point, Pattern]:
    cells: dict[Point, dict[Point, str]] = {}
    for p, t in asm.items():
        b = block_of(p, m)
        cells.setdefault(b, {})[(p[0] - b[0] * m, p[1] - b[1] * m)] = t.name
    out = {}
    for b, c in cells.items():
        out[b] = tuple(tuple(c.get((x, y)) for x in range(m)) for y in range(m - 1, -1, -1))
    return out


def _mapped(r: BlockRepr, asm: Assembly) -> tuple[dict[Point, TileType], list[Point]]:
    mapped, unmapped = {}, []
    for b, pat in sorted(blocks(asm, r.m).items()):
        t = r.lookup(pat)
        if t is None:
            unmapped.append(b)
        else:
            mapped[b] = t
    return mapped, unmapped


def maps_cleanly(r: BlockRepr, asm: Assembly) -> bool:
    mapped, unmapped = _mapped(r, asm)
    for b in unmapped:
        if not any((b[0] + dx, b[1] + dy) in mapped for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))):
            return False
    return True


def apply_repr(r: BlockRepr, asm: Assembly) -> Assembly | None:
    """R*(asm), or None when some nonempty unmapped block is not legal fuzz."""
    if not maps_cleanly(r, asm):
        return None
    mapped, _ = _mapped(r, asm)
    return Assembly(mapped)


def bounded_productions(tas: Tas, depth: int, cap: int = 200_000) -> tuple[set[Assembly], set[Assembly]]:
    """All assemblies within `depth` attachments, and the frontier of that set.

    The second set holds assemblies that are terminal or sit at exactly
    `depth` attachments; it stands in for the terminal set on infinite systems.
    """
    layer = {tas.seed}
    seen = {tas.seed}
    last = set()
    for d in range(depth + 1):
        nxt = set()
        for a in layer:
            fr = frontier(tas, a)
            if not fr or d == depth:
                last.add(a)
            if d < depth:
                for p, t in fr:
                    b = a.with_tile(p, t)
                    if b not in seen:
                        seen.add(b)
                        nxt.add(b)
                        if len(seen) > cap:
                            from .core import CapExceeded

                            raise CapExceeded(f"more than {cap} productions")
        layer = nxt
    return seen, last


@dataclass(frozen=True)
class Verdict:
    ok: bool
    depth: int
    reason: str = ""
    counterexample: Assembly | None = None

    def __bool__(self):
        return self.ok


def equiv_terminal_shapes_bounded(s: Tas, t: Tas, r: BlockRepr, depth: int) -> Verdict:
    _, s_term = bounded_productions(s, depth)
    _, t_term = bounded_productions(t, depth)
    t_shapes = {a.positions() for a in t_term}
    s_shapes = {}
    for a in sorted(s_term, key=lambda a: a.key()):
        img = apply_repr(r, a)
        if img is None:
            return Verdict(False, depth, "simulator assembly does not map cleanly", a)
        s_shapes.setdefault(img.positions(), a)
    for shape, a in s_shapes.items():
        if shape not in t_shapes:
            return Verdict(False, depth, "simulated shape not produced by target", a)
    for b in sorted(t_term, key=lambda a: a.key()):
        if b.positions() not in s_shapes:
            return Verdict(False, depth, "target shape never simulated", b)
    return Verdict(True, depth)


def equiv_productions_bounded(s: Tas, t: Tas, r: BlockRepr, depth: int) -> Verdict:
    s_all, s_term = bounded_productions(s, depth)
    t_all, t_term = bounded_productions(t, depth)
    for name, s_set, t_set in (("production", s_all, t_all), ("terminal", s_term, t_term)):
        images = {}
        for a in sorted(s_set, key=lambda a: a.key()):
            img = apply_repr(r, a)
            if img is None:
                return Verdict(False, depth, "simulator assembly does not map cleanly", a)
            images.setdefault(img, a)
        for img, a in images.items():
            if img not in t_set:
                return Verdict(False, depth, f"{name} image not in target {name} set", a)
        for b in sorted(t_set, key=lambda a: a.key()):
            if b not in images:
                return Verdict(False, depth, f"target {name} assembly never represented", b)
    return Verdict(True, depth)


def identity_repr(s: Tas, targets: Mapping[str, TileType]) -> BlockRepr:
    """m=1 table mapping simulator tile names to target tile types."""
    return BlockRepr.from_dict(1, {((name,),): t for name, t in targets.items()})


@dataclass(frozen=True)
class SimZone:
    m: int
    blocks: frozenset[Point]
    supertiles: frozenset[Point]

    @property
    def fuzz(self) -> frozenset[Point]:
        return self.blocks - self.supertiles

    def tiles(self) -> frozenset[Point]:
        m = self.m
        return frozenset((bx * m + dx, by * m + dy) for bx, by in self.blocks for dx in range(m) for dy in range(m))


def zone_of_tn(n: int, m: int = 1, height: int | None = None) -> SimZone:
    """Supertile blocks of T_n's terminal shape (column truncated) plus edge-adjacent fuzz."""
    if n < 1 or m < 1:
        raise TilelabError("n and m must be >= 1")
    top = height if height is not None else 3 * (n + 2)
    sup = {(x, 0) for x in range(n + 2)} | {(n + 1, y) for y in range(1, top + 1)}
    fuzz = set()
    for bx, by in sup:
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            c = (bx + dx, by + dy)
            if c not in sup and c[1] <= top:
                fuzz.add(c)
    return SimZone(m, frozenset(sup | fuzz), frozenset(sup))
