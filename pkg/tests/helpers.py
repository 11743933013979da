"""Random instance generators shared by the tests."""

from __future__ import annotations

import random

from tilelab.core import DIRS, Assembly, GlueSide, Tas, TileType, binds
from tilelab.paths import Path, Tile


def universal_tiles(n: int = 3) -> tuple[TileType, ...]:
    """Types that bind each other on every side."""
    u = GlueSide("u", 1)
    return tuple(TileType(k, f"u{k}", u, u, u, u) for k in range(n))


def random_walk(rng: random.Random, length: int, tiles=None, start=(0, 0)) -> Path:
    """Self-avoiding walk of universal tiles; may stop short when trapped."""
    tiles = tiles or universal_tiles()
    pos = [start]
    used = {start}
    while len(pos) < length:
        nxt = [(pos[-1][0] + v[0], pos[-1][1] + v[1]) for v in DIRS.values()]
        nxt = [q for q in nxt if q not in used]
        if not nxt:
            break
        q = rng.choice(nxt)
        pos.append(q)
        used.add(q)
    return Path(tuple(Tile(q, rng.choice(tiles)) for q in pos))


def random_tas(rng: random.Random, n_types: int = 4, labels: str = "ab", p_glue: float = 0.6) -> Tas:
    tiles = []
    for k in range(n_types):
        sides = [GlueSide(rng.choice(labels), 1) if rng.random() < p_glue else GlueSide() for _ in range(4)]
        tiles.append(TileType(k, f"t{k}", *sides))
    return Tas(tuple(tiles), Assembly.single((0, 0), tiles[0]))


def random_producible_path(rng: random.Random, tas: Tas, max_len: int) -> Path | None:
    """A random producible path of at most max_len tiles (None if nothing attaches to the seed)."""
    seed = tas.seed
    starts = []
    for pos, st in seed.items():
        for side, v in DIRS.items():
            q = (pos[0] + v[0], pos[1] + v[1])
            if q not in seed:
                starts += [Tile(q, u) for u in tas.tileset if binds(st, side, u)]
    if not starts:
        return None
    tiles = [rng.choice(starts)]
    used = set(seed.positions()) | {tiles[0].pos}
    while len(tiles) < max_len:
        last = tiles[-1]
        opts = []
        for side, v in DIRS.items():
            q = (last.pos[0] + v[0], last.pos[1] + v[1])
            if q not in used:
                opts += [Tile(q, u) for u in tas.tileset if binds(last.type, side, u)]
        if not opts:
            break
        t = rng.choice(opts)
        tiles.append(t)
        used.add(t.pos)
    return Path(tuple(tiles))
