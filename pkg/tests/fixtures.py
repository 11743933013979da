"""Hand-built and search-found systems for the decision tree and the blocker."""

from tilelab.blocking import BlockConfig, l_zone
from tilelab.core import Assembly, GlueSide, Tas, TileType
from tilelab.paths import Path, Tile
from tilelab.visibility import VLine

G = GlueSide


def walled_row(width: int) -> Tas:
    """Row grows east from s0 into a seed wall at x=width; a turn tile starts a column.

    The seed loops below the row: s0 (0,0), link (0,-1), s0 (0,-2), a floor of
    row tiles, a turn tile at (width,-2) and column tiles up to (width,0).
    """
    s0 = TileType(0, "s0", north=G("b"), east=G("a"), south=G("b"))
    link = TileType(1, "link", north=G("b"), south=G("b"))
    row = TileType(2, "row", east=G("a"), west=G("a"))
    turn = TileType(3, "turn", west=G("a"), north=G("c"))
    col = TileType(4, "col", south=G("c"), north=G("c"))
    place = {(0, 0): s0, (0, -1): link, (0, -2): s0, (width, -2): turn, (width, -1): col, (width, 0): col}
    place.update({(x, -2): row for x in range(1, width)})
    return Tas((s0, link, row, turn, col), Assembly(place))


def open_row() -> Tas:
    """walled_row without the wall: the row pumps east forever."""
    s0 = TileType(0, "s0", east=G("a"))
    row = TileType(1, "row", east=G("a"), west=G("a"))
    turn = TileType(2, "turn", west=G("a"), north=G("c"))
    col = TileType(3, "col", south=G("c"), north=G("c"))
    return Tas((s0, row, turn, col), Assembly.single((0, 0), s0))


def row_cfg(width: int, h: int, col0: int = 4) -> BlockConfig:
    return BlockConfig(h, l_zone(1, width - 1, 0, 0, col0, h), VLine(3), m=1, min_sep=1, max_vsep=0)


def mirror(tas: Tas) -> Tas:
    """Reflect through the y axis: east and west glues swap, x negates."""
    tiles = tuple(TileType(t.id, t.name, t.north, t.west, t.south, t.east) for t in tas.tileset)
    seed = Assembly({(-x, y): tiles[t.id] for (x, y), t in tas.seed.items()})
    return Tas(tiles, seed)


def mirror_cfg(cfg: BlockConfig) -> BlockConfig:
    zone = frozenset((-x, y) for x, y in cfg.zone)
    return BlockConfig(cfg.h, zone, VLine(-cfg.line.x2), cfg.m, cfg.min_sep, cfg.max_vsep, cfg.window)


def row_path(tas: Tas, turn_x: int, h: int, sign: int = 1) -> Path:
    row, turn, col = tas.by_name("row"), tas.by_name("turn"), tas.by_name("col")
    tiles = [Tile((sign * x, 0), row) for x in range(1, turn_x)]
    tiles.append(Tile((sign * turn_x, 0), turn))
    tiles += [Tile((sign * turn_x, y), col) for y in range(1, h + 1)]
    return Path(tuple(tiles))


def staircase(h: int) -> tuple[Tas, Path, BlockConfig]:
    """A staircase pumping up-right until it hits a seed overhang above height h."""
    s0 = TileType(0, "s0", north=G("s"), west=G("z"))
    x = TileType(1, "x", south=G("s"), east=G("t"))
    y = TileType(2, "y", west=G("t"), north=G("s"))
    z = TileType(3, "z", north=G("z"), east=G("z"), south=G("z"), west=G("z"))
    top = h + 3
    place = {(0, 0): s0}
    place.update({(-1, k): z for k in range(0, top + 1)})
    place.update({(k, top): z for k in range(0, h + 2)})
    place[(h + 1, top - 1)] = z
    tas = Tas((s0, x, y, z), Assembly(place))
    tiles = []
    for k in range(h):
        tiles.append(Tile((k, k + 1), x))
        if k + 1 < h:
            tiles.append(Tile((k + 1, k + 1), y))
    cfg = BlockConfig(h, None, VLine(1), m=1, min_sep=1, max_vsep=1)
    return tas, Path(tuple(tiles)), cfg


def detour(wall: int, h: int, drop: bool, narrow: bool = False) -> tuple[Tas, Path, BlockConfig]:
    """Row with a fixed-length detour below it that climbs again after three steps.

    The seed is s0 plus a z-glued frame: a column over s0, a beam above height
    h and a wall hanging down to (wall, 0).  With `drop`, the middle detour tile
    also offers a lower detour that climbs one column further left.
    """
    s0 = TileType(0, "s0", east=G("a"), north=G("z"))
    z = TileType(1, "z", north=G("z"), east=G("z"), south=G("z"), west=G("z"))
    a = TileType(2, "row", east=G("a"), west=G("a"), south=G("d"))
    b = TileType(3, "turn", west=G("a"), north=G("c"))
    c = TileType(4, "col", south=G("c"), north=G("c"))
    d1 = TileType(5, "down", north=G("d"), east=G("f1"))
    f1 = TileType(6, "f1", west=G("f1"), east=G("f2"))
    f2 = TileType(7, "f2", west=G("f2"), east=G("f3"), south=G("g") if drop else G())
    f3 = TileType(8, "f3", west=G("f3"), east=G("f4"))
    u = TileType(9, "up", west=G("f4"), north=G("u"))
    v = TileType(10, "rise", south=G("u"), north=G("u"))
    g = TileType(11, "low", north=G("g"), east=G("k"))
    ku = TileType(12, "lowup", west=G("k"), north=G("u"))
    top = h + 1
    place = {(0, 0): s0}
    place.update({(0, y): z for y in range(1, top + 1)})
    place.update({(x, top): z for x in range(1, wall + 1)})
    place.update({(wall, y): z for y in range(0, top)})
    tas = Tas((s0, z, a, b, c, d1, f1, f2, f3, u, v, g, ku), Assembly(place))
    tiles = [Tile((x, 0), a) for x in range(1, 4)] + [Tile((4, 0), b)]
    tiles += [Tile((4, y), c) for y in range(1, h + 1)]
    if narrow:
        # bottom band, P's own column, and columns from x=8 on: the pulled-back climb at x=7 is outside
        zone = frozenset((x, y) for x in range(1, wall + 4) for y in range(-2, 1))
        zone |= frozenset((x, y) for x in [4] + list(range(8, wall + 4)) for y in range(0, h + 1))
    else:
        zone = frozenset((x, y) for x in range(1, wall + 4) for y in range(-2, h + 1))
    zone -= tas.seed.positions()
    cfg = BlockConfig(h, zone, VLine(3), m=1, min_sep=1, max_vsep=0)
    return tas, Path(tuple(tiles)), cfg


def terraces(width: int) -> Tas:
    """walled_row with 4 types: s0 doubles as a step, so rows can restart on top of columns."""
    s0 = TileType(0, "s0", north=G("c"), east=G("a"), south=G("c"))
    row = TileType(1, "row", east=G("a"), west=G("a"))
    turn = TileType(2, "turn", west=G("a"), north=G("c"))
    col = TileType(3, "col", south=G("c"), north=G("c"))
    place = {(0, 0): s0, (0, -1): col, (0, -2): s0, (width, -2): turn, (width, -1): col, (width, 0): col}
    place.update({(x, -2): row for x in range(1, width)})
    return Tas((s0, row, turn, col), Assembly(place))


def terrace_cfg(width: int, h: int) -> BlockConfig:
    return BlockConfig(h, l_zone(1, width - 1, 0, 0, 4, h), VLine(3), m=1, min_sep=1, max_vsep=0)
