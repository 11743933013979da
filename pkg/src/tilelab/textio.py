"""Text formats for tilesets, paths and repr tables.

tileset:  tile <name> n=<label|-> e=... s=... w=...   (optional :<strength>, default 1)
          seed <x> <y> <name>
          temp 1
path:     <x> <y> <tile-name>   one per line, in path order
repr:     block <m> <row>/<row>/... -> <target>   rows north to south, cells comma separated, '.' empty
Lines starting with '#' and blank lines are ignored everywhere.
"""

from __future__ import annotations

from .core import Assembly, GlueSide, Tas, TileType, TilelabError
from .paths import Path, Tile, path_violation
from .simulation import BlockRepr


class ParseError(TilelabError):
    def __init__(self, line: int | None, msg: str):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


def _lines(text: str):
    for k, raw in enumerate(text.splitlines(), start=1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield k, s


def _parse_glue(tok: str, ln: int) -> GlueSide:
    if tok == "-":
        return GlueSide()
    label, _, st = tok.partition(":")
    if not label:
        raise ParseError(ln, f"bad glue {tok!r}")
    try:
        strength = int(st) if st else 1
    except ValueError:
        raise ParseError(ln, f"bad glue strength in {tok!r}") from None
    if strength < 0:
        raise ParseError(ln, "negative glue strength")
    return GlueSide(label, strength)


def parse_tas(text: str) -> Tas:
    tiles: list[TileType] = []
    by_name: dict[str, TileType] = {}
    seeds: list[tuple[int, int, str, int]] = []
    for ln, s in _lines(text):
        toks = s.split()
        head = toks[0]
        if head == "temp":
            if toks[1:] != ["1"]:
                raise ParseError(ln, "only 'temp 1' is supported")
        elif head == "tile":
            if len(toks) < 2:
                raise ParseError(ln, "tile needs a name")
            name = toks[1]
            if name in by_name:
                raise ParseError(ln, f"duplicate tile {name!r}")
            sides = {"n": GlueSide(), "e": GlueSide(), "s": GlueSide(), "w": GlueSide()}
            for tok in toks[2:]:
                key, eq, val = tok.partition("=")
                if not eq or key not in sides:
                    raise ParseError(ln, f"bad side spec {tok!r}")
                sides[key] = _parse_glue(val, ln)
            t = TileType(len(tiles), name, sides["n"], sides["e"], sides["s"], sides["w"])
            tiles.append(t)
            by_name[name] = t
        elif head == "seed":
            if len(toks) != 4:
                raise ParseError(ln, "seed needs: seed <x> <y> <name>")
            try:
                x, y = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError(ln, "seed coordinates must be integers") from None
            seeds.append((x, y, toks[3], ln))
        else:
            raise ParseError(ln, f"unknown directive {head!r}")
    if not tiles:
        raise ParseError(None, "no tiles")
    if not seeds:
        raise ParseError(None, "no seed")
    placed = {}
    for x, y, name, ln in seeds:
        if name not in by_name:
            raise ParseError(ln, f"seed uses undeclared tile {name!r}")
        if (x, y) in placed:
            raise ParseError(ln, f"seed position {(x, y)} used twice")
        placed[(x, y)] = by_name[name]
    seed = Assembly(placed)
    if not seed.is_stable():
        raise ParseError(seeds[-1][3], "seed is disconnected or not 1-stable")
    return Tas(tuple(tiles), seed)


def _glue_text(g: GlueSide) -> str:
    if g.label is None:
        return "-"
    return g.label if g.strength == 1 else f"{g.label}:{g.strength}"


def serialize_tas(tas: Tas) -> str:
    out = ["temp 1"]
    for t in tas.tileset:
        out.append(
            f"tile {t.name} n={_glue_text(t.north)} e={_glue_text(t.east)} s={_glue_text(t.south)} w={_glue_text(t.west)}"
        )
    for (x, y), t in sorted(tas.seed.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        out.append(f"seed {x} {y} {t.name}")
    return "\n".join(out) + "\n"


def parse_path(text: str, tas: Tas) -> Path:
    names = {t.name: t for t in tas.tileset}
    tiles = []
    for ln, s in _lines(text):
        toks = s.split()
        if len(toks) != 3:
            raise ParseError(ln, "expected: <x> <y> <tile-name>")
        try:
            x, y = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(ln, "coordinates must be integers") from None
        if toks[2] not in names:
            raise ParseError(ln, f"undeclared tile {toks[2]!r}")
        tiles.append((Tile((x, y), names[toks[2]]), ln))
    if not tiles:
        raise ParseError(None, "empty path")
    seq = [t for t, _ in tiles]
    bad = path_violation(seq)
    if bad is not None:
        raise ParseError(tiles[bad][1], "tile repeats a position or does not bind to its predecessor")
    return Path(tuple(seq))


def serialize_path(p: Path) -> str:
    return "".join(f"{t.pos[0]} {t.pos[1]} {t.type.name}\n" for t in p.tiles)


def parse_repr(text: str, target: Tas) -> BlockRepr:
    names = {t.name: t for t in target.tileset}
    table = {}
    m_seen = None
    for ln, s in _lines(text):
        toks = s.split()
        if len(toks) != 5 or toks[0] != "block" or toks[3] != "->":
            raise ParseError(ln, "expected: block <m> <rows> -> <target>")
        try:
            m = int(toks[1])
        except ValueError:
            raise ParseError(ln, "block size must be an integer") from None
        if m < 1:
            raise ParseError(ln, "block size must be positive")
        if m_seen is not None and m != m_seen:
            raise ParseError(ln, "mixed block sizes")
        m_seen = m
        rows = toks[2].split("/")
        pat = tuple(tuple(None if c == "." else c for c in r.split(",")) for r in rows)
        if len(pat) != m or any(len(r) != m for r in pat):
            raise ParseError(ln, f"pattern must be {m}x{m}")
        if toks[4] not in names:
            raise ParseError(ln, f"undeclared target tile {toks[4]!r}")
        if pat in table:
            raise ParseError(ln, "duplicate pattern")
        table[pat] = names[toks[4]]
    if m_seen is None:
        raise ParseError(None, "no blocks")
    try:
        return BlockRepr.from_dict(m_seen, table)
    except TilelabError as e:
        raise ParseError(None, f"invalid repr table: {e}") from None


def serialize_repr(r: BlockRepr) -> str:
    out = []
    for pat, t in r.table:
        rows = "/".join(",".join("." if c is None else c for c in row) for row in pat)
        out.append(f"block {r.m} {rows} -> {t.name}")
    return "\n".join(out) + "\n"


def parse_assembly(text: str, tas: Tas) -> Assembly:
    """Same `<x> <y> <tile-name>` lines as a path, order free, no binding required."""
    names = {t.name: t for t in tas.tileset}
    placed = {}
    for ln, s in _lines(text):
        toks = s.split()
        if len(toks) != 3:
            raise ParseError(ln, "expected: <x> <y> <tile-name>")
        try:
            pos = (int(toks[0]), int(toks[1]))
        except ValueError:
            raise ParseError(ln, "coordinates must be integers") from None
        if toks[2] not in names:
            raise ParseError(ln, f"undeclared tile {toks[2]!r}")
        if pos in placed:
            raise ParseError(ln, f"position {pos} used twice")
        placed[pos] = names[toks[2]]
    return Assembly(placed)


def serialize_assembly(asm: Assembly) -> str:
    return "".join(f"{x} {y} {t.name}\n" for (x, y), t in sorted(asm.items(), key=lambda kv: (kv[0][1], kv[0][0])))
