"""Tileset modification turning a halting tile H into the foot of an infinite column."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Assembly, GlueSide, Tas, TileType, TilelabError


class PremiseViolation(TilelabError):
    def __init__(self, msg: str, tile: str | None = None):
        super().__init__(msg)
        self.tile = tile


@dataclass(frozen=True)
class Reduction:
    tas: Tas
    premise: str  # "strength-0" or "unmatched"
    halt: TileType
    t1: TileType
    t2: TileType


def _fresh(base: str, used: set[str]) -> str:
    name = base
    k = 1
    while name in used:
        k += 1
        name = f"{base}{k}"
    return name


def modify_tileset_for_reduction(v: Tas, halt: TileType | str) -> Reduction:
    name = halt if isinstance(halt, str) else halt.name
    try:
        h = v.by_name(name)
    except KeyError:
        raise PremiseViolation(f"halt tile {name!r} is not in the tileset", None) from None
    ge = h.east
    if not ge.active:
        premise = "strength-0"
    else:
        for t in v.tileset:
            if t.west.active and t.west.label == ge.label:
                raise PremiseViolation(
                    f"east glue {ge.label!r} of {h.name} already binds the west side of {t.name}", t.name
                )
        premise = "unmatched"
    labels = {g.label for t in v.tileset for g in (t.north, t.east, t.south, t.west) if g.label}
    g_e = _fresh("gE'", labels)
    g_up = _fresh("gUp", labels | {g_e})
    names = {t.name for t in v.tileset}
    new_h = h.with_glue("E", GlueSide(g_e, 1))
    tiles = [new_h if t.id == h.id else t for t in v.tileset]
    t1 = TileType(len(tiles), _fresh("t1", names), west=GlueSide(g_e, 1), north=GlueSide(g_up, 1))
    t2 = TileType(len(tiles) + 1, _fresh("t2", names | {t1.name}), south=GlueSide(g_up, 1), north=GlueSide(g_up, 1))
    tiles += [t1, t2]
    seed = Assembly({p: (new_h if t.id == h.id else t) for p, t in v.seed.items()})
    return Reduction(Tas(tuple(tiles), seed), premise, new_h, t1, t2)


@dataclass(frozen=True)
class RectBound:
    b_m: int
    t_n: int
    s_n: int
    n: int
    halt_tile: str

    def __post_init__(self):
        if self.b_m < self.s_n:
            raise TilelabError("bounding value must be at least the space bound")


def check_rect_conditions(asm: Assembly, rb: RectBound, seed: Assembly | None = None) -> tuple[str, str]:
    """Returns (verdict, reason) with verdict in ok_accept / ok_reject / violation."""
    B, t = rb.b_m, rb.t_n
    if seed is not None:
        for x, y in seed.positions():
            if not (0 <= x < B and 0 <= y < B):
                return "violation", f"seed tile at {(x, y)} outside the {B}x{B} square"
    for x, y in asm.positions():
        if not (0 <= x < t * B and 0 <= y < B):
            return "violation", f"tile at {(x, y)} outside the {t * B}x{B} rectangle"
    b = B * (t - 1)
    if not any(b + 1 <= x <= b + B - 1 for x, _ in asm.positions()):
        return "violation", "assembly never reaches the last column band"
    right = max(x for x, _ in asm.positions())
    where = [p for p, ty in asm.items() if ty.name == rb.halt_tile]
    if not where:
        return "ok_reject", "no halting tile"
    off = [p for p in where if p[0] != right]
    if off:
        return "violation", f"halting tile off the rightmost column at {sorted(off)[0]}"
    return "ok_accept", f"halting tile on column {right}"
