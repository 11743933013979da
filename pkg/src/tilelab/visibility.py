"""Visibility of path glues from the south."""

from __future__ import annotations

from dataclasses import dataclass

from .core import TilelabError
from .paths import GlueOnPath, Path

PLUS, MINUS, VERTICAL = "plus", "minus", "vertical"


@dataclass(frozen=True)
class VisibleGlue:
    glue: GlueOnPath
    ray_origin: tuple[int, int]
    orientation: str  # plus / minus / vertical

    @property
    def index(self) -> int:
        return self.glue.index

    @property
    def sign(self) -> str:
        """plus or minus; north steps count as plus, south steps as minus."""
        if self.orientation != VERTICAL:
            return self.orientation
        return PLUS if self.glue.direction == (0, 1) else MINUS


@dataclass(frozen=True)
class VisibilitySet:
    all: tuple[VisibleGlue, ...]
    plus: tuple[VisibleGlue, ...]
    minus: tuple[VisibleGlue, ...]

    def indices(self) -> set[int]:
        return {g.index for g in self.all}

    def plus_indices(self) -> set[int]:
        return {g.index for g in self.plus}

    def minus_indices(self) -> set[int]:
        return {g.index for g in self.minus}

    # A southward ray from a vertical glue runs along its own step, so under
    # the full-embedding reading only horizontal steps are ever visible.
    @property
    def east_steps(self) -> tuple[VisibleGlue, ...]:
        return tuple(v for v in self.plus if v.orientation == PLUS)

    @property
    def west_steps(self) -> tuple[VisibleGlue, ...]:
        return tuple(v for v in self.minus if v.orientation == MINUS)


@dataclass(frozen=True)
class VLine:
    x2: int  # doubled x coordinate, odd

    def __post_init__(self):
        if self.x2 % 2 == 0:
            raise TilelabError("vertical line must sit at a half-integer x")

    @property
    def qx(self) -> int:
        return 2 * self.x2

    def left_of(self, x: int) -> bool:
        """Is lattice column x strictly left of the line?"""
        return 2 * x < self.x2

    @classmethod
    def at(cls, x: float) -> "VLine":
        return cls(int(round(2 * x)))


def _orientation(d) -> str:
    if d == (1, 0):
        return PLUS
    if d == (-1, 0):
        return MINUS
    return VERTICAL


def visible_glues(p: Path) -> VisibilitySet:
    glues = p.glues()
    lowest: dict[int, int] = {}
    for g in glues:
        x, y = g.midpoint
        if x not in lowest or y < lowest[x]:
            lowest[x] = y
    vis = []
    for g in glues:
        x, y = g.midpoint
        if lowest[x] == y:
            vis.append(VisibleGlue(g, g.midpoint, _orientation(g.direction)))
    plus = tuple(v for v in vis if v.sign == PLUS)
    minus = tuple(v for v in vis if v.sign == MINUS)
    return VisibilitySet(tuple(vis), plus, minus)


def is_glue_visible(p: Path, k: int) -> bool:
    """Is glue (k, k+1) of p visible relative to p?"""
    if not 0 <= k < len(p) - 1:
        return False
    x, y = p.glue(k).midpoint
    for g in p.glues():
        if g.index != k and g.midpoint[0] == x and g.midpoint[1] < y:
            return False
    return True


def has_visible_glue(p: Path, g: GlueOnPath) -> bool:
    """Does p carry the glue g (same index, edge and label) and is it visible?"""
    k = g.index
    if not 0 <= k < len(p) - 1:
        return False
    mine = p.glue(k)
    if mine.edge != g.edge or mine.label != g.label:
        return False
    return is_glue_visible(p, k)


def visible_glue_on_line(p: Path, l: VLine) -> VisibleGlue | None:
    best = None
    for g in p.glues():
        if g.midpoint[0] == l.qx and (best is None or g.midpoint[1] < best.midpoint[1]):
            best = g
    if best is None:
        return None
    return VisibleGlue(best, best.midpoint, _orientation(best.direction))


def same_line_glue(a: VisibleGlue | None, b: VisibleGlue | None) -> bool:
    """Same glue on the line: same position, direction and label."""
    if a is None or b is None:
        return False
    return (a.glue.midpoint, a.glue.direction, a.glue.label) == (b.glue.midpoint, b.glue.direction, b.glue.label)


@dataclass(frozen=True)
class SetupConfig:
    tileset_size: int
    m: int
    line: VLine
    min_sep: int
    max_vsep: int
    # scan at most this many visible glues outward from the line; None = all
    window: int | None = None

    def scan_window(self) -> int:
        if self.window is not None:
            return self.window
        # enough glues for one label to repeat min_sep + 1 times
        return self.tileset_size * (self.min_sep + 1) + 1


def visibility_setup(p: Path, cfg: SetupConfig) -> tuple[int, int] | None:
    """Pick i < j with equal-label, same-class visible glues on the far side of the line.

    Scans horizontal-step visible glues outward from the line in x-order and
    returns the first qualifying pair.
    """
    on_line = visible_glue_on_line(p, cfg.line)
    if on_line is None:
        return None
    sign = on_line.orientation
    vis = visible_glues(p)
    want = (1, 0) if sign == PLUS else (-1, 0)
    side = []
    for v in vis.all:
        if v.glue.direction != want:
            continue
        x = p.pos(v.index)[0]
        if sign == PLUS and not cfg.line.left_of(x):
            side.append(v)
        if sign == MINUS and cfg.line.left_of(x):
            side.append(v)
    side.sort(key=lambda v: v.ray_origin[0], reverse=(sign == MINUS))
    side = side[: cfg.scan_window()]
    for a_pos, a in enumerate(side):
        for b in side[a_pos + 1 :]:
            if a.glue.label != b.glue.label:
                continue
            i, j = a.index, b.index
            if i >= j:
                continue
            pi, pj = p.pos(i), p.pos(j)
            if abs(pi[0] - pj[0]) < cfg.min_sep or abs(pi[1] - pj[1]) > cfg.max_vsep:
                continue
            if (sign == PLUS and pj[0] <= pi[0]) or (sign == MINUS and pj[0] >= pi[0]):
                continue
            return i, j
    return None
