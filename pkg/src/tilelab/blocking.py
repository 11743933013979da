"""h-successful paths, enclosing branches, the pump-or-enclose decision tree and the all-paths blocker."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Callable, Iterable, Sequence

from .core import Assembly, CapExceeded, Point, Tas, TilelabError, binds, frontier, neighbors, sub
from .geometry import PolyCurve, is_simple_closed, q as qpt
from .paths import (
    Path,
    PumpSpec,
    Pumpable,
    Tile,
    first_difference,
    interacts,
    is_producible_path,
    is_pumpable,
    left_priority,
    most_priority,
    pumping_sequence,
    right_priority,
    turn_between,
)
from .visibility import (
    PLUS,
    SetupConfig,
    VLine,
    VisibleGlue,
    has_visible_glue,
    same_line_glue,
    visibility_setup,
    visible_glue_on_line,
)


@dataclass(frozen=True)
class BlockConfig:
    h: int
    zone: frozenset[Point] | None
    line: VLine
    m: int = 1
    min_sep: int = 3
    max_vsep: int = 3
    window: int | None = None

    def __post_init__(self):
        if self.h <= 0:
            raise TilelabError("h must be positive")
        if self.zone is not None:
            object.__setattr__(self, "zone", frozenset(self.zone))

    @classmethod
    def full_scale(cls, tileset_size: int, m: int, zone: Iterable[Point] | None) -> "BlockConfig":
        # h = 10m, line at |U|(3m+1)+m+1.5, separations 3m
        x2 = 2 * (tileset_size * (3 * m + 1) + m + 1) + 1
        return cls(10 * m, None if zone is None else frozenset(zone), VLine(x2), m, 3 * m, 3 * m)

    def in_zone(self, p: Point) -> bool:
        return self.zone is None or p in self.zone

    def setup(self, tileset_size: int) -> SetupConfig:
        return SetupConfig(tileset_size, self.m, self.line, self.min_sep, self.max_vsep, self.window)


def rect_zone(x0: int, y0: int, x1: int, y1: int) -> frozenset[Point]:
    """Inclusive rectangle of lattice points."""
    return frozenset((x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1))


def l_zone(x0: int, x1: int, y0: int, y1: int, col0: int, top: int) -> frozenset[Point]:
    """Horizontal slab [x0,x1]x[y0,y1] plus vertical slab [col0,x1]x[y0,top]."""
    return rect_zone(x0, y0, x1, y1) | rect_zone(col0, y0, x1, top)


# ---------------------------------------------------------------------------
# h-successful paths


def is_h_successful(p: Path | Sequence[Tile], cfg: BlockConfig, tas: Tas | None = None) -> bool:
    tiles = p.tiles if isinstance(p, Path) else tuple(p)
    if not tiles:
        return False
    if tas is not None and not is_producible_path(tas, tiles):
        return False
    if any(not cfg.in_zone(t.pos) for t in tiles):
        return False
    at_h = [k for k, t in enumerate(tiles) if t.pos[1] == cfg.h]
    return at_h == [len(tiles) - 1] and all(t.pos[1] < cfg.h for t in tiles[:-1])


def is_nowhere_h_successful(p: Path | Sequence[Tile], cfg: BlockConfig) -> bool:
    tiles = p.tiles if isinstance(p, Path) else tuple(p)
    return all(t.pos[1] != cfg.h for t in tiles)


class _Counter:
    def __init__(self, cap: int):
        self.cap = cap
        self.n = 0

    def bump(self):
        self.n += 1
        if self.n > self.cap:
            raise CapExceeded(f"more than {self.cap} h-successful paths")


def _complete(
    tas: Tas,
    cfg: BlockConfig,
    base: list[Tile],
    occupied: set[Point],
    first: Iterable[Tile],
    guards: Sequence[tuple[int, int]],
    out: list[tuple[Tile, ...]],
    counter: _Counter,
):
    """DFS every h-successful completion of base + x + ... for x in `first`.

    `guards` are glue midpoints that must stay visible: any new glue directly
    below one of them prunes the branch.
    """
    path = list(base)
    guard_x: dict[int, int] = {}
    for gx, gy in guards:
        guard_x[gx] = min(gy, guard_x.get(gx, gy))

    def hides(a: Tile, b: Tile) -> bool:
        d = sub(b.pos, a.pos)
        mx, my = 4 * a.pos[0] + 2 * d[0], 4 * a.pos[1] + 2 * d[1]
        return mx in guard_x and my < guard_x[mx]

    def rec(t: Tile):
        prev = path[-1]
        if hides(prev, t):
            return
        path.append(t)
        occupied.add(t.pos)
        try:
            if t.pos[1] == cfg.h:
                out.append(tuple(path))
                counter.bump()
                return
            for side, q in neighbors(t.pos):
                if q in occupied or not cfg.in_zone(q) or q[1] > cfg.h:
                    continue
                for u in tas.tileset:
                    if binds(t.type, side, u):
                        rec(Tile(q, u))
        finally:
            path.pop()
            occupied.discard(t.pos)

    for x in first:
        if x.pos in occupied or not cfg.in_zone(x.pos) or x.pos[1] > cfg.h:
            continue
        if not path:
            # starting a fresh path next to the seed
            path.append(x)
            occupied.add(x.pos)
            try:
                if x.pos[1] == cfg.h:
                    out.append(tuple(path))
                    counter.bump()
                else:
                    for side, q in neighbors(x.pos):
                        if q in occupied or not cfg.in_zone(q) or q[1] > cfg.h:
                            continue
                        for u in tas.tileset:
                            if binds(x.type, side, u):
                                rec(Tile(q, u))
            finally:
                path.pop()
                occupied.discard(x.pos)
        else:
            rec(x)


def start_tiles(tas: Tas) -> list[Tile]:
    seen = set()
    out = []
    for p, st in sorted(tas.seed.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        for side, q in neighbors(p):
            if q in tas.seed:
                continue
            for u in tas.tileset:
                if binds(st, side, u) and (q, u.id) not in seen:
                    seen.add((q, u.id))
                    out.append(Tile(q, u))
    return out


def enumerate_h_successful(tas: Tas, cfg: BlockConfig, cap: int = 100_000) -> list[Path]:
    out: list[tuple[Tile, ...]] = []
    _complete(tas, cfg, [], set(tas.seed.positions()), start_tiles(tas), (), out, _Counter(cap))
    return [Path(t) for t in out]


# ---------------------------------------------------------------------------
# enclosing branches and the decision tree


@dataclass(frozen=True)
class EnclosingBranch:
    k: int
    branch: tuple[Tile, ...]
    kind: str  # hits_prefix / below_line

    def combined(self, p: Path) -> Path:
        return Path(p.tiles[: self.k + 1] + self.branch[:-1])


@dataclass(frozen=True)
class EscapesZone:
    path: tuple[Tile, ...]
    leaf: str
    leaves_zone: bool
    info: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Encloses:
    branch: EnclosingBranch
    leaf: str
    info: dict = field(default_factory=dict, compare=False)


def _line_glue(p: Path | Sequence[Tile], line: VLine) -> VisibleGlue | None:
    path = p if isinstance(p, Path) else Path(tuple(p))
    return visible_glue_on_line(path, line)


def _branch_set(
    tas: Tas,
    cfg: BlockConfig,
    ref: Sequence[Tile],
    d_lo: int,
    d_hi: int,
    side: str,
    guards: Sequence[tuple[int, int]],
    accept: Callable[[Path], bool],
    cap: int,
) -> list[Path]:
    """h-successful paths that follow ref up to index d-1 and turn `side` at index d."""
    found: list[tuple[Tile, ...]] = []
    counter = _Counter(cap)
    seed_pos = set(tas.seed.positions())
    for d in range(max(d_lo, 2), d_hi + 1):
        base = list(ref[:d])
        if any(not cfg.in_zone(t.pos) or t.pos[1] >= cfg.h for t in base):
            break
        occupied = seed_pos | {t.pos for t in base}
        here, prev = base[-1], base[-2]
        first = []
        for s, qq in neighbors(here.pos):
            if qq == ref[d].pos or qq == prev.pos:
                continue
            if turn_between(prev.pos, here.pos, ref[d].pos, qq) != side:
                continue
            for u in tas.tileset:
                if binds(here.type, s, u):
                    first.append(Tile(qq, u))
        _complete(tas, cfg, base, occupied, first, guards, found, counter)
    seen = set()
    out = []
    for t in found:
        w = Path(t)
        if w.key() in seen:
            continue
        seen.add(w.key())
        if accept(w):
            out.append(w)
    return out


def _leaves(tiles: Iterable[Tile], cfg: BlockConfig) -> bool:
    return any(not cfg.in_zone(t.pos) for t in tiles)


def pump_or_enclose(tas: Tas, p: Path, cfg: BlockConfig, cap: int = 100_000) -> EscapesZone | Encloses:
    """Decision tree P1-P9: either exhibit an escaping path or an enclosing branch for p."""
    setup = visibility_setup(p, cfg.setup(len(tas.tileset)))
    if setup is None:
        raise TilelabError("visibility setup found no (i, j) pair; configuration too small")
    i, j = setup
    lg = visible_glue_on_line(p, cfg.line)
    side = "right" if lg.orientation == PLUS else "left"
    info = {"i": i, "j": j, "side": side}
    spec = PumpSpec(i, j)
    res = is_pumpable(tas, p, spec)

    # P1: the pumping never stops
    if isinstance(res, Pumpable):
        n = res.witness_horizon
        seq = pumping_sequence(p, spec, n)
        if cfg.zone is not None:
            # infinite and producible, so it must leave a finite zone
            while not _leaves(seq, cfg):
                n += j - i
                seq = pumping_sequence(p, spec, n)
        return EscapesZone(tuple(seq), "P1", _leaves(seq, cfg), info)

    nq = res.first_conflict_index
    qbar = pumping_sequence(p, spec, nq + 1)
    Q = qbar[:nq]
    info["|Q|"] = nq

    # P2: the pumped prefix reaches height h
    for k, t in enumerate(Q):
        if t.pos[1] >= cfg.h:
            return EscapesZone(tuple(Q[: k + 1]), "P2", _leaves(Q[: k + 1], cfg), info)

    # P3: the first rejected tile lands on the seed or on P_{0..j}
    blocked_j = set(tas.seed.positions()) | set(p.positions()[: j + 1])
    info["P3"] = qbar[nq].pos in blocked_j

    # P4: right (left) turning h-successful branches off Q after j
    gj = p.glue(j)
    guards = (gj.midpoint, lg.glue.midpoint)

    def in_r(w: Path) -> bool:
        return has_visible_glue(w, gj) and same_line_glue(_line_glue(w, cfg.line), lg)

    r_set = _branch_set(tas, cfg, qbar, j + 2, nq, side, guards, in_r, cap)
    info["|R|"] = len(r_set)
    if not r_set:
        d = tuple(qbar[j + 1 : nq + 1])
        kind = "hits_prefix" if qbar[nq].pos in blocked_j else "below_line"
        return Encloses(EnclosingBranch(j, d, kind), "P4", info)

    # P5: the most right (left) priority member of R
    best = most_priority(r_set, side)
    r = first_difference(best.tiles, qbar) - 1
    v_back = sub(p.pos(i), p.pos(j))
    tail = list(Q[j + 1 : r + 1]) + list(best.tiles[r + 1 :])
    T = [t.shift(v_back) for t in tail]
    blocked_i = set(tas.seed.positions()) | set(p.positions()[: i + 1])
    info["r"] = r

    # P6: the back-translated branch grows completely
    if not any(t.pos in blocked_i for t in T):
        full = tuple(p.tiles[: i + 1]) + tuple(T)
        return EscapesZone(full, "P6", _leaves(T, cfg), info)

    # P7: cut at the first clash with seed + P_{0..i} or first glue on the line below P's
    lq, ly = lg.glue.midpoint
    cut, kind = None, None
    prev = p.tiles[i]
    for k, t in enumerate(T):
        if t.pos in blocked_i:
            cut, kind = k, "hits_prefix"
            break
        mx, my = prev.pos[0] + t.pos[0], prev.pos[1] + t.pos[1]
        if 2 * mx == lq and 2 * my < ly:
            cut, kind = k, "below_line"
            break
        prev = t
    d7 = tuple(T[: cut + 1])
    eb7 = EnclosingBranch(i, d7, kind)

    # P8: h-successful paths turning right (left) off the translated branch
    gi = p.glue(i)
    ref = list(p.tiles[: i + 1]) + list(d7)

    def in_s(w: Path) -> bool:
        return has_visible_glue(w, gi) and same_line_glue(_line_glue(w, cfg.line), lg)

    s_set = _branch_set(tas, cfg, ref, i + 2, i + 1 + cut, side, (gi.midpoint, lg.glue.midpoint), in_s, cap)
    info["|S|"] = len(s_set)
    if not s_set:
        return Encloses(eb7, "P7", info)

    # P9: push the chosen restart forward by vec(P_i P_j)
    w = most_priority(s_set, side)
    dpos = first_difference(w.tiles, ref)
    v_fwd = sub(p.pos(j), p.pos(i))
    X = [t.shift(v_fwd) for t in w.tiles[i + 1 : dpos]]
    S = [t.shift(v_fwd) for t in w.tiles[dpos:]]
    base = list(p.tiles[: j + 1]) + X
    if not is_producible_path(tas, base):
        raise TilelabError("P9: forward-translated prefix is not assemblable")
    occupied = set(tas.seed.positions()) | {t.pos for t in base}
    s = 0
    cur = list(base)
    stop_kind = None
    for t in S:
        if t.pos in occupied:
            stop_kind = "hits_prefix"
            break
        a = cur[-1]
        mx, my = a.pos[0] + t.pos[0], a.pos[1] + t.pos[1]
        if 2 * mx == lq and 2 * my < ly:
            stop_kind = "below_line"
            break
        cur.append(t)
        occupied.add(t.pos)
        s += 1
    info["s"] = s
    if s == len(S):
        return EscapesZone(tuple(cur), "P9", _leaves(S, cfg), info)
    d9 = tuple(X + S[: s + 1])
    return Encloses(EnclosingBranch(j, d9, stop_kind), "P9", info)


# ---------------------------------------------------------------------------
# verifiers for pump_or_enclose results


def check_enclosing_branch(tas: Tas, p: Path, cfg: BlockConfig, eb: EnclosingBranch) -> list[str]:
    """Problems with eb as an enclosing branch for p (empty list = valid)."""
    bad = []
    k, d = eb.k, eb.branch
    if not d:
        return ["empty branch"]
    try:
        comb = eb.combined(p)
    except TilelabError:
        return ["P_{0..k} D_{0..|D|-2} is not a path"]
    if not is_producible_path(tas, comb):
        bad.append("combined path not producible")
    if k + 1 >= len(p) or d[0].pos != p.pos(k + 1):
        bad.append("D_0 not at pos(P_{k+1})")
    elif not interacts(p.tiles[k], d[0]) or comb.glue(k).label != p.glue(k).label:
        bad.append("glue (P_k, D_0) differs from glue (k, k+1)")
    if len(comb) > k + 1 and not has_visible_glue(comb, p.glue(k)):
        bad.append("glue (k, k+1) not visible relative to the combined path")
    lg = visible_glue_on_line(p, cfg.line)
    if lg is None or lg.index + 1 > k:
        bad.append("P_{0..k} does not contain P's visible glue on the line")
    last = d[-1]
    prev = d[-2] if len(d) > 1 else p.tiles[k]
    if eb.kind == "hits_prefix":
        if last.pos not in tas.seed and last.pos not in set(p.positions()[: k + 1]):
            bad.append("last tile of D misses seed + P_{0..k}")
    elif eb.kind == "below_line":
        mx, my = 2 * (prev.pos[0] + last.pos[0]), 2 * (prev.pos[1] + last.pos[1])
        ys = [g.midpoint[1] for g in p.glues() if g.midpoint[0] == cfg.line.qx]
        if mx != cfg.line.qx or not ys or my >= min(ys):
            bad.append("last glue of D not on the line strictly below P's crossings")
    else:
        bad.append(f"unknown kind {eb.kind!r}")
    return bad


def check_combined_path(tas: Tas, p: Path, cfg: BlockConfig, eb: EnclosingBranch) -> list[str]:
    bad = []
    comb = eb.combined(p)
    if not is_producible_path(tas, comb):
        bad.append("combined path not producible")
    if not is_nowhere_h_successful(comb, cfg):
        bad.append("combined path reaches height h")
    if not same_line_glue(visible_glue_on_line(comb, cfg.line), visible_glue_on_line(p, cfg.line)):
        bad.append("combined path has a different visible glue on the line")
    return bad


def branch_turn_violations(
    tas: Tas, p: Path, cfg: BlockConfig, eb: EnclosingBranch, side: str, cap: int = 100_000
) -> list[Path]:
    """h-successful right (left) turns off the branch that keep glue k visible and P's line glue."""
    k, d = eb.k, eb.branch
    ref = list(p.tiles[: k + 1]) + list(d)
    gk = p.glue(k)
    lg = visible_glue_on_line(p, cfg.line)

    def violates(w: Path) -> bool:
        if not has_visible_glue(w, gk):
            return False
        wl = visible_glue_on_line(w, cfg.line)
        lower = wl is not None and wl.glue.midpoint[1] < lg.glue.midpoint[1]
        return not lower

    return _branch_set(tas, cfg, ref, k + 2, k + len(d), side, (), violates, cap)


def verify_enclosure(p: Path, eb: EnclosingBranch, tas: Tas | None = None, cfg: BlockConfig | None = None) -> bool:
    """Does the branch assembly conflict with p (same position, different type)?

    The conflict is only guaranteed when the seed lies strictly below height h:
    then the enclosed region is below h and p has to cross the branch.
    """
    comb = eb.combined(p)
    asm = comb.assembly()
    direct = any(t.pos in asm and asm[t.pos] != t.type for t in p.tiles)
    if tas is not None and eb.kind == "hits_prefix":
        c = enclosure_curve(tas, p, eb)
        if c is not None and not is_simple_closed(c):
            raise TilelabError("enclosure curve is not simple; implementation invariant broken")
    return direct


def enclosure_curve(tas: Tas, p: Path, eb: EnclosingBranch) -> PolyCurve | None:
    """Closed grid curve through P_{a..k} D, or through the seed when D ends in it."""
    k, d = eb.k, eb.branch
    last = d[-1].pos
    pts = p.positions()[: k + 1]
    route = [t.pos for t in d]
    if last in pts:
        a = pts.index(last)
        cyc = pts[a:] + route
    elif last in tas.seed:
        # walk inside the seed from D's last tile back to a seed tile next to P_0
        p0 = pts[0]
        goals = {qq for _, qq in neighbors(p0) if qq in tas.seed}
        prev = {last: None}
        todo = [last]
        hit = None
        while todo:
            nxt = []
            for u in todo:
                if u in goals:
                    hit = u
                    break
                for _, w in neighbors(u):
                    if w in tas.seed and w not in prev:
                        prev[w] = u
                        nxt.append(w)
            if hit is not None:
                break
            todo = nxt
        if hit is None:
            return None
        back = []
        u = hit
        while u is not None:
            back.append(u)
            u = prev[u]
        # closed: hit -> P_0 .. P_k -> D .. last -> (seed walk) -> hit
        cyc = [hit] + pts + route + list(reversed(back))[1:]
    else:
        return None
    verts = [qpt(x) for x in cyc]
    if verts[0] != verts[-1]:
        verts.append(verts[0])
    try:
        return PolyCurve(tuple(verts)).simplified()
    except TilelabError:
        return None


# ---------------------------------------------------------------------------
# path order and the all-paths blocker


def path_order_cmp(p: Path, q: Path, cfg: BlockConfig) -> int:
    """-1 if p comes before q in the path order, 1 if after, 0 if equal."""
    if p.key() == q.key():
        return 0
    gp = visible_glue_on_line(p, cfg.line)
    gq = visible_glue_on_line(q, cfg.line)
    if gp is None or gq is None:
        if gp is None and gq is None:
            return -1 if p.key() < q.key() else 1
        return 1 if gp is None else -1
    yp, yq = gp.glue.midpoint[1], gq.glue.midpoint[1]
    if yp != yq:
        return -1 if yp > yq else 1
    sp, sq = gp.orientation, gq.orientation
    if sp != sq:
        return -1 if sp == PLUS else 1
    a, b = p.tiles[gp.index :], q.tiles[gq.index :]
    if a != b:
        pick = right_priority if sp == PLUS else left_priority
        win = pick(a, b)
        return -1 if win is b else 1
    if p.pos(0) == q.pos(0) and len(p) > 1 and len(q) > 1 and p.pos(1) == q.pos(1):
        return -1 if right_priority(p, q) is p else 1
    return -1 if p.key() < q.key() else 1


def sort_by_path_order(paths: Sequence[Path], cfg: BlockConfig) -> list[Path]:
    return sorted(paths, key=cmp_to_key(lambda a, b: path_order_cmp(a, b, cfg)))


@dataclass(frozen=True)
class BranchRecord:
    path: Path
    result: Encloses
    prefix: tuple[Tile, ...]  # F^n: what actually grew


@dataclass(frozen=True)
class BlockerState:
    alpha: Assembly
    branches: tuple[BranchRecord, ...]
    order_index: int


@dataclass(frozen=True)
class AllBlocked:
    state: BlockerState
    paths: tuple[Path, ...]


def block_all(tas: Tas, cfg: BlockConfig, cap: int = 100_000) -> AllBlocked | EscapesZone:
    paths = sort_by_path_order(enumerate_h_successful(tas, cfg, cap), cfg)
    alpha = dict(tas.seed.items())
    records = []
    for n, pth in enumerate(paths):
        res = pump_or_enclose(tas, pth, cfg, cap)
        if isinstance(res, EscapesZone):
            res.info["order_index"] = n
            return res
        e = res.branch.combined(pth).tiles
        grown = []
        for t in e:
            if t.pos in alpha and alpha[t.pos] != t.type:
                break
            grown.append(t)
        for t in grown:
            alpha.setdefault(t.pos, t.type)
        records.append(BranchRecord(pth, res, tuple(grown)))
    state = BlockerState(Assembly(alpha), tuple(records), len(paths) - 1)
    return AllBlocked(state, tuple(paths))


def terminal_extension_in_zone(tas: Tas, asm: Assembly, zone, max_steps: int = 100_000) -> tuple[Assembly, bool]:
    """Grow deterministically, attaching only inside `zone`, until nothing attaches there."""
    placed = dict(asm.items())
    zone = frozenset(zone)
    for _ in range(max_steps):
        fr = [c for c in frontier(tas, Assembly(placed)) if c[0] in zone]
        if not fr:
            return Assembly(placed), True
        pos, t = fr[0]
        placed[pos] = t
    return Assembly(placed), False


def conflicts(asm: Assembly, p: Path) -> bool:
    return any(t.pos in asm and asm[t.pos] != t.type for t in p.tiles)


def manhattan_radius(tas: Tas, depth: int, cap: int = 200_000) -> int:
    """Largest Manhattan distance from the seed over depth-bounded final assemblies."""
    from .simulation import bounded_productions

    _, last = bounded_productions(tas, depth, cap)
    seed = list(tas.seed.positions())
    best = 0
    for a in last:
        for x, y in a.positions():
            best = max(best, min(abs(x - sx) + abs(y - sy) for sx, sy in seed))
    return best
