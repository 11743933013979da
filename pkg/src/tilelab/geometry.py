"""Exact rectilinear curves over quarter-integer coordinates.

A QPoint (qx, qy) stands for (qx/4, qy/4). Tile centers are multiples of 4,
glue midpoints are 2 mod 4 along the step axis and nano-embedding
offsets are odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import TilelabError
from .paths import Path

QPoint = tuple[int, int]


def q(p) -> QPoint:
    """Lattice point -> QPoint."""
    return (4 * p[0], 4 * p[1])


@dataclass(frozen=True)
class PolyCurve:
    vertices: tuple[QPoint, ...]

    def __post_init__(self):
        vs = tuple(tuple(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise TilelabError("empty curve")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise TilelabError(f"zero-length segment at {a}")
            if a[0] != b[0] and a[1] != b[1]:
                raise TilelabError(f"segment {a}->{b} is not axis-parallel")

    @property
    def start(self) -> QPoint:
        return self.vertices[0]

    @property
    def end(self) -> QPoint:
        return self.vertices[-1]

    def segments(self) -> list[tuple[QPoint, QPoint]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> "PolyCurve":
        return PolyCurve(tuple(reversed(self.vertices)))

    def simplified(self) -> "PolyCurve":
        """Drop interior vertices lying on a straight run."""
        vs = list(self.vertices)
        out = [vs[0]]
        for k in range(1, len(vs) - 1):
            a, b, c = out[-1], vs[k], vs[k + 1]
            if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
                # collinear; keep only if the curve doubles back
                if (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) > 0:
                    continue
            out.append(b)
        if len(vs) > 1:
            out.append(vs[-1])
        return PolyCurve(tuple(out))


def segment(a: QPoint, b: QPoint) -> PolyCurve:
    return PolyCurve((a, b))


def canonical_embedding(p: Path) -> PolyCurve:
    if len(p) == 0:
        raise TilelabError("empty path")
    return PolyCurve(tuple(q(t.pos) for t in p.tiles))


def concat(curves: Sequence[PolyCurve]) -> PolyCurve:
    if not curves:
        raise TilelabError("nothing to concatenate")
    out = list(curves[0].vertices)
    for c in curves[1:]:
        if c.start != out[-1]:
            raise TilelabError(f"endpoint mismatch: {out[-1]} vs {c.start}")
        out.extend(c.vertices[1:])
    return PolyCurve(tuple(out))


def _seg_box(a, b):
    return min(a[0], b[0]), min(a[1], b[1]), max(a[0], b[0]), max(a[1], b[1])


def _seg_intersection(s, t):
    """Intersection of two axis-parallel segments as a box or None."""
    ax0, ay0, ax1, ay1 = _seg_box(*s)
    bx0, by0, bx1, by1 = _seg_box(*t)
    x0, y0, x1, y1 = max(ax0, bx0), max(ay0, by0), min(ax1, bx1), min(ay1, by1)
    if x0 > x1 or y0 > y1:
        return None
    return (x0, y0, x1, y1)


def is_simple_closed(c: PolyCurve) -> bool:
    vs = c.vertices
    if len(vs) < 5 or vs[0] != vs[-1]:
        return False
    segs = c.segments()
    n = len(segs)
    for a in range(n):
        for b in range(a + 1, n):
            box = _seg_intersection(segs[a], segs[b])
            if box is None:
                continue
            adjacent = b == a + 1 or (a == 0 and b == n - 1)
            if not adjacent:
                return False
            shared = segs[a][1] if b == a + 1 else segs[a][0]
            if box != (shared[0], shared[1], shared[0], shared[1]):
                return False
    return True


def on_curve(c: PolyCurve, p: QPoint) -> bool:
    if len(c.vertices) == 1:
        return c.vertices[0] == tuple(p)
    for a, b in c.segments():
        x0, y0, x1, y1 = _seg_box(a, b)
        if x0 <= p[0] <= x1 and y0 <= p[1] <= y1:
            return True
    return False


def _south_crossings(vertices, px: int, py: int) -> int:
    """Crossings of the southward ray from (px, py) with horizontal edges.

    Caller guarantees px differs from every vertex x-coordinate, so the ray
    never touches a vertex or runs along a vertical edge.
    """
    n = 0
    for a, b in zip(vertices, vertices[1:]):
        if a[1] == b[1] and a[1] < py:
            lo, hi = (a[0], b[0]) if a[0] < b[0] else (b[0], a[0])
            if lo < px < hi:
                n += 1
    return n


def point_in_bounded_component(c: PolyCurve, p: QPoint) -> str:
    """Even-odd test with a southward ray: 'inside', 'outside' or 'on_curve'."""
    if on_curve(c, p):
        return "on_curve"
    # scale by 8 and nudge the ray 1/32 east: it then passes strictly between
    # lattice columns of the curve, and nothing of the curve lies in between
    scaled = [(8 * x, 8 * y) for x, y in c.vertices]
    k = _south_crossings(scaled, 8 * p[0] + 1, 8 * p[1])
    return "inside" if k % 2 else "outside"


def lhs_is_bounded(c: PolyCurve) -> bool:
    """Is the component to the left of the walking direction the bounded one?"""
    a, b = c.vertices[0], c.vertices[1]
    # probe just left of the first segment's midpoint (scaled by 8)
    mx, my = 4 * (a[0] + b[0]), 4 * (a[1] + b[1])
    dx = (b[0] > a[0]) - (b[0] < a[0])
    dy = (b[1] > a[1]) - (b[1] < a[1])
    px, py = mx - 2 * dy, my + 2 * dx
    scaled = [(8 * x, 8 * y) for x, y in c.vertices]
    return _south_crossings(scaled, px + 1, py) % 2 == 1


def _rn(h):
    """Right-hand unit normal of heading h."""
    return (h[1], -h[0])


def nano_embedding(p: Path) -> PolyCurve:
    """Curve at L-infinity distance 1/4 on the right-hand side of the canonical embedding.

    Starts at the first tile's center shifted right of its output heading and
    ends the same way inside the last tile (the closing segment to the last
    center is left to the caller).
    """
    if len(p) < 2:
        raise TilelabError("nano-embedding needs at least two tiles")
    pts: list[QPoint] = []

    def heading(k):
        a, b = p.pos(k), p.pos(k + 1)
        return (b[0] - a[0], b[1] - a[1])

    c0 = q(p.pos(0))
    o = heading(0)
    r = _rn(o)
    pts.append((c0[0] + r[0], c0[1] + r[1]))
    for k in range(1, len(p) - 1):
        c = q(p.pos(k))
        h, o = heading(k - 1), heading(k)
        rh, ro = _rn(h), _rn(o)
        if o != h:
            pts.append((c[0] + rh[0] + ro[0], c[1] + rh[1] + ro[1]))
    c = q(p.pos(len(p) - 1))
    rh = _rn(heading(len(p) - 2))
    pts.append((c[0] + rh[0], c[1] + rh[1]))
    return PolyCurve(tuple(pts))


def linf_to_segment(pt: QPoint, a: QPoint, b: QPoint) -> int:
    """L-infinity distance from a point to an axis-parallel segment (QPoint units)."""
    x0, y0, x1, y1 = _seg_box(a, b)
    cx = min(max(pt[0], x0), x1)
    cy = min(max(pt[1], y0), y1)
    return max(abs(pt[0] - cx), abs(pt[1] - cy))


def linf_to_curve(pt: QPoint, c: PolyCurve) -> int:
    if len(c.vertices) == 1:
        v = c.vertices[0]
        return max(abs(pt[0] - v[0]), abs(pt[1] - v[1]))
    return min(linf_to_segment(pt, a, b) for a, b in c.segments())


def curves_intersect(c1: PolyCurve, c2: PolyCurve) -> bool:
    s1 = c1.segments() or [(c1.start, c1.start)]
    s2 = c2.segments() or [(c2.start, c2.start)]
    return any(_seg_intersection(a, b) is not None for a in s1 for b in s2)
