"""Deterministic SVG drawings of assemblies, paths, curves, rays, zones and guide lines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .core import Assembly, Point
from .geometry import PolyCurve
from .paths import Path
from .visibility import VLine, visible_glues

DEFAULT_PALETTE = {
    "tile": "#d9e6f2",
    "tile_edge": "#395b7a",
    "seed": "#f2c14e",
    "path": "#c0392b",
    "curve": "#8e44ad",
    "ray": "#27ae60",
    "zone": "#eeeeee",
    "line": "#2c3e50",
    "height": "#e67e22",
}


@dataclass(frozen=True)
class AssemblyLayer:
    asm: Assembly
    seed: frozenset[Point] = frozenset()
    labels: bool = False


@dataclass(frozen=True)
class PathLayer:
    path: Path


@dataclass(frozen=True)
class CurveLayer:
    curve: PolyCurve  # quarter-unit coordinates


@dataclass(frozen=True)
class RayLayer:
    """Southward rays from the visible glue midpoints of a path."""

    path: Path
    length: int = 2


@dataclass(frozen=True)
class ZoneLayer:
    cells: frozenset[Point]


@dataclass(frozen=True)
class LineLayer:
    line: VLine


@dataclass(frozen=True)
class HeightLayer:
    h: int


Layer = Union[AssemblyLayer, PathLayer, CurveLayer, RayLayer, ZoneLayer, LineLayer, HeightLayer]


@dataclass(frozen=True)
class RenderSpec:
    layers: tuple[Layer, ...] = ()
    palette: dict = field(default_factory=lambda: dict(DEFAULT_PALETTE))
    scale: int = 20


def _cells(layer: Layer) -> Iterable[Point]:
    if isinstance(layer, AssemblyLayer):
        return layer.asm.positions()
    if isinstance(layer, (PathLayer, RayLayer)):
        return layer.path.positions()
    if isinstance(layer, ZoneLayer):
        return layer.cells
    if isinstance(layer, CurveLayer):
        # quarter units back to the enclosing cells
        return [(-((-x) // 4), -((-y) // 4)) for x, y in layer.curve.vertices] + [
            (x // 4, y // 4) for x, y in layer.curve.vertices
        ]
    return ()


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(spec: RenderSpec) -> str:
    pts = [c for layer in spec.layers for c in _cells(layer)]
    hs = [layer.h for layer in spec.layers if isinstance(layer, HeightLayer)]
    if not pts and not hs:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0" viewBox="0 0 0 0"></svg>\n'
    xs = [p[0] for p in pts] or [0]
    ys = [p[1] for p in pts] + hs
    lines_x = [layer.line.x2 / 2 for layer in spec.layers if isinstance(layer, LineLayer)]
    x0, x1 = min(xs + [int(x) for x in lines_x]) - 1, max(xs + [int(x) + 1 for x in lines_x]) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    s, pal = spec.scale, spec.palette
    w, h = (x1 - x0 + 1) * s, (y1 - y0 + 1) * s

    def X(x: float) -> str:
        return _fmt((x - x0 + 0.5) * s)

    def Y(y: float) -> str:
        return _fmt((y1 - y + 0.5) * s)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    for layer in spec.layers:
        if isinstance(layer, ZoneLayer):
            for x, y in sorted(layer.cells):
                out.append(
                    f'<rect x="{X(x - 0.5)}" y="{Y(y + 0.5)}" width="{s}" height="{s}" fill="{pal["zone"]}"/>'
                )
        elif isinstance(layer, AssemblyLayer):
            for (x, y), t in sorted(layer.asm.items()):
                fill = pal["seed"] if (x, y) in layer.seed else pal["tile"]
                out.append(
                    f'<rect x="{X(x - 0.45)}" y="{Y(y + 0.45)}" width="{_fmt(0.9 * s)}" height="{_fmt(0.9 * s)}" '
                    f'fill="{fill}" stroke="{pal["tile_edge"]}"/>'
                )
                if layer.labels:
                    out.append(
                        f'<text x="{X(x)}" y="{Y(y - 0.15)}" font-size="{_fmt(s * 0.35)}" '
                        f'text-anchor="middle">{t.name}</text>'
                    )
        elif isinstance(layer, PathLayer):
            pts_s = " ".join(f"{X(x)},{Y(y)}" for x, y in layer.path.positions())
            out.append(f'<polyline points="{pts_s}" fill="none" stroke="{pal["path"]}" stroke-width="2"/>')
        elif isinstance(layer, CurveLayer):
            pts_s = " ".join(f"{X(x / 4)},{Y(y / 4)}" for x, y in layer.curve.vertices)
            out.append(f'<polyline points="{pts_s}" fill="none" stroke="{pal["curve"]}" stroke-width="1.5"/>')
        elif isinstance(layer, RayLayer):
            for v in sorted(visible_glues(layer.path).all, key=lambda v: v.index):
                mx, my = v.ray_origin[0] / 4, v.ray_origin[1] / 4
                out.append(
                    f'<line x1="{X(mx)}" y1="{Y(my)}" x2="{X(mx)}" y2="{Y(my - layer.length)}" '
                    f'stroke="{pal["ray"]}" stroke-dasharray="3,2"/>'
                )
        elif isinstance(layer, LineLayer):
            lx = layer.line.x2 / 2
            out.append(
                f'<line x1="{X(lx)}" y1="{Y(y1 + 0.5)}" x2="{X(lx)}" y2="{Y(y0 - 0.5)}" stroke="{pal["line"]}"/>'
            )
        elif isinstance(layer, HeightLayer):
            out.append(
                f'<line x1="{X(x0 - 0.5)}" y1="{Y(layer.h)}" x2="{X(x1 + 0.5)}" y2="{Y(layer.h)}" '
                f'stroke="{pal["height"]}" stroke-dasharray="6,3"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
