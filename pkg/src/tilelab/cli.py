"""Command line front end.

Exit codes: 0 ok, 1 counterexample or violation, 2 usage or parse error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath

from .blocking import AllBlocked, BlockConfig, block_all, enumerate_h_successful, rect_zone
from .core import CapExceeded, TilelabError, grow
from .paths import Blocked, PumpSpec, is_pumpable, maximal_pumped_prefix
from .render import AssemblyLayer, HeightLayer, LineLayer, PathLayer, RayLayer, RenderSpec, ZoneLayer, render_svg
from .simulation import equiv_productions_bounded, equiv_terminal_shapes_bounded, gen_tn
from .textio import (
    ParseError,
    parse_assembly,
    parse_path,
    parse_repr,
    parse_tas,
    serialize_assembly,
    serialize_path,
    serialize_tas,
)
from .tm import PremiseViolation, RectBound, check_rect_conditions, modify_tileset_for_reduction
from .visibility import VLine, visible_glues

OK, VIOLATION, USAGE, CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else FsPath(path).read_text()


def _emit(args, text: str):
    if getattr(args, "out", None):
        FsPath(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _zone(spec: str | None):
    if spec is None:
        return None
    cells = frozenset()
    for part in spec.split(";"):
        try:
            x0, y0, x1, y1 = (int(v) for v in part.split(","))
        except ValueError:
            raise ParseError(None, "zone must be x0,y0,x1,y1[;x0,y0,x1,y1...]") from None
        cells |= rect_zone(x0, y0, x1, y1)
    return cells


def _block_cfg(args) -> BlockConfig:
    return BlockConfig(args.h, _zone(args.zone), VLine.at(args.line), m=args.m, min_sep=args.min_sep, max_vsep=args.max_vsep)


def cmd_simulate(args) -> int:
    tas = parse_tas(_read(args.tas))
    seq = grow(tas, steps=args.steps, rng_seed=args.rng_seed)
    _emit(args, serialize_assembly(seq.final()))
    return OK


def cmd_gen_tn(args) -> int:
    _emit(args, serialize_tas(gen_tn(args.n)))
    return OK


def cmd_paths(args) -> int:
    tas = parse_tas(_read(args.tas))
    cfg = _block_cfg(args)
    paths = enumerate_h_successful(tas, cfg, cap=args.cap)
    out = [f"# {len(paths)} h-successful paths"]
    for k, p in enumerate(paths):
        out.append(f"# path {k}")
        out.append(serialize_path(p).rstrip("\n"))
    _emit(args, "\n".join(out) + "\n")
    return OK


def cmd_visibility(args) -> int:
    tas = parse_tas(_read(args.tas))
    p = parse_path(_read(args.path), tas)
    vis = visible_glues(p)
    lines = [f"{v.index} {v.glue.label} {v.orientation} {v.ray_origin[0] / 4:g} {v.ray_origin[1] / 4:g}" for v in vis.all]
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return OK


def cmd_pump(args) -> int:
    tas = parse_tas(_read(args.tas))
    p = parse_path(_read(args.path), tas)
    spec = PumpSpec(args.i, args.j)
    res = is_pumpable(tas, p, spec)
    if isinstance(res, Blocked):
        q, _ = maximal_pumped_prefix(tas, p, spec)
        _emit(args, f"# blocked at index {res.first_conflict_index}\n" + serialize_path(q))
        return VIOLATION
    _emit(args, f"# pumpable (checked to index {res.witness_horizon})\n")
    return OK


def cmd_block(args) -> int:
    tas = parse_tas(_read(args.tas))
    res = block_all(tas, _block_cfg(args), cap=args.cap)
    if isinstance(res, AllBlocked):
        _emit(args, f"# all {len(res.paths)} paths blocked\n" + serialize_assembly(res.state.alpha))
        return OK
    txt = "".join(f"{t.pos[0]} {t.pos[1]} {t.type.name}\n" for t in res.path)
    _emit(args, f"# escape via leaf {res.leaf}\n" + txt)
    return VIOLATION


def _check(args, fn) -> int:
    sim = parse_tas(_read(args.sim))
    tgt = parse_tas(_read(args.target))
    r = parse_repr(_read(args.repr), tgt)
    v = fn(sim, tgt, r, args.max_depth)
    if v.ok:
        _emit(args, f"# ok to depth {v.depth}\n")
        return OK
    body = serialize_assembly(v.counterexample) if v.counterexample is not None else ""
    _emit(args, f"# counterexample: {v.reason}\n" + body)
    return VIOLATION


def cmd_check_shapes(args) -> int:
    return _check(args, equiv_terminal_shapes_bounded)


def cmd_check_prod(args) -> int:
    return _check(args, equiv_productions_bounded)


def cmd_reduce_tm(args) -> int:
    tas = parse_tas(_read(args.tas))
    try:
        red = modify_tileset_for_reduction(tas, args.halt)
    except PremiseViolation as e:
        print(f"premise violated: {e}", file=sys.stderr)
        return VIOLATION
    _emit(args, f"# premise {red.premise}\n" + serialize_tas(red.tas))
    return OK


def cmd_check_rect(args) -> int:
    tas = parse_tas(_read(args.tas))
    asm = parse_assembly(_read(args.assembly), tas)
    rb = RectBound(args.b, args.t, args.s, args.n, args.halt)
    verdict, reason = check_rect_conditions(asm, rb, tas.seed)
    _emit(args, f"{verdict}: {reason}\n")
    return VIOLATION if verdict == "violation" else OK


def cmd_render(args) -> int:
    tas = parse_tas(_read(args.tas))
    layers = []
    if args.zone:
        layers.append(ZoneLayer(_zone(args.zone)))
    asm = grow(tas, steps=args.steps, rng_seed=args.rng_seed).final()
    layers.append(AssemblyLayer(asm, tas.seed.positions(), labels=args.labels))
    if args.path:
        p = parse_path(_read(args.path), tas)
        layers.append(PathLayer(p))
        if args.rays:
            layers.append(RayLayer(p))
    if args.line is not None:
        layers.append(LineLayer(VLine.at(args.line)))
    if args.h is not None:
        layers.append(HeightLayer(args.h))
    _emit(args, render_svg(RenderSpec(tuple(layers), scale=args.scale)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tilelab", description="temperature-1 tile assembly toolkit")
    ap.add_argument("--rng-seed", type=int, default=0)
    ap.add_argument("--max-depth", type=int, default=40)
    ap.add_argument("--cap", type=int, default=100_000)
    sp = ap.add_subparsers(dest="cmd", required=True)

    def add(name, fn, *files):
        p = sp.add_parser(name)
        for f in files:
            p.add_argument(f)
        p.add_argument("--out")
        p.set_defaults(fn=fn)
        return p

    def blockish(p):
        p.add_argument("--h", type=int, required=True)
        p.add_argument("--zone", help="x0,y0,x1,y1 inclusive; join rectangles with ;")
        p.add_argument("--line", type=float, required=True, help="half-integer x of the vertical line")
        p.add_argument("--m", type=int, default=1)
        p.add_argument("--min-sep", type=int, default=3)
        p.add_argument("--max-vsep", type=int, default=3)

    add("simulate", cmd_simulate, "tas").add_argument("--steps", type=int, default=100)
    add("gen-tn", cmd_gen_tn).add_argument("n", type=int)
    blockish(add("paths", cmd_paths, "tas"))
    add("visibility", cmd_visibility, "tas", "path")
    p = add("pump", cmd_pump, "tas", "path")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    blockish(add("block", cmd_block, "tas"))
    add("check-shapes", cmd_check_shapes, "sim", "target", "repr")
    add("check-prod", cmd_check_prod, "sim", "target", "repr")
    add("reduce-tm", cmd_reduce_tm, "tas").add_argument("--halt", required=True)
    p = add("check-rect", cmd_check_rect, "tas", "assembly")
    for flag in ("--b", "--t", "--s", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--halt", required=True)
    p = add("render", cmd_render, "tas")
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--path")
    p.add_argument("--rays", action="store_true")
    p.add_argument("--line", type=float)
    p.add_argument("--h", type=int)
    p.add_argument("--zone")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--scale", type=int, default=20)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.fn(args)
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return CAP
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except TilelabError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
