"""Walk through the toolkit on the flipped-L system T_N.

Grows T_N, extracts the path to the top of the column, checks one pumping,
lists visible glues, self-simulates T_N inside a disjoint union, adds the
halting column east of the corner tile and writes an SVG of the result.
"""

import argparse
from pathlib import Path as FsPath

from tilelab.core import extract_path, grow
from tilelab.paths import Path, PumpSpec, is_pumpable
from tilelab.render import AssemblyLayer, PathLayer, RayLayer, RenderSpec, render_svg
from tilelab.simulation import disjoint_union, equiv_productions_bounded, gen_tn, identity_repr
from tilelab.tm import modify_tileset_for_reduction
from tilelab.visibility import visible_glues


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--rng-seed", type=int, default=0)
    ap.add_argument("--depth", type=int, default=30)
    ap.add_argument("--svg", default="tn_demo.svg")
    args = ap.parse_args(argv)
    n = args.n

    tas = gen_tn(n)
    asm = grow(tas, steps=n + 6, rng_seed=args.rng_seed).final()
    print(f"T_{n}: {len(tas.tileset)} tile types, {len(asm)} tiles after {n + 6} steps")

    full = extract_path(tas, asm, (n + 1, 5))
    p = Path(full.tiles[1:])
    print(f"path to {p.pos(len(p) - 1)}: {len(p)} tiles")
    print(f"pumping P_1..P_2: {is_pumpable(tas, p, PumpSpec(1, 2))}")
    vis = visible_glues(p)
    print(f"visible glues: {sorted(vis.indices())}")

    comps = {"A": gen_tn(max(1, n // 2)), "B": tas}
    sim, back = disjoint_union(comps, seed_of="B")
    v = equiv_productions_bounded(sim, tas, identity_repr(sim, back["B"]), args.depth)
    print(f"union simulates T_{n} to depth {v.depth}: {v.ok}")

    red = modify_tileset_for_reduction(tas, "corner")
    grown = grow(red.tas, steps=4 * n, rng_seed=args.rng_seed).final()
    east = sorted(y for (x, y) in grown.positions() if x == n + 2)
    print(f"halting column ({red.premise} premise): {len(east)} tiles at x={n + 2}")

    svg = render_svg(RenderSpec((AssemblyLayer(grown, red.tas.seed.positions()), PathLayer(p), RayLayer(p))))
    FsPath(args.svg).write_text(svg)
    print(f"wrote {args.svg}")


if __name__ == "__main__":
    main()
