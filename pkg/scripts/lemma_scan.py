"""Scan the visible-glue ordering lemmas under several readings.

Prints counterexample counts for the reading used by the test suite and for
the alternatives it rejects:
  - vertical steps counted as plus/minus,
  - leftright compared on tile x instead of glue midpoints,
  - the corollary premise restricted to the left side only or to the right
    side only (the suite accepts either side).
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from lemmas import sample_systems, scan  # noqa: E402

READINGS = {
    "suite": dict(reading="horizontal", corollary_side="either", leftright_by="midpoint"),
    "vertical-steps": dict(reading="midpoint", corollary_side="left", leftright_by="midpoint"),
    "tile-x": dict(reading="horizontal", corollary_side="left", leftright_by="tile"),
    "corollary-left": dict(reading="horizontal", corollary_side="left", leftright_by="midpoint"),
    "corollary-right": dict(reading="horizontal", corollary_side="right", leftright_by="midpoint"),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--rng-seed", type=int, default=2024)
    ap.add_argument("--systems", type=int, default=25)
    ap.add_argument("--max-len", type=int, default=14)
    ap.add_argument("--min-paths", type=int, default=30)
    ap.add_argument("--max-paths", type=int, default=60_000)
    args = ap.parse_args(argv)
    systems, tries = sample_systems(args.rng_seed, args.systems, args.max_len, args.min_paths, args.max_paths)
    print(f"{len(systems)} systems kept out of {tries} sampled", flush=True)
    for name, kw in READINGS.items():
        t0 = time.time()
        rep = scan(systems, args.max_len, **kw)
        counts = {k: len(v) for k, v in rep.counterexamples.items()}
        print(f"{name:16s} paths={rep.paths} pairs={rep.checked_pairs} counterexamples={counts} ({time.time() - t0:.1f}s)")
        for k, v in rep.counterexamples.items():
            if v:
                p, i, j = v[0]
                print(f"    {k}: i={i} j={j} {p}")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
