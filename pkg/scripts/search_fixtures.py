"""Random search for small systems that reach each pump-or-enclose leaf.

Prints the first system found per leaf in the text tileset format, with the
path and config, so it can be frozen as a test fixture.
"""

import argparse
import random
import signal

from tilelab.blocking import BlockConfig, Encloses, enumerate_h_successful, pump_or_enclose, rect_zone
from tilelab.core import Assembly, CapExceeded, GlueSide, Tas, TileType, TilelabError
from tilelab.textio import serialize_path, serialize_tas
from tilelab.visibility import VLine


def random_tas(rng: random.Random, n_types: int, n_labels: int) -> Tas:
    labels = [f"g{k}" for k in range(n_labels)]

    def glue():
        return GlueSide(rng.choice(labels), 1) if rng.random() < 0.55 else GlueSide()

    seed_t = TileType(0, "s0", glue(), GlueSide(rng.choice(labels), 1), glue(), glue())
    tiles = [seed_t] + [TileType(k, f"t{k}", glue(), glue(), glue(), glue()) for k in range(1, n_types + 1)]
    return Tas(tuple(tiles), Assembly.single((0, 0), seed_t))


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--rng-seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=20000)
    ap.add_argument("--h", type=int, default=4)
    ap.add_argument("--types", type=int, default=5)
    args = ap.parse_args(argv)
    rng = random.Random(args.rng_seed)
    zone = rect_zone(-3, -2, 8, args.h)
    cfg = BlockConfig(args.h, zone, VLine(1), m=1, min_sep=1, max_vsep=2)
    found = {}

    def alarm(*_):
        raise TimeoutError

    signal.signal(signal.SIGALRM, alarm)
    for trial in range(args.trials):
        tas = random_tas(rng, rng.randint(3, args.types), 3)
        signal.alarm(2)
        try:
            paths = enumerate_h_successful(tas, cfg, cap=300)
            results = []
            for p in paths:
                try:
                    results.append((p, pump_or_enclose(tas, p, cfg, cap=3000)))
                except (TilelabError, CapExceeded):
                    continue
        except (CapExceeded, TimeoutError):
            continue
        finally:
            signal.alarm(0)
        for p, res in results:
            if res.leaf in found:
                continue
            found[res.leaf] = trial
            print(f"== leaf {res.leaf} trial {trial} info {res.info}")
            print(serialize_tas(tas))
            print(serialize_path(p))
            if isinstance(res, Encloses):
                print("branch", res.branch.kind, res.branch.k, [(t.pos, t.type.name) for t in res.branch.branch])
        if len(found) >= 7:
            break
    print("leaves found:", sorted(found), flush=True)


if __name__ == "__main__":
    main()
