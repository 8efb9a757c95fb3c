#!/usr/bin/env python3
"""Sweep simulated rank counts for one scenario and print a scaling table.

For each rank count the ghost phase is timed (summed over simulated ranks)
and the parallel efficiency against the first row is reported:
e = T_ref * G / (T * G_ref).

Example:
    python3 scripts/run_scaling.py --cmesh hex_cube --level 4 \
        --ranks 1 2 4 8 16 --algo v3
"""

import argparse
import sys

from hyghost.harness import ScenarioConfig, run_scenario, efficiency


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cmesh", default="hex_cube")
    ap.add_argument("--level", type=int, default=3)
    ap.add_argument("--extra-levels", type=int, default=0)
    ap.add_argument("--pattern", default="uniform")
    ap.add_argument("--algo", choices=("v1", "v2", "v3"), default="v3")
    ap.add_argument("--ranks", type=int, nargs="+", default=[1, 2, 4, 8])
    args = ap.parse_args(argv)

    print("ranks,leaves,ghosts,seconds,efficiency")
    ref = None
    for P in args.ranks:
        pat, _, step = args.pattern.partition(":")
        cfg = ScenarioConfig(cmesh=args.cmesh, level=args.level,
                             extra_levels=args.extra_levels, pattern=pat,
                             pattern_step=int(step) if step else 0,
                             ranks=P, algo=args.algo).validate()
        _, _, rep = run_scenario(cfg)
        g = max(rep.num_ghosts, 1)  # P=1 has no ghosts; avoid div by zero
        if ref is None:
            ref = (rep.seconds, g)
        e = efficiency(ref[0], ref[1], rep.seconds, g)
        print("%d,%d,%d,%.6f,%.3f" %
              (P, rep.num_leaves, rep.num_ghosts, rep.seconds, e))
    return 0


if __name__ == "__main__":
    sys.exit(main())
