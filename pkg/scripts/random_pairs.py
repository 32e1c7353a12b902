"""Seeded random identities decided syntactically and cross-checked in the model."""

import argparse
import sys

from invsemi.sweep import random_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--system", choices=("a0", "b0", "both"), default="both")
    ap.add_argument("--seeds", type=int, nargs="+", default=[20240])
    ap.add_argument("--count", type=int, default=10_000)
    ap.add_argument("--bases", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=12)
    args = ap.parse_args()

    ok = True
    for seed in args.seeds:
        for system in (("a0", "b0") if args.system == "both" else (args.system,)):
            r = random_sweep(system, seed, args.count, args.bases, args.max_len)
            print(f"seed {seed}: {r.summary()}")
            for u, v, msg in r.discrepancies[:5]:
                print(f"  {u} ~ {v}: {msg}")
            ok &= r.ok
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
