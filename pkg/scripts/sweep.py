"""Exhaustive comparison of the word problem solution with the four-element models.

Every word over the first ``--bases`` letters up to ``--max-len`` is keyed by
the syntactic procedure and by its model value vector; the two partitions must
coincide, every standard form must parse, replay and evaluate correctly, and
zero witnesses must agree with the model.
"""

import argparse
import sys

from invsemi.sweep import exhaustive_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--system", choices=("a0", "b0", "both"), default="both")
    ap.add_argument("--bases", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=7)
    ap.add_argument("--no-traces", action="store_true", help="skip trace replay (faster)")
    ap.add_argument("--show", type=int, default=5, help="discrepancies to print per kind")
    args = ap.parse_args()

    ok = True
    for system in (("a0", "b0") if args.system == "both" else (args.system,)):
        r = exhaustive_sweep(system, args.bases, args.max_len, check_traces=not args.no_traces)
        print(r.summary())
        for label, items in (("split", r.split_classes), ("merged", r.merged_classes),
                             ("zero", r.zero_mismatches), ("normalization", r.normalization_failures)):
            for item in items[:args.show]:
                print(f"  {label}: {item}")
        ok &= r.ok
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
