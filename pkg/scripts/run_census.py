"""Census of small semigroups and involution semigroups, with verdicts.

    python3 scripts/run_census.py --max-order 4 --out census.json
"""

import argparse
import json
import time

from invsemi.census import run_census
from invsemi.classify import classify_census, verdict_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=4)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--order5", action="store_true", help="include the slow order-5 run (needs --cache-dir)")
    ap.add_argument("--out", default=None, help="write the full report as JSON")
    args = ap.parse_args()

    results = []
    for n in range(1, args.max_order + 1):
        t0 = time.perf_counter()
        res = run_census(n, args.jobs, args.cache_dir, allow_gated=args.order5)
        rows = classify_census(res.involution_semigroups) if n <= 4 else []
        secs = time.perf_counter() - t0
        rep = json.loads(res.report.to_json())
        rep["pruned_by_obstructions"] = res.pruned_by_obstructions
        rep["verdicts"] = verdict_counts(rows)
        rep["seconds"] = round(secs, 2)
        print(json.dumps(rep))
        results.append({"report": rep, "classes": rows})
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(results, fh, indent=1)


if __name__ == "__main__":
    main()
