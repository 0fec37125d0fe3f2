"""Run every lemma suite over several seeds and write the reports as JSON.

    python scripts/verify_lemmas.py --seeds 0 1 2 --samples 10000 --out reports.json
"""

import argparse
import json
import sys

from setgames import GameStore
from setgames.laws import SuiteConfig, run_all


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seeds", type=int, nargs="+", default=[0])
    parser.add_argument("--samples", type=int, default=10_000)
    parser.add_argument("--tier", type=int, default=2)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    results = []
    for seed in args.seeds:
        store = GameStore()
        reports = run_all(store, SuiteConfig(exhaustive_tier=args.tier, sample_triples=args.samples, seed=seed))
        for r in reports:
            print(f"seed={seed} {r.render()}")
        results.append({"seed": seed, "store": store.memo_sizes(), "reports": [r.to_json() for r in reports]})

    if args.out:
        with open(args.out, "w") as f:
            json.dump(results, f, indent=2)
    failed = sum(r["failures"] for res in results for r in res["reports"])
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
