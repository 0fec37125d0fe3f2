"""Check the lemmas on sampled games beyond the enumerable tiers.

Games are drawn with ``sample_games``; pairs and triples are formed from
consecutive draws.  Prints one line per lemma with the number of checks and
failures, and the largest birthday seen.
"""

import argparse
import sys
import time

from setgames import GameStore, SampleSpec, evaluate, sample_games
from setgames.notation import Printer


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-birthday", type=int, default=4)
    parser.add_argument("--max-options", type=int, default=2)
    parser.add_argument("--count", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    store = GameStore()
    start = time.perf_counter()
    games = sample_games(store, SampleSpec(args.max_birthday, args.max_options, args.count, args.seed))
    zero = store.zero()
    show = Printer(store)
    checks = {
        "neg-involution": [store.negate(store.negate(g)) == g for g in games],
        "zero-identity": [store.sum(zero, g) == g == store.sum(g, zero) for g in games],
        "commutativity": [store.sum(g, h) == store.sum(h, g) for g, h in zip(games, games[1:])],
        "birthday-additivity": [
            store.birthday(store.sum(g, h)) == store.birthday(g) + store.birthday(h)
            for g, h in zip(games, games[1:])
        ],
        "associativity": [
            store.sum(store.sum(g, h), k) == store.sum(g, store.sum(h, k))
            for g, h, k in zip(games, games[1:], games[2:])
        ],
        "round-trip": [evaluate(store, show(g)) == g for g in games],
    }
    for name, results in checks.items():
        print(f"{name:<20} checks={len(results):<6} failures={results.count(False)}")
    deepest = max(store.birthday(store.sum(g, h)) for g, h in zip(games, games[1:]))
    print(f"largest pair-sum birthday {deepest}; {store.memo_sizes()}; {time.perf_counter() - start:.1f}s")
    return 1 if any(False in r for r in checks.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
