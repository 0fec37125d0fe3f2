"""Command line interface.

    setgames eval "1+*"                 {1,*|1}  birthday=2
    setgames eq "(1+*)+-1" "1+(*+-1)"   equal-as-sets: true
    setgames birthday "{1|}"            2
    setgames enumerate 1                0 / 1 / -1 / *
    setgames verify --suite all --json

Exit codes: 0 success (and, for ``eq``, equal), 1 not equal or verification
failure, 2 usage, parse or tier errors.  Each invocation uses a fresh store.
"""

from __future__ import annotations

import argparse
import json
import sys

from setgames.core import GameStore
from setgames.laws import SUITES, SuiteConfig, run_parallel, run_suite
from setgames.notation import ParseError, Printer, evaluate
from setgames.universe import TierTooLargeError, enumerate_tier


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="setgames", description="Short games under set equality.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="print the canonical form and birthday of an expression")
    p.add_argument("expr")
    p.add_argument("--no-fold", dest="fold", action="store_false", help="expand named games into braces")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eq", help="test two expressions for set equality")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("birthday", help="print the formal birthday of an expression")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list every game of birthday <= n (n <= 2)")
    p.add_argument("n", type=int)
    p.add_argument("--no-fold", dest="fold", action="store_false")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the lemma suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--tier", type=int, default=2, dest="exhaustive_tier")
    p.add_argument("--samples", type=int, default=10_000, dest="sample_triples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", type=int, nargs="?", const=0, default=None, metavar="WORKERS",
                   help="run suites in separate processes (fresh store each)")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(args, payload, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _parse_error(text: str, err: ParseError) -> int:
    print(f"parse error: {err}", file=sys.stderr)
    print(f"  {text}", file=sys.stderr)
    print("  " + " " * (err.position - 1) + "^", file=sys.stderr)
    return 2


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    store = GameStore()
    show = Printer(store)

    if args.command == "eval":
        try:
            g = evaluate(store, args.expr)
        except ParseError as err:
            return _parse_error(args.expr, err)
        form, b = show(g, args.fold), store.birthday(g)
        _emit(args, {"expr": args.expr, "game": form, "birthday": b}, f"{form}  birthday={b}")
        return 0

    if args.command == "eq":
        ids = []
        for text in (args.expr_a, args.expr_b):
            try:
                ids.append(evaluate(store, text))
            except ParseError as err:
                return _parse_error(text, err)
        equal = store.set_equal(*ids)
        payload = {
            "a": args.expr_a,
            "b": args.expr_b,
            "a_game": show(ids[0]),
            "b_game": show(ids[1]),
            "equal_as_sets": equal,
        }
        _emit(args, payload, f"equal-as-sets: {str(equal).lower()}")
        return 0 if equal else 1

    if args.command == "birthday":
        try:
            g = evaluate(store, args.expr)
        except ParseError as err:
            return _parse_error(args.expr, err)
        b = store.birthday(g)
        _emit(args, {"expr": args.expr, "birthday": b}, str(b))
        return 0

    if args.command == "enumerate":
        try:
            tier = enumerate_tier(store, args.n)
        except (TierTooLargeError, ValueError) as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        forms = [show(g, args.fold) for g in tier]
        _emit(args, forms, "\n".join(forms))
        return 0

    if args.command == "verify":
        try:
            config = SuiteConfig(args.suite, args.exhaustive_tier, args.sample_triples, args.seed)
        except ValueError as err:
            print(f"error: {err}", file=sys.stderr)
            return 2
        if args.parallel is not None:
            reports = run_parallel(config, args.parallel or None)
        else:
            reports = run_suite(store, config)
        _emit(args, [r.to_json() for r in reports], "\n".join(r.render() for r in reports))
        return 0 if all(r.ok for r in reports) else 1

    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
