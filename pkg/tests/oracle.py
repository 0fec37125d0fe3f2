"""Store-free reference model: a game is a pair of frozensets of games.

Python's own structural equality on nested frozensets stands in for set
equality, so nothing here shares code with the interning store.
"""

from functools import lru_cache
from itertools import chain, combinations

ZERO = (frozenset(), frozenset())
ONE = (frozenset({ZERO}), frozenset())
NEG_ONE = (frozenset(), frozenset({ZERO}))
STAR = (frozenset({ZERO}), frozenset({ZERO}))


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def tier(n):
    games = {ZERO}
    for _ in range(n):
        subsets = powerset(games)
        games = {(left, right) for left in subsets for right in subsets}
    return games


@lru_cache(maxsize=None)
def neg(g):
    left, right = g
    return (frozenset(neg(x) for x in right), frozenset(neg(x) for x in left))


@lru_cache(maxsize=None)
def add(g, h):
    (gl, gr), (hl, hr) = g, h
    return (
        frozenset([add(x, h) for x in gl] + [add(g, y) for y in hl]),
        frozenset([add(x, h) for x in gr] + [add(g, y) for y in hr]),
    )


def least_tier(g):
    """Least n <= 2 with g in tier(n), found by searching the tiers."""
    for n in range(3):
        if g in tier_cached(n):
            return n
    raise ValueError("not in an enumerable tier")


@lru_cache(maxsize=None)
def tier_cached(n):
    return frozenset(tier(n))


@lru_cache(maxsize=None)
def depth(g):
    """Nesting depth of the pair structure, computed without option maxima shortcuts."""
    left, right = g
    best = 0
    for x in left | right:
        best = max(best, depth(x) + 1)
    return best


def to_store(store, g):
    left, right = g
    return store.intern([to_store(store, x) for x in left], [to_store(store, x) for x in right])


def from_store(store, g):
    left, right = store.options(g)
    return (frozenset(from_store(store, x) for x in left), frozenset(from_store(store, x) for x in right))
