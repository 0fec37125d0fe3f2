"""Enumeration of the finite tiers and seeded sampling of deeper games."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from setgames.core import GameId, GameStore, ZERO

MAX_TIER = 2
SEED_LIMIT = 2**64


class TierTooLargeError(ValueError):
    pass


@dataclass
class Tier:
    """All games of birthday <= ``n``, in enumeration order."""

    n: int
    members: list[GameId] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.members


@dataclass(frozen=True)
class SampleSpec:
    max_birthday: int
    max_options_per_side: int
    count: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.max_birthday < 0 or self.max_options_per_side < 0:
            raise ValueError("sample bounds must be non-negative")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not 0 <= self.seed < SEED_LIMIT:
            raise ValueError("seed must be an unsigned 64-bit integer")


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator seeded through ``SeedSequence(seed)``; the only RNG used here."""
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError("seed must be an unsigned 64-bit integer")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _subsets(items: list[GameId]) -> list[tuple[GameId, ...]]:
    # binary-counter order: bit i of the counter selects items[i]
    return [
        tuple(x for i, x in enumerate(items) if mask >> i & 1)
        for mask in range(1 << len(items))
    ]


def enumerate_tier(store: GameStore, n: int) -> Tier:
    """Intern and return every game of birthday at most ``n`` (``n <= 2``).

    Each game is a pair (left subset, right subset) of the previous tier.  The
    pair counter puts the left subset in the low bits, so tier 1 comes out as
    0, 1, -1, *.
    """
    if n < 0:
        raise ValueError(f"tier index must be non-negative, got {n}")
    if n > MAX_TIER:
        raise TierTooLargeError(f"tier too large to enumerate: {n} (max {MAX_TIER})")
    members = [ZERO]
    for k in range(1, n + 1):
        subsets = _subsets(members)
        members = [store.intern(left, right) for right in subsets for left in subsets]
    return Tier(n, members)


def exact_birthday(store: GameStore, n: int) -> list[GameId]:
    """Games of birthday exactly ``n`` (tier difference)."""
    below = set(enumerate_tier(store, n - 1).members) if n > 0 else set()
    return [g for g in enumerate_tier(store, n).members if g not in below]


def sample_games(store: GameStore, spec: SampleSpec) -> list[GameId]:
    """Draw ``spec.count`` games with birthday at most ``spec.max_birthday``.

    Each node draws its left and right option counts uniformly from
    ``0..max_options_per_side`` and builds each option with one less budget.
    """
    rng = make_rng(spec.seed)
    k = spec.max_options_per_side

    def build(budget: int) -> GameId:
        if budget == 0:
            return ZERO
        n_left, n_right = (int(c) for c in rng.integers(0, k + 1, size=2))
        left = [build(budget - 1) for _ in range(n_left)]
        right = [build(budget - 1) for _ in range(n_right)]
        return store.intern(left, right)

    return [build(spec.max_birthday) for _ in range(spec.count)]
