"""Lemma checks over the enumerated tiers and seeded samples.

Every suite runs to completion: failures are counted, and only the first
counterexample is kept (rendered in folded brace notation).
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from setgames.core import GameId, GameStore
from setgames.notation import Printer
from setgames.universe import MAX_TIER, SEED_LIMIT, enumerate_tier, make_rng

SUITES = (
    "neg-involution",
    "zero-identity",
    "commutativity",
    "associativity",
    "birthday-additivity",
    "tier-membership",
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    exhaustive_tier: int = 2
    sample_triples: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from all, {', '.join(SUITES)}")
        if not 0 <= self.exhaustive_tier <= MAX_TIER:
            raise ValueError(f"exhaustive_tier must be in 0..{MAX_TIER}")
        if self.sample_triples < 0:
            raise ValueError("sample_triples must be non-negative")
        if not 0 <= self.seed < SEED_LIMIT:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass
class VerificationReport:
    suite: str
    checks_run: int = 0
    failures: int = 0
    first_counterexample: dict[str, Any] | None = None
    elapsed: float = 0.0
    config: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite": self.suite,
            "checks_run": self.checks_run,
            "failures": self.failures,
        }
        if self.first_counterexample is not None:
            out["counterexample"] = self.first_counterexample
        out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        out["config"] = self.config
        return out

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = (
            f"{status} {self.suite:<20} checks={self.checks_run:<7} "
            f"failures={self.failures:<5} {self.elapsed:.2f}s"
        )
        if self.first_counterexample:
            cx = ", ".join(f"{k}={v}" for k, v in self.first_counterexample.items())
            line += f"\n     first counterexample: {cx}"
        return line


class _Recorder:
    def __init__(self, store: GameStore, suite: str, config: SuiteConfig, **extra: Any):
        self.printer = Printer(store)
        self.report = VerificationReport(suite, config={**asdict(config), "suite": suite, **extra})
        self._start = time.perf_counter()

    def check(self, holds: bool, counterexample: Callable[[], dict[str, Any]]) -> None:
        self.report.checks_run += 1
        if not holds:
            self.report.failures += 1
            if self.report.first_counterexample is None:
                self.report.first_counterexample = counterexample()

    def show(self, g: GameId) -> str:
        return self.printer(g)

    def done(self) -> VerificationReport:
        self.report.elapsed = time.perf_counter() - self._start
        return self.report


def check_neg_involution(store: GameStore, config: SuiteConfig) -> VerificationReport:
    rec = _Recorder(store, "neg-involution", config)
    for g in enumerate_tier(store, config.exhaustive_tier):
        back = store.negate(store.negate(g))
        rec.check(back == g, lambda: {"g": rec.show(g), "neg_neg_g": rec.show(back)})
    return rec.done()


def check_zero_identity(store: GameStore, config: SuiteConfig) -> VerificationReport:
    rec = _Recorder(store, "zero-identity", config)
    zero = store.zero()
    for g in enumerate_tier(store, config.exhaustive_tier):
        left, right = store.sum(zero, g), store.sum(g, zero)
        rec.check(
            left == g and right == g,
            lambda: {"g": rec.show(g), "zero_plus_g": rec.show(left), "g_plus_zero": rec.show(right)},
        )
    return rec.done()


def check_commutativity(store: GameStore, config: SuiteConfig) -> VerificationReport:
    rec = _Recorder(store, "commutativity", config)
    members = enumerate_tier(store, config.exhaustive_tier).members
    for g in members:
        for h in members:
            gh, hg = store.sum(g, h), store.sum(h, g)
            rec.check(
                gh == hg,
                lambda: {"g": rec.show(g), "h": rec.show(h), "g_plus_h": rec.show(gh), "h_plus_g": rec.show(hg)},
            )
    return rec.done()


def check_associativity(store: GameStore, config: SuiteConfig) -> VerificationReport:
    """Exhaustive over triples from tier min(T, 1), then seeded triples from tier T."""
    exhaustive = min(config.exhaustive_tier, 1)
    rec = _Recorder(store, "associativity", config, associativity_exhaustive_tier=exhaustive)

    def one(g: GameId, h: GameId, k: GameId) -> None:
        lhs = store.sum(store.sum(g, h), k)
        rhs = store.sum(g, store.sum(h, k))
        rec.check(
            lhs == rhs,
            lambda: {
                "g": rec.show(g),
                "h": rec.show(h),
                "k": rec.show(k),
                "gh_k": rec.show(lhs),
                "g_hk": rec.show(rhs),
            },
        )

    small = enumerate_tier(store, exhaustive).members
    for g in small:
        for h in small:
            for k in small:
                one(g, h, k)

    if config.sample_triples:
        pool = enumerate_tier(store, config.exhaustive_tier).members
        picks = make_rng(config.seed).integers(0, len(pool), size=(config.sample_triples, 3))
        for i, j, l in picks.tolist():
            one(pool[i], pool[j], pool[l])
    return rec.done()


def check_birthday_additivity(store: GameStore, config: SuiteConfig) -> VerificationReport:
    """birthday(g + h) == birthday(g) + birthday(h).

    When b(g) + b(h) is small enough to enumerate, g + h is also looked up in
    that tier directly.
    """
    rec = _Recorder(store, "birthday-additivity", config)
    members = enumerate_tier(store, config.exhaustive_tier).members
    tiers = [set(enumerate_tier(store, n).members) for n in range(MAX_TIER + 1)]
    for g in members:
        bg = store.birthday(g)
        for h in members:
            bh = store.birthday(h)
            s = store.sum(g, h)
            bs = store.birthday(s)
            in_tier = s in tiers[bg + bh] if bg + bh <= MAX_TIER else True
            rec.check(
                bs == bg + bh and in_tier,
                lambda: {
                    "g": rec.show(g),
                    "h": rec.show(h),
                    "g_plus_h": rec.show(s),
                    "birthday_sum": bs,
                    "birthday_g_plus_birthday_h": bg + bh,
                },
            )
    return rec.done()


def least_tier(store: GameStore, max_tier: int = MAX_TIER) -> dict[GameId, int]:
    """Map each game of birthday <= ``max_tier`` to the first tier that contains it."""
    first: dict[GameId, int] = {}
    for n in range(max_tier + 1):
        for g in enumerate_tier(store, n):
            first.setdefault(g, n)
    return first


def check_tier_membership(store: GameStore, config: SuiteConfig) -> VerificationReport:
    rec = _Recorder(store, "tier-membership", config)
    first = least_tier(store, config.exhaustive_tier)
    for g, n in first.items():
        b = store.birthday(g)
        rec.check(b == n, lambda: {"g": rec.show(g), "birthday": b, "least_tier": n})
    return rec.done()


CHECKS: dict[str, Callable[[GameStore, SuiteConfig], VerificationReport]] = {
    "neg-involution": check_neg_involution,
    "zero-identity": check_zero_identity,
    "commutativity": check_commutativity,
    "associativity": check_associativity,
    "birthday-additivity": check_birthday_additivity,
    "tier-membership": check_tier_membership,
}


def run_suite(store: GameStore, config: SuiteConfig) -> list[VerificationReport]:
    if config.suite == "all":
        return run_all(store, config)
    return [CHECKS[config.suite](store, config)]


def run_all(store: GameStore, config: SuiteConfig) -> list[VerificationReport]:
    return [CHECKS[name](store, config) for name in SUITES]


def _run_isolated(name: str, config: SuiteConfig) -> VerificationReport:
    return CHECKS[name](GameStore(), config)


def run_parallel(config: SuiteConfig, workers: int | None = None) -> list[VerificationReport]:
    """Run each selected suite in its own process, each with a fresh store."""
    from concurrent.futures import ProcessPoolExecutor

    names = SUITES if config.suite == "all" else (config.suite,)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_isolated, names, [config] * len(names)))
