import json

import pytest

from mutants import DroppedBothBranchesStore, DroppedBranchStore, SwappedNegationStore
from setgames import GameStore
from setgames.laws import (
    SUITES,
    SuiteConfig,
    VerificationReport,
    check_associativity,
    check_birthday_additivity,
    check_commutativity,
    check_neg_involution,
    check_tier_membership,
    check_zero_identity,
    least_tier,
    run_all,
    run_parallel,
    run_suite,
)


@pytest.mark.parametrize("tier, count", [(0, 1), (1, 4), (2, 256)])
def test_neg_involution_counts(store, tier, count):
    report = check_neg_involution(store, SuiteConfig(exhaustive_tier=tier))
    assert (report.checks_run, report.failures) == (count, 0)
    assert report.first_counterexample is None


@pytest.mark.parametrize("tier, count", [(0, 1), (1, 4), (2, 256)])
def test_zero_identity_counts(store, tier, count):
    report = check_zero_identity(store, SuiteConfig(exhaustive_tier=tier))
    assert (report.checks_run, report.failures) == (count, 0)


@pytest.mark.parametrize("tier, count", [(0, 1), (1, 16), (2, 65536)])
def test_commutativity_counts(store, tier, count):
    report = check_commutativity(store, SuiteConfig(exhaustive_tier=tier))
    assert (report.checks_run, report.failures) == (count, 0)


def test_birthday_additivity_counts(store):
    report = check_birthday_additivity(store, SuiteConfig())
    assert (report.checks_run, report.failures) == (65536, 0)


def test_tier_membership_counts(store):
    report = check_tier_membership(store, SuiteConfig())
    assert (report.checks_run, report.failures) == (256, 0)
    first = least_tier(store)
    assert first[store.zero()] == 0
    assert first[store.star()] == 1


@pytest.mark.parametrize("samples", [0, 17, 500])
def test_associativity_counts(store, samples):
    report = check_associativity(store, SuiteConfig(sample_triples=samples, seed=5))
    assert (report.checks_run, report.failures) == (64 + samples, 0)
    assert report.config["associativity_exhaustive_tier"] == 1


def test_associativity_tier0(store):
    report = check_associativity(store, SuiteConfig(exhaustive_tier=0, sample_triples=3))
    assert report.checks_run == 1 + 3


def test_run_all_is_deterministic():
    config = SuiteConfig(sample_triples=300, seed=11)
    a = [r.to_json() for r in run_all(GameStore(), config)]
    b = [r.to_json() for r in run_all(GameStore(), config)]
    for r in a + b:
        r.pop("elapsed_ms")
    assert a == b
    assert [r["suite"] for r in a] == list(SUITES)
    assert all(r["failures"] == 0 for r in a)


def test_run_suite_single(store):
    reports = run_suite(store, SuiteConfig(suite="zero-identity"))
    assert [r.suite for r in reports] == ["zero-identity"]


def test_run_parallel_matches_serial():
    config = SuiteConfig(sample_triples=200, seed=3)
    serial = [(r.suite, r.checks_run, r.failures) for r in run_all(GameStore(), config)]
    parallel = [(r.suite, r.checks_run, r.failures) for r in run_parallel(config, workers=2)]
    assert serial == parallel


@pytest.mark.parametrize(
    "kwargs",
    [dict(suite="nope"), dict(exhaustive_tier=3), dict(exhaustive_tier=-1), dict(sample_triples=-1), dict(seed=-1)],
)
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        SuiteConfig(**kwargs)


def test_report_json_shape(store):
    report = check_zero_identity(store, SuiteConfig(exhaustive_tier=1))
    data = json.loads(json.dumps(report.to_json()))
    assert set(data) == {"suite", "checks_run", "failures", "elapsed_ms", "config"}
    assert data["config"] == {"suite": "zero-identity", "exhaustive_tier": 1, "sample_triples": 10000, "seed": 0}


def test_report_render():
    r = VerificationReport("commutativity", checks_run=3, failures=1, first_counterexample={"g": "1"})
    text = r.render()
    assert text.startswith("FAIL commutativity")
    assert "first counterexample: g=1" in text
    assert r.to_json()["counterexample"] == {"g": "1"}


@pytest.mark.parametrize("mutant", [DroppedBranchStore, DroppedBothBranchesStore])
def test_dropped_branch_is_caught(mutant):
    store = mutant()
    zero = check_zero_identity(store, SuiteConfig())
    comm = check_commutativity(store, SuiteConfig())
    assert zero.failures > 0
    assert comm.failures > 0
    # 0 + 1 loses its only left option
    assert zero.first_counterexample == {"g": "1", "zero_plus_g": "0", "g_plus_zero": "1"}
    # failures do not stop the run
    assert zero.checks_run == 256


def test_unswapped_negation_needs_the_unit_examples():
    # the identity map is itself an involution, so only -1 = -(1) catches this slip
    report = check_neg_involution(SwappedNegationStore(), SuiteConfig())
    assert report.failures == 0
    store = SwappedNegationStore()
    assert store.negate(store.one()) != store.neg_one()
