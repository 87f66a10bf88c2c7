import pytest

from divbounds.prob import new_distribution, sample_stress_pair
from divbounds.verify import (
    Check,
    SuiteReport,
    grand_chain_checks,
    grand_chain_suite,
    identity_checks,
    identity_suite,
    mean_chain_checks,
    mean_chain_suite,
    ratio_supremum_suite,
    run_suite,
    trial_pair,
)


def test_check_semantics():
    assert Check("x", 1.0, 1.0 - 1e-13).ok
    assert not Check("x", 1.0, 1.0 - 1e-11).ok
    assert Check("x", 1.0, 1.0 + 5e-15, 1e-14, exact=True).ok
    assert not Check("x", 1.0, 1.0 + 5e-14, 1e-14, exact=True).ok
    assert not Check("x", float("nan"), 1.0).ok


@pytest.mark.parametrize("checks", [mean_chain_checks, grand_chain_checks, identity_checks])
def test_diagonal_pair_passes(checks):
    P = new_distribution([0.1, 0.2, 0.7])
    assert all(c.ok for c in checks(P, P))


@pytest.mark.parametrize("checks", [mean_chain_checks, grand_chain_checks, identity_checks])
def test_stress_pair(checks):
    P, Q = sample_stress_pair(8, 123, 1e3)
    assert all(c.ok for c in checks(P, Q))


def test_trial_pairs_are_order_independent():
    a = [trial_pair(5, i, (2, 20)) for i in range(20)]
    b = [trial_pair(5, i, (2, 20)) for i in reversed(range(20))][::-1]
    assert a == b
    assert trial_pair(5, 0, (2, 20)) != trial_pair(6, 0, (2, 20))


@pytest.mark.parametrize("suite", [mean_chain_suite, grand_chain_suite])
def test_split_runs_merge_to_full_run(suite):
    full = suite(400, (2, 20), 3, corrupt=True)
    first = suite(150, (2, 20), 3, corrupt=True)
    second = suite(250, (2, 20), 3, corrupt=True, first_trial=150)
    for merged in (first.merge(second), second.merge(first)):
        assert merged.trials == full.trials
        assert merged.failures == full.failures
        assert merged.min_slack == full.min_slack


def test_merge_associative():
    parts = [mean_chain_suite(50, seed=1, first_trial=50 * k) for k in range(3)]
    left = parts[0].merge(parts[1]).merge(parts[2])
    right = parts[0].merge(parts[1].merge(parts[2]))
    assert left == right


def test_merge_rejects_other_suite():
    with pytest.raises(ValueError):
        SuiteReport("a", 1).merge(SuiteReport("b", 1))


def test_suites_deterministic():
    assert grand_chain_suite(200, seed=9) == grand_chain_suite(200, seed=9)


def test_suites_pass_small():
    for rep in run_suite("all", trials=500, seed=11):
        assert rep.passed, (rep.suite_name, rep.failures[:3])
        if rep.suite_name != "ratio-sup":
            assert all(v >= -1e-12 for v in rep.min_slack.values())


@pytest.mark.parametrize(
    "run",
    [
        lambda: mean_chain_suite(200, seed=1, corrupt=True),
        lambda: grand_chain_suite(200, seed=1, corrupt=True),
        lambda: identity_suite(200, seed=1, corrupt=True),
        lambda: ratio_supremum_suite(corrupt=True),
    ],
)
def test_negative_controls(run):
    rep = run()
    assert not rep.passed and len(rep.failures) >= 1


def test_grand_chain_claim_failures_are_tagged():
    rep = grand_chain_suite(100, seed=2, corrupt=True)
    assert rep.claim_failures
    assert all("M_N2N1" in f.link for f in rep.claim_failures)


def test_ratio_suite_observed():
    rep = ratio_supremum_suite()
    assert rep.passed
    betas = [v for k, v in rep.observed.items() if k.endswith(": beta")]
    assert betas == pytest.approx([8.0, 1 / 3, 3 / 4, 4.0], abs=1e-6)


@pytest.mark.parametrize("kwargs", [dict(trials=0), dict(trials=5, n_range=(1, 4)), dict(trials=5, n_range=(5, 4))])
def test_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        mean_chain_suite(**kwargs)


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nope")
