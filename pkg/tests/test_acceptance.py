"""End-to-end behavioural checks at experiment scale.

Everything here except the generalized-mean suite is marked slow; run the fast
suite with ``pytest -m "not slow"``.
"""

import math

import numpy as np
import pytest

from pmean_bandits.algorithms import replay_mismatches
from pmean_bandits.bounds import explicit_nash_bound
from pmean_bandits.core import BanditInstance
from pmean_bandits.distributions import FamilyTag, InstanceFamily, gen_instance
from pmean_bandits.harness import (
    Algorithm,
    ExperimentConfig,
    good_event_rate,
    instance_stream,
    resolve_period,
    run_experiment,
    run_replications,
)
from pmean_bandits.regret import (
    Estimator,
    RegretParams,
    p_mean,
    p_mean_regret_cross_run,
    p_mean_regret_per_run,
)

P_ORDER = (-2.0, -1.0, -0.5, -1e-6, 0.0, 1e-6, 0.5, 1.0)


def test_generalized_mean_suite():
    """Monotone in p and matching the classical means on random vectors."""
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        n = int(rng.integers(1, 101))
        values = 1.0 - rng.random(n)  # (0, 1]
        means = [p_mean(values, p) for p in P_ORDER]
        for low, high in zip(means, means[1:]):
            assert low <= high * (1 + 1e-12)
        assert means[-1] == pytest.approx(math.fsum(values) / n, rel=1e-15)
        assert p_mean(values, -1.0) == pytest.approx(
            n / np.sum(1.0 / values), rel=1e-12
        )
        geometric = np.exp(np.mean(np.log(values)))
        for p in (1e-8, -1e-8):
            assert p_mean(values, p) == pytest.approx(geometric, rel=1e-6)


@pytest.mark.slow
@pytest.mark.integration
def test_replay_exactness(triangular_instance):
    for algorithm, period in ((Algorithm.EUCB, 2000), (Algorithm.UCB1, 10)):
        traces = run_replications(
            triangular_instance, algorithm, 5000, period, base_seed=1, R=100
        )
        assert sum(len(replay_mismatches(trace)) for trace in traces) == 0


@pytest.mark.slow
@pytest.mark.integration
def test_good_event_rate(triangular_instance):
    assert min(triangular_instance.means) >= 0.3
    rates = good_event_rate(triangular_instance, Algorithm.EUCB, 5000, 2000, R=500)
    assert rates.g_rate >= 0.99


@pytest.mark.slow
@pytest.mark.integration
def test_regret_shrinks_with_horizon():
    instance = BanditInstance.from_means(np.linspace(0.2, 0.9, 10).tolist())
    params = RegretParams(p=1.0, estimator=Estimator.PER_RUN_TRUE_MEAN)

    def mean_regret(T):
        traces = run_replications(instance, Algorithm.UCB1, T, 10, base_seed=3, R=50)
        return np.mean([p_mean_regret_per_run(t, instance, params) for t in traces])

    assert mean_regret(40_000) <= 0.8 * mean_regret(10_000)


@pytest.mark.slow
@pytest.mark.integration
@pytest.mark.parametrize("algorithm", list(Algorithm))
def test_bernoulli_realized_rewards_collapse_to_mu_star(algorithm):
    config = ExperimentConfig.create(
        family=InstanceFamily(tag=FamilyTag.BERNOULLI, k=50),
        algorithm=algorithm,
        T=100_000,
        R=5,
        p_grid=(0.0, -0.5, -1.0, -2.0),
        estimator=Estimator.PER_RUN_REALIZED_REWARD,
    )
    report = run_experiment(config)
    for estimate in report.estimates:
        assert abs(estimate.mean - report.mu_star) <= 0.02


@pytest.mark.slow
@pytest.mark.integration
def test_eucb_is_not_less_fair_than_ucb1():
    def regret_at_minus_two(algorithm):
        config = ExperimentConfig.create(
            family=InstanceFamily(tag=FamilyTag.TRIANGULAR, k=50),
            algorithm=algorithm,
            T=20_000,
            R=30,
            p_grid=(-2.0,),
            estimator=Estimator.PER_RUN_TRUE_MEAN,
        )
        return run_experiment(config).estimates[0].mean

    assert regret_at_minus_two(Algorithm.EUCB) <= (
        regret_at_minus_two(Algorithm.UCB1) + 0.05
    )


@pytest.mark.slow
@pytest.mark.integration
def test_empirical_nash_regret_under_explicit_bound():
    instance = gen_instance(
        InstanceFamily(tag=FamilyTag.TRIANGULAR, k=10), instance_stream(0)
    )
    assert min(instance.means) >= 0.3
    config = ExperimentConfig.create(
        family=InstanceFamily(tag=FamilyTag.TRIANGULAR, k=10),
        algorithm=Algorithm.EUCB,
        T=10**6,
        R=10,
        p_grid=(0.0,),
    )
    period = resolve_period(config, 0.0).rounds
    traces = run_replications(instance, Algorithm.EUCB, 10**6, period, 0, R=10)
    regret = p_mean_regret_cross_run(traces, instance, 0.0)
    assert regret <= explicit_nash_bound(10, 10**6)
