"""Tests for exploration periods, assumption checks and bound expressions."""

import math

import pytest
from pydantic import ValidationError

from pmean_bandits.bounds import (
    explicit_nash_bound,
    explicit_positive_bound,
    table1_bound,
    table1_branch,
)
from pmean_bandits.core import BanditInstance
from pmean_bandits.schedule import (
    ScheduleInput,
    check_exploration_period,
    check_min_reward,
    check_remark_bound,
    exploration_period,
    min_reward_threshold,
    side_condition,
)
from pmean_bandits.utils.exceptions import ParameterDomainError


class TestExplorationPeriod:
    def test_positive_p(self):
        period = exploration_period(ScheduleInput(p=1.0, T=10**6, k=10))
        assert period.rounds == 123936
        assert not period.clamped
        assert period.branch == "positive"

    def test_negative_p(self):
        period = exploration_period(ScheduleInput(p=-1.0, T=10**6, k=10))
        assert period.raw == pytest.approx(18806.30, abs=0.01)
        assert period.rounds == 18807

    def test_nash_row_is_clamped_at_table_scale(self):
        period = exploration_period(ScheduleInput(p=0.0, T=20000, k=50))
        assert period.raw == pytest.approx(25457.4, abs=0.1)
        assert period.clamped
        assert period.rounds == 20000
        assert period.branch == "nash"

    def test_p_above_one_is_rejected(self):
        with pytest.raises(ValidationError):
            ScheduleInput(p=1.5, T=1000, k=10)

    def test_more_negative_p_explores_less(self):
        rounds = [
            exploration_period(ScheduleInput(p=p, T=10**6, k=10)).rounds
            for p in (-0.5, -1.0, -2.0)
        ]
        assert rounds == sorted(rounds, reverse=True)

    @pytest.mark.parametrize("p", [1.0, 0.3, 0.0, -0.5, -2.0])
    def test_longer_horizon_explores_more(self, p):
        periods = [
            exploration_period(ScheduleInput(p=p, T=T, k=10))
            for T in (10**3, 10**4, 10**5, 10**6)
        ]
        raws = [period.raw for period in periods]
        assert all(a < b for a, b in zip(raws, raws[1:]))
        rounds = [period.rounds for period in periods]
        assert rounds == sorted(rounds)

    @pytest.mark.parametrize("k", [2, 10, 50])
    def test_nash_row_exceeds_small_positive_p_by_sqrt_k(self, k):
        nash = exploration_period(ScheduleInput(p=0.0, T=10**6, k=k))
        near_zero = exploration_period(ScheduleInput(p=1e-12, T=10**6, k=k))
        assert near_zero.branch == "positive"
        assert nash.raw / near_zero.raw == pytest.approx(math.sqrt(k), rel=1e-9)


class TestAssumptionChecks:
    def test_exploration_period_threshold(self):
        passing = check_exploration_period(2000, 5000, 10)
        assert passing.threshold == pytest.approx(954.25, abs=0.01)
        assert passing.passed and passing.margin > 0
        assert not check_exploration_period(900, 5000, 10).passed

    def test_min_reward_fails_at_huge_horizon(self):
        assert min_reward_threshold(10**12, 10) == pytest.approx(20.72, abs=0.01)
        instance = BanditInstance.from_means([1.0] * 10)
        result = check_min_reward(instance, 10**12)
        assert not result.passed
        assert result.margin == pytest.approx(1.0 - result.threshold)

    def test_remark_bound_switches_at_threshold(self):
        instance = BanditInstance.from_means([1.0, 1.0])
        assert check_remark_bound(instance, 10**6, 452707).passed
        assert not check_remark_bound(instance, 10**6, 452706).passed

    def test_remark_bound_without_exploration(self):
        instance = BanditInstance.from_means([1.0, 1.0])
        result = check_remark_bound(instance, 1000, 0)
        assert not result.passed
        assert result.threshold == math.inf

    def test_side_condition(self):
        assert side_condition(-1.0, 20000, 50) is None
        assert side_condition(0.5, 20000, 50) is None
        assert side_condition(-2.0, 20000, 50) is False
        assert side_condition(-1.2, 20000, 50) is True


class TestBounds:
    def test_branches(self):
        assert [table1_branch(p) for p in (0.5, 0.0, -1.0, -2.0)] == [
            "positive",
            "nash",
            "negative",
            "very-negative",
        ]

    def test_dominant_terms(self):
        assert table1_bound(1.0, 50, 20000).dominant_term == pytest.approx(0.05)
        assert table1_bound(-1.0, 50, 20000).dominant_term == pytest.approx(
            1.5811, abs=1e-4
        )
        assert table1_bound(-2.0, 2, 10**8).dominant_term == pytest.approx(
            0.141421, abs=1e-6
        )

    @pytest.mark.parametrize("k", [4, 50])
    def test_branches_at_minus_one_differ_by_fourth_root_of_k(self, k):
        T = 20000
        at_edge = table1_bound(-1.0, k, T)
        just_below = table1_bound(-1.0 - 1e-12, k, T)
        assert (at_edge.branch, just_below.branch) == ("negative", "very-negative")
        ratio = at_edge.dominant_term / just_below.dominant_term
        assert ratio == pytest.approx(k**0.25, rel=1e-9)

    def test_log_factors(self):
        result = table1_bound(-0.5, 10, 10**4)
        assert result.with_log_factors == pytest.approx(
            result.dominant_term * math.sqrt(math.log(10) * math.log(10**4))
        )

    def test_nash_row_carries_explicit_bound(self):
        result = table1_bound(0.0, 10, 10**6)
        expected = explicit_nash_bound(10, 10**6)
        assert result.explicit_nash_bound == pytest.approx(expected)
        assert table1_bound(1.0, 10, 10**6).explicit_nash_bound is None

    def test_explicit_nash_bound_values(self):
        assert explicit_nash_bound(10, 10**6) == pytest.approx(0.57075, rel=1e-4)
        assert explicit_nash_bound(2, 10**10) == pytest.approx(0.0018079, rel=1e-4)

    def test_validity_floor(self):
        assert table1_bound(1e-4, 50, 20000).below_validity_floor
        assert not table1_bound(0.5, 50, 20000).below_validity_floor
        assert table1_bound(-1e-7, 50, 20000).below_validity_floor

    def test_explicit_positive_bound(self):
        value = explicit_positive_bound(1.0, 10, 10**6)
        assert value > 0
        assert value < explicit_positive_bound(1.0, 10, 10**4)
        with pytest.raises(ParameterDomainError):
            explicit_positive_bound(0.0, 10, 10**6)
