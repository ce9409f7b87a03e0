from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from conftest import random_multiset, random_timeline
from waitstat import (
    Timeline,
    exhaustive,
    expected_wait,
    from_durations,
    inter_event_times,
    simulate,
    size_biased_distribution,
    spin,
    to_multiset,
)


class TestSpin:
    def test_mid_interval(self, nine_bus_timeline):
        out = spin(nine_bus_timeline, 1980.0)
        assert out.wait == pytest.approx(180.0)
        assert out.interval_length == 720

    def test_arrival_on_event_waits_zero(self, nine_bus_timeline):
        out = spin(nine_bus_timeline, 1440.0)
        assert out.wait == 0.0
        # the event at 1440 terminates the short interval before it
        assert out.interval_length == 240

    def test_wraparound(self, nine_bus_timeline):
        out = spin(nine_bus_timeline, 3000.0)
        assert out.wait == pytest.approx(600.0)
        assert out.interval_length == 720

    def test_arrival_before_first_event(self):
        out = spin(Timeline(3600, (60, 360, 540)), 0.0)
        assert out.wait == pytest.approx(60.0)
        assert out.interval_length == 3120

    def test_rejects_out_of_range_arrival(self, nine_bus_timeline):
        with pytest.raises(ValueError):
            spin(nine_bus_timeline, 3600.0)
        with pytest.raises(ValueError):
            spin(nine_bus_timeline, -1.0)

    def test_wait_bounded_by_interval(self, nine_bus_timeline):
        rng = random.Random(31)
        for _ in range(500):
            out = spin(nine_bus_timeline, rng.random() * 3600)
            assert 0 <= out.wait < out.interval_length


class TestExhaustive:
    def test_nine_bus_minute_grid(self, nine_bus_timeline):
        rep = exhaustive(nine_bus_timeline, 60)
        assert rep.arrivals == 60
        assert rep.mean_wait == 234
        assert rep.class_probabilities == {240: Fraction(2, 5), 720: Fraction(3, 5)}

    def test_nine_bus_second_grid(self, nine_bus_timeline):
        rep = exhaustive(nine_bus_timeline, 1)
        assert rep.arrivals == 3600
        assert rep.mean_wait == Fraction(527, 2)
        assert float(rep.mean_wait) == 263.5

    def test_resolution_must_divide_period(self, nine_bus_timeline):
        with pytest.raises(ValueError):
            exhaustive(nine_bus_timeline, 7)
        with pytest.raises(ValueError):
            exhaustive(nine_bus_timeline, 0)

    def test_grid_mean_is_half_resolution_under_continuous(self):
        # when the grid divides every interval, the discrete census lands
        # exactly resolution/2 below the continuous expectation and the
        # class probabilities match the size-biased distribution
        rng = random.Random(32)
        for _ in range(60):
            ms = random_multiset(rng, max_value=30, max_count=6, max_distinct=4)
            durations = [v for v, c in sorted(ms.entries.items()) for _ in range(c)]
            t = from_durations(durations)
            rep = exhaustive(t, 1)
            assert rep.mean_wait == expected_wait(ms) - Fraction(1, 2)
            assert rep.class_probabilities == size_biased_distribution(ms).probs

    def test_probabilities_sum_to_one(self, nine_bus_timeline):
        for res in (1, 60, 240):
            rep = exhaustive(nine_bus_timeline, res)
            assert sum(rep.class_probabilities.values()) == 1


class TestSimulate:
    def test_deterministic_for_same_seed(self, nine_bus_timeline):
        a = simulate(nine_bus_timeline, 2000, seed=99)
        b = simulate(nine_bus_timeline, 2000, seed=99)
        assert a == b
        assert a.mean_wait == b.mean_wait

    def test_different_seeds_differ(self, nine_bus_timeline):
        a = simulate(nine_bus_timeline, 2000, seed=1)
        b = simulate(nine_bus_timeline, 2000, seed=2)
        assert a.mean_wait != b.mean_wait

    def test_single_event_classes_are_certain(self):
        rep = simulate(Timeline(360, (0,)), 5000, seed=3)
        assert rep.class_probabilities == {360: 1.0}
        assert 150 < rep.mean_wait < 210

    def test_rejects_bad_arguments(self, nine_bus_timeline):
        with pytest.raises(ValueError):
            simulate(nine_bus_timeline, 0, seed=1)
        with pytest.raises(ValueError):
            simulate(nine_bus_timeline, 100, seed=-1)

    def test_mean_converges_with_more_samples(self, nine_bus_timeline):
        # CLT sanity check: estimates at n and 3n should sit within a few
        # standard errors of each other. For this schedule the wait variance
        # is sum(d^3 * c) / (3 * period) - 264^2 = 41664.
        sigma = math.sqrt(41664)
        n1, n3 = 30_000, 90_000
        a = simulate(nine_bus_timeline, n1, seed=5)
        b = simulate(nine_bus_timeline, n3, seed=5)
        bound = 3 * math.sqrt(sigma**2 / n1 + sigma**2 / n3)
        assert abs(a.mean_wait - b.mean_wait) < bound
        assert abs(b.mean_wait - 264) < 3 * sigma / math.sqrt(n3)

    def test_class_frequencies_near_size_biased(self, nine_bus_timeline):
        rep = simulate(nine_bus_timeline, 100_000, seed=6)
        assert rep.class_probabilities[720] == pytest.approx(0.6, abs=0.01)
        assert rep.class_probabilities[240] == pytest.approx(0.4, abs=0.01)


class TestRoundTripWithTimeline:
    def test_multiset_expansion_preserves_statistics(self):
        rng = random.Random(33)
        for _ in range(50):
            t = random_timeline(rng)
            ms = to_multiset(inter_event_times(t))
            assert ms.total_weight == t.period
            rep = exhaustive(t, 1)
            assert rep.mean_wait == expected_wait(ms) - Fraction(1, 2)
