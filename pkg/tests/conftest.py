"""Shared fixtures and independent brute-force oracles."""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

from waitstat import Timeline, WeightedMultiset

DATA = Path(__file__).parent / "data"

# Nine events per hour whose gaps are six 4-minute and three 12-minute
# intervals; the running example throughout the tests.
NINE_BUS_EVENTS = (0, 240, 480, 720, 960, 1200, 1440, 2160, 2880)


@pytest.fixture
def nine_bus_timeline() -> Timeline:
    return Timeline(3600, NINE_BUS_EVENTS)


@pytest.fixture
def nine_bus_multiset() -> WeightedMultiset:
    return WeightedMultiset({240: 6, 720: 3})


def unit_slot_oracle(ms: WeightedMultiset) -> dict[int, Fraction]:
    """Size-biased probabilities the slow way: expand the multiset into
    one slot per unit of value and count slot ownership."""
    slots: list[int] = []
    for value, count in ms.entries.items():
        slots.extend([value] * (value * count))
    owned = Counter(slots)
    total = len(slots)
    return {value: Fraction(n, total) for value, n in owned.items()}


def random_multiset(
    rng: random.Random, max_value: int = 60, max_count: int = 10, max_distinct: int = 5
) -> WeightedMultiset:
    distinct = rng.randint(1, max_distinct)
    values = rng.sample(range(1, max_value + 1), distinct)
    return WeightedMultiset({v: rng.randint(1, max_count) for v in values})


def random_timeline(rng: random.Random, max_events: int = 12, max_gap: int = 90) -> Timeline:
    n = rng.randint(1, max_events)
    durations = [rng.randint(1, max_gap) for _ in range(n)]
    events = [0]
    for d in durations[:-1]:
        events.append(events[-1] + d)
    return Timeline(sum(durations), tuple(events))
