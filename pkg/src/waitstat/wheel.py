"""Uniformly random arrivals on a timeline.

Three views of the same experiment: ``spin`` resolves a single arrival
offset, ``simulate`` estimates the statistics by drawing seeded random
arrivals, and ``exhaustive`` enumerates every arrival on a fixed grid
and reports exact rationals.

``simulate`` is reproducible by construction.  Arrival offsets come from
``random.Random(seed)``, whose stream for a given seed is guaranteed
stable by the standard library, and the mean is an exactly rounded
``math.fsum``; identical (timeline, samples, seed) therefore yield
bit-identical reports.  The loop is sequential; a parallel variant would
have to split the stream deterministically from the seed to keep that
guarantee.
"""

from __future__ import annotations

import bisect
import math
import random
from array import array
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .timeline import Timeline

__all__ = [
    "ArrivalOutcome",
    "SimulationReport",
    "ExhaustiveReport",
    "spin",
    "simulate",
    "exhaustive",
]


@dataclass(frozen=True)
class ArrivalOutcome:
    """One resolved arrival: its offset, its wait, and the length of the
    inter-event interval it landed in."""

    arrival: float
    wait: float
    interval_length: int

    def __post_init__(self) -> None:
        if not 0 <= self.wait < self.interval_length:
            raise ValueError(f"wait {self.wait} outside [0, {self.interval_length})")


@dataclass(frozen=True)
class SimulationReport:
    """Aggregate of a Monte Carlo run.

    ``class_probabilities`` maps interval length -> empirical frequency
    of arrivals landing in an interval of that length; the frequencies
    sum to 1 up to float rounding.
    """

    samples: int
    seed: int
    mean_wait: float
    class_probabilities: Mapping[int, float]

    def __post_init__(self) -> None:
        if self.samples <= 0:
            raise ValueError("samples must be positive")
        probs = dict(sorted(self.class_probabilities.items()))
        if abs(math.fsum(probs.values()) - 1.0) > 1e-12:
            raise ValueError("class probabilities must sum to 1")
        object.__setattr__(self, "class_probabilities", MappingProxyType(probs))


@dataclass(frozen=True)
class ExhaustiveReport:
    """Exact statistics of the grid of arrivals 0, r, 2r, ..., period - r."""

    resolution: int
    arrivals: int
    mean_wait: Fraction
    class_probabilities: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        probs = dict(sorted(self.class_probabilities.items()))
        if sum(probs.values()) != 1:
            raise ValueError("class probabilities must sum to 1")
        object.__setattr__(self, "class_probabilities", MappingProxyType(probs))


def _interval_lengths(t: Timeline) -> list[int]:
    # lengths[k] is the interval terminated by events[k]; lengths[0] wraps
    # around from the last event of the previous period.
    wrap = t.period - t.events[-1] + t.events[0]
    return [wrap] + [b - a for a, b in zip(t.events, t.events[1:])]


def spin(t: Timeline, arrival: float) -> ArrivalOutcome:
    """Resolve one arrival at the given offset in [0, period).

    The wait runs to the next event, cyclically.  An arrival exactly at
    an event boards at once (wait 0) and counts toward the interval that
    event terminates, so every instant of the period belongs to exactly
    one interval.
    """
    if not 0 <= arrival < t.period:
        raise ValueError(f"arrival {arrival} outside [0, {t.period})")
    events = t.events
    lengths = _interval_lengths(t)
    k = bisect.bisect_left(events, arrival)
    if k == len(events):
        return ArrivalOutcome(arrival, t.period + events[0] - arrival, lengths[0])
    return ArrivalOutcome(arrival, events[k] - arrival, lengths[k])


def simulate(t: Timeline, samples: int, seed: int) -> SimulationReport:
    """Estimate waiting statistics from seeded uniform random arrivals.

    Draws ``samples`` offsets uniformly over the continuous interval
    [0, period) and aggregates the mean wait and the landing frequency
    of each interval length.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    rng = random.Random(seed)
    events = t.events
    n_events = len(events)
    lengths = _interval_lengths(t)
    period = t.period
    waits = array("d")
    landed: Counter[int] = Counter()
    for _ in range(samples):
        a = rng.random() * period
        k = bisect.bisect_left(events, a)
        if k == n_events:
            waits.append(period + events[0] - a)
            landed[lengths[0]] += 1
        else:
            waits.append(events[k] - a)
            landed[lengths[k]] += 1
    return SimulationReport(
        samples=samples,
        seed=seed,
        mean_wait=math.fsum(waits) / samples,
        class_probabilities={length: count / samples for length, count in landed.items()},
    )


def exhaustive(t: Timeline, resolution: int) -> ExhaustiveReport:
    """Enumerate every arrival on the grid 0, r, 2r, ..., period - r.

    The resolution must divide the period.  This is the brute-force
    counterpart of both ``simulate`` and the closed-form expected wait:
    when the resolution also divides every interval length, the class
    probabilities equal the size-biased distribution exactly and the
    grid mean equals the continuous expectation minus resolution/2.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if t.period % resolution:
        raise ValueError(f"resolution {resolution} does not divide period {t.period}")
    arrivals = t.period // resolution
    events = t.events
    n_events = len(events)
    lengths = _interval_lengths(t)
    period = t.period
    total_wait = 0
    landed: Counter[int] = Counter()
    for i in range(arrivals):
        a = i * resolution
        k = bisect.bisect_left(events, a)
        if k == n_events:
            total_wait += period + events[0] - a
            landed[lengths[0]] += 1
        else:
            total_wait += events[k] - a
            landed[lengths[k]] += 1
    return ExhaustiveReport(
        resolution=resolution,
        arrivals=arrivals,
        mean_wait=Fraction(total_wait, arrivals),
        class_probabilities={length: Fraction(count, arrivals) for length, count in landed.items()},
    )
