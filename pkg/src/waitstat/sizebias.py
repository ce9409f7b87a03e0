"""Count-based versus size-biased views of a multiset of positive values.

One computation answers two superficially different questions: how long a
uniformly random arrival waits under a cyclic schedule (long gaps catch
arrivals in proportion to their length), and how many friends a randomly
sampled friend has (popular people are sampled in proportion to their
degree).  The substrate is the same either way: a multiset of positive
integers, durations in seconds or friend counts.

Everything here is exact.  Values and counts are integers, and every
derived quantity is a ``fractions.Fraction``; call ``float()`` on a result
(or ``Distribution.as_floats``) when a double is wanted.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

__all__ = [
    "WeightedMultiset",
    "Distribution",
    "count_distribution",
    "size_biased_distribution",
    "mean",
    "naive_wait",
    "size_biased_mean",
    "expected_wait",
]


@dataclass(frozen=True, eq=True)
class WeightedMultiset:
    """Positive integer values with positive multiplicities.

    ``entries`` maps value -> occurrence count, e.g. ``{240: 6, 720: 3}``
    for six 4-minute gaps and three 12-minute gaps per hour.  Entries are
    stored sorted by value and exposed read-only.
    """

    entries: Mapping[int, int]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("multiset must not be empty")
        items: dict[int, int] = {}
        for value, count in sorted(self.entries.items()):
            if not isinstance(value, int) or not isinstance(count, int):
                raise TypeError(f"values and counts must be integers, got {value!r}: {count!r}")
            if value <= 0:
                raise ValueError(f"values must be positive, got {value}")
            if count <= 0:
                raise ValueError(f"counts must be positive, got {count} for value {value}")
            items[value] = count
        object.__setattr__(self, "entries", MappingProxyType(items))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "WeightedMultiset":
        """Tally an iterable of raw values into a multiset."""
        return cls(Counter(values))

    @property
    def total_count(self) -> int:
        """Number of items, multiplicities included."""
        return sum(self.entries.values())

    @property
    def total_weight(self) -> int:
        """Sum of value x count: seconds covered, or friendship slots."""
        return sum(v * c for v, c in self.entries.items())


@dataclass(frozen=True, eq=True)
class Distribution:
    """Exact probabilities over the support of a multiset.

    Probabilities are Fractions and must sum to exactly 1.
    """

    probs: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        if not self.probs:
            raise ValueError("distribution must not be empty")
        items = {v: Fraction(p) for v, p in sorted(self.probs.items())}
        total = sum(items.values())
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, expected 1")
        object.__setattr__(self, "probs", MappingProxyType(items))

    def __getitem__(self, value: int) -> Fraction:
        return self.probs[value]

    def as_floats(self) -> dict[int, float]:
        """Double rendering of the probabilities, in value order."""
        return {v: float(p) for v, p in self.probs.items()}


def count_distribution(ms: WeightedMultiset) -> Distribution:
    """P(v) = count(v) / total count.

    The law of the value you get by picking one of the listed items
    uniformly, each item counting once regardless of its size.  This is
    the intuitive guess that the waiting-time paradox defeats.
    """
    n = ms.total_count
    return Distribution({v: Fraction(c, n) for v, c in ms.entries.items()})


def size_biased_distribution(ms: WeightedMultiset) -> Distribution:
    """P(v) = v * count(v) / sum(u * count(u)).

    Each item is weighted by its own value: a 12-minute gap covers three
    times the clock of a 4-minute gap, and a degree-12 node fills three
    times as many friendship slots as a degree-4 one.  This is the law of
    the interval a uniformly random instant lands in, and equally the law
    of the degree of a uniformly random edge endpoint.
    """
    w = ms.total_weight
    return Distribution({v: Fraction(v * c, w) for v, c in ms.entries.items()})


def mean(ms: WeightedMultiset) -> Fraction:
    """Plain average value: sum(v * count) / sum(count)."""
    return Fraction(ms.total_weight, ms.total_count)


def naive_wait(ms: WeightedMultiset) -> Fraction:
    """Half the mean interval: the wait guess that ignores length bias."""
    return mean(ms) / 2


def size_biased_mean(ms: WeightedMultiset) -> Fraction:
    """Mean under the size-biased law: sum(v^2 * count) / sum(v * count).

    Always at least ``mean``; equal exactly when the multiset has a
    single distinct value.
    """
    return Fraction(sum(v * v * c for v, c in ms.entries.items()), ms.total_weight)


def expected_wait(ms: WeightedMultiset) -> Fraction:
    """Expected wait of a continuous uniformly random arrival.

    The arrival lands in an interval drawn from the size-biased law and
    then sits, on average, halfway through it, so this is
    ``size_biased_mean / 2`` = sum(v^2 * count) / (2 * sum(v * count)).
    It exceeds ``naive_wait`` whenever interval lengths vary; the two
    agree only on perfectly regular schedules.
    """
    return size_biased_mean(ms) / 2
