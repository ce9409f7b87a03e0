"""Cyclic event schedules and the inter-event times they induce.

A timeline is a period in seconds plus the offsets of the events within
one period, like buses on a fixed one-hour loop.  The schedule wraps:
the gap from the last event back around to the first is a real interval,
so an n-event timeline always has n inter-event times summing exactly to
the period.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ParseError
from .sizebias import WeightedMultiset

__all__ = [
    "Timeline",
    "parse_timeline",
    "format_timeline",
    "inter_event_times",
    "from_durations",
    "to_multiset",
]


@dataclass(frozen=True, eq=True)
class Timeline:
    """A periodic schedule: strictly ascending event offsets in [0, period)."""

    period: int
    events: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.period <= 0:
            raise ValueError(f"period must be positive, got {self.period}")
        object.__setattr__(self, "events", tuple(self.events))
        if not self.events:
            raise ValueError("timeline needs at least one event")
        prev = None
        for offset in self.events:
            if not 0 <= offset < self.period:
                raise ValueError(f"event offset {offset} outside [0, {self.period})")
            if prev is not None and offset <= prev:
                raise ValueError(f"event offsets must be strictly ascending, got {prev} then {offset}")
            prev = offset


def parse_timeline(text: str) -> Timeline:
    """Parse a schedule file.

    Format: optional ``#`` comment lines and blank lines anywhere; the
    first payload line is ``period <seconds>``; every following line is
    one integer event offset, strictly ascending and below the period.
    Errors name the offending 1-based line.
    """
    period: int | None = None
    events: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if period is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "period":
                raise ParseError(f"expected 'period <seconds>', got {line!r}", line_no)
            try:
                period = int(parts[1])
            except ValueError:
                raise ParseError(f"period is not an integer: {parts[1]!r}", line_no) from None
            if period <= 0:
                raise ParseError(f"period must be positive, got {period}", line_no)
            continue
        try:
            offset = int(line)
        except ValueError:
            raise ParseError(f"event offset is not an integer: {line!r}", line_no) from None
        if not 0 <= offset < period:
            raise ParseError(f"offset {offset} outside [0, {period})", line_no)
        if events and offset <= events[-1]:
            raise ParseError(f"offsets must be strictly ascending, got {events[-1]} then {offset}", line_no)
        events.append(offset)
    if period is None:
        raise ParseError("missing 'period <seconds>' header")
    if not events:
        raise ParseError("schedule has no events")
    return Timeline(period, tuple(events))


def format_timeline(t: Timeline) -> str:
    """Serialize to the canonical schedule form; ``parse_timeline`` inverts it."""
    lines = [f"period {t.period}"]
    lines.extend(str(offset) for offset in t.events)
    return "\n".join(lines) + "\n"


def inter_event_times(t: Timeline) -> list[int]:
    """Durations between consecutive events, wrap-around interval last.

    Returns n durations for n events; they sum exactly to the period.
    """
    out = [b - a for a, b in zip(t.events, t.events[1:])]
    out.append(t.period - t.events[-1] + t.events[0])
    return out


def from_durations(durations: Sequence[int], start: int = 0) -> Timeline:
    """Build the timeline whose inter-event times are ``durations``.

    The first event sits at ``start`` and the period is the sum of the
    durations; inverse of ``inter_event_times`` up to rotation.
    """
    if not durations:
        raise ValueError("need at least one duration")
    if any(d <= 0 for d in durations):
        raise ValueError("durations must be positive")
    if not 0 <= start < durations[-1]:
        raise ValueError(f"start must lie in [0, {durations[-1]}) so all events fit one period")
    events = [start]
    for d in durations[:-1]:
        events.append(events[-1] + d)
    return Timeline(sum(durations), tuple(events))


def to_multiset(durations: Sequence[int]) -> WeightedMultiset:
    """Collapse durations into value -> occurrence count."""
    if not durations:
        raise ValueError("need at least one duration")
    return WeightedMultiset(Counter(durations))
