"""Proximity-contact ingestion and per-node conversation statistics.

Input is the SocioPatterns-style contact format: one ``t i j`` line per
observation, recorded on a fixed grid (20 seconds in the published school
data), meaning nodes i and j were in contact during the window ending at
t.  A record at t therefore covers [t - resolution, t].  Consecutive
coverage chains into a single conversation event; a fully silent window
between covered stretches ends the event and starts a new one.

Events are per node and partner-agnostic: records with different
partners whose coverage touches merge into one event, because the
inter-event times of interest here are "how long until this person talks
to anyone again".
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "DEFAULT_RESOLUTION",
    "ContactRecord",
    "NodeEvent",
    "Histogram",
    "parse_contacts",
    "node_events",
    "inter_event_gaps",
    "busiest_node",
    "histogram",
    "histogram_csv",
]

DEFAULT_RESOLUTION = 20


@dataclass(frozen=True, order=True)
class ContactRecord:
    """One observation: nodes i and j in contact during the window ending at t."""

    t: int
    i: str
    j: str

    def __post_init__(self) -> None:
        if self.t < 0:
            raise ValueError(f"timestamp must be nonnegative, got {self.t}")
        if self.i == self.j:
            raise ValueError(f"self-contact for node {self.i!r}")


@dataclass(frozen=True)
class NodeEvent:
    """One conversation of ``node``, covering [start, end]."""

    node: str
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"event start {self.start} after end {self.end}")


@dataclass(frozen=True)
class Histogram:
    """Binned duration counts: ``bins`` is (bin_start, count) for a run of
    consecutive bins, empty bins included."""

    bin_width: int
    bins: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.bin_width <= 0:
            raise ValueError("bin width must be positive")
        object.__setattr__(self, "bins", tuple((s, c) for s, c in self.bins))
        for idx, (start, count) in enumerate(self.bins):
            if start % self.bin_width:
                raise ValueError(f"bin start {start} is not a multiple of width {self.bin_width}")
            if idx and start != self.bins[idx - 1][0] + self.bin_width:
                raise ValueError("bin starts must be consecutive")
            if count < 0:
                raise ValueError("bin counts must be nonnegative")

    @property
    def total(self) -> int:
        return sum(c for _, c in self.bins)


def parse_contacts(text: str, resolution: int = DEFAULT_RESOLUTION) -> list[ContactRecord]:
    """Parse a contact file into records sorted by (t, i, j).

    Lines are whitespace-separated ``t i j``; anything after the third
    column (class labels and the like in the published data) is ignored.
    Blank lines and ``#`` comments are skipped, duplicate records are
    dropped, and timestamps must be nonnegative multiples of the
    resolution.  Errors name the offending 1-based line.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    records: set[ContactRecord] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 3:
            raise ParseError(f"expected 't i j', got {line!r}", line_no)
        try:
            t = int(parts[0])
        except ValueError:
            raise ParseError(f"timestamp is not an integer: {parts[0]!r}", line_no) from None
        if t < 0:
            raise ParseError(f"timestamp must be nonnegative, got {t}", line_no)
        if t % resolution:
            raise ParseError(f"timestamp {t} is not a multiple of the {resolution} s resolution", line_no)
        i, j = parts[1], parts[2]
        if i == j:
            raise ParseError(f"self-contact for node {i!r}", line_no)
        records.add(ContactRecord(t, i, j))
    return sorted(records)


def node_events(
    records: Sequence[ContactRecord], node: str, resolution: int = DEFAULT_RESOLUTION
) -> list[NodeEvent]:
    """Merge one node's records into conversation events.

    Each record covers [t - resolution, t]; covered stretches that
    overlap or abut merge into one event, and a gap of at least one whole
    resolution step separates events.  An unknown node yields [].
    """
    times = sorted({r.t for r in records if node in (r.i, r.j)})
    merged: list[list[int]] = []
    for t in times:
        start = t - resolution
        if merged and start <= merged[-1][1]:
            merged[-1][1] = t
        else:
            merged.append([start, t])
    return [NodeEvent(node, start, end) for start, end in merged]


def inter_event_gaps(events: Sequence[NodeEvent], mode: str = "gap") -> list[int]:
    """Durations between consecutive events of one node.

    mode "gap": the silence between them, next.start - previous.end.
    mode "start": start-to-start, next.start - previous.start (the
    convention used for instantaneous events like bus arrivals).
    Fewer than two events yield [].
    """
    if mode not in ("gap", "start"):
        raise ValueError(f"mode must be 'gap' or 'start', got {mode!r}")
    out: list[int] = []
    for prev, nxt in zip(events, events[1:]):
        if nxt.start <= prev.end:
            raise ValueError(f"events must be sorted and disjoint, got {prev} then {nxt}")
        out.append(nxt.start - prev.end if mode == "gap" else nxt.start - prev.start)
    return out


def busiest_node(records: Sequence[ContactRecord], resolution: int = DEFAULT_RESOLUTION) -> str:
    """The node with the most conversation events; ties go to the
    lexicographically smallest identifier."""
    if not records:
        raise ValueError("no contact records")
    nodes = sorted({n for r in records for n in (r.i, r.j)})
    counts = {n: len(node_events(records, n, resolution)) for n in nodes}
    best = max(counts.values())
    return min(n for n, c in counts.items() if c == best)


def histogram(durations: Sequence[int], bin_width: int) -> Histogram:
    """Bin positive durations at the given width.

    A duration d lands in the bin starting at bin_width * floor((d-1) /
    bin_width): bins cover (start, start + width], so a duration sitting
    exactly on a bin boundary belongs to the bin below it.  The result
    runs from the first nonempty bin to the last, zero-count bins in
    between included.
    """
    if not durations:
        raise ValueError("no durations to bin")
    if bin_width <= 0:
        raise ValueError("bin width must be positive")
    if any(d <= 0 for d in durations):
        raise ValueError("durations must be positive")
    counts = Counter(bin_width * ((d - 1) // bin_width) for d in durations)
    lo, hi = min(counts), max(counts)
    bins = tuple((s, counts.get(s, 0)) for s in range(lo, hi + bin_width, bin_width))
    return Histogram(bin_width, bins)


def histogram_csv(hist: Histogram) -> str:
    """Render a histogram as CSV with header ``bin_start,bin_end,count``;
    each row's bin covers (bin_start, bin_end]."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["bin_start", "bin_end", "count"])
    for start, count in hist.bins:
        writer.writerow([start, start + hist.bin_width, count])
    return buf.getvalue()
