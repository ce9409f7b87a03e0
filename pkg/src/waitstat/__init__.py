"""Waiting-time paradox toolkit.

Exact and simulated waiting-time statistics for cyclic event schedules,
inter-event-time extraction from timestamped contact data, and a
friendship-paradox analyzer, all running on one size-biased-sampling
core: a long interval catches a random arrival in proportion to its
length for the same reason a popular person shows up in proportion to
their degree when you sample a random friend.
"""

from __future__ import annotations

from .contacts import (
    DEFAULT_RESOLUTION,
    ContactRecord,
    Histogram,
    NodeEvent,
    busiest_node,
    histogram,
    histogram_csv,
    inter_event_gaps,
    node_events,
    parse_contacts,
)
from .errors import ParseError
from .friendship import (
    DegreeSequence,
    Graph,
    degree_sequence,
    endpoint_audit,
    friend_degree_distribution,
    mean_friend_degree,
    parse_degrees,
    parse_graph,
)
from .sizebias import (
    Distribution,
    WeightedMultiset,
    count_distribution,
    expected_wait,
    mean,
    naive_wait,
    size_biased_distribution,
    size_biased_mean,
)
from .timeline import (
    Timeline,
    format_timeline,
    from_durations,
    inter_event_times,
    parse_timeline,
    to_multiset,
)
from .wheel import (
    ArrivalOutcome,
    ExhaustiveReport,
    SimulationReport,
    exhaustive,
    simulate,
    spin,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_RESOLUTION",
    "ArrivalOutcome",
    "ContactRecord",
    "DegreeSequence",
    "Distribution",
    "ExhaustiveReport",
    "Graph",
    "Histogram",
    "NodeEvent",
    "ParseError",
    "SimulationReport",
    "Timeline",
    "WeightedMultiset",
    "busiest_node",
    "count_distribution",
    "degree_sequence",
    "endpoint_audit",
    "exhaustive",
    "expected_wait",
    "format_timeline",
    "friend_degree_distribution",
    "from_durations",
    "histogram",
    "histogram_csv",
    "inter_event_gaps",
    "inter_event_times",
    "mean",
    "mean_friend_degree",
    "naive_wait",
    "node_events",
    "parse_contacts",
    "parse_degrees",
    "parse_graph",
    "parse_timeline",
    "simulate",
    "size_biased_distribution",
    "size_biased_mean",
    "spin",
    "to_multiset",
]
