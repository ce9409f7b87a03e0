"""The friendship paradox as size-biased degree sampling.

"A random friend" is formalized as a uniformly random edge endpoint, so
the average friend's degree is the size-biased mean of the degree
sequence.  The quantities here are literally the waiting-time operations
applied to a multiset of degrees instead of a multiset of durations;
``endpoint_audit`` double-checks them against direct enumeration of the
edges of a concrete graph.

Degree sequences stand on their own: a sequence need not be realizable
as a simple graph (nine nodes cannot include a degree-12 node), so the
analysis never requires one.  The fraction of friendship slots a
degree-d node occupies is what matters, not who fills them.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from . import sizebias
from .errors import ParseError
from .sizebias import Distribution, WeightedMultiset

__all__ = [
    "Graph",
    "DegreeSequence",
    "parse_graph",
    "parse_degrees",
    "degree_sequence",
    "mean_friend_degree",
    "friend_degree_distribution",
    "endpoint_audit",
]

# degree -> number of nodes with that degree
DegreeSequence = WeightedMultiset


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: no self-loops, no parallel edges.

    Edges are stored with endpoints sorted, so (i, j) and (j, i) are the
    same edge.
    """

    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        canonical = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at node {i!r}")
            if i not in self.nodes or j not in self.nodes:
                raise ValueError(f"edge ({i!r}, {j!r}) has an unknown endpoint")
            canonical.add((i, j) if i <= j else (j, i))
        object.__setattr__(self, "edges", frozenset(canonical))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> "Graph":
        """Build a graph whose node set is exactly the edge endpoints."""
        edge_set = {tuple(e) for e in edges}
        nodes = frozenset(n for e in edge_set for n in e)
        return cls(nodes, frozenset(edge_set))

    def degrees(self) -> dict[str, int]:
        """Degree of every node, including zeros for isolated nodes."""
        out: Counter[str] = Counter()
        for i, j in self.edges:
            out[i] += 1
            out[j] += 1
        return {n: out.get(n, 0) for n in self.nodes}


def parse_graph(text: str) -> Graph:
    """Parse an edge list: one ``i j`` pair per line, ``#`` comments and
    blank lines allowed, duplicate edges dropped.  Errors name the
    offending 1-based line."""
    edges: set[tuple[str, str]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j', got {line!r}", line_no)
        i, j = parts
        if i == j:
            raise ParseError(f"self-loop at node {i!r}", line_no)
        edges.add((i, j) if i <= j else (j, i))
    return Graph.from_edges(edges)


def parse_degrees(spec: str) -> DegreeSequence:
    """Parse an inline ``degree:count,degree:count`` description,
    e.g. ``4:6,12:3`` for six degree-4 nodes and three degree-12 nodes."""
    entries: Counter[int] = Counter()
    for part in spec.split(","):
        part = part.strip()
        degree_text, sep, count_text = part.partition(":")
        try:
            if not sep:
                raise ValueError
            degree = int(degree_text)
            count = int(count_text)
        except ValueError:
            raise ValueError(f"bad degree entry {part!r}, expected 'degree:count'") from None
        entries[degree] += count
    return WeightedMultiset(entries)


def degree_sequence(g: Graph) -> DegreeSequence:
    """Multiset of node degrees.

    Rejects isolated nodes: a degree-0 node occupies no friendship slot
    and can never be sampled as anyone's friend.
    """
    if not g.nodes:
        raise ValueError("graph has no nodes")
    degs = g.degrees()
    isolated = sorted(n for n, d in degs.items() if d == 0)
    if isolated:
        raise ValueError(f"isolated node(s): {', '.join(isolated)}")
    return WeightedMultiset(Counter(degs.values()))


def mean_friend_degree(ds: DegreeSequence) -> Fraction:
    """Average degree of a uniformly random edge endpoint.

    The size-biased mean of the degree sequence: at least the plain mean
    degree, with equality only when all degrees are equal.
    """
    return sizebias.size_biased_mean(ds)


def friend_degree_distribution(ds: DegreeSequence) -> Distribution:
    """Law of a random friend's degree: the size-biased distribution of
    the degree sequence, verbatim."""
    return sizebias.size_biased_distribution(ds)


def endpoint_audit(g: Graph) -> Fraction:
    """Average degree over both endpoints of every edge, by enumeration.

    Independent check of ``mean_friend_degree``: the two agree exactly
    for every graph without isolated nodes.
    """
    if not g.edges:
        raise ValueError("graph has no edges")
    degs = g.degrees()
    isolated = sorted(n for n, d in degs.items() if d == 0)
    if isolated:
        raise ValueError(f"isolated node(s): {', '.join(isolated)}")
    total = sum(degs[i] + degs[j] for i, j in g.edges)
    return Fraction(total, 2 * len(g.edges))
