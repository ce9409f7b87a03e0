from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import DATA
from waitstat import (
    Graph,
    ParseError,
    degree_sequence,
    endpoint_audit,
    expected_wait,
    friend_degree_distribution,
    mean,
    mean_friend_degree,
    naive_wait,
    parse_degrees,
    parse_graph,
)


def random_simple_graph(rng: random.Random) -> Graph:
    n = rng.randint(2, 9)
    names = [f"n{i}" for i in range(n)]
    pairs = list(combinations(names, 2))
    k = rng.randint(1, len(pairs))
    return Graph.from_edges(rng.sample(pairs, k))


class TestGraph:
    def test_edges_canonicalized(self):
        g = Graph.from_edges([("B", "A"), ("A", "B"), ("B", "C")])
        assert g.edges == frozenset({("A", "B"), ("B", "C")})
        assert g.nodes == frozenset({"A", "B", "C"})

    def test_degrees_include_isolated(self):
        g = Graph(frozenset({"A", "B", "C"}), frozenset({("A", "B")}))
        assert g.degrees() == {"A": 1, "B": 1, "C": 0}

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges([("A", "A")])

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(ValueError):
            Graph(frozenset({"A"}), frozenset({("A", "B")}))


class TestParseGraph:
    def test_path_fixture(self):
        g = parse_graph((DATA / "path.edges").read_text())
        assert g.degrees() == {"A": 1, "B": 2, "C": 1}

    def test_duplicates_and_orientation_collapse(self):
        g = parse_graph("A B\nB A\n# comment\n\nA B\n")
        assert len(g.edges) == 1

    def test_wrong_column_count_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("A B\nA B C\n")
        assert exc.value.line == 2

    def test_self_loop_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("A A\n")
        assert exc.value.line == 1


class TestParseDegrees:
    def test_class_spec(self):
        ds = parse_degrees("4:6,12:3")
        assert dict(ds.entries) == {4: 6, 12: 3}

    def test_whitespace_and_repeats(self):
        ds = parse_degrees(" 4:2 , 4:1 ,12:3")
        assert dict(ds.entries) == {4: 3, 12: 3}

    @pytest.mark.parametrize("spec", ["", "4", "4:", ":6", "4:6,x:2", "4:6;12:3"])
    def test_bad_specs(self, spec):
        with pytest.raises(ValueError):
            parse_degrees(spec)


class TestDegreeSequence:
    def test_path(self):
        ds = degree_sequence(parse_graph("A B\nB C\n"))
        assert dict(ds.entries) == {1: 2, 2: 1}

    def test_isolated_node_named_in_error(self):
        g = Graph(frozenset({"A", "B", "C"}), frozenset({("A", "B")}))
        with pytest.raises(ValueError, match=r"isolated node\(s\): C"):
            degree_sequence(g)


class TestFriendDegreeStatistics:
    def test_two_class_cohort(self):
        # six people with 4 friends, three with 12: the average person has
        # 20/3 friends but the average friend has 44/5
        ds = parse_degrees("4:6,12:3")
        assert mean(ds) == Fraction(20, 3)
        assert mean_friend_degree(ds) == Fraction(44, 5)
        assert friend_degree_distribution(ds)[12] == Fraction(3, 5)
        assert friend_degree_distribution(ds)[4] == Fraction(2, 5)

    def test_star_graph(self):
        ds = degree_sequence(parse_graph("hub a\nhub b\nhub c\n"))
        assert mean(ds) == Fraction(3, 2)
        assert mean_friend_degree(ds) == 2

    def test_regular_graphs_have_no_paradox(self):
        for name in ("triangle.edges", "ring.edges"):
            ds = degree_sequence(parse_graph((DATA / name).read_text()))
            assert mean_friend_degree(ds) == mean(ds)

    def test_shares_machinery_with_waiting_times(self):
        # same multiset, read as degrees or as durations: the friend-degree
        # mean and twice the expected wait are the same number
        ds = parse_degrees("4:6,12:3")
        assert mean_friend_degree(ds) == 2 * expected_wait(ds)
        assert mean(ds) == 2 * naive_wait(ds)


class TestEndpointAudit:
    def test_path(self):
        assert endpoint_audit(parse_graph("A B\nB C\n")) == Fraction(3, 2)

    def test_triangle(self):
        assert endpoint_audit(parse_graph((DATA / "triangle.edges").read_text())) == 2

    def test_agrees_with_size_biased_mean(self):
        rng = random.Random(51)
        for _ in range(200):
            g = random_simple_graph(rng)
            assert endpoint_audit(g) == mean_friend_degree(degree_sequence(g))

    def test_rejects_edgeless_graph(self):
        with pytest.raises(ValueError):
            endpoint_audit(Graph(frozenset({"A"}), frozenset()))

    def test_rejects_isolated_node(self):
        g = Graph(frozenset({"A", "B", "C"}), frozenset({("A", "B")}))
        with pytest.raises(ValueError, match="isolated"):
            endpoint_audit(g)
