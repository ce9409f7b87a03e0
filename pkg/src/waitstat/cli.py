"""Command-line interface: schedule, contacts, and friendship analyses.

Exit codes: 0 success, 1 invalid input or arguments, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from collections.abc import Sequence
from pathlib import Path

from . import contacts, friendship, sizebias, timeline, wheel
from .plotting import render_histogram
from .report import FORMATS, ReportDocument, render

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments by default; this tool reserves 2
    # for I/O failures and reports usage problems as 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: Path) -> tuple[str, str]:
    data = path.read_bytes()
    return data.decode("utf-8"), hashlib.sha256(data).hexdigest()


def _add_multiset_summary(doc: ReportDocument, ms: sizebias.WeightedMultiset) -> None:
    for value, count in ms.entries.items():
        doc.add(f"intervals.{value}", count)
    for value, p in sizebias.count_distribution(ms).probs.items():
        doc.add(f"count_prob.{value}", p)
    for value, p in sizebias.size_biased_distribution(ms).probs.items():
        doc.add(f"biased_prob.{value}", p)
    naive = sizebias.naive_wait(ms)
    expected = sizebias.expected_wait(ms)
    doc.add("mean_interval_s", sizebias.mean(ms))
    doc.add("naive_wait_s", naive)
    doc.add("expected_wait_s", expected)
    doc.add("paradox_gap_s", expected - naive)


def cmd_schedule_analyze(args: argparse.Namespace) -> tuple[ReportDocument, str]:
    text, digest = _read(args.file)
    t = timeline.parse_timeline(text)
    ms = timeline.to_multiset(timeline.inter_event_times(t))
    doc = ReportDocument("schedule analyze")
    doc.add("input_path", str(args.file))
    doc.add("input_sha256", digest)
    doc.add("period_s", t.period)
    doc.add("event_count", len(t.events))
    _add_multiset_summary(doc, ms)
    return doc, args.format


def cmd_schedule_simulate(args: argparse.Namespace) -> tuple[ReportDocument, str]:
    if args.samples <= 0:
        raise ValueError("samples must be positive")
    if args.seed < 0:
        raise ValueError("seed must be nonnegative")
    if args.resolution is not None and args.resolution <= 0:
        raise ValueError("resolution must be positive")
    text, digest = _read(args.file)
    t = timeline.parse_timeline(text)
    sim = wheel.simulate(t, args.samples, args.seed)
    doc = ReportDocument("schedule simulate")
    doc.add("input_path", str(args.file))
    doc.add("input_sha256", digest)
    doc.add("period_s", t.period)
    doc.add("event_count", len(t.events))
    doc.add("samples", sim.samples)
    doc.add("seed", sim.seed)
    doc.add("mean_wait_s", sim.mean_wait)
    for length, p in sim.class_probabilities.items():
        doc.add(f"sim_prob.{length}", p)
    if args.resolution is not None:
        exact = wheel.exhaustive(t, args.resolution)
        doc.add("exact_resolution_s", exact.resolution)
        doc.add("exact_arrivals", exact.arrivals)
        doc.add("exact_mean_wait_s", exact.mean_wait)
        for length, p in exact.class_probabilities.items():
            doc.add(f"exact_prob.{length}", p)
    return doc, "text"


def cmd_contacts(args: argparse.Namespace) -> tuple[ReportDocument, str]:
    if args.resolution <= 0:
        raise ValueError("resolution must be positive")
    text, digest = _read(args.file)
    records = contacts.parse_contacts(text, args.resolution)
    if args.busiest:
        node = contacts.busiest_node(records, args.resolution)
    else:
        node = args.node
        if not any(node in (r.i, r.j) for r in records):
            raise ValueError(f"node {node!r} not in contact file")
    events = contacts.node_events(records, node, args.resolution)
    gaps = contacts.inter_event_gaps(events, args.mode)
    bin_width = args.bin_width if args.bin_width is not None else args.resolution

    doc = ReportDocument("contacts")
    doc.add("input_path", str(args.file))
    doc.add("input_sha256", digest)
    doc.add("resolution_s", args.resolution)
    doc.add("node", node)
    doc.add("event_count", len(events))
    doc.add("mode", args.mode)
    doc.add("gap_count", len(gaps))
    if gaps:
        doc.add("min_gap_s", min(gaps))
        doc.add("max_gap_s", max(gaps))
        doc.add("mean_gap_s", sizebias.mean(sizebias.WeightedMultiset.from_values(gaps)))
    if args.csv_path or args.svg_path:
        if not gaps:
            raise ValueError(f"node {node!r} has fewer than 2 events; no inter-event times to export")
        hist = contacts.histogram(gaps, bin_width)
        doc.add("bin_width_s", bin_width)
        if args.csv_path:
            args.csv_path.write_text(contacts.histogram_csv(hist), encoding="utf-8")
            doc.add("csv_path", str(args.csv_path))
        if args.svg_path:
            render_histogram(hist, args.svg_path, title=f"inter-event times: node {node}")
            doc.add("svg_path", str(args.svg_path))
    return doc, "text"


def cmd_friendship(args: argparse.Namespace) -> tuple[ReportDocument, str]:
    if (args.file is None) == (args.degrees is None):
        raise ValueError("give exactly one of an edge-list file or --degrees")
    doc = ReportDocument("friendship")
    graph = None
    if args.file is not None:
        text, digest = _read(args.file)
        graph = friendship.parse_graph(text)
        ds = friendship.degree_sequence(graph)
        doc.add("input_path", str(args.file))
        doc.add("input_sha256", digest)
        doc.add("node_count", len(graph.nodes))
        doc.add("edge_count", len(graph.edges))
    else:
        ds = friendship.parse_degrees(args.degrees)
        doc.add("degrees_spec", args.degrees)
        doc.add("input_sha256", hashlib.sha256(args.degrees.encode("utf-8")).hexdigest())
    for degree, count in ds.entries.items():
        doc.add(f"degrees.{degree}", count)
    mean_degree = sizebias.mean(ds)
    friend_mean = friendship.mean_friend_degree(ds)
    doc.add("mean_degree", mean_degree)
    doc.add("mean_friend_degree", friend_mean)
    doc.add("paradox_gap", friend_mean - mean_degree)
    for degree, p in friendship.friend_degree_distribution(ds).probs.items():
        doc.add(f"friend_prob.{degree}", p)
    if graph is not None:
        doc.add("endpoint_audit", friendship.endpoint_audit(graph))
    return doc, args.format


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="waitstat", description="Waiting-time and friendship paradox statistics.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sched = sub.add_parser("schedule", help="cyclic schedule analyses")
    ssub = sched.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    analyze = ssub.add_parser("analyze", help="exact waiting-time statistics for a schedule file")
    analyze.add_argument("file", type=Path, help="schedule file: 'period <s>' header, then event offsets")
    analyze.add_argument("--format", choices=FORMATS, default="text")
    analyze.set_defaults(func=cmd_schedule_analyze)

    simulate = ssub.add_parser("simulate", help="seeded Monte Carlo arrival simulation")
    simulate.add_argument("file", type=Path, help="schedule file")
    simulate.add_argument("--samples", type=int, required=True, help="number of random arrivals")
    simulate.add_argument("--seed", type=int, required=True, help="RNG seed; same seed, same report")
    simulate.add_argument(
        "--resolution", type=int, default=None, help="also report the exact fixed-grid statistics at this step"
    )
    simulate.set_defaults(func=cmd_schedule_simulate)

    con = sub.add_parser("contacts", help="inter-event statistics from a contact file")
    con.add_argument("file", type=Path, help="contact file: 't i j' per line")
    which = con.add_mutually_exclusive_group(required=True)
    which.add_argument("--node", help="analyze this node")
    which.add_argument("--busiest", action="store_true", help="analyze the node with the most events")
    con.add_argument("--mode", choices=("gap", "start"), default="gap", help="inter-event convention")
    con.add_argument("--bin", type=int, default=None, dest="bin_width", help="histogram bin width (default: resolution)")
    con.add_argument("--csv", type=Path, default=None, dest="csv_path", help="write histogram CSV here")
    con.add_argument("--svg", type=Path, default=None, dest="svg_path", help="write histogram bar chart here")
    con.add_argument("--resolution", type=int, default=contacts.DEFAULT_RESOLUTION, help="recording step in seconds")
    con.set_defaults(func=cmd_contacts)

    fr = sub.add_parser("friendship", help="friendship-paradox statistics")
    fr.add_argument("file", type=Path, nargs="?", help="edge-list file: 'i j' per line")
    fr.add_argument("--degrees", help="inline degree sequence, e.g. 4:6,12:3")
    fr.add_argument("--format", choices=FORMATS, default="text")
    fr.set_defaults(func=cmd_friendship)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, fmt = args.func(args)
    except ValueError as err:
        print(f"waitstat: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"waitstat: error: {err}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(render(doc, fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
