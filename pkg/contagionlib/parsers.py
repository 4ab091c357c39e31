"""Readers and writers for the on-disk graph formats."""

from __future__ import annotations

from typing import NamedTuple
import logging
import re

import networkx as nx

from .exceptions import GraphParseError
from .graph import Graph

logger = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")

graph_block_pattern = re.compile(r"\bgraph\s*\[")
multigraph_pattern = re.compile(r"\bmultigraph\s+\d+")


class ParseResult(NamedTuple):
    graph: Graph
    duplicates_dropped: int
    loops_dropped: int


class _Builder:
    """Collects labelled edges, numbering vertices in first-appearance order."""

    def __init__(self) -> None:
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()
        self.duplicates = 0
        self.loops = 0

    def vertex(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            self.index[label] = len(self.labels)
            self.labels.append(label)
            return self.index[label]

    def edge(self, a: str, b: str) -> None:
        u, v = self.vertex(a), self.vertex(b)
        if u == v:
            self.loops += 1
            return
        key = (u, v) if u < v else (v, u)
        if key in self.edges:
            self.duplicates += 1
            return
        self.edges.add(key)

    def build(self, source: str) -> ParseResult:
        if self.duplicates or self.loops:
            logger.warning(
                "Dropped %d duplicate edge(s) and %d self-loop(s) while reading %s",
                self.duplicates,
                self.loops,
                source,
            )
        graph = Graph.from_edges(len(self.labels), sorted(self.edges), self.labels)
        return ParseResult(graph, self.duplicates, self.loops)


def parse_edge_list(text: str) -> ParseResult:
    """Parse a whitespace-separated edge list.

    Each non-comment line holds exactly two vertex tokens. Lines starting with
    ``#`` or ``%`` are comments and blank lines are ignored. Vertices are numbered
    in order of first appearance and keep their tokens as labels.

    Raises:
        GraphParseError: A line does not hold two tokens, or there are no edges.
    """
    builder = _Builder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected 2 vertex tokens, got {len(tokens)}", line=lineno)
        builder.edge(*tokens)
    if not builder.labels:
        raise GraphParseError("input contains no edges")
    return builder.build("edge list")


def parse_gml(text: str) -> ParseResult:
    """Parse the ``graph [ node [ id ... ] edge [ source ... target ... ] ]`` subset of GML.

    Node labels are the GML ``label`` attribute when present and the ``id``
    otherwise. Vertices are numbered in node declaration order.

    Raises:
        GraphParseError: The graph block is missing, or an edge references an
            undeclared node.
    """
    match = graph_block_pattern.search(text)
    if not match:
        raise GraphParseError("input contains no graph block")
    # Parse as a multigraph so duplicated edges can be counted instead of rejected.
    text = multigraph_pattern.sub("", text)
    text = f"{text[:match.end()]}\n  multigraph 1\n{text[match.end():]}"
    try:
        parsed = nx.parse_gml(text, label=None)
    except nx.NetworkXError as e:
        raise GraphParseError(str(e)) from e
    if parsed.is_directed():
        logger.warning("GML graph is declared directed, reading it as undirected")
    builder = _Builder()
    node_label = {}
    for node, data in parsed.nodes(data=True):
        label = str(data.get("label", node))
        if label in builder.index:
            raise GraphParseError(f"node label {label!r} is duplicated")
        node_label[node] = label
        builder.vertex(label)
    for source, target in parsed.edges():
        builder.edge(node_label[source], node_label[target])
    if not builder.labels:
        raise GraphParseError("graph block contains no nodes")
    return builder.build("GML")


def format_edge_list(g: Graph) -> str:
    """Serialize a graph as an edge list that :func:`parse_edge_list` reads back."""
    for label in g.labels:
        if not label or any(ch.isspace() for ch in label) or label.startswith(COMMENT_PREFIXES):
            raise ValueError(f"label {label!r} can't be written to an edge list")
    lines = [f"# {g.n} vertices, {g.m} edges"]
    lines += [f"# vertex {g.labels[v]}" for v in range(g.n) if not g.adjacency[v]]
    lines += [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
