"""Edge partitions keyed by unordered endpoint-label pairs.

Each edge is classified by the pair of labels of its two endpoints, where
the label is either the vertex degree or the neighbor-degree sum. Keys are
normalized so ``lo <= hi``; counts cover every edge and empty classes are
never stored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

DEGREE = "degree"
NEIGHBOR_SUM = "neighbor_sum"
MODES = (DEGREE, NEIGHBOR_SUM)


@dataclass(frozen=True)
class EdgePartition:
    """Counts of edges per unordered label pair, under one labeling mode."""

    mode: str
    classes: dict[tuple[int, int], int]

    def total(self) -> int:
        """Number of edges covered; equals the source graph's edge count."""
        return sum(self.classes.values())

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.classes.items())


def _classify(g: Graph, labels: list[int], mode: str) -> EdgePartition:
    classes: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        a, b = labels[u], labels[v]
        key = (a, b) if a <= b else (b, a)
        classes[key] = classes.get(key, 0) + 1
    return EdgePartition(mode, classes)


def degree_partition(g: Graph) -> EdgePartition:
    """Classify every edge by its endpoint degrees."""
    labels = [g.degree(v) for v in range(g.vertex_count)]
    return _classify(g, labels, DEGREE)


def neighbor_sum_partition(g: Graph) -> EdgePartition:
    """Classify every edge by its endpoint neighbor-degree sums."""
    labels = [g.neighbor_degree_sum(v) for v in range(g.vertex_count)]
    return _classify(g, labels, NEIGHBOR_SUM)
