"""Per-edge weight forms and whole-graph sums for six topological indices.

Four indices weigh an edge by its endpoint degrees:

* ``randic``           : 1 / sqrt(a * b)
* ``sum_connectivity`` : 1 / sqrt(a + b)
* ``abc``              : sqrt((a + b - 2) / (a * b))
* ``ga``               : 2 * sqrt(a * b) / (a + b)

The other two apply the same abc/ga weight forms to neighbor-degree sums
instead of degrees: ``abc4`` reuses the abc form, ``ga5`` the ga form.
Whole-graph values are sums over edges; ``math.fsum`` keeps them exactly
rounded and independent of edge order.
"""

from __future__ import annotations

import enum
import math

from .graph import Graph
from .partition import (
    DEGREE,
    NEIGHBOR_SUM,
    EdgePartition,
    degree_partition,
    neighbor_sum_partition,
)


class IndexKind(enum.Enum):
    RANDIC = "randic"
    SUM_CONNECTIVITY = "sum_connectivity"
    ABC = "abc"
    GA = "ga"
    ABC4 = "abc4"
    GA5 = "ga5"

    @property
    def labeling(self) -> str:
        """Which vertex label the index weighs: degree or neighbor_sum."""
        if self in (IndexKind.ABC4, IndexKind.GA5):
            return NEIGHBOR_SUM
        return DEGREE

    @classmethod
    def parse(cls, name: str) -> IndexKind:
        """Look up a kind by name; hyphens and case are forgiven."""
        normalized = name.strip().lower().replace("-", "_")
        for kind in cls:
            if kind.value == normalized:
                return kind
        known = ", ".join(k.value for k in cls)
        raise ValueError(f"unknown index {name!r} (known: {known})")


DEGREE_KINDS = (IndexKind.RANDIC, IndexKind.SUM_CONNECTIVITY, IndexKind.ABC, IndexKind.GA)
NEIGHBOR_SUM_KINDS = (IndexKind.ABC4, IndexKind.GA5)


def edge_term(kind: IndexKind, a: int, b: int) -> float:
    """Weight contributed by one edge whose endpoint labels are ``a`` and ``b``.

    Symmetric in ``(a, b)``. Labels must be positive; on a valid connected
    graph both degrees and neighbor-degree sums always are, so the guard
    only protects generic callers.
    """
    if a < 1 or b < 1:
        raise ValueError(f"edge labels must be positive, got ({a}, {b})")
    if kind is IndexKind.RANDIC:
        return 1.0 / math.sqrt(a * b)
    if kind is IndexKind.SUM_CONNECTIVITY:
        return 1.0 / math.sqrt(a + b)
    if kind in (IndexKind.ABC, IndexKind.ABC4):
        return math.sqrt((a + b - 2) / (a * b))
    return 2.0 * math.sqrt(a * b) / (a + b)


def _labels(g: Graph, kind: IndexKind) -> list[int]:
    if kind.labeling == DEGREE:
        return [g.degree(v) for v in range(g.vertex_count)]
    return [g.neighbor_degree_sum(v) for v in range(g.vertex_count)]


def compute_index(g: Graph, kind: IndexKind) -> float:
    """Index value by direct edge summation."""
    labels = _labels(g, kind)
    return math.fsum(edge_term(kind, labels[u], labels[v]) for u, v in g.edges())


def compute_from_partition(p: EdgePartition, kind: IndexKind) -> float:
    """Index value from a partition table: class count times class weight."""
    if p.mode != kind.labeling:
        raise ValueError(
            f"{kind.value} needs a {kind.labeling} partition, got {p.mode}"
        )
    return math.fsum(
        count * edge_term(kind, lo, hi) for (lo, hi), count in p.sorted_items()
    )


def matching_partition(g: Graph, kind: IndexKind) -> EdgePartition:
    """The edge partition whose mode matches the index's labeling."""
    if kind.labeling == DEGREE:
        return degree_partition(g)
    return neighbor_sum_partition(g)
