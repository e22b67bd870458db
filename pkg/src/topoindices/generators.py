"""Generators for the double-wheel and Hanoi graph families, plus edge-list I/O.

Vertex numbering is part of the contract so fixtures stay stable:

* ``double_wheel(n)``: hub = vertex 0, inner ring = ``1..n``, outer ring =
  ``n+1..2n``; ring vertices are consecutive around each cycle.
* ``hanoi(n)``: a vertex is a puzzle state of the n-disc, 3-peg puzzle.
  Writing one base-3 digit per disc, smallest disc first and most
  significant, the vertex id is the value of that numeral. The three
  all-on-one-peg states are therefore ``0``, ``(3**n - 1) // 2`` and
  ``3**n - 1``.
"""

from __future__ import annotations

from .graph import Graph

# 3**13 is about 1.6M vertices; beyond that memory use gets unreasonable
# for an adjacency-set representation.
HANOI_MAX_N = 13


def double_wheel(n: int) -> Graph:
    """Two disjoint n-cycles whose vertices all join a common hub.

    The result has ``2n + 1`` vertices and ``4n`` edges; the hub has degree
    ``2n`` and every ring vertex has degree 3.
    """
    if n < 3:
        raise ValueError(f"double_wheel requires n >= 3, got {n} (a ring of size {n} is not a cycle)")
    edges: list[tuple[int, int]] = []
    for start in (1, n + 1):
        for i in range(n):
            edges.append((start + i, start + (i + 1) % n))
    edges.extend((0, v) for v in range(1, 2 * n + 1))
    return Graph(2 * n + 1, edges)


def hanoi(n: int, max_n: int = HANOI_MAX_N) -> Graph:
    """State graph of the n-disc, 3-peg puzzle.

    Vertices are the ``3**n`` disc placements; two states are adjacent iff
    one legal move transforms one into the other. Disc ``i`` may move from
    peg ``a`` to peg ``b`` only when no smaller disc sits on either peg, so
    between any two pegs at most one move exists: the smaller of the two
    top discs crosses over. The result has ``3 * (3**n - 1) // 2`` edges,
    exactly three degree-2 vertices (the all-on-one-peg states), and degree
    3 everywhere else.
    """
    if n < 1:
        raise ValueError(f"hanoi requires n >= 1, got {n}")
    if n > max_n:
        raise ValueError(f"hanoi size cap is n <= {max_n}, got {n}")
    size = 3**n
    # place[i] is the positional weight of disc i in the vertex id.
    place = [3 ** (n - 1 - i) for i in range(n)]
    edges: list[tuple[int, int]] = []
    for state in range(size):
        # top[p] = smallest disc on peg p, or None if the peg is empty.
        top: list[int | None] = [None, None, None]
        rest = state
        for disc in range(n):
            peg, rest = divmod(rest, place[disc])
            if top[peg] is None:
                top[peg] = disc
        for a in range(3):
            for b in range(a + 1, 3):
                ta, tb = top[a], top[b]
                if ta is None and tb is None:
                    continue
                if tb is None or (ta is not None and ta < tb):
                    disc, src, dst = ta, a, b
                else:
                    disc, src, dst = tb, b, a
                other = state + (dst - src) * place[disc]
                if state < other:
                    edges.append((state, other))
    return Graph(size, edges)


def from_edge_list(text: str) -> Graph:
    """Parse edge-list text into a validated, connected :class:`Graph`.

    Format: one edge per line as two whitespace-separated 0-based vertex
    ids; lines starting with ``#`` and blank lines are ignored; the vertex
    count is the largest id plus one. Self-loops, duplicate edges (in
    either orientation) and disconnected graphs are rejected.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: vertex ids must be integers, got {line!r}"
            ) from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: vertex ids must be non-negative, got {line!r}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
        if key[1] > max_id:
            max_id = key[1]
    g = Graph(max_id + 1, edges)
    problem = g.validate()
    if problem is not None:
        raise ValueError(problem)
    return g


def to_edge_list(g: Graph) -> str:
    """Serialize to edge-list text; inverse of :func:`from_edge_list`."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())
