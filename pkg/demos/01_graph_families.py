"""Build the two graph families and look at their structure."""

from collections import Counter

from topoindices import double_wheel, hanoi, to_edge_list

# A double-wheel is two disjoint n-cycles whose vertices all join a hub.
# Vertex 0 is the hub, 1..n the inner ring, n+1..2n the outer ring.
for n in (3, 5, 8):
    g = double_wheel(n)
    degrees = Counter(g.degree(v) for v in range(g.vertex_count))
    print(f"double_wheel({n}): {g.vertex_count} vertices, {g.edge_count()} edges, "
          f"degree counts {dict(degrees)}")

print()

# The Hanoi graph is the state graph of the n-disc, 3-peg puzzle. Ids read
# the disc placements as a base-3 numeral (smallest disc most significant),
# so the three all-on-one-peg states are 0, (3^n - 1)/2 and 3^n - 1.
for n in (1, 2, 3, 6):
    g = hanoi(n)
    corners = [v for v in range(g.vertex_count) if g.degree(v) == 2]
    print(f"hanoi({n}): {g.vertex_count} vertices, {g.edge_count()} edges, "
          f"degree-2 vertices {corners}")

print()
print("hanoi(2) as an edge list:")
print(to_edge_list(hanoi(2)))
