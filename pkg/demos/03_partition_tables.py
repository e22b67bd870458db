"""Edge partition tables for both families, next to their general-n counts."""

from topoindices import degree_partition, double_wheel, hanoi, neighbor_sum_partition

print("double-wheel degree partition (expect (3,3): 2n and (3,2n): 2n):")
for n in (3, 5, 10):
    part = degree_partition(double_wheel(n))
    print(f"  n={n:<3} {part.sorted_items()}")

print()
print("double-wheel neighbor-sum partition (expect (2n+6,2n+6): 2n and (2n+6,6n): 2n):")
for n in (3, 5, 10):
    part = neighbor_sum_partition(double_wheel(n))
    print(f"  n={n:<3} {part.sorted_items()}")

print()
print("hanoi degree partition (expect (2,3): 6 and (3,3): (3^(n+1)-15)/2):")
for n in (2, 3, 5):
    part = degree_partition(hanoi(n))
    predicted = (3 ** (n + 1) - 15) // 2
    print(f"  n={n:<3} {part.sorted_items()}   predicted (3,3) count: {predicted}")

print()
print("hanoi neighbor-sum partition; the (9,9) class count is (3^(n+1)-33)/2:")
for n in (3, 4, 5):
    part = neighbor_sum_partition(hanoi(n))
    predicted = (3 ** (n + 1) - 33) // 2
    print(f"  n={n:<3} {part.sorted_items()}   predicted (9,9) count: {predicted}")

print()
print("at n=2 the corner triangles touch and the neighbor-sum classes differ:")
print(f"  n=2   {neighbor_sum_partition(hanoi(2)).sorted_items()}")
