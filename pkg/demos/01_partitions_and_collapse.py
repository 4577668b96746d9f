"""Partitions, dominance and the B/C/D collapse.

Nilpotent orbits of classical groups are named by partitions with parity
constraints on multiplicities, and orbit closure is the dominance order.
Arbitrary partitions arising from induction recipes are normalized by the
collapse: the dominance-largest valid partition below the given one.
"""

from modspring.partitions import (
    Partition,
    collapse,
    dominance_leq,
    enumerate_partitions,
    is_valid_orbit_partition,
    transpose,
)

p = Partition([3, 2, 1])
print(f"partition {p}, transpose {transpose(p)}")
print(f"(2,2,2) <= (4,2) in dominance: {dominance_leq(Partition([2,2,2]), Partition([4,2]))}")

print(f"\n(3,2,1) is a symplectic orbit partition: "
      f"{is_valid_orbit_partition(p, 'C')}")
print(f"its C-collapse: {collapse(p, 'C')}")

print("\nall symplectic orbit partitions of 6 (= orbits of Sp(6)):")
for q in enumerate_partitions(6):
    if is_valid_orbit_partition(q, "C"):
        print(f"  {q}")

print("\ncollapse is a dominance maximum: everything C-valid below (3,2,1):")
for q in enumerate_partitions(6):
    if is_valid_orbit_partition(q, "C") and dominance_leq(q, p):
        print(f"  {q}")
