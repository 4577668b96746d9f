"""modspring: exact combinatorics of the generalized Springer correspondence.

Subpackages cover integer partitions, Weyl group character tables and
ell-blocks, nilpotent orbits of classical groups, Levi subgroup classes and
orbit induction, the classification and ordering of cuspidal data, and
ingestion of bundled Springer correspondence tables for B4 and E8.
"""

from modspring.partitions import (
    Partition,
    Bipartition,
    PartitionConstraint,
    transpose,
    dominance_leq,
    is_valid_orbit_partition,
    collapse,
    add_padded,
    enumerate_partitions,
    enumerate_bipartitions,
    standard_count,
)

__version__ = "0.1.0"
