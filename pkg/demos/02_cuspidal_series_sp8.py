"""Cuspidal data of Sp(8) and the partition into 0-series.

In characteristic 0 the cuspidal supports of Sp(2n) are the Levi
subgroups GL(1)^(n-k(k+1)/2) x Sp(k(k+1)); in characteristic ell the
GL(1) blocks inflate to GL(ell^a) blocks.  Every ell-cuspidal datum lies
in the 0-series of a unique 0-cuspidal datum, recovered here two ways
(order maximum and closed form) with an internal consistency check.
The census identity equates the sum of series sizes with the number of
pairs (orbit, local system).
"""

from modspring.cuspidal import (
    census,
    enumerate_cuspidal_data,
    partition_into_zero_series,
    series_size,
    verify_counting_identity,
)
from modspring.orbits import Sp, enumerate_pairs

G = Sp(8)
ell = 3

print(f"ell-cuspidal data of Sp(8) at ell = {ell}:")
for d in enumerate_cuspidal_data(G, ell):
    print(f"  {d}   series size {series_size(G, d)}")

print("\n0-series fibers:")
for z, block in partition_into_zero_series(G, ell).items():
    print(f"  0-cuspidal datum with residual rank {z.levi.residual_rank}: "
          f"{len(block)} ell-cuspidal data")

total, pairs = census(G, ell)
print(f"\ncensus: sum of series sizes = {total}, pairs = {pairs}")

print("\nthe counting identity behind the census, for n' = 4:")
r = verify_counting_identity(4, ell)
print(f"  sum over Part(4,{ell}) of modular wreath counts = {r.lhs}")
print(f"  |Bipart(4)| = {r.rhs}  -> equal: {r.equal}")
