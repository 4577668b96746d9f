"""Cuspidal data: classification, central characters, the partial order,
0-series and counting identities.

A cuspidal datum of Sp(2n) in characteristic ell is a Levi

    M_nu = GL(nu_1) x ... x GL(nu_s) x Sp(k(k+1))

with nu a partition of n - k(k+1)/2 into ell-powers (all ones when the
characteristic tag is 0), carrying the regular orbit on each GL block and
the cuspidal orbit (2k, 2k-2, ..., 2) on the residual factor.  SO and Spin
mirror this with two residual families: orbits (2k-1, 2k-3, ..., 1) on
SO(k^2) with trivial central character, and (2j-1, 2j-5, ...) on
SO(j(j+1)/2) with nontrivial central character (Spin only).

The order on cuspidal data is Lusztig's: equal central characters, Levi
embedding, and containment of the target's residual orbit in the closure
of the induced orbit.  Sp is the fully certified path; SO/Spin follow the
same code behind the same interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from modspring.levi import (
    LeviClass,
    LeviOrbitData,
    _assignments,
    embeds,
    enumerate_levi_classes,
    relative_weyl,
)
from modspring.orbits import (
    GroupForm,
    NilpotentOrbit,
    enumerate_pairs,
    rather_good,
)
from modspring.partitions import (
    Partition,
    PartitionConstraint,
    add_padded,
    collapse,
    dominance_leq,
    enumerate_bipartitions,
    enumerate_partitions,
)
from modspring.weylrep import modular_irr_count_wreath, weyl_order

__all__ = [
    "CentralCharacter",
    "CuspidalDatum",
    "CountingReport",
    "InternalInconsistencyError",
    "zero_cuspidal_pairs",
    "enumerate_cuspidal_data",
    "central_character_of",
    "order_leq",
    "zero_series_of",
    "partition_into_zero_series",
    "series_size",
    "verify_counting_identity",
    "lusztig_hypothesis",
]


class InternalInconsistencyError(AssertionError):
    """The order-theoretic and closed-form 0-series computations disagree."""


@dataclass(frozen=True)
class CentralCharacter:
    """Character of Z(G)/Z(G)^o, named by an opaque label.

    Labels: "triv", "sgn" (the faithful character of a Z/2 center), "nt"
    (the designated nontrivial character of a Spin center, left opaque in
    type D), "res<r>" (residue characters of SL centers).
    """

    label: str

    def __str__(self) -> str:
        return self.label


TRIV = CentralCharacter("triv")
SGN = CentralCharacter("sgn")
NT = CentralCharacter("nt")


@dataclass(frozen=True)
class CuspidalDatum:
    levi: LeviClass
    orbit_data: LeviOrbitData
    central_char: CentralCharacter
    char_tag: int  # 0 or the prime ell

    @property
    def residual_partition(self) -> Partition:
        if self.orbit_data.residual_orbit is None:
            return Partition()
        return self.orbit_data.residual_orbit.partition

    @property
    def gl_multiset(self) -> tuple[int, ...]:
        return self.levi.gl_blocks

    def __str__(self) -> str:
        nu = ",".join(str(b) for b in self.levi.gl_blocks) or "-"
        return (
            f"[nu=({nu}); res={self.residual_partition}; "
            f"chi={self.central_char}; tag={self.char_tag}]"
        )


# ------------------------------------------------------------ classification


def _triangular_root(n: int) -> Optional[int]:
    k = 0
    while k * (k + 1) // 2 < n:
        k += 1
    return k if k * (k + 1) // 2 == n else None


def _square_root(n: int) -> Optional[int]:
    k = 0
    while k * k < n:
        k += 1
    return k if k * k == n else None


def _sp_cuspidal_orbit(k: int) -> Partition:
    return Partition(range(2 * k, 0, -2))


def _so_square_orbit(k: int) -> Partition:
    return Partition(range(2 * k - 1, 0, -2))


def _so_triangular_orbit(j: int) -> Partition:
    parts = []
    v = 2 * j - 1
    while v > 0:
        parts.append(v)
        v -= 4
    return Partition(parts)


def _sp_sign(k: int) -> CentralCharacter:
    return TRIV if (k * (k + 1) // 2) % 2 == 0 else SGN


def zero_cuspidal_pairs(g: GroupForm) -> list[tuple[NilpotentOrbit, CentralCharacter]]:
    """Cuspidal pairs of G itself in characteristic 0, as
    (orbit, central character) entries.  Empty when none exist."""
    f = g.single
    if f.family == "C" and f.isogeny == "sc":
        k = _triangular_root(f.rank)
        if k is None:
            return []
        return [(NilpotentOrbit(_sp_cuspidal_orbit(k)), _sp_sign(k))]
    if f.family in ("B", "D"):
        m = f.natural_size
        out: list[tuple[NilpotentOrbit, CentralCharacter]] = []
        k = _square_root(m)
        if k is not None:
            out.append((NilpotentOrbit(_so_square_orbit(k)), TRIV))
        if f.isogeny == "sc":  # Spin only
            j = _triangular_root(m) if m % 2 else _triangular_root(m)
            if j is not None and j >= 1:
                out.append((NilpotentOrbit(_so_triangular_orbit(j)), NT))
        return out
    if f.family == "A":
        n = f.natural_size
        if f.isogeny == "GL":
            return [(NilpotentOrbit(Partition([1])), TRIV)] if n == 1 else []
        if f.isogeny == "sc":  # SL(n)
            if n == 1:
                return [(NilpotentOrbit(Partition([1])), TRIV)]
            from math import gcd

            return [
                (NilpotentOrbit(Partition([n])), CentralCharacter(f"res{r}"))
                for r in range(1, n)
                if gcd(r, n) == 1
            ]
        raise ValueError(f"unsupported isogeny {f.isogeny} for cuspidal pairs")
    raise ValueError(f"cuspidal pairs of {f.family} factors are not computed here")


def _residual_families(g: GroupForm) -> list[tuple[int, Partition, CentralCharacter]]:
    """(residual rank, residual cuspidal orbit, central character) choices
    for cuspidal supports inside a single classical factor."""
    f = g.single
    out = []
    if f.family == "C":
        for k in range(0, f.rank + 1):
            t = k * (k + 1) // 2
            if t > f.rank:
                break
            out.append((t, _sp_cuspidal_orbit(k), _sp_sign(k)))
        return out
    if f.family in ("B", "D"):
        m = f.natural_size
        start = 1 if m % 2 else 0
        k = start
        while k * k <= m:
            if (m - k * k) % 2 == 0:
                rank = (k * k - (1 if m % 2 else 0)) // 2
                if not (f.family == "D" and rank == 1):
                    out.append((rank, _so_square_orbit(k), TRIV))
            k += 2
        if f.isogeny == "sc":  # Spin: the nontrivial-character family
            j = 1
            while j * (j + 1) // 2 <= m:
                t = j * (j + 1) // 2
                if (m - t) % 2 == 0:
                    rank = (t - (1 if m % 2 else 0)) // 2
                    if not (f.family == "D" and rank == 1):
                        out.append((rank, _so_triangular_orbit(j), NT))
                j += 1
        return out
    raise ValueError("cuspidal supports are enumerated for Sp, SO and Spin only")


def enumerate_cuspidal_data(g: GroupForm, ell: int) -> list[CuspidalDatum]:
    """All ell-cuspidal data of Sp(2n), SO(m) or Spin(m); ell = 0 gives
    the 0-cuspidal data (all GL blocks of size 1).

    The GL block sizes run over partitions of the leftover rank into
    powers of ell, each block carrying its regular orbit; each Levi
    supports exactly one datum per residual family.
    """
    f = g.single
    if ell != 0 and not rather_good(g, ell):
        raise ValueError(f"{ell} is not rather good for {g}")
    rank = f.rank
    out = []
    for res_rank, res_orbit, chi in _residual_families(g):
        s = rank - res_rank
        if s < 0:
            continue
        if ell == 0:
            nus = [Partition([1] * s)]
        else:
            nus = enumerate_partitions(s, PartitionConstraint("powers", ell=ell))
        for nu in nus:
            levi = LeviClass(nu.parts, res_rank, g)
            data = LeviOrbitData(
                tuple(Partition([b]) for b in nu.parts),
                NilpotentOrbit(res_orbit) if res_orbit.size else None,
            )
            out.append(CuspidalDatum(levi, data, chi, ell))
    return out


def central_character_of(d: CuspidalDatum) -> CentralCharacter:
    """Central character from the datum's residual cuspidal orbit.

    GL blocks carry trivial local systems and contribute trivially.  The
    Sp residual Sp(k(k+1)) contributes (-1)^{k(k+1)/2}; the SO/Spin square
    family is trivial, the triangular family nontrivial.  The residual
    orbits (1) and () lie in both SO families, so that ambiguous case
    defers to the stored label.
    """
    f = d.levi.ambient.single
    p = d.residual_partition
    if f.family == "A":
        return d.central_char
    if f.family == "C":
        k = len(p.parts)
        if p != _sp_cuspidal_orbit(k):
            raise ValueError(f"{p} is not a symplectic cuspidal orbit")
        return _sp_sign(k)
    # B/D: distinguish the two families by shape.
    k = len(p.parts)
    if p.size <= 1:
        return d.central_char
    if p == _so_square_orbit(k):
        return TRIV
    if p == _so_triangular_orbit((p.parts[0] + 1) // 2):
        return NT
    raise ValueError(f"{p} is not an orthogonal cuspidal orbit")


# ------------------------------------------------------------------- order


def order_leq(d1: CuspidalDatum, d2: CuspidalDatum) -> bool:
    """Lusztig's order: equal central characters, Levi embedding, and the
    big residual orbit inside the closure of the induced orbit.

    The GL components of the induced orbit are automatically regular, so
    only the residual component is tested, over all embedding assignments.
    """
    if d1.levi.ambient != d2.levi.ambient:
        raise ValueError("cuspidal data live in different ambient groups")
    if central_character_of(d1) != central_character_of(d2):
        return False
    fam = d1.levi.ambient.single.family
    res1 = d1.residual_partition
    res2 = d2.residual_partition
    for groups, rem in _assignments(d1.gl_multiset, d2.gl_multiset):
        if fam == "A":
            if not rem:
                return True
            continue
        if sum(rem) + d1.levi.residual_rank != d2.levi.residual_rank:
            continue
        induced = res1
        for v in rem:
            induced = add_padded(induced, Partition([2 * v]))
        if induced.size:
            induced = collapse(induced, fam)
        if induced.size == res2.size and dominance_leq(res2, induced):
            return True
    return False


def zero_series_of(d: CuspidalDatum) -> CuspidalDatum:
    """The 0-cuspidal datum whose series contains d.

    Computed twice: as the unique order-maximal 0-cuspidal datum below d,
    and by the closed form (same residual family and rank).  A mismatch
    raises InternalInconsistencyError; agreement is part of the package's
    self-verification.
    """
    g = d.levi.ambient
    zdata = enumerate_cuspidal_data(g, 0)
    below = [z for z in zdata if order_leq(z, d)]
    if not below:
        raise InternalInconsistencyError(f"no 0-cuspidal datum below {d}")
    maxima = [
        z for z in below if all(order_leq(w, z) for w in below)
    ]
    if len(maxima) != 1:
        raise InternalInconsistencyError(
            f"0-cuspidal maximum below {d} is not unique: {len(maxima)} found"
        )
    by_order = maxima[0]
    closed = [
        z
        for z in zdata
        if z.levi.residual_rank == d.levi.residual_rank
        and z.residual_partition == d.residual_partition
        and central_character_of(z) == central_character_of(d)
    ]
    if len(closed) != 1 or closed[0] != by_order:
        raise InternalInconsistencyError(
            f"closed-form 0-series of {d} disagrees with the order maximum"
        )
    return by_order


def partition_into_zero_series(
    g: GroupForm, ell: int
) -> dict[CuspidalDatum, list[CuspidalDatum]]:
    """Fibers of zero_series_of over the ell-cuspidal data; the blocks
    cover the data disjointly."""
    fibers: dict[CuspidalDatum, list[CuspidalDatum]] = {
        z: [] for z in enumerate_cuspidal_data(g, 0)
    }
    for d in enumerate_cuspidal_data(g, ell):
        fibers[zero_series_of(d)].append(d)
    return fibers


# --------------------------------------------------------------- counting


def _multiplicity_vector(nu: tuple[int, ...]) -> list[int]:
    return [nu.count(s) for s in sorted(set(nu), reverse=True)]


def series_size(g: GroupForm, d: CuspidalDatum) -> int:
    """Cardinality of the induction series attached to d.

    Characteristic 0: the relative Weyl group is a hyperoctahedral group
    on the number of GL(1) blocks, so the count is a bipartition number.
    Characteristic ell: the ell-modular irreducible count of the wreath
    product on the block-size multiplicities.
    """
    if d.char_tag == 0:
        return len(enumerate_bipartitions(len(d.gl_multiset)))
    return modular_irr_count_wreath(_multiplicity_vector(d.gl_multiset), d.char_tag)


@dataclass(frozen=True)
class CountingReport:
    n: int
    ell: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_counting_identity(n: int, ell: int) -> CountingReport:
    """Sum of modular series sizes over Part(n, ell) against |Bipart(n)|."""
    powers = PartitionConstraint("powers", ell=ell)
    lhs = 0
    for nu in enumerate_partitions(n, powers):
        lhs += modular_irr_count_wreath(_multiplicity_vector(nu.parts), ell)
    rhs = len(enumerate_bipartitions(n))
    return CountingReport(n, ell, lhs, rhs)


def lusztig_hypothesis(g: GroupForm, chi: CentralCharacter, ell: int) -> bool:
    """True iff ell divides no relative Weyl group order over the
    ell-cuspidal data with central character chi."""
    for d in enumerate_cuspidal_data(g, ell):
        if central_character_of(d) != chi:
            continue
        if weyl_order(relative_weyl(g, d.levi)) % ell == 0:
            return False
    return True


def census(g: GroupForm, ell: int) -> tuple[int, int]:
    """(sum of series sizes, number of pairs): the two sides of the
    generalized Springer partition at cardinality level."""
    total = sum(series_size(g, d) for d in enumerate_cuspidal_data(g, ell))
    return total, len(enumerate_pairs(g))
