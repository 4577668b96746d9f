"""Levi subgroup classes, conjugacy embedding, and induced nilpotent orbits.

A Levi class of Sp(2n) or SO(m) is a multiset of GL block sizes plus the
rank of a residual factor of the same classical type; for GL(n)/SL(n) the
blocks partition n and there is no residual part.  Orbit induction follows
the classical recipe: double the GL block partitions, add everything
row-wise to the residual partition, and collapse to the ambient family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from modspring.orbits import Factor, GroupForm, NilpotentOrbit
from modspring.partitions import (
    Partition,
    add_padded,
    collapse,
    enumerate_partitions,
)
from modspring.weylrep import WeylDescriptor, hyperoctahedral_group, product_group

__all__ = [
    "LeviClass",
    "LeviOrbitData",
    "enumerate_levi_classes",
    "embeds",
    "induce_orbit",
    "relative_weyl",
]


@dataclass(frozen=True)
class LeviClass:
    """gl_blocks are sorted descending; residual_rank is the rank of the
    leftover factor of the ambient's type."""

    gl_blocks: tuple[int, ...]
    residual_rank: int
    ambient: GroupForm

    def __post_init__(self):
        object.__setattr__(
            self, "gl_blocks", tuple(sorted(self.gl_blocks, reverse=True))
        )
        f = self.ambient.single
        if f.family == "A":
            if self.residual_rank != 0:
                raise ValueError("type A Levis are products of GLs")
            if sum(self.gl_blocks) != f.natural_size:
                raise ValueError("blocks must partition n")
        else:
            if sum(self.gl_blocks) + self.residual_rank != f.rank:
                raise ValueError("rank equation violated")

    def __str__(self) -> str:
        f = self.ambient.single
        gl = " x ".join(f"GL({b})" for b in self.gl_blocks) or ""
        if f.family == "A":
            return gl or "GL(0)"
        res = {"B": 2 * self.residual_rank + 1, "C": 2 * self.residual_rank, "D": 2 * self.residual_rank}[f.family]
        resname = {"B": f"SO({res})", "C": f"Sp({res})", "D": f"SO({res})"}[f.family]
        return " x ".join(x for x in (gl, resname) if x)


@dataclass(frozen=True)
class LeviOrbitData:
    """Orbit data on a Levi: one partition per GL block (aligned with
    gl_blocks) and an orbit of the residual factor."""

    gl_orbits: tuple[Partition, ...]
    residual_orbit: Optional[NilpotentOrbit]

    def validate_for(self, levi: LeviClass) -> None:
        if len(self.gl_orbits) != len(levi.gl_blocks):
            raise ValueError("one partition per GL block required")
        for b, p in zip(levi.gl_blocks, self.gl_orbits):
            if p.size != b:
                raise ValueError(f"partition {p} does not fit GL({b})")
        f = levi.ambient.single
        if f.family != "A":
            res_size = {
                "B": 2 * levi.residual_rank + 1,
                "C": 2 * levi.residual_rank,
                "D": 2 * levi.residual_rank,
            }[f.family]
            got = self.residual_orbit.partition.size if self.residual_orbit else 0
            if got != res_size:
                raise ValueError(
                    f"residual orbit size {got} does not match rank {levi.residual_rank}"
                )


def enumerate_levi_classes(g: GroupForm) -> list[LeviClass]:
    """All Levi classes of a single classical factor, deterministic order.

    For type D the residual rank 1 case is folded into an extra GL(1)
    block, and split classes of fully-GL Levis are represented once
    (unsplit); no cuspidal datum in scope lives on a split class.
    """
    f = g.single
    if f.family == "A":
        return [
            LeviClass(p.parts, 0, g) for p in enumerate_partitions(f.natural_size)
        ]
    if f.family not in ("B", "C", "D"):
        raise ValueError("exceptional factors have no computed Levi classes")
    out = []
    for r in range(f.rank, -1, -1):
        if f.family == "D" and r == 1:
            continue
        for p in enumerate_partitions(f.rank - r):
            out.append(LeviClass(p.parts, r, g))
    return out


def _assignments(
    blocks: tuple[int, ...], targets: tuple[int, ...]
) -> Iterator[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]]:
    """Ways to split the multiset `blocks` into one group per target (with
    the exact target sum) plus a remainder.  Yields (groups, remainder)."""
    if not targets:
        yield (), tuple(blocks)
        return
    t, rest = targets[0], targets[1:]

    def subsets(pool: tuple[int, ...], total: int, start: int = 0):
        if total == 0:
            yield (), pool
            return
        for i in range(start, len(pool)):
            v = pool[i]
            # skip duplicates of a value already tried at this depth
            if v > total or v in {pool[j] for j in range(start, i)}:
                continue
            remaining = pool[:i] + pool[i + 1 :]
            for chosen, leftover in subsets(remaining, total - v, i):
                yield (v,) + chosen, leftover

    for chosen, leftover in subsets(tuple(blocks), t):
        for groups, rem in _assignments(leftover, rest):
            yield (chosen,) + groups, rem


def embeds(small: LeviClass, big: LeviClass) -> bool:
    """True iff a conjugate of `small` is contained in `big`.

    The GL blocks of the small Levi must split into groups summing to the
    big Levi's GL blocks, with the leftover absorbed into the residual
    factor (together with the small residual rank).
    """
    if small.ambient != big.ambient:
        raise ValueError("embedding test needs a common ambient group")
    fam = small.ambient.single.family
    for groups, remainder in _assignments(small.gl_blocks, big.gl_blocks):
        if fam == "A":
            if not remainder:
                return True
            continue
        if sum(remainder) + small.residual_rank == big.residual_rank:
            return True
    return False


def _double(p: Partition) -> Partition:
    return Partition(2 * v for v in p.parts)


def induce_orbit(levi: LeviClass, data: LeviOrbitData) -> NilpotentOrbit:
    """Induced nilpotent orbit from a Levi to its ambient group.

    Classical recipe: GL parts are doubled and added row-wise to the
    residual partition; the result is collapsed to the ambient family.
    In type A the GL parts are simply added row-wise.
    """
    data.validate_for(levi)
    f = levi.ambient.single
    if f.family == "A":
        total = Partition()
        for p in data.gl_orbits:
            total = add_padded(total, p)
        return NilpotentOrbit(total)
    total = data.residual_orbit.partition if data.residual_orbit else Partition()
    for p in data.gl_orbits:
        total = add_padded(total, _double(p))
    result = collapse(total, f.family)
    if f.family == "D" and result.parts and all(v % 2 == 0 for v in result.parts):
        return NilpotentOrbit(result, "I")
    return NilpotentOrbit(result)


def relative_weyl(g: GroupForm, levi: LeviClass) -> WeylDescriptor:
    """N_G(L)/L for a cuspidal-support Levi of Sp or SO/Spin: the product
    over distinct GL block sizes s of the hyperoctahedral group on the
    multiplicity of s."""
    f = g.single
    if f.family not in ("B", "C", "D"):
        raise ValueError("relative Weyl groups implemented for Sp and SO/Spin only")
    sizes = sorted(set(levi.gl_blocks), reverse=True)
    factors = tuple(
        hyperoctahedral_group(levi.gl_blocks.count(s)) for s in sizes
    )
    if len(factors) == 1:
        return factors[0]
    return product_group(*factors)
