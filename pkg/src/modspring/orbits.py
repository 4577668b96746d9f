"""Nilpotent orbits of classical groups and rather-good primes.

Orbits are constrained partitions (Jordan types).  Component groups A_G(x)
follow the standard classical formulas, which are guarded downstream by a
census identity against the cuspidal-data count: a wrong formula would
break the census loudly.

A GroupForm describes a reductive group as a list of quasi-simple factors
with isogeny information, an optional central torus, and an optional
finite central kernel (for quotients of simply connected products).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterable, Optional

from modspring.partitions import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    is_valid_orbit_partition,
    PartitionConstraint,
)

__all__ = [
    "Factor",
    "GroupForm",
    "GL",
    "SL",
    "PGL",
    "Sp",
    "SO",
    "Spin",
    "simply_connected",
    "adjoint",
    "NilpotentOrbit",
    "ComponentGroup",
    "Pair",
    "enumerate_orbits",
    "closure_leq",
    "is_distinguished",
    "component_group",
    "enumerate_pairs",
    "rather_good",
    "cogood_reduce",
    "bad_primes",
    "central_component_order",
]

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")

BAD_PRIMES = {
    "A": (),
    "B": (2,),
    "C": (2,),
    "D": (2,),
    "G2": (2, 3),
    "F4": (2, 3),
    "E6": (2, 3),
    "E7": (2, 3),
    "E8": (2, 3, 5),
}


def _factor_bad_primes(f: "Factor") -> tuple[int, ...]:
    # Low-rank coincidences are simply laced: B1 = C1 = A1, D2 = A1 x A1,
    # D3 = A3.  Their root systems have no bad prime.
    if f.family in ("B", "C") and f.rank < 2:
        return ()
    if f.family == "D" and f.rank < 4:
        return ()
    return BAD_PRIMES[f.family]


@dataclass(frozen=True)
class Factor:
    """One quasi-simple factor: family, Lie rank, isogeny.

    Isogeny values: "sc", "adjoint", "GL", "SO".  The simply connected
    member of each family absorbs its classical name (SL = sc type A,
    Sp = sc type C, Spin = sc type B/D); "SO" is the intermediate form of
    types B (adjoint) and D (index-2 quotient).
    """

    family: str
    rank: int
    isogeny: str = "sc"

    def __post_init__(self):
        if self.family not in CLASSICAL + EXCEPTIONAL:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        iso = self.isogeny
        allowed = {
            "A": ("sc", "adjoint", "GL"),
            "B": ("sc", "adjoint"),
            "C": ("sc", "adjoint"),
            "D": ("sc", "adjoint", "SO"),
        }.get(self.family, ("sc", "adjoint"))
        if iso not in allowed:
            raise ValueError(f"isogeny {iso!r} invalid for family {self.family}")

    @property
    def natural_size(self) -> int:
        """Size of the partitions naming this factor's nilpotent orbits."""
        if self.family == "A":
            return self.rank + 1
        if self.family == "B":
            return 2 * self.rank + 1
        if self.family in ("C", "D"):
            return 2 * self.rank
        raise ValueError(f"no partition model for family {self.family}")

    def center_components(self) -> tuple[int, ...]:
        """Cyclic structure of the simply connected factor's center."""
        if self.family == "A":
            return (self.rank + 1,)
        if self.family in ("B", "C"):
            return (2,)
        if self.family == "D":
            return (4,) if self.rank % 2 == 1 else (2, 2)
        return {"E6": (3,), "E7": (2,)}.get(self.family, ())

    def isogeny_kernel_component(self) -> tuple[tuple[int, ...], ...]:
        """Generators (residue tuples in center_components) of the kernel of
        the simply connected cover of this factor in its named isogeny."""
        comps = self.center_components()
        if self.isogeny == "sc" or not comps:
            return ()
        if self.isogeny == "adjoint" or self.isogeny == "GL":
            # Full center.  GL is handled as PGL here because the symbolic
            # quotient by the connected center has already been taken when
            # this is called.
            return tuple(
                tuple(1 if j == i else 0 for j in range(len(comps)))
                for i in range(len(comps))
            )
        if self.isogeny == "SO" and self.family == "D":
            # Kernel of Spin(2n) -> SO(2n): order 2 inside Z/4 or (Z/2)^2.
            return ((2,),) if self.rank % 2 == 1 else ((1, 1),)
        raise AssertionError(f"unhandled isogeny {self.isogeny}")

    def central_quotient_order(self) -> int:
        """|Z(F)/Z(F)^o| of this factor in its named isogeny."""
        full = 1
        for c in self.center_components():
            full *= c
        if self.family == "A" and self.isogeny == "GL":
            return 1  # center is a torus
        if self.isogeny == "sc":
            return full
        if self.isogeny == "adjoint":
            return 1
        if self.isogeny == "SO":
            return full // 2
        raise AssertionError


@dataclass(frozen=True)
class GroupForm:
    """A reductive group: factors, central torus rank, optional kernel.

    kernel generators are residue tuples in the concatenated
    center_components of all factors; a nonempty kernel requires all
    factors simply connected (it describes the quotient of their product).
    """

    factors: tuple[Factor, ...]
    central_torus_rank: int = 0
    kernel: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.kernel:
            if any(f.isogeny != "sc" for f in self.factors):
                raise ValueError("explicit kernel requires simply connected factors")
            width = len(self._center_shape())
            for gen in self.kernel:
                if len(gen) != width:
                    raise ValueError("kernel generator width mismatch")

    def _center_shape(self) -> tuple[int, ...]:
        shape: list[int] = []
        for f in self.factors:
            shape.extend(f.center_components())
        return tuple(shape)

    @property
    def single(self) -> Factor:
        if len(self.factors) != 1:
            raise ValueError("operation needs a single quasi-simple factor")
        return self.factors[0]

    def __str__(self) -> str:
        names = []
        for f in self.factors:
            iso = "" if f.isogeny == "sc" else f":" + f.isogeny
            names.append(f"{f.family}{f.rank}{iso}")
        body = " x ".join(names) if names else "T"
        if self.central_torus_rank:
            body += f" x GL(1)^{self.central_torus_rank}"
        if self.kernel:
            body += " / K"
        return body


def GL(n: int) -> GroupForm:
    return GroupForm((Factor("A", n - 1, "GL"),))


def SL(n: int) -> GroupForm:
    return GroupForm((Factor("A", n - 1, "sc"),))


def PGL(n: int) -> GroupForm:
    return GroupForm((Factor("A", n - 1, "adjoint"),))


def Sp(m: int) -> GroupForm:
    if m % 2 != 0:
        raise ValueError("Sp needs an even size")
    return GroupForm((Factor("C", m // 2, "sc"),))


def SO(m: int) -> GroupForm:
    if m % 2 == 1:
        return GroupForm((Factor("B", (m - 1) // 2, "adjoint"),))
    return GroupForm((Factor("D", m // 2, "SO"),))


def Spin(m: int) -> GroupForm:
    if m % 2 == 1:
        return GroupForm((Factor("B", (m - 1) // 2, "sc"),))
    return GroupForm((Factor("D", m // 2, "sc"),))


def simply_connected(family: str, rank: int) -> GroupForm:
    return GroupForm((Factor(family, rank, "sc"),))


def adjoint(family: str, rank: int) -> GroupForm:
    return GroupForm((Factor(family, rank, "adjoint"),))


# ------------------------------------------------------------------ center


def _subgroup_elements(shape: tuple[int, ...], gens: Iterable[tuple[int, ...]]):
    """All elements of the subgroup of prod Z/shape[i] generated by gens."""
    normalized = [tuple(g[i] % shape[i] for i in range(len(shape))) for g in gens]
    zero = tuple(0 for _ in shape)
    elements = {zero}
    queue = [zero]
    while queue:
        e = queue.pop()
        for g in normalized:
            s = tuple((e[i] + g[i]) % shape[i] for i in range(len(shape)))
            if s not in elements:
                elements.add(s)
                queue.append(s)
    return elements


def _element_order(shape: tuple[int, ...], el: tuple[int, ...]) -> int:
    from math import lcm

    o = 1
    for c, r in zip(shape, el):
        if r % c:
            from math import gcd

            o = lcm(o, c // gcd(c, r))
    return o


def central_component_order(g: GroupForm) -> int:
    """|Z(G)/Z(G)^o|, exactly."""
    if g.kernel:
        shape = g._center_shape()
        full = 1
        for c in shape:
            full *= c
        return full // len(_subgroup_elements(shape, g.kernel))
    order = 1
    for f in g.factors:
        order *= f.central_quotient_order()
    return order


def bad_primes(g: GroupForm) -> frozenset[int]:
    out: set[int] = set()
    for f in g.factors:
        out.update(_factor_bad_primes(f))
    return frozenset(out)


def rather_good(g: GroupForm, ell: int) -> bool:
    """ell is good for G and prime to |Z(G)/Z(G)^o|."""
    return ell not in bad_primes(g) and central_component_order(g) % ell != 0


def cogood_reduce(g: GroupForm) -> GroupForm:
    """Replace G by a semisimple group with the same rather-good primes.

    After symbolically passing to G/Z(G)^o, take the universal cover and
    divide by the part of the covering kernel of order prime to 2 (when
    B/C/D factors occur) or prime to 2 and 3 (when exceptional factors
    occur).  The result splits as (type A semisimple) x (simply connected
    non-A factors) and is a fixed point of this map.
    """
    # Kernel K_0 of the universal cover of G / Z(G)^o, as a subgroup of the
    # product of the simply connected centers.
    shape: list[int] = []
    gens: list[tuple[int, ...]] = []
    offset = 0
    for f in g.factors:
        comps = f.center_components()
        shape.extend(comps)
        semisimplified = f if f.isogeny != "GL" else Factor("A", f.rank, "GL")
        for gen in semisimplified.isogeny_kernel_component():
            gens.append((0,) * offset + gen)
        offset += len(comps)
    width = len(shape)
    gens = [gen + (0,) * (width - len(gen)) for gen in gens]
    for gen in g.kernel:
        gens.append(tuple(gen))
    shape_t = tuple(shape)

    families = {f.family for f in g.factors}
    if families <= {"A"}:
        keep_coprime_to: tuple[int, ...] = ()
    elif families & set(EXCEPTIONAL):
        keep_coprime_to = (2, 3)
    else:
        keep_coprime_to = (2,)

    elements = _subgroup_elements(shape_t, gens)
    kept = [
        el
        for el in elements
        if all(_element_order(shape_t, el) % p != 0 for p in keep_coprime_to)
    ]

    sc_factors = tuple(Factor(f.family, f.rank, "sc") for f in g.factors)
    nontrivial = tuple(sorted(el for el in kept if any(el)))
    if not nontrivial:
        return GroupForm(sc_factors)
    # K is supported on the type A coordinates (non-A centers are 2- or
    # 3-groups, which the coprime filter removed).
    a_width = sum(
        len(f.center_components()) for f in g.factors if f.family == "A"
    )
    pos = 0
    for f in g.factors:
        w = len(f.center_components())
        if f.family != "A" and any(
            any(el[pos : pos + w]) for el in nontrivial
        ):
            raise AssertionError("reduction kernel leaked outside type A")
        pos += w
    # Single adjoint-A shortcut for readability of common outputs.
    if len(g.factors) == 1 and g.factors[0].family == "A":
        full = g.factors[0].rank + 1
        if len(kept) == full:
            return PGL(full)
    return GroupForm(sc_factors, kernel=nontrivial)


# ------------------------------------------------------------------ orbits


@dataclass(frozen=True)
class NilpotentOrbit:
    """A nilpotent orbit named by its partition, with the I/II tag for very
    even type D orbits."""

    partition: Partition
    very_even_tag: Optional[str] = None

    def __str__(self) -> str:
        tag = self.very_even_tag or ""
        return f"{self.partition}{tag}"


@dataclass(frozen=True)
class ComponentGroup:
    """A_G(x): trivial, elementary abelian 2-group, or cyclic."""

    kind: str  # "trivial" | "elem2" | "cyclic"
    param: int = 0  # rank for elem2, order for cyclic

    @property
    def order(self) -> int:
        if self.kind == "trivial":
            return 1
        if self.kind == "elem2":
            return 2**self.param
        return self.param

    def characters(self) -> list:
        """Canonical character labels: subsets of rank positions for elem2,
        residues for cyclic."""
        if self.kind == "trivial":
            return [()]
        if self.kind == "elem2":
            labels = []
            for mask in range(2**self.param):
                labels.append(tuple(i for i in range(self.param) if mask >> i & 1))
            return labels
        return list(range(self.param))


@dataclass(frozen=True)
class Pair:
    orbit: NilpotentOrbit
    local_system: object

    def __str__(self) -> str:
        return f"({self.orbit}, {self.local_system})"


def _classical_single(g: GroupForm) -> Factor:
    f = g.single
    if f.family not in CLASSICAL:
        raise ValueError(
            f"{f.family} factor rejected: exceptional orbit data is ingested, "
            "not computed"
        )
    return f


def enumerate_orbits(g: GroupForm) -> list[NilpotentOrbit]:
    """All nilpotent orbits of a single classical factor.

    Type D very even partitions appear twice, tagged I and II.
    """
    f = _classical_single(g)
    n = f.natural_size
    if f.family == "A":
        return [NilpotentOrbit(p) for p in enumerate_partitions(n)]
    out = []
    constraint = PartitionConstraint("orbit", family=f.family)
    for p in enumerate_partitions(n, constraint):
        if f.family == "D" and all(v % 2 == 0 for v in p.parts) and p.parts:
            out.append(NilpotentOrbit(p, "I"))
            out.append(NilpotentOrbit(p, "II"))
        else:
            out.append(NilpotentOrbit(p))
    return out


def closure_leq(o1: NilpotentOrbit, o2: NilpotentOrbit) -> bool:
    """Orbit closure order, realized as dominance of partitions.

    Two very even orbits with the same partition compare equal only when
    their tags agree.
    """
    if o1.partition == o2.partition and o1.very_even_tag and o2.very_even_tag:
        return o1.very_even_tag == o2.very_even_tag
    return dominance_leq(o1.partition, o2.partition)


def is_distinguished(g: GroupForm, o: NilpotentOrbit) -> bool:
    f = _classical_single(g)
    p = o.partition
    if f.family == "A":
        return p == Partition([f.natural_size]) if f.natural_size else True
    distinct = len(set(p.parts)) == len(p.parts)
    parity = 0 if f.family == "C" else 1
    return distinct and all(v % 2 == parity for v in p.parts)


def component_group(g: GroupForm, o: NilpotentOrbit) -> ComponentGroup:
    """A_G(x) for x in the orbit o, in the isogenies GL, SL, Sp, SO.

    Spin groups are rejected: their component groups are central
    extensions of the SO ones and no computation here needs them.
    """
    f = _classical_single(g)
    p = o.partition
    if f.family == "A":
        if f.isogeny == "GL":
            return ComponentGroup("trivial")
        if f.isogeny == "sc":  # SL(n)
            from math import gcd

            d = 0
            for v in p.parts:
                d = gcd(d, v)
            d = gcd(d, f.natural_size)
            return ComponentGroup("cyclic", d) if d > 1 else ComponentGroup("trivial")
        raise ValueError("component groups for adjoint type A are unsupported")
    if f.family == "C":
        if f.isogeny != "sc":
            raise ValueError("type C component groups are implemented for Sp only")
        r = len({v for v in p.parts if v % 2 == 0})
        return ComponentGroup("elem2", r) if r else ComponentGroup("trivial")
    # B or D
    if not (
        (f.family == "B" and f.isogeny == "adjoint")
        or (f.family == "D" and f.isogeny == "SO")
    ):
        raise ValueError(
            "Spin-isogeny component groups are unsupported; use the SO form"
        )
    odd = len({v for v in p.parts if v % 2 == 1})
    r = max(0, odd - 1)
    return ComponentGroup("elem2", r) if r else ComponentGroup("trivial")


def enumerate_pairs(g: GroupForm) -> list[Pair]:
    """All (orbit, character of A_G(x)) pairs for a classical group."""
    out = []
    for o in enumerate_orbits(g):
        for label in component_group(g, o).characters():
            out.append(Pair(o, label))
    return out
