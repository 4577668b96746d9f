"""Weyl group character tables, ell-blocks and character induction.

Symmetric group tables come from the Murnaghan-Nakayama recursion;
hyperoctahedral tables from the standard wreath-product rule for
(Z/2) wr S_n, where the first component of a bipartition label carries the
trivial Z/2-character and the second the sign.  Exceptional tables are
never built here; they are ingested from TSV data files and validated.

All arithmetic is exact.  Blocks are computed by the central-character
congruence: chi and psi share an ell-block iff for every class C

    |C| chi(C) / chi(1)  ==  |C| psi(C) / psi(1)   (mod ell),

which is the standard criterion and stays in the integers because Weyl
group characters are rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Optional, TextIO, Union

from modspring.partitions import (
    Bipartition,
    Partition,
    enumerate_bipartitions,
    enumerate_partitions,
    standard_count,
)

__all__ = [
    "WeylDescriptor",
    "symmetric_group",
    "hyperoctahedral_group",
    "exceptional_group",
    "product_group",
    "SignedCycleType",
    "CharacterTable",
    "BlockPartition",
    "symmetric_character_value",
    "build_character_table",
    "l_blocks",
    "defect",
    "modular_irr_count_wreath",
    "induce_character",
    "weyl_order",
    "valuation",
    "load_character_table_tsv",
    "dump_character_table_tsv",
    "load_fusion_tsv",
]

# Fundamental degrees of the exceptional Weyl groups; the group order is
# their product.
EXCEPTIONAL_DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


@dataclass(frozen=True)
class WeylDescriptor:
    """A finite Weyl group: symmetric, hyperoctahedral, named exceptional,
    or a product of those."""

    kind: str  # "symmetric" | "hyperoctahedral" | "exceptional" | "product"
    rank: int = 0
    name: str = ""
    factors: tuple["WeylDescriptor", ...] = ()

    @property
    def order(self) -> int:
        if self.kind == "symmetric":
            return factorial(self.rank)
        if self.kind == "hyperoctahedral":
            return 2**self.rank * factorial(self.rank)
        if self.kind == "exceptional":
            n = 1
            for d in EXCEPTIONAL_DEGREES[self.name]:
                n *= d
            return n
        n = 1
        for f in self.factors:
            n *= f.order
        return n

    def __str__(self) -> str:
        if self.kind == "symmetric":
            return f"S{self.rank}"
        if self.kind == "hyperoctahedral":
            return f"B{self.rank}"
        if self.kind == "exceptional":
            return f"W({self.name})"
        return " x ".join(str(f) for f in self.factors) if self.factors else "1"


def symmetric_group(n: int) -> WeylDescriptor:
    return WeylDescriptor("symmetric", rank=n)


def hyperoctahedral_group(n: int) -> WeylDescriptor:
    return WeylDescriptor("hyperoctahedral", rank=n)


def exceptional_group(name: str) -> WeylDescriptor:
    if name not in EXCEPTIONAL_DEGREES:
        raise ValueError(f"unknown exceptional type {name!r}")
    return WeylDescriptor("exceptional", name=name)


def product_group(*factors: WeylDescriptor) -> WeylDescriptor:
    return WeylDescriptor("product", factors=tuple(factors))


def weyl_order(g: WeylDescriptor) -> int:
    return g.order


def valuation(n: int, ell: int) -> int:
    """ell-adic valuation of a positive integer."""
    if n <= 0:
        raise ValueError("valuation needs a positive integer")
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


@dataclass(frozen=True)
class SignedCycleType:
    """Conjugacy class label of (Z/2) wr S_n.

    positive_part lists cycle lengths whose sign product is +1,
    negative_part those with product -1.
    """

    positive_part: Partition
    negative_part: Partition

    @property
    def size(self) -> int:
        return self.positive_part.size + self.negative_part.size

    def __str__(self) -> str:
        return f"({self.positive_part}+|{self.negative_part}-)"


# ------------------------------------------------------------------ tables


@dataclass(frozen=True)
class CharacterTable:
    group: WeylDescriptor
    irr_labels: tuple
    class_labels: tuple
    class_sizes: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]  # rows: irreducibles, cols: classes
    _label_index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_label_index", {lab: i for i, lab in enumerate(self.irr_labels)}
        )

    @property
    def identity_index(self) -> int:
        for j, s in enumerate(self.class_sizes):
            if s == 1 and all(row[j] >= 1 for row in self.values):
                return j
        raise ValueError("no identity class found")

    def row(self, label) -> tuple[int, ...]:
        return self.values[self._label_index[label]]

    def degree(self, label) -> int:
        return self.row(label)[self.identity_index]

    def degrees(self) -> dict:
        j = self.identity_index
        return {lab: self.values[i][j] for i, lab in enumerate(self.irr_labels)}

    def validate(self) -> None:
        """Exact consistency: sizes sum to |W|, degrees >= 1, row orthogonality."""
        order = self.group.order
        if sum(self.class_sizes) != order:
            raise ValueError("class sizes do not sum to the group order")
        k = len(self.class_labels)
        if len(self.irr_labels) != k:
            raise ValueError("table is not square")
        if any(len(row) != k for row in self.values):
            raise ValueError("ragged value matrix")
        j = self.identity_index  # raises if absent
        if any(row[j] < 1 for row in self.values):
            raise ValueError("non-positive degree")
        for a, ra in enumerate(self.values):
            for b in range(a, len(self.values)):
                rb = self.values[b]
                dot = sum(s * x * y for s, x, y in zip(self.class_sizes, ra, rb))
                if dot != (order if a == b else 0):
                    raise ValueError(
                        f"row orthogonality fails for rows {a}, {b}"
                    )
        for a in range(k):
            ca = [row[a] for row in self.values]
            for b in range(a, k):
                cb = [row[b] for row in self.values]
                dot = sum(x * y for x, y in zip(ca, cb))
                want = order // self.class_sizes[a] if a == b else 0
                if dot != want:
                    raise ValueError(
                        f"column orthogonality fails for classes {a}, {b}"
                    )


# ------------------------------------------------ Murnaghan-Nakayama rule


def _remove_border_strips(parts: tuple[int, ...], r: int):
    """All (smaller shape, strip height) after removing an r-strip.

    Uses beta-numbers: removing a rim hook of length r moves one first
    column hook length down by r; the height is the number of beta values
    jumped over.
    """
    L = len(parts)
    if L == 0:
        return
    beta = [parts[i] + (L - 1 - i) for i in range(L)]
    beta_set = set(beta)
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        new_beta = sorted(beta_set - {b} | {nb}, reverse=True)
        height = sum(1 for x in beta if nb < x < b)
        shape = tuple(
            v for v in (new_beta[j] - (L - 1 - j) for j in range(L)) if v > 0
        )
        yield shape, height


@lru_cache(maxsize=None)
def _mn_symmetric(lam: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    if not alpha:
        return 1 if not lam else 0
    r, rest = alpha[0], alpha[1:]
    total = 0
    for shape, height in _remove_border_strips(lam, r):
        total += (-1) ** height * _mn_symmetric(shape, rest)
    return total


def symmetric_character_value(lam: Partition, alpha: Partition) -> int:
    """Exact character value chi_lam on the class of cycle type alpha in S_n."""
    if lam.size != alpha.size:
        raise ValueError(f"size mismatch: |{lam}| != |{alpha}|")
    return _mn_symmetric(lam.parts, alpha.parts)


@lru_cache(maxsize=None)
def _mn_wreath(
    lam: tuple[int, ...],
    mu: tuple[int, ...],
    pos: tuple[int, ...],
    neg: tuple[int, ...],
) -> int:
    """Wreath-product Murnaghan-Nakayama for (Z/2) wr S_n.

    Strips removed from the first component always contribute +, strips
    from the second pick up the cycle sign (the second component carries
    the sign character of Z/2).
    """
    if not pos and not neg:
        return 1 if not lam and not mu else 0
    if pos:
        r, rest_pos, rest_neg, sign = pos[0], pos[1:], neg, 1
    else:
        r, rest_pos, rest_neg, sign = neg[0], pos, neg[1:], -1
    total = 0
    for shape, height in _remove_border_strips(lam, r):
        total += (-1) ** height * _mn_wreath(shape, mu, rest_pos, rest_neg)
    for shape, height in _remove_border_strips(mu, r):
        total += sign * (-1) ** height * _mn_wreath(lam, shape, rest_pos, rest_neg)
    return total


def _cycle_type_centralizer(p: Partition) -> int:
    z = 1
    for v in set(p.parts):
        m = p.multiplicity(v)
        z *= v**m * factorial(m)
    return z


def signed_cycle_types(n: int) -> list[SignedCycleType]:
    """Conjugacy class labels of (Z/2) wr S_n, in a fixed canonical order."""
    return [
        SignedCycleType(bp.first, bp.second) for bp in enumerate_bipartitions(n)
    ]


def signed_class_size(n: int, c: SignedCycleType) -> int:
    za = _cycle_type_centralizer(c.positive_part) * 2 ** len(c.positive_part)
    zb = _cycle_type_centralizer(c.negative_part) * 2 ** len(c.negative_part)
    return 2**n * factorial(n) // (za * zb)


def build_character_table(g: WeylDescriptor, validate: bool = True) -> CharacterTable:
    """Build the exact table of S_n or (Z/2) wr S_n.

    Exceptional groups are rejected: their tables are data, not
    computation (see the springerdata module).
    """
    if g.kind == "symmetric":
        n = g.rank
        labels = tuple(enumerate_partitions(n))
        classes = tuple(enumerate_partitions(n))
        sizes = tuple(factorial(n) // _cycle_type_centralizer(a) for a in classes)
        values = tuple(
            tuple(_mn_symmetric(lam.parts, a.parts) for a in classes)
            for lam in labels
        )
    elif g.kind == "hyperoctahedral":
        n = g.rank
        labels = tuple(enumerate_bipartitions(n))
        classes = tuple(signed_cycle_types(n))
        sizes = tuple(signed_class_size(n, c) for c in classes)
        values = tuple(
            tuple(
                _mn_wreath(
                    bp.first.parts,
                    bp.second.parts,
                    c.positive_part.parts,
                    c.negative_part.parts,
                )
                for c in classes
            )
            for bp in labels
        )
    else:
        raise ValueError(
            f"cannot build a table for {g}: only symmetric and hyperoctahedral "
            "tables are computed; exceptional tables are ingested"
        )
    table = CharacterTable(g, labels, classes, sizes, values)
    if validate:
        table.validate()
    return table


def hyperoctahedral_degree(n: int, bp: Bipartition) -> int:
    """Degree of the (lam, mu) character: C(n,|lam|) f^lam f^mu."""
    return comb(n, bp.first.size) * standard_count(bp.first) * standard_count(bp.second)


# ------------------------------------------------------------------ blocks


@dataclass(frozen=True)
class BlockPartition:
    prime: int
    blocks: tuple[tuple, ...]  # tuples of irr labels, in table order
    defects: Mapping

    def block_of(self, label) -> tuple:
        for b in self.blocks:
            if label in b:
                return b
        raise KeyError(label)


def defect(degree: int, group_order: int, ell: int) -> int:
    """v_ell(|W|) - v_ell(dim); zero iff the character sits alone in its block."""
    if not (1 <= degree <= group_order):
        raise ValueError("need 1 <= degree <= group order")
    d = valuation(group_order, ell) - valuation(degree, ell)
    if d < 0:
        raise ValueError("degree has larger ell-valuation than the group order")
    return d


def l_blocks(table: CharacterTable, ell: int) -> BlockPartition:
    """ell-blocks from exact central-character congruences.

    Central characters of Weyl groups are rational integers; a fractional
    value signals corrupted ingested data and raises.
    """
    order = table.group.order
    degs = [row[table.identity_index] for row in table.values]
    omegas = []
    for row, d in zip(table.values, degs):
        omega = []
        for s, v in zip(table.class_sizes, row):
            num = s * v
            if num % d != 0:
                raise ValueError(
                    "non-integral central character; table data is corrupt"
                )
            omega.append((num // d) % ell)
        omegas.append(tuple(omega))
    groups: dict[tuple, list] = {}
    for lab, om in zip(table.irr_labels, omegas):
        groups.setdefault(om, []).append(lab)
    blocks = tuple(tuple(b) for b in groups.values())
    defects = {
        lab: defect(d, order, ell) for lab, d in zip(table.irr_labels, degs)
    }
    for b in blocks:
        for lab in b:
            if defects[lab] == 0 and len(b) > 1:
                raise AssertionError(
                    f"defect-0 character {lab} shares a block; blocks are corrupt"
                )
    return BlockPartition(ell, blocks, defects)


def modular_irr_count_wreath(m: Iterable[int], ell: int) -> int:
    """Number of ell-modular irreducibles of prod_i (Z/2) wr S_{m_i}.

    For odd ell the group algebra is Morita equivalent to a sum of
    k[S_a x S_b], so the count is the product of the numbers of
    ell-regular bipartitions.
    """
    if ell == 2:
        raise ValueError(
            "ell = 2 rejected: 2 is never rather good for the ambient groups "
            "whose series this count measures"
        )
    count = 1
    for mi in m:
        count *= len(enumerate_bipartitions(mi, ell_regular=ell))
    return count


def induce_character(
    sub: CharacterTable,
    amb: CharacterTable,
    fusion: Mapping,
    chi,
) -> dict:
    """Multiplicities of Ind_H^G(chi) by Frobenius reciprocity.

    fusion maps each class label of sub to a class label of amb.  The
    result maps ambient irreducible labels to positive multiplicities;
    non-integral or negative values signal bad fusion data.
    """
    missing = [c for c in sub.class_labels if c not in fusion]
    if missing:
        raise ValueError(f"fusion map misses sub-classes: {missing[:4]}")
    amb_index = {lab: j for j, lab in enumerate(amb.class_labels)}
    h = sub.group.order
    chi_row = sub.row(chi)
    fused_cols = [amb_index[fusion[c]] for c in sub.class_labels]
    out = {}
    for lab in amb.irr_labels:
        psi_row = amb.row(lab)
        dot = sum(
            s * cv * psi_row[j]
            for s, cv, j in zip(sub.class_sizes, chi_row, fused_cols)
        )
        if dot % h != 0:
            raise ValueError(f"non-integral induced multiplicity at {lab}")
        mult = dot // h
        if mult < 0:
            raise ValueError(f"negative induced multiplicity at {lab}")
        if mult:
            out[lab] = mult
    return out


# ------------------------------------------------------------ TSV interface
#
# Character table TSV: header lines `#group`, `#classes`, `#sizes`, then one
# row per irreducible:  <label>\t<v_1>\t...\t<v_k>.  Fusion TSV: one
# `<sub-class>\t<amb-class>` pair per line.  Base-10 integers throughout.


def dump_character_table_tsv(table: CharacterTable, out: TextIO) -> None:
    out.write(f"#group {table.group}\n")
    out.write("#classes " + "\t".join(str(c) for c in table.class_labels) + "\n")
    out.write("#sizes " + "\t".join(str(s) for s in table.class_sizes) + "\n")
    for lab, row in zip(table.irr_labels, table.values):
        out.write(str(lab) + "\t" + "\t".join(str(v) for v in row) + "\n")


def _parse_group_label(label: str) -> WeylDescriptor:
    if label in EXCEPTIONAL_DEGREES:
        return exceptional_group(label)
    if label.startswith("W(") and label.endswith(")") and label[2:-1] in EXCEPTIONAL_DEGREES:
        return exceptional_group(label[2:-1])
    if label.startswith("S") and label[1:].isdigit():
        return symmetric_group(int(label[1:]))
    if label.startswith("B") and label[1:].isdigit():
        return hyperoctahedral_group(int(label[1:]))
    raise ValueError(f"unrecognized group label {label!r}")


def load_character_table_tsv(
    source: Union[str, TextIO], validate: bool = True
) -> CharacterTable:
    """Parse and validate a character table TSV; labels stay strings."""
    text = source if isinstance(source, str) else source.read()
    group = None
    classes: Optional[tuple] = None
    sizes: Optional[tuple[int, ...]] = None
    labels: list[str] = []
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#group"):
            group = _parse_group_label(line[len("#group") :].strip())
        elif line.startswith("#classes"):
            classes = tuple(line[len("#classes") :].strip().split("\t"))
        elif line.startswith("#sizes"):
            try:
                sizes = tuple(int(x) for x in line[len("#sizes") :].strip().split("\t"))
            except ValueError as e:
                raise ValueError(f"line {lineno}: bad class size: {e}") from None
        elif line.startswith("#"):
            continue  # comment / provenance
        else:
            fields = line.split("\t")
            if classes is None or len(fields) != len(classes) + 1:
                raise ValueError(
                    f"line {lineno}: expected 1 label + {len(classes or ())} values"
                )
            labels.append(fields[0])
            try:
                rows.append(tuple(int(x) for x in fields[1:]))
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer character value") from None
    if group is None or classes is None or sizes is None:
        raise ValueError("missing #group, #classes or #sizes header")
    if len(sizes) != len(classes):
        raise ValueError("class label and size counts differ")
    table = CharacterTable(group, tuple(labels), classes, sizes, tuple(rows))
    if validate:
        table.validate()
    return table


def load_fusion_tsv(source: Union[str, TextIO]) -> dict:
    text = source if isinstance(source, str) else source.read()
    fusion = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected <sub-class>\\t<amb-class>")
        fusion[fields[0]] = fields[1]
    return fusion
