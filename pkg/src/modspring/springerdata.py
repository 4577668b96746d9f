"""Bundled Springer correspondence tables and the block computations.

The package ships, as TSV data, the ordinary Springer correspondence for
SO(9) (type B4) and for E8, the character tables of W(E7) and W(E8) with
their class fusion, orbit metadata for E8, and the expected block lists.
Everything ingested is treated as untrusted input: tables are validated
against exact arithmetic identities (degree-square sums, orthogonality,
bijectivity) before use, so a single corrupted integer is detected.

The B4 blocks are computed end to end (the W(B4) character table is built
by weylrep); the E8 blocks run through the same l_blocks code path on the
ingested W(E8) table.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from modspring.partitions import Bipartition, Partition
from modspring.weylrep import (
    BlockPartition,
    CharacterTable,
    build_character_table,
    defect,
    exceptional_group,
    hyperoctahedral_group,
    l_blocks,
    load_character_table_tsv,
    load_fusion_tsv,
)

__all__ = [
    "SpringerTable",
    "OrbitMeta",
    "Report",
    "ReportLine",
    "bipartition_label",
    "data_text",
    "b4_character_table",
    "load_springer_table",
    "load_orbit_meta",
    "defect_zero_pairs",
    "block_pair_partition",
    "reproduce_report",
    "bundled_springer_table",
    "bundled_character_table",
    "bundled_fusion",
]

GROUP_ORDERS = {"B4": 384, "E7": 2903040, "E8": 696729600}


def data_text(name: str, data_dir: Optional[Union[str, Path]] = None) -> str:
    """Contents of a bundled data file, or of its override in data_dir."""
    if data_dir is not None:
        path = Path(data_dir) / name
        if not path.exists():
            raise FileNotFoundError(f"missing data file {path}")
        return path.read_text(encoding="utf-8")
    ref = resources.files("modspring").joinpath("data", name)
    if not ref.is_file():
        raise FileNotFoundError(f"missing bundled data file {name}")
    return ref.read_text(encoding="utf-8")


def bipartition_label(bp: Bipartition) -> str:
    """String codec for bipartition character labels: "2.1|1" style."""
    lam = ".".join(str(v) for v in bp.first.parts)
    mu = ".".join(str(v) for v in bp.second.parts)
    return f"{lam}|{mu}"


def parse_bipartition_label(label: str) -> Bipartition:
    lam, _, mu = label.partition("|")
    first = Partition(int(v) for v in lam.split(".") if v)
    second = Partition(int(v) for v in mu.split(".") if v)
    return Bipartition(first, second)


def b4_character_table() -> CharacterTable:
    """The exact W(B4) table with string labels matching the Springer TSV."""
    t = build_character_table(hyperoctahedral_group(4))
    return CharacterTable(
        t.group,
        tuple(bipartition_label(bp) for bp in t.irr_labels),
        t.class_labels,
        t.class_sizes,
        t.values,
    )


# ------------------------------------------------------------ SpringerTable


@dataclass(frozen=True)
class SpringerTable:
    group_label: str
    rows: tuple[tuple[str, str, str], ...]  # (orbit, local system, character)
    degree: dict  # character label -> degree

    def pairs(self) -> list[tuple[str, str]]:
        return [(o, ls) for o, ls, _ in self.rows]

    def character_of(self, orbit: str, local_system: str) -> str:
        for o, ls, ch in self.rows:
            if o == orbit and ls == local_system:
                return ch
        raise KeyError(f"no pair ({orbit}, {local_system}) in the table")

    def pair_of(self, character: str) -> tuple[str, str]:
        for o, ls, ch in self.rows:
            if ch == character:
                return (o, ls)
        raise KeyError(f"character {character} not in the table")


def load_springer_table(
    source: str, degrees: Optional[dict] = None
) -> SpringerTable:
    """Parse a Springer table TSV and run all consistency checks.

    With a degree map (character label -> degree) the bijectivity onto the
    character table's labels and the degree-square sum are verified; a
    corrupted table is rejected.
    """
    group_label = None
    rows: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#group"):
            group_label = line[len("#group") :].strip()
            continue
        if line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(
                f"line {lineno}: expected <orbit>\\t<local-system>\\t<character>"
            )
        rows.append((fields[0], fields[1], fields[2]))
    if group_label is None:
        raise ValueError("missing #group header")
    chars = [ch for _, _, ch in rows]
    if len(set(chars)) != len(chars):
        raise ValueError("character column is not injective")
    pair_keys = [(o, ls) for o, ls, _ in rows]
    if len(set(pair_keys)) != len(pair_keys):
        raise ValueError("duplicate (orbit, local system) pair")
    degree_map: dict = {}
    if degrees is not None:
        if set(chars) != set(degrees):
            raise ValueError(
                "character labels do not biject onto the character table"
            )
        order = GROUP_ORDERS.get(group_label)
        if order is None:
            raise ValueError(f"unknown group label {group_label!r}")
        if sum(degrees[ch] ** 2 for ch in chars) != order:
            raise ValueError("degree-square sum does not match the group order")
        degree_map = dict(degrees)
    return SpringerTable(group_label, tuple(rows), degree_map)


@dataclass(frozen=True)
class OrbitMeta:
    closure_below: dict  # orbit label -> tuple of strictly lower orbit labels
    component_order: dict  # orbit label -> |A_G(x)|

    def strictly_below(self, orbit: str) -> tuple[str, ...]:
        return self.closure_below.get(orbit, ())


def load_orbit_meta(source: str) -> OrbitMeta:
    closure: dict = {}
    orders: dict = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(
                f"line {lineno}: expected <orbit>\\t<lower,orbits>\\t<order>"
            )
        orbit, lower, order = fields
        closure[orbit] = tuple(x for x in lower.split(",") if x)
        orders[orbit] = int(order)
    # The strict-closure lists must stay inside the labelled set and avoid
    # self-reference; that is all a partial order needs at this level.
    for orbit, below in closure.items():
        if orbit in below:
            raise ValueError(f"orbit {orbit} listed in its own closure")
        for x in below:
            if x not in orders:
                raise ValueError(f"closure of {orbit} mentions unknown orbit {x}")
    return OrbitMeta(closure, orders)


# ------------------------------------------------------------ computations


def defect_zero_pairs(
    table: SpringerTable, ell: int, restrict_to: Optional[set] = None
) -> list[tuple[str, str]]:
    """Pairs whose character has ell-defect 0, optionally restricted to an
    orbit set."""
    if not table.degree:
        raise ValueError("table loaded without degrees; defects unavailable")
    order = GROUP_ORDERS[table.group_label]
    out = []
    for orbit, ls, ch in table.rows:
        if restrict_to is not None and orbit not in restrict_to:
            continue
        if defect(table.degree[ch], order, ell) == 0:
            out.append((orbit, ls))
    return out


def block_pair_partition(
    table: SpringerTable,
    blocks: BlockPartition,
    restrict_to: Optional[set] = None,
) -> dict:
    """Map each block (as a tuple of character labels) to its pairs."""
    known = {ch for _, _, ch in table.rows}
    for b in blocks.blocks:
        for lab in b:
            if lab not in known:
                raise ValueError(f"block label {lab} missing from the table")
    out: dict = {b: [] for b in blocks.blocks}
    for orbit, ls, ch in table.rows:
        if restrict_to is not None and orbit not in restrict_to:
            continue
        out[blocks.block_of(ch)].append((orbit, ls))
    return out


# ---------------------------------------------------------- expected files


@dataclass(frozen=True)
class ExpectedBlocks:
    case: str
    defect0: tuple[tuple[str, str], ...]
    blocks: tuple[tuple[tuple[str, str], ...], ...]  # block index order
    rows: tuple[tuple[tuple[str, str], int], ...]  # (pair, idempotent index)


def _parse_pair(token: str) -> tuple[str, str]:
    orbit, _, ls = token.partition(":")
    if not ls:
        raise ValueError(f"malformed pair token {token!r}")
    return (orbit, ls)


def load_expected_blocks(source: str) -> ExpectedBlocks:
    case = ""
    defect0: list = []
    blocks: dict[int, list] = {}
    rows: list = []
    for raw in source.splitlines():
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        head = fields[0]
        if head == "#case":
            case = fields[1] if len(fields) > 1 else line.split(" ", 1)[1].strip()
        elif head == "#defect0":
            defect0 = [_parse_pair(t) for t in fields[1:]]
        elif head == "#block":
            blocks[int(fields[1])] = [_parse_pair(t) for t in fields[2:]]
        elif head == "#row":
            rows.append((_parse_pair(fields[1]), int(fields[2])))
        elif head.startswith("#case"):
            case = head[len("#case") :].strip()
    ordered = tuple(tuple(blocks[i]) for i in sorted(blocks))
    return ExpectedBlocks(case, tuple(defect0), ordered, tuple(rows))


# ----------------------------------------------------------------- reports


@dataclass(frozen=True)
class ReportLine:
    kind: str
    subject: str
    ok: bool
    detail: str = ""

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] {self.kind}: {self.subject}{tail}"


@dataclass(frozen=True)
class Report:
    case: str
    lines: tuple[ReportLine, ...]

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def __str__(self) -> str:
        body = "\n".join(str(line) for line in self.lines)
        verdict = "all checks passed" if self.ok else "CHECKS FAILED"
        return f"case {self.case}: {verdict}\n{body}"


def bundled_character_table(
    name: str, data_dir: Optional[Union[str, Path]] = None
) -> CharacterTable:
    return load_character_table_tsv(data_text(name, data_dir))


def bundled_fusion(name: str, data_dir=None) -> dict:
    return load_fusion_tsv(data_text(name, data_dir))


def bundled_springer_table(case: str, data_dir=None) -> tuple[SpringerTable, CharacterTable]:
    """Springer table plus the character table supplying its degrees."""
    if case == "B4":
        ctab = b4_character_table()
        stab = load_springer_table(
            data_text("b4_springer.tsv", data_dir), ctab.degrees()
        )
        return stab, ctab
    if case == "E8":
        ctab = bundled_character_table("we8_table.tsv", data_dir)
        stab = load_springer_table(
            data_text("e8_springer.tsv", data_dir), ctab.degrees()
        )
        return stab, ctab
    raise ValueError(f"unknown Springer table case {case!r}")


def _numbered_blocks(
    blocks: BlockPartition,
    table: SpringerTable,
    expected: ExpectedBlocks,
) -> dict[int, tuple]:
    """Assign indices to computed blocks by first appearance in the
    expected block lists; no canonical numbering exists, so first
    appearance is the convention."""
    numbering: dict[int, tuple] = {}
    used = set()
    for i, pairs in enumerate(expected.blocks, start=1):
        first = pairs[0]
        ch = table.character_of(*first)
        blk = blocks.block_of(ch)
        if blk in used:
            raise ValueError(f"expected block {i} collides with an earlier one")
        numbering[i] = blk
        used.add(blk)
    return numbering


def reproduce_report(case: str, data_dir=None) -> Report:
    """Re-run a block computation end to end and compare with the bundled
    expected lists; one pass/fail line per checked fact."""
    if case == "B4-l3":
        stab, ctab = bundled_springer_table("B4", data_dir)
        ell = 3
        expected = load_expected_blocks(data_text("b4_expected.tsv", data_dir))
        restrict: Optional[set] = None
        extra_counts = {"defect0_characters": 8}
    elif case == "E8-l7":
        stab, ctab = bundled_springer_table("E8", data_dir)
        ell = 7
        expected = load_expected_blocks(data_text("e8_expected.tsv", data_dir))
        meta = load_orbit_meta(data_text("e8_orbits.tsv", data_dir))
        restrict = set(meta.strictly_below("E8(a7)"))
        extra_counts = {}
    else:
        raise ValueError(f"unknown report case {case!r}")

    lines: list[ReportLine] = []
    blocks = l_blocks(ctab, ell)
    computed_d0 = defect_zero_pairs(stab, ell, restrict)
    expected_d0 = set(expected.defect0)
    if restrict is None:
        # B4: the six listed pairs must be defect-0; the other two
        # defect-0 characters sit above the cuspidal orbit's closure.
        missing = expected_d0 - set(computed_d0)
        lines.append(
            ReportLine(
                "defect-0",
                f"{len(expected_d0)} listed pairs have defect 0",
                not missing,
                "missing: " + ", ".join(map(str, sorted(missing))) if missing else "",
            )
        )
        total_d0_chars = sum(
            1 for d in blocks.defects.values() if d == 0
        )
        want = extra_counts["defect0_characters"]
        lines.append(
            ReportLine(
                "defect-0",
                f"character table has exactly {want} defect-0 characters",
                total_d0_chars == want,
                f"got {total_d0_chars}",
            )
        )
    else:
        lines.append(
            ReportLine(
                "defect-0",
                f"{len(expected_d0)} listed pairs are exactly the defect-0 "
                "pairs on the closure set",
                set(computed_d0) == expected_d0,
                f"computed {len(computed_d0)}",
            )
        )

    # Grouping of the positive-defect pairs into blocks.
    numbering = _numbered_blocks(blocks, stab, expected)
    pair_by_block = block_pair_partition(stab, blocks, restrict)
    listed_pairs = [p for pairs in expected.blocks for p in pairs]
    for i, pairs in enumerate(expected.blocks, start=1):
        got = set(pair_by_block[numbering[i]])
        want_pairs = set(pairs)
        if restrict is None:
            # B4: restrict the computed block content to the listed region
            # (pairs outside the displayed closure set are not listed).
            got = got & (set(listed_pairs) | set(expected.defect0))
        ok = got == want_pairs
        lines.append(
            ReportLine(
                "block",
                f"block {i} holds exactly its {len(pairs)} listed pairs",
                ok,
                "" if ok else f"computed {sorted(got)}",
            )
        )
    # Coverage: every listed pair occurs in exactly one row or defect-0 list.
    seen = list(expected.defect0) + listed_pairs
    lines.append(
        ReportLine(
            "coverage",
            "listed pairs are pairwise distinct across lists",
            len(seen) == len(set(seen)),
        )
    )
    if restrict is not None:
        on_x = [(o, ls) for (o, ls) in stab.pairs() if o in restrict]
        lines.append(
            ReportLine(
                "coverage",
                "closure set carries the listed pairs and nothing else",
                set(on_x) == set(seen) and len(on_x) == len(seen),
                f"{len(on_x)} pairs on the closure set",
            )
        )
    row_pairs = [p for p, _ in expected.rows]
    lines.append(
        ReportLine(
            "coverage",
            "bookkeeping rows cover the block-listed pairs exactly once",
            sorted(row_pairs) == sorted(listed_pairs),
        )
    )
    # Row consistency: each row's pair in the block of its idempotent.
    for pair, idx in expected.rows:
        ch = stab.character_of(*pair)
        ok = idx in numbering and ch in numbering[idx]
        lines.append(
            ReportLine(
                "row",
                f"pair {pair[0]}:{pair[1]} lies in block {idx}",
                ok,
            )
        )
    return Report(case, tuple(lines))
