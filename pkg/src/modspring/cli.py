"""Command-line front end.

Verbs: orbits, pairs, levis, cuspidal, order-poset, zero-series,
verify-identity, blocks, report, rather-good.  Group descriptors follow
the notation `Sp 8`, `SO 9`, `Spin 10`, `GL 3`, `SL 2`, `E8`, with
products joined by `x`.  Output is JSON (schema 1), TSV, or DOT for the
order poset.  Exit status: 0 success, 1 verification failure, 2 usage or
data error.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from modspring.cuspidal import (
    central_character_of,
    enumerate_cuspidal_data,
    order_leq,
    partition_into_zero_series,
    series_size,
    verify_counting_identity,
    zero_series_of,
)
from modspring.levi import enumerate_levi_classes
from modspring.orbits import (
    GL,
    SL,
    SO,
    Sp,
    Spin,
    GroupForm,
    bad_primes,
    central_component_order,
    enumerate_orbits,
    enumerate_pairs,
    rather_good,
    simply_connected,
)
from modspring.springerdata import reproduce_report
from modspring.weylrep import (
    build_character_table,
    hyperoctahedral_group,
    l_blocks,
    symmetric_group,
)

SCHEMA = 1


class UsageError(Exception):
    pass


def parse_group(tokens: list[str]) -> GroupForm:
    """`Sp 8`, `SO 9`, `GL 3`, `E8`, products joined by `x`."""
    words = [w for w in tokens if w != ""]
    parts: list[list[str]] = [[]]
    for w in words:
        if w == "x":
            parts.append([])
        else:
            parts[-1].append(w)
    factors = []
    makers = {"Sp": Sp, "SO": SO, "Spin": Spin, "GL": GL, "SL": SL}
    for piece in parts:
        if not piece:
            raise UsageError("empty group factor")
        name = piece[0]
        if name in makers:
            if len(piece) != 2 or not piece[1].isdigit():
                raise UsageError(f"{name} needs a single integer size")
            factors.append(makers[name](int(piece[1])).factors[0])
        elif name in ("G2", "F4", "E6", "E7", "E8"):
            if len(piece) != 1:
                raise UsageError(f"{name} takes no size")
            factors.append(simply_connected(name, int(name[1])).factors[0])
        else:
            raise UsageError(f"unknown group token {name!r}")
    return GroupForm(tuple(factors))


def _partition_json(p):
    return list(p.parts)


def _orbit_json(o):
    out = {"partition": _partition_json(o.partition)}
    if o.very_even_tag:
        out["tag"] = o.very_even_tag
    return out


def _datum_json(g, d):
    return {
        "gl_blocks": list(d.levi.gl_blocks),
        "residual_rank": d.levi.residual_rank,
        "residual_orbit": _partition_json(d.residual_partition),
        "central_character": d.central_char.label,
        "char_tag": d.char_tag,
        "series_size": series_size(g, d),
    }


def _emit(payload, fmt, tsv_rows):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    elif fmt == "tsv":
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        raise UsageError(f"format {fmt!r} not supported for this verb")


def cmd_orbits(args):
    g = parse_group(args.group)
    orbits = enumerate_orbits(g)
    payload = {"schema": SCHEMA, "group": str(g), "orbits": [_orbit_json(o) for o in orbits]}
    _emit(payload, args.output, [["orbit", "tag"]] + [
        [".".join(str(v) for v in o.partition.parts), o.very_even_tag or ""] for o in orbits
    ])
    return 0


def cmd_pairs(args):
    g = parse_group(args.group)
    pairs = enumerate_pairs(g)
    payload = {
        "schema": SCHEMA,
        "group": str(g),
        "count": len(pairs),
        "pairs": [
            {"orbit": _orbit_json(p.orbit), "local_system": str(p.local_system)}
            for p in pairs
        ],
    }
    _emit(payload, args.output, [["orbit", "local_system"]] + [
        [".".join(str(v) for v in p.orbit.partition.parts), str(p.local_system)]
        for p in pairs
    ])
    return 0


def cmd_levis(args):
    g = parse_group(args.group)
    classes = enumerate_levi_classes(g)
    payload = {
        "schema": SCHEMA,
        "group": str(g),
        "levi_classes": [
            {"gl_blocks": list(c.gl_blocks), "residual_rank": c.residual_rank}
            for c in classes
        ],
    }
    _emit(payload, args.output, [["gl_blocks", "residual_rank"]] + [
        [".".join(str(b) for b in c.gl_blocks) or "-", c.residual_rank] for c in classes
    ])
    return 0


def _require_ell(args):
    if args.l is None:
        raise UsageError("this verb requires --l")
    return args.l


def cmd_cuspidal(args):
    g = parse_group(args.group)
    ell = _require_ell(args)
    data = enumerate_cuspidal_data(g, ell)
    fibers = partition_into_zero_series(g, ell) if ell else None
    items = []
    for d in data:
        entry = _datum_json(g, d)
        if ell:
            z = zero_series_of(d)
            entry["zero_series_residual_rank"] = z.levi.residual_rank
        items.append(entry)
    payload = {"schema": SCHEMA, "group": str(g), "ell": ell, "count": len(data), "data": items}
    if fibers is not None:
        payload["zero_series_fibers"] = [
            {"residual_rank": z.levi.residual_rank, "size": len(block)}
            for z, block in fibers.items()
        ]
    _emit(payload, args.output, [["gl_blocks", "residual_rank", "chi", "series_size"]] + [
        [".".join(str(b) for b in d.levi.gl_blocks) or "-", d.levi.residual_rank,
         d.central_char.label, series_size(g, d)] for d in data
    ])
    return 0


def cmd_zero_series(args):
    g = parse_group(args.group)
    ell = _require_ell(args)
    fibers = partition_into_zero_series(g, ell)
    payload = {
        "schema": SCHEMA,
        "group": str(g),
        "ell": ell,
        "series": [
            {
                "zero_cuspidal": _datum_json(g, z),
                "members": [_datum_json(g, d) for d in block],
            }
            for z, block in fibers.items()
        ],
    }
    rows = [["zero_residual_rank", "member_gl_blocks"]]
    for z, block in fibers.items():
        for d in block:
            rows.append([z.levi.residual_rank, ".".join(str(b) for b in d.levi.gl_blocks) or "-"])
    _emit(payload, args.output, rows)
    return 0


def cmd_order_poset(args):
    g = parse_group(args.group)
    ell = _require_ell(args)
    data = enumerate_cuspidal_data(g, ell)
    names = {}
    for d in data:
        nu = ".".join(str(b) for b in d.levi.gl_blocks) or "-"
        names[d] = f"nu({nu})|r{d.levi.residual_rank}"
    le = {
        (a, b)
        for a in data
        for b in data
        if a != b and order_leq(a, b)
    }
    covers = [
        (a, b)
        for (a, b) in le
        if not any((a, c) in le and (c, b) in le for c in data)
    ]
    if args.output == "dot":
        lines = ["digraph order {"]
        for d in sorted(data, key=lambda d: names[d]):
            lines.append(f'  "{names[d]}";')
        for a, b in sorted(covers, key=lambda e: (names[e[0]], names[e[1]])):
            lines.append(f'  "{names[a]}" -> "{names[b]}";')
        lines.append("}")
        print("\n".join(lines))
        return 0
    payload = {
        "schema": SCHEMA,
        "group": str(g),
        "ell": ell,
        "nodes": sorted(names.values()),
        "covers": sorted([names[a], names[b]] for a, b in covers),
    }
    _emit(payload, args.output, [["lower", "upper"]] + sorted(
        [names[a], names[b]] for a, b in covers
    ))
    return 0


def cmd_verify_identity(args):
    if args.n is None:
        raise UsageError("verify-identity requires --n")
    ell = _require_ell(args)
    report = verify_counting_identity(args.n, ell)
    payload = {
        "schema": SCHEMA,
        "n": report.n,
        "ell": report.ell,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "equal": report.equal,
    }
    _emit(payload, args.output, [["n", "ell", "lhs", "rhs", "equal"],
                                 [report.n, report.ell, report.lhs, report.rhs, report.equal]])
    return 0 if report.equal else 1


def cmd_blocks(args):
    g = parse_group(args.group)
    ell = _require_ell(args)
    f = g.single
    if f.family == "A":
        table = build_character_table(symmetric_group(f.natural_size))
        labeler = str
    elif f.family in ("B", "C"):
        table = build_character_table(hyperoctahedral_group(f.rank))
        from modspring.springerdata import bipartition_label

        labeler = bipartition_label
    else:
        raise UsageError("blocks are computed for Sp, SO(odd), GL and SL only")
    blocks = l_blocks(table, ell)
    payload = {
        "schema": SCHEMA,
        "weyl_group": str(table.group),
        "ell": ell,
        "blocks": [
            {
                "labels": [labeler(lab) for lab in b],
                "defects": [blocks.defects[lab] for lab in b],
            }
            for b in blocks.blocks
        ],
    }
    rows = [["block", "label", "defect"]]
    for i, b in enumerate(blocks.blocks, start=1):
        for lab in b:
            rows.append([i, labeler(lab), blocks.defects[lab]])
    _emit(payload, args.output, rows)
    return 0


def cmd_report(args):
    report = reproduce_report(args.case, data_dir=args.data_dir)
    if args.output == "json":
        payload = {
            "schema": SCHEMA,
            "case": report.case,
            "ok": report.ok,
            "lines": [
                {"kind": l.kind, "subject": l.subject, "ok": l.ok, "detail": l.detail}
                for l in report.lines
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(str(report))
    return 0 if report.ok else 1


def cmd_rather_good(args):
    g = parse_group(args.group)
    ell = _require_ell(args)
    payload = {
        "schema": SCHEMA,
        "group": str(g),
        "ell": ell,
        "rather_good": rather_good(g, ell),
        "bad_primes": sorted(bad_primes(g)),
        "central_component_order": central_component_order(g),
    }
    _emit(payload, args.output, [["group", "ell", "rather_good"],
                                 [str(g), ell, rather_good(g, ell)]])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modspring",
        description="Exact combinatorics of cuspidal data, induction series "
        "and Weyl group blocks.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(verb, fn, group=True, ell=True, extra=None):
        p = sub.add_parser(verb)
        if group:
            p.add_argument("group", nargs="+", help="e.g. Sp 8, SO 9, GL 3 x Sp 4")
        if ell:
            p.add_argument("--l", type=int, default=None, help="prime, or 0 for characteristic 0")
        p.add_argument("--output", choices=("json", "tsv", "dot"), default="json")
        if extra:
            extra(p)
        p.set_defaults(fn=fn)

    add("orbits", cmd_orbits, ell=False)
    add("pairs", cmd_pairs, ell=False)
    add("levis", cmd_levis, ell=False)
    add("cuspidal", cmd_cuspidal)
    add("order-poset", cmd_order_poset)
    add("zero-series", cmd_zero_series)
    add("verify-identity", cmd_verify_identity, group=False,
        extra=lambda p: p.add_argument("--n", type=int, default=None))
    add("blocks", cmd_blocks)
    add("report", cmd_report, group=False, ell=False,
        extra=lambda p: (p.add_argument("case", choices=("B4-l3", "E8-l7")),
                         p.add_argument("--data-dir", default=None)))
    add("rather-good", cmd_rather_good)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (ValueError, FileNotFoundError, KeyError) as e:
        print(f"data error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
