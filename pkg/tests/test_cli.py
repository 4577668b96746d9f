import json

import pytest

from modspring.cli import main, parse_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_group_grammar():
    assert str(parse_group(["Sp", "8"])) == "C4"
    assert len(parse_group(["GL", "3", "x", "Sp", "4"]).factors) == 2
    from modspring.cli import UsageError

    with pytest.raises(UsageError):
        parse_group(["Sp"])
    with pytest.raises(UsageError):
        parse_group(["Q", "5"])


def test_cuspidal_verb(capsys):
    code, out = run(capsys, "cuspidal", "Sp", "8", "--l", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["count"] == 5
    fibers = sorted(f["size"] for f in payload["zero_series_fibers"])
    assert fibers == [1, 2, 2]


def test_verify_identity_verb(capsys):
    code, out = run(capsys, "verify-identity", "--n", "6", "--l", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["equal"] and payload["lhs"] == payload["rhs"]


def test_report_verb(capsys):
    code, out = run(capsys, "report", "B4-l3")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"]


def test_orbits_tsv_deterministic(capsys):
    code1, out1 = run(capsys, "orbits", "Sp", "6", "--output", "tsv")
    code2, out2 = run(capsys, "orbits", "Sp", "6", "--output", "tsv")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "2.2.2" in out1


def test_rather_good_verb(capsys):
    code, out = run(capsys, "rather-good", "GL", "2", "--l", "2")
    assert code == 0
    assert json.loads(out)["rather_good"] is True
    code, out = run(capsys, "rather-good", "SL", "2", "--l", "2")
    assert json.loads(out)["rather_good"] is False


def test_blocks_verb(capsys):
    code, out = run(capsys, "blocks", "Sp", "8", "--l", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["weyl_group"] == "B4"
    singles = [b for b in payload["blocks"] if len(b["labels"]) == 1 and b["defects"] == [0]]
    assert len(singles) == 8


def test_order_poset_dot(capsys):
    code, out = run(capsys, "order-poset", "Sp", "6", "--l", "3", "--output", "dot")
    assert code == 0
    assert out.startswith("digraph order {")
    assert "->" in out


def test_usage_error_exit_code(capsys):
    code = main(["cuspidal", "Sp", "8"])  # missing --l
    assert code == 2


def test_missing_ell_rejected_for_zero_series(capsys):
    assert main(["zero-series", "Sp", "4"]) == 2


def test_bad_prime_is_data_error(capsys):
    assert main(["cuspidal", "Sp", "4", "--l", "2"]) == 2


def test_order_poset_dot_reachability(capsys):
    # The DOT graph is a transitive reduction whose reachability equals
    # the computed order on cuspidal data.
    from modspring.cuspidal import enumerate_cuspidal_data, order_leq
    from modspring.orbits import Sp

    code, out = run(capsys, "order-poset", "Sp", "8", "--l", "3", "--output", "dot")
    assert code == 0
    edges = set()
    nodes = set()
    for line in out.splitlines():
        line = line.strip().rstrip(";")
        if "->" in line:
            a, b = [x.strip().strip('"') for x in line.split("->")]
            edges.add((a, b))
        elif line.startswith('"'):
            nodes.add(line.strip('"'))
    # reachability closure of the cover edges
    reach = {n: {n} for n in nodes}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            new = reach[b] - reach[a]
            if new:
                reach[a] |= new
                changed = True
    data = enumerate_cuspidal_data(Sp(8), 3)
    names = {}
    for d in data:
        nu = ".".join(str(x) for x in d.levi.gl_blocks) or "-"
        names[d] = f"nu({nu})|r{d.levi.residual_rank}"
    for a in data:
        for b in data:
            assert (names[b] in reach[names[a]]) == order_leq(a, b), (a, b)
    # transitive reduction: no cover edge is implied by a longer path
    for a, b in edges:
        for c in nodes - {a, b}:
            assert not (c in reach[a] and b in reach[c]), (a, c, b)
