"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Each test prints a `[criterion N] ...` line on success so a -s run reads
as a checklist.  Bounds and tolerances are pinned here, not configurable.
"""

import time

import pytest

from modspring.cuspidal import (
    census,
    central_character_of,
    enumerate_cuspidal_data,
    order_leq,
    verify_counting_identity,
    zero_series_of,
)
from modspring.levi import LeviClass, LeviOrbitData, enumerate_levi_classes, induce_orbit
from modspring.orbits import (
    GL,
    SL,
    SO,
    Sp,
    NilpotentOrbit,
    component_group,
    enumerate_orbits,
    rather_good,
)
from modspring.partitions import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    is_valid_orbit_partition,
    collapse,
    transpose,
)
from modspring.springerdata import (
    b4_character_table,
    bundled_character_table,
    bundled_fusion,
    bundled_springer_table,
    data_text,
    defect_zero_pairs,
    load_expected_blocks,
    load_orbit_meta,
    reproduce_report,
)
from modspring.weylrep import (
    build_character_table,
    hyperoctahedral_group,
    induce_character,
    l_blocks,
    symmetric_group,
)


def ok(n, msg):
    print(f"[criterion {n}] pass: {msg}")


def test_criterion_1_counting_identity():
    t0 = time.time()
    for ell in (3, 5, 7, 11):
        for n in range(0, 13):
            report = verify_counting_identity(n, ell)
            assert report.equal, (n, ell, report)
    elapsed = time.time() - t0
    assert elapsed < 5.0, f"counting identity took {elapsed:.1f}s"
    ok(1, f"sum over Part(n,ell) of modular counts = |Bipart(n)| for n <= 12, "
          f"ell in {{3,5,7,11}} ({elapsed:.2f}s)")


def test_criterion_2_census():
    for n in range(1, 7):
        for ell in (3, 5, 7):
            total, pairs = census(Sp(2 * n), ell)
            assert total == pairs, (n, ell, total, pairs)
    data = enumerate_cuspidal_data(Sp(4), 3)
    from modspring.cuspidal import series_size

    sizes = sorted(series_size(Sp(4), d) for d in data)
    assert sizes == [2, 5] and sum(sizes) == 7
    ok(2, "series sizes sum to the pair count for Sp(2n), n <= 6, "
          "ell in {3,5,7}; Sp(4), ell=3 gives 7 = 5 + 2")


def test_criterion_3_induced_closed_forms():
    # Sp(2n): inducing the cuspidal datum of L_k gives
    # (2n - k(k+1) + 2k, 2(k-1), ..., 4, 2), which dominates the cuspidal
    # orbit of Sp(2n) when n is triangular.
    for n in range(1, 13):
        k = 0
        while k * (k + 1) // 2 <= n:
            t = k * (k + 1) // 2
            levi = LeviClass((1,) * (n - t), t, Sp(2 * n))
            data = LeviOrbitData(
                tuple(Partition([1]) for _ in range(n - t)),
                NilpotentOrbit(Partition(range(2 * k, 0, -2))) if k else None,
            )
            got = induce_orbit(levi, data).partition
            expected = Partition([2 * n - k * (k + 1) + 2 * k] + list(range(2 * (k - 1), 0, -2)))
            assert got == expected, (n, k, got)
            kk = k
            while (kk + 1) * (kk + 2) // 2 <= n:
                kk += 1
            if kk * (kk + 1) // 2 == n:
                cusp = Partition(range(2 * kk, 0, -2))
                assert dominance_leq(cusp, got), (n, k)
            k += 1
    # SO(m): (m - k^2 + 2k - 1, 2k - 3, ...) dominating (2k'-1, 2k'-3, ...).
    # The closed form concerns the k^2-residual families, so k >= 1; the
    # k = 0 torus case of even SO induces the regular orbit (m-1, 1),
    # which the levi property suite checks separately.
    for m in range(3, 16):
        g = SO(m)
        rank = g.single.rank
        k = 1 if m % 2 else 2
        while k * k <= m:
            if (m - k * k) % 2 == 0:
                res_rank = (k * k - (1 if m % 2 else 0)) // 2
                if not (m % 2 == 0 and res_rank == 1):
                    s = rank - res_rank
                    levi = LeviClass((1,) * s, res_rank, g)
                    res = Partition(range(2 * k - 1, 0, -2))
                    data = LeviOrbitData(
                        tuple(Partition([1]) for _ in range(s)),
                        NilpotentOrbit(res) if res.size else None,
                    )
                    got = induce_orbit(levi, data).partition
                    first = m - k * k + 2 * k - 1
                    expected = Partition([first] + list(range(2 * k - 3, 0, -2)))
                    assert got == expected, (m, k, got, expected)
                    kk = k
                    while (kk + 2) ** 2 <= m:
                        kk += 2
                    if kk * kk == m:
                        cusp = Partition(range(2 * kk - 1, 0, -2))
                        assert dominance_leq(cusp, got), (m, k)
            k += 2
    ok(3, "induced-orbit closed forms hold for Sp(2n) n <= 12 and SO(m) "
          "m <= 15, and dominate the cuspidal orbits")


def test_criterion_4_collapse_oracle():
    t0 = time.time()
    for size in range(1, 17):
        for family in ("B", "C", "D"):
            if size % 2 != (1 if family == "B" else 0):
                continue
            valid = [
                q for q in enumerate_partitions(size)
                if is_valid_orbit_partition(q, family)
            ]
            for p in enumerate_partitions(size):
                dominated = [q for q in valid if dominance_leq(q, p)]
                maxima = [
                    q for q in dominated
                    if all(dominance_leq(r, q) for r in dominated)
                ]
                assert len(maxima) == 1, (p, family)
                assert collapse(p, family) == maxima[0], (p, family)
    elapsed = time.time() - t0
    assert elapsed < 30.0, f"collapse oracle took {elapsed:.1f}s"
    ok(4, f"greedy collapse equals the unique brute-force dominance maximum "
          f"for all partitions of size <= 16 ({elapsed:.1f}s)")


def test_criterion_5_total_order():
    for n in range(1, 11):
        zero = enumerate_cuspidal_data(Sp(2 * n), 0)
        for a in zero:
            for b in zero:
                if central_character_of(a) == central_character_of(b):
                    assert order_leq(a, b) or order_leq(b, a), (n, a, b)
    for n in range(1, 7):
        for ell in (0, 3, 5):
            data = enumerate_cuspidal_data(Sp(2 * n), ell)
            for a in data:
                for b in data:
                    if order_leq(a, b) and order_leq(b, a):
                        assert a == b, (n, ell, a, b)
    ok(5, "0-cuspidal data of equal central character are totally ordered "
          "for Sp(2n) n <= 10; the order is antisymmetric for n <= 6")


def test_criterion_6_zero_series_closed_form():
    # zero_series_of computes the order maximum and the closed form and
    # raises InternalInconsistencyError on any disagreement.
    checked = 0
    for n in range(1, 9):
        for ell in (3, 5, 7):
            for d in enumerate_cuspidal_data(Sp(2 * n), ell):
                z = zero_series_of(d)
                assert z.levi.residual_rank == d.levi.residual_rank
                checked += 1
    ok(6, f"order-maximum and closed-form 0-series agree on {checked} "
          f"cuspidal data (Sp(2n), n <= 8, ell in {{3,5,7}})")


def test_criterion_7_rather_good_equivalence():
    groups = [Sp(2 * n) for n in range(1, 9)] + [SO(m) for m in range(3, 14)]
    for g in groups:
        orders = [component_group(g, o).order for o in enumerate_orbits(g)]
        for ell in (2, 3, 5, 7, 11, 13):
            lhs = all(a % ell for a in orders)
            assert lhs == rather_good(g, ell), (g, ell)
    assert rather_good(GL(2), 2) is True
    assert rather_good(SL(2), 2) is False
    ok(7, "A-group and good-prime/center criteria agree for Sp(2n) n <= 8, "
          "SO(m) m <= 13, primes <= 13; GL(2)/SL(2) at 2 as stated")


def test_criterion_8_b4_blocks_end_to_end():
    ctab = b4_character_table()
    blocks = l_blocks(ctab, 3)
    defect0 = [lab for lab, d in blocks.defects.items() if d == 0]
    assert len(defect0) == 8
    stab, _ = bundled_springer_table("B4")
    six = [("51111", "triv"), ("51111", "eps"), ("333", "triv"),
           ("33111", "eps"), ("32211", "triv"), ("2211111", "triv")]
    for pair in six:
        assert stab.character_of(*pair) in defect0, pair
    report = reproduce_report("B4-l3")
    assert report.ok, "\n" + str(report)
    ok(8, "W(B4) at ell=3: exactly 8 defect-0 characters including the six "
          "listed pairs; the seven remaining pairs group into the four "
          "listed blocks; all bookkeeping rows consistent")


def test_criterion_9_e8_blocks():
    t0 = time.time()
    stab, ctab = bundled_springer_table("E8")
    meta = load_orbit_meta(data_text("e8_orbits.tsv"))
    x = set(meta.strictly_below("E8(a7)"))
    expected = load_expected_blocks(data_text("e8_expected.tsv"))
    d0 = defect_zero_pairs(stab, 7, x)
    assert len(d0) == 45 and set(d0) == set(expected.defect0)
    report = reproduce_report("E8-l7")
    assert report.ok, "\n" + str(report)
    assert sum(1 for line in report.lines if line.kind == "row" and line.ok) == 14
    elapsed = time.time() - t0
    assert elapsed < 10.0, f"E8 blocks took {elapsed:.1f}s"
    ok(9, f"E8 at ell=7: the 45 listed pairs are exactly the defect-0 pairs "
          f"on the closure set and the 14 others group as listed "
          f"({elapsed:.2f}s)")


def test_criterion_10_character_induction_display():
    we7 = bundled_character_table("we7_table.tsv")
    we8 = bundled_character_table("we8_table.tsv")
    fusion = bundled_fusion("e7e8_fusion.tsv")
    got = induce_character(we7, we8, fusion, "1_0")
    assert got == {"1_0": 1, "35_2": 1, "84_4": 1, "8_1": 1, "112_3": 1}
    ok(10, "Ind from W(E7) to W(E8) of chi_{1,0} is exactly "
           "{chi_1_0, chi_35_2, chi_84_4, chi_8_1, chi_112_3}")


def test_criterion_11_property_suites():
    # partitions: transpose involution and dominance poset axioms
    for n in range(0, 21):
        for p in enumerate_partitions(n):
            assert transpose(transpose(p)) == p
    for n in range(0, 13):
        ps = enumerate_partitions(n)
        for p in ps:
            assert dominance_leq(p, p)
            for q in ps:
                if p != q and dominance_leq(p, q):
                    assert not dominance_leq(q, p)
                for r in ps:
                    if dominance_leq(p, q) and dominance_leq(q, r):
                        assert dominance_leq(p, r)
    # weylrep: exact orthogonality and degree-square sums; S3 single block
    for n in range(1, 7):
        t = build_character_table(symmetric_group(n))
        t.validate()
        assert sum(d * d for d in t.degrees().values()) == t.group.order
    for n in range(1, 6):
        t = build_character_table(hyperoctahedral_group(n))
        t.validate()
        assert sum(d * d for d in t.degrees().values()) == t.group.order
    s3 = build_character_table(symmetric_group(3))
    assert len(l_blocks(s3, 3).blocks) == 1
    # levi: two-step induction equals one-step on Sp(2n), n <= 5
    from tests_helpers_induction import two_step_matches_one_step

    assert two_step_matches_one_step(5)
    ok(11, "partition, character table and induction property suites pass "
           "exhaustively at their stated bounds")
