import pytest

from modspring.levi import (
    LeviClass,
    LeviOrbitData,
    embeds,
    enumerate_levi_classes,
    induce_orbit,
    relative_weyl,
    _assignments,
)
from modspring.orbits import GL, SO, Sp, NilpotentOrbit, closure_leq, enumerate_orbits
from modspring.partitions import Partition, dominance_leq, enumerate_partitions
from modspring.weylrep import hyperoctahedral_group, weyl_order


def orb(*parts):
    return NilpotentOrbit(Partition(parts))


def zero_data(levi: LeviClass) -> LeviOrbitData:
    f = levi.ambient.single
    res_size = {"B": 2 * levi.residual_rank + 1, "C": 2 * levi.residual_rank,
                "D": 2 * levi.residual_rank}[f.family]
    residual = NilpotentOrbit(Partition([1] * res_size)) if res_size else None
    return LeviOrbitData(
        tuple(Partition([1] * b) for b in levi.gl_blocks), residual
    )


# ---------------------------------------------------------------- classes

def test_sp4_levi_classes():
    got = {(c.gl_blocks, c.residual_rank) for c in enumerate_levi_classes(Sp(4))}
    assert got == {((), 2), ((1,), 1), ((2,), 0), ((1, 1), 0)}


def test_gl3_levi_classes():
    got = {c.gl_blocks for c in enumerate_levi_classes(GL(3))}
    assert got == {(3,), (2, 1), (1, 1, 1)}


def test_sp12_contains_l2():
    got = {(c.gl_blocks, c.residual_rank) for c in enumerate_levi_classes(Sp(12))}
    assert ((1, 1, 1), 3) in got


def test_type_d_residual_one_folded():
    for c in enumerate_levi_classes(SO(10)):
        assert c.residual_rank != 1


# ----------------------------------------------------------------- embeds

def sp6_class(blocks, r):
    return LeviClass(tuple(blocks), r, Sp(6))


def test_embeds_examples():
    assert embeds(sp6_class([1, 1], 1), sp6_class([1], 2))
    assert not embeds(sp6_class([], 3), sp6_class([1], 2))
    c = sp6_class([2, 1], 0)
    assert embeds(c, c)


def test_embeds_is_preorder_and_antisymmetric():
    for n in (3, 4, 5, 6):
        classes = enumerate_levi_classes(Sp(2 * n))
        for a in classes:
            assert embeds(a, a)
        for a in classes:
            for b in classes:
                if embeds(a, b) and embeds(b, a):
                    assert a == b
                for c in classes:
                    if embeds(a, b) and embeds(b, c):
                        assert embeds(a, c)


def test_embeds_type_a_refinement():
    a = LeviClass((2, 1, 1), 0, GL(4))
    b = LeviClass((3, 1), 0, GL(4))
    c = LeviClass((2, 2), 0, GL(4))
    assert embeds(a, b)
    assert not embeds(b, a)
    assert not embeds(b, c)


# ------------------------------------------------------------ induce_orbit

def test_induce_examples():
    # GL(1) x Sp(6) in Sp(8), zero on GL part, (4,2) residual.
    levi = LeviClass((1,), 3, Sp(8))
    data = LeviOrbitData((Partition([1]),), orb(4, 2))
    assert induce_orbit(levi, data).partition == Partition([6, 2])

    levi = LeviClass((1, 1), 0, Sp(4))
    data = LeviOrbitData((Partition([1]), Partition([1])), None)
    assert induce_orbit(levi, data).partition == Partition([4])

    levi = LeviClass((1, 1, 1, 1), 0, SO(9))
    data = LeviOrbitData(tuple(Partition([1]) for _ in range(4)), orb(1))
    assert induce_orbit(levi, data).partition == Partition([9])


def test_induce_type_a_plain_sum():
    levi = LeviClass((2, 2), 0, GL(4))
    data = LeviOrbitData((Partition([1, 1]), Partition([1, 1])), None)
    assert induce_orbit(levi, data).partition == Partition([2, 2])
    data = LeviOrbitData((Partition([2]), Partition([2])), None)
    assert induce_orbit(levi, data).partition == Partition([4])


def test_full_torus_induces_regular():
    for n in range(1, 9):
        levi = LeviClass((1,) * n, 0, Sp(2 * n))
        got = induce_orbit(levi, zero_data(levi))
        assert got.partition == Partition([2 * n])
    for m in range(3, 14):
        g = SO(m)
        rank = g.single.rank
        levi = LeviClass((1,) * rank, 0, g)
        got = induce_orbit(levi, zero_data(levi))
        expected = Partition([m]) if m % 2 == 1 else Partition([m - 1, 1])
        assert got.partition == expected, m


def _cuspidal_rank_orbit(r: int) -> Partition:
    # (2k, 2k-2, ..., 2) when r = k(k+1)/2, else no cuspidal support.
    k = 0
    while k * (k + 1) // 2 < r:
        k += 1
    if k * (k + 1) // 2 != r:
        return None
    return Partition(range(2 * k, 0, -2))


def _induce_into_levi(small, data, big, assignment, remainder):
    """Two-step helper: push orbit data from a sub-Levi into a bigger Levi,
    inducing inside each GL block and inside the residual factor."""
    from modspring.partitions import add_padded, collapse

    gl_orbits = []
    idx_groups, rem = assignment, remainder
    for target, group in zip(big.gl_blocks, idx_groups):
        total = Partition()
        for v in group:
            # regular orbit on each assigned block (cuspidal-support data)
            total = add_padded(total, Partition([v]))
        gl_orbits.append(total)
    res_total = data.residual_orbit.partition if data.residual_orbit else Partition()
    for v in rem:
        res_total = add_padded(res_total, Partition([2 * v]))
    res = collapse(res_total, "C") if res_total.size else Partition()
    return LeviOrbitData(
        tuple(gl_orbits), NilpotentOrbit(res) if res.size else None
    )


def test_two_step_induction_matches_one_step():
    # Cuspidal-support data: regular orbits on GL blocks, cuspidal residual.
    for n in range(2, 6):
        g = Sp(2 * n)
        classes = enumerate_levi_classes(g)
        for small in classes:
            res_orbit = _cuspidal_rank_orbit(small.residual_rank)
            if res_orbit is None:
                continue
            data = LeviOrbitData(
                tuple(Partition([b]) for b in small.gl_blocks),
                NilpotentOrbit(res_orbit) if res_orbit.size else None,
            )
            one_step = induce_orbit(small, data)
            for big in classes:
                if big == small:
                    continue
                for groups, rem in _assignments(small.gl_blocks, big.gl_blocks):
                    if sum(rem) + small.residual_rank != big.residual_rank:
                        continue
                    mid = _induce_into_levi(small, data, big, groups, rem)
                    two_step = induce_orbit(big, mid)
                    assert two_step.partition == one_step.partition, (
                        small, big, groups, rem,
                    )


def test_induction_monotone_in_data():
    for n in range(2, 6):
        g = Sp(2 * n)
        for levi in enumerate_levi_classes(g):
            residuals = (
                [o for o in enumerate_orbits(Sp(2 * levi.residual_rank))]
                if levi.residual_rank
                else [None]
            )
            gl_choices = [list(enumerate_partitions(b)) for b in levi.gl_blocks]

            def all_data():
                def rec(i):
                    if i == len(gl_choices):
                        yield ()
                        return
                    for p in gl_choices[i]:
                        for rest in rec(i + 1):
                            yield (p,) + rest

                for gl in rec(0):
                    for r in residuals:
                        yield LeviOrbitData(gl, r)

            data = list(all_data())
            induced = [induce_orbit(levi, d) for d in data]
            for i, d1 in enumerate(data):
                for j, d2 in enumerate(data):
                    if i == j:
                        continue
                    dominates = all(
                        dominance_leq(q, p)
                        for p, q in zip(d1.gl_orbits, d2.gl_orbits)
                    )
                    if d1.residual_orbit is not None:
                        dominates = dominates and dominance_leq(
                            d2.residual_orbit.partition, d1.residual_orbit.partition
                        )
                    if dominates:
                        assert closure_leq(induced[j], induced[i]), (levi, d1, d2)


# ---------------------------------------------------------- relative Weyl

def test_relative_weyl_examples():
    n, k = 5, 1
    levi = LeviClass((1,) * (n - k * (k + 1) // 2), k * (k + 1) // 2, Sp(2 * n))
    assert relative_weyl(Sp(2 * n), levi) == hyperoctahedral_group(n - 1)

    levi = LeviClass((1, 1), 1, Sp(6))
    w = relative_weyl(Sp(6), levi)
    assert weyl_order(w) == 8

    levi = LeviClass((3, 1, 1), 0, Sp(10))
    w = relative_weyl(Sp(10), levi)
    assert w.kind == "product"
    assert [f.rank for f in w.factors] == [1, 2]
    assert weyl_order(w) == 2 * 8
