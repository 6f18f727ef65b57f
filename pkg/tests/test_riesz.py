"""Riesz decomposition tables, interpolation and the exhaustive oracle."""

import random
from fractions import Fraction

import pytest

from ordalg import groups as g
from ordalg.errors import PreconditionError, UnsupportedError
from ordalg.riesz import (
    DecompositionTable,
    check_instance,
    rdp_decompose,
    rdp_oracle_search,
    rdp_table_verify,
    rip_interpolate,
)
from ordalg.sampling import sample_interval, sample_positive
from ordalg.scalars import QuadraticNumber, ScalarSubgroup

Z = g.ZZ
Q = g.QQ
Z2 = g.IntVector(2)
AFF = g.AffineQ()
LEX_ZZ = g.Lex(Z, Z)
LEX_QZ2 = g.Lex(Q, Z2)
LEX_S2Z2 = g.Lex(g.Scalar(ScalarSubgroup.quadratic(2)), Z2)


def f(x):
    return Fraction(x)


def random_instance(desc, rng, bound=10):
    """Positive a1, a2 and a random split of their sum into b1 + b2."""
    a1 = sample_positive(desc, rng, bound)
    a2 = sample_positive(desc, rng, bound)
    total = g.add(desc, a1, a2)
    b1 = sample_interval(desc, total, rng, bound)
    b2 = g.sub_left(desc, b1, total)  # -b1 + total
    return a1, a2, b1, b2


def test_lex_case_table_matches_head_positive_construction():
    a1, a2 = (f(3), f(7)), (f(0), f(4))
    b1, b2 = (f(1), f(2)), (f(2), f(9))
    table = rdp_decompose(LEX_ZZ, a1, a2, b1, b2)
    assert table.entries() == ((f(1), f(2)), (f(2), f(5)), (f(0), f(0)), (f(0), f(4)))
    # four-sum oracle, computed independently of the construction
    assert g.add(LEX_ZZ, table.c11, table.c12) == a1
    assert g.add(LEX_ZZ, table.c21, table.c22) == a2
    assert g.add(LEX_ZZ, table.c11, table.c21) == b1
    assert g.add(LEX_ZZ, table.c12, table.c22) == b2


def test_degenerate_instance_any_descriptor():
    for desc in (Z2, LEX_ZZ, AFF):
        rng = random.Random(1)
        x = sample_positive(desc, rng, 5)
        zero = g.zero(desc)
        table = rdp_decompose(desc, x, zero, x, zero)
        assert table.c11 == x
        assert table.c12 == zero and table.c21 == zero and table.c22 == zero


def test_lex_zero_second_heads_uses_directedness_witness():
    a1, a2 = (f(1), f(2)), (f(0), f(3))
    b1, b2 = (f(1), f(5)), (f(0), f(0))
    # d = min(2, 5) = 2 in the bottom copy of the integers
    assert g.lower_bound(Z, [f(2), f(5)]) == f(2)
    table = rdp_decompose(LEX_ZZ, a1, a2, b1, b2)
    assert table.entries() == ((f(1), f(2)), (f(0), f(0)), (f(0), f(3)), (f(0), f(0)))


def test_verify_accepts_case_table_and_rejects_corruption():
    a1, a2 = (f(3), f(7)), (f(0), f(4))
    b1, b2 = (f(1), f(2)), (f(2), f(9))
    table = rdp_decompose(LEX_ZZ, a1, a2, b1, b2)
    ok = rdp_table_verify(LEX_ZZ, a1, a2, b1, b2, table)
    assert ok.ok
    bad = DecompositionTable(table.c11, (f(2), f(4)), table.c21, table.c22, "rdp")
    res = rdp_table_verify(LEX_ZZ, a1, a2, b1, b2, bad)
    assert not res.ok and res.reason == "row 1 sum"


def test_affine_min_table_is_rdp2():
    a1, a2 = (f(2), f(0)), (f(3), f(1))
    b1 = (f(3), f(1))
    b2 = g.sub_left(AFF, b1, g.add(AFF, a1, a2))  # -b1 + (a1 + a2)
    assert b2 == (f(2), Fraction(1, 3))
    table = rdp_decompose(AFF, a1, a2, b1, b2, level="rdp2")
    res = rdp_table_verify(AFF, a1, a2, b1, b2, table, level="rdp2")
    assert res.ok
    assert g.meet(AFF, table.c12, table.c21) == g.zero(AFF)


def test_sum_mismatch_rejected():
    with pytest.raises(PreconditionError):
        check_instance(Z2, (1, 0), (0, 1), (1, 1), (1, 1))


def test_nonpositive_rejected():
    with pytest.raises(PreconditionError):
        rdp_decompose(Z2, (-1, 0), (1, 1), (0, 1), (0, 0))


@pytest.mark.parametrize(
    "desc,seed,rounds",
    [
        (Z2, 31, 300),
        (LEX_ZZ, 33, 300),
        (g.Lex(Z, Z2), 35, 200),
        (AFF, 37, 200),
        (g.Product(Z2, Z), 39, 150),
        (g.Lex(Z, AFF), 41, 150),
        (LEX_QZ2, 43, 150),
        (LEX_S2Z2, 45, 80),
        (g.Lex(Z, g.Product(Z, Z2)), 47, 100),
    ],
)
def test_decompose_soundness_randomized(desc, seed, rounds):
    rng = random.Random(seed)
    for _ in range(rounds):
        a1, a2, b1, b2 = random_instance(desc, rng, 8)
        table = rdp_decompose(desc, a1, a2, b1, b2)
        assert rdp_table_verify(desc, a1, a2, b1, b2, table).ok


def test_abelian_tables_certify_rdp1():
    rng = random.Random(51)
    for desc in (LEX_ZZ, g.Lex(Z, Z2), LEX_QZ2):
        for _ in range(150):
            a1, a2, b1, b2 = random_instance(desc, rng, 8)
            table = rdp_decompose(desc, a1, a2, b1, b2, level="rdp1")
            res = rdp_table_verify(desc, a1, a2, b1, b2, table, level="rdp1")
            assert res.ok and res.side_condition == "holds"


def test_dense_reduction_consistency_with_direct_tables():
    rng = random.Random(53)
    for _ in range(100):
        a1, a2, b1, b2 = random_instance(LEX_QZ2, rng, 6)
        t_reduce = rdp_decompose(LEX_QZ2, a1, a2, b1, b2, dense_head="reduce")
        t_direct = rdp_decompose(LEX_QZ2, a1, a2, b1, b2, dense_head="direct")
        assert rdp_table_verify(LEX_QZ2, a1, a2, b1, b2, t_reduce).ok
        assert rdp_table_verify(LEX_QZ2, a1, a2, b1, b2, t_direct).ok


def test_quadratic_dense_heads():
    rng = random.Random(55)
    for _ in range(40):
        a1, a2, b1, b2 = random_instance(LEX_S2Z2, rng, 5)
        table = rdp_decompose(LEX_S2Z2, a1, a2, b1, b2, level="rdp1")
        res = rdp_table_verify(LEX_S2Z2, a1, a2, b1, b2, table, level="rdp1")
        assert res.ok and res.side_condition == "holds"


def test_linear_min_tables_have_zero_meet():
    rng = random.Random(57)
    for desc in (Z, Q, AFF, g.Scalar(ScalarSubgroup.quadratic(2))):
        for _ in range(100):
            a1, a2, b1, b2 = random_instance(desc, rng, 9)
            table = rdp_decompose(desc, a1, a2, b1, b2, level="rdp2")
            assert g.meet(desc, table.c12, table.c21) == g.zero(desc)


def test_lex_rdp2_unsupported_on_partial_bottom():
    with pytest.raises(UnsupportedError):
        rdp_decompose(
            g.Lex(Z, Z2),
            (f(1), (0, 0)),
            (f(0), (1, 1)),
            (f(1), (1, 1)),
            (f(0), (0, 0)),
            level="rdp2",
        )


def test_rdp0_level_accepted():
    table = rdp_decompose(Z2, (1, 2), (3, 0), (2, 1), (2, 1), level="rdp0")
    assert rdp_table_verify(Z2, (1, 2), (3, 0), (2, 1), (2, 1), table, level="rdp0").ok


def test_lex_affine_rdp1_uses_min_refinement():
    desc = g.Lex(Z, AFF)
    a1 = (f(2), (f(2), f(0)))
    a2 = (f(1), (f(3), f(1)))
    b1 = (f(1), (f(2), f(1)))
    total = g.add(desc, a1, a2)
    b2 = g.sub_left(desc, b1, total)
    table = rdp_decompose(desc, a1, a2, b1, b2, level="rdp1")
    res = rdp_table_verify(desc, a1, a2, b1, b2, table, level="rdp1")
    assert res.ok and res.side_condition == "holds"
    zero = g.zero(desc)
    assert table.c12 == zero or table.c21 == zero


def test_rdp1_certification_inconclusive_tag():
    # off-diagonal entries bounded by commuting affine translations: every
    # pair below them commutes, but the intervals are infinite, so the
    # sampled certificate honestly reports inconclusive
    desc = g.Lex(Z, AFF)
    c11 = (f(0), (f(1), f(1)))
    c12 = (f(0), (f(1), f(2)))
    c21 = (f(0), (f(1), f(3)))
    c22 = (f(1), (f(2), f(5)))
    a1 = g.add(desc, c11, c12)
    a2 = g.add(desc, c21, c22)
    b1 = g.add(desc, c11, c21)
    b2 = g.add(desc, c12, c22)
    assert g.add(desc, a1, a2) == g.add(desc, b1, b2)
    table = DecompositionTable(c11, c12, c21, c22, "rdp1")
    res = rdp_table_verify(desc, a1, a2, b1, b2, table, level="rdp1")
    assert res.ok and res.side_condition == "inconclusive"


def test_rdp1_certification_detects_noncommuting_table():
    # the case-analysis table for this instance has genuinely
    # non-commuting off-diagonal entries
    desc = g.Lex(Z, AFF)
    a1 = (f(2), (f(2), f(0)))
    a2 = (f(1), (f(3), f(1)))
    b1 = (f(1), (f(2), f(1)))
    total = g.add(desc, a1, a2)
    b2 = g.sub_left(desc, b1, total)
    table = rdp_decompose(desc, a1, a2, b1, b2, level="rdp")
    res = rdp_table_verify(desc, a1, a2, b1, b2, table, level="rdp1")
    assert (not res.ok and "com" in res.reason) or res.side_condition in (
        "holds",
        "inconclusive",
    )


def test_oracle_not_found_within_box():
    # every witness needs a tail coordinate beyond the box
    a1 = (f(1), f(50))
    a2 = (f(0), f(0))
    b1 = (f(1), f(50))
    b2 = (f(0), f(0))
    res = rdp_oracle_search(LEX_ZZ, a1, a2, b1, b2, box=10)
    assert not res.found
    assert rdp_oracle_search(LEX_ZZ, a1, a2, b1, b2, box=60).found


def test_oracle_agreement_lex_zz():
    rng = random.Random(59)
    for _ in range(200):
        a1, a2, b1, b2 = random_instance(LEX_ZZ, rng, 10)
        table = rdp_decompose(LEX_ZZ, a1, a2, b1, b2)
        assert rdp_table_verify(LEX_ZZ, a1, a2, b1, b2, table).ok
        oracle = rdp_oracle_search(LEX_ZZ, a1, a2, b1, b2, box=45)
        assert oracle.found


def test_oracle_agreement_lex_zz2():
    rng = random.Random(61)
    desc = g.Lex(Z, Z2)
    for _ in range(100):
        a1, a2, b1, b2 = random_instance(desc, rng, 5)
        table = rdp_decompose(desc, a1, a2, b1, b2)
        assert rdp_table_verify(desc, a1, a2, b1, b2, table).ok
        assert rdp_oracle_search(desc, a1, a2, b1, b2, box=15).found


def test_oracle_swap_instance():
    res = rdp_oracle_search(Z2, (1, 0), (0, 1), (0, 1), (1, 0))
    assert res.found
    assert res.table.c11 == (0, 0)


def test_oracle_rejects_dense():
    with pytest.raises(UnsupportedError):
        rdp_oracle_search(Q, f(1), f(1), f(1), f(1))


def test_interpolate_total_order():
    assert rip_interpolate(Q, f(0), Fraction(1, 3), Fraction(1, 2), f(2)) == Fraction(1, 3)


def test_interpolate_vectors():
    c = rip_interpolate(Z2, (0, 1), (1, 0), (2, 1), (1, 2))
    assert c == (1, 1)
    for lo in ((0, 1), (1, 0)):
        assert g.leq(Z2, lo, c)
    for hi in ((2, 1), (1, 2)):
        assert g.leq(Z2, c, hi)


def test_interpolate_lex_head_gap():
    c = rip_interpolate(g.Lex(Q, Z), (f(0), f(5)), (f(0), f(7)), (f(1), f(-3)), (f(1), f(-9)))
    assert c == (Fraction(1, 2), f(0))


def test_interpolate_precondition():
    with pytest.raises(PreconditionError):
        rip_interpolate(Z2, (5, 5), (0, 0), (1, 1), (2, 2))


def test_interpolate_randomized_bounds():
    rng = random.Random(63)
    for desc in (Z2, LEX_ZZ, g.Lex(Q, Z2), AFF):
        for _ in range(80):
            a1 = sample_positive(desc, rng, 5)
            a2 = sample_positive(desc, rng, 5)
            up = g.add(desc, g.join(desc, a1, a2), sample_positive(desc, rng, 3))
            b1 = up
            b2 = g.add(desc, up, sample_positive(desc, rng, 3))
            c = rip_interpolate(desc, a1, a2, b1, b2)
            assert g.leq(desc, a1, c) and g.leq(desc, a2, c)
            assert g.leq(desc, c, b1) and g.leq(desc, c, b2)
