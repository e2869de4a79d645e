import numpy as np
import pytest

from pqtower import groups
from pqtower.errors import (
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAbelian,
    NotLatinSquare,
    NotNormal,
)

from conftest import brute_force_subgroups, permutation_table


def test_trivial_table_is_a_group():
    g = groups.validate_table([[0]])
    assert g.order == 1
    assert g.identity == 0


def test_s3_from_permutation_oracle(s3):
    assert s3.order == 6
    rep = groups.structure_report(s3)
    assert rep.order == 6
    assert rep.exponent == 6
    assert rep.center_order == 1
    assert rep.derived_order == 3
    assert rep.derived_length == 2
    assert not rep.is_abelian


def test_equal_rows_rejected():
    with pytest.raises(NotLatinSquare):
        groups.validate_table([[0, 1], [0, 1]])


def test_subtraction_quasigroup_rejected():
    # subtraction mod 5 is a Latin square with no two-sided identity
    n = 5
    mul = [[(i - j) % n for j in range(n)] for i in range(n)]
    with pytest.raises((NonAssociative, NoInverse, NoIdentity)):
        groups.validate_table(mul)


def test_nonassociative_loop_rejected():
    # order-5 loop: identity and two-sided inverses, but not associative
    mul = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NonAssociative):
        groups.validate_table(mul)


def test_cyclic_structure():
    c5 = groups.cyclic_group(5)
    rep = groups.structure_report(c5)
    assert (rep.order, rep.exponent, rep.center_order, rep.derived_order) == (5, 5, 5, 1)
    assert rep.derived_length == 1


def test_direct_product_c2_c3():
    g = groups.direct_product(groups.cyclic_group(2), groups.cyclic_group(3))
    rep = groups.structure_report(g)
    assert rep.order == 6
    assert rep.exponent == 6
    assert rep.is_abelian


def test_quotient_c4_by_c2():
    c4 = groups.cyclic_group(4)
    n = groups.subgroup(c4, [0, 2])
    q = groups.quotient(c4, n)
    assert q.order == 2
    assert groups.structure_report(q).exponent == 2


def test_quotient_rejects_non_normal(s3):
    # an order-2 subgroup of S3 is not normal
    orders = groups.element_orders(s3)
    x = int(np.nonzero(orders == 2)[0][0])
    h = groups.subgroup(s3, groups.closure(s3, [x]))
    with pytest.raises(NotNormal):
        groups.quotient(s3, h)


def test_index_p_subgroups_c6():
    c6 = groups.cyclic_group(6)
    subs3 = groups.index_p_subgroups(c6, 3)
    assert len(subs3) == 1
    assert subs3[0].order == 2
    subs2 = groups.index_p_subgroups(c6, 2)
    assert len(subs2) == 1
    assert subs2[0].order == 3


def test_index_p_subgroups_c2():
    c2 = groups.cyclic_group(2)
    subs = groups.index_p_subgroups(c2, 2)
    assert len(subs) == 1
    assert subs[0].members == (0,)


def test_index_p_count_matches_hyperplane_formula():
    # C3 x C3: rank-2 elementary abelian, so (3^2-1)/(3-1) = 4 hyperplanes
    g = groups.direct_product(groups.cyclic_group(3), groups.cyclic_group(3))
    subs = groups.index_p_subgroups(g, 3)
    assert len(subs) == 4
    oracle = {s for s in brute_force_subgroups(g) if len(s) == 3}
    assert {s.member_set() for s in subs} == oracle


def test_minimal_normal_subgroups_c6():
    c6 = groups.cyclic_group(6)
    mins = groups.minimal_normal_subgroups(c6)
    assert sorted(s.order for s in mins) == [2, 3]


def test_minimal_normal_subgroups_a4(a4):
    mins = groups.minimal_normal_subgroups(a4)
    assert len(mins) == 1
    assert mins[0].order == 4
    orders = groups.element_orders(a4)
    assert all(orders[x] in (1, 2) for x in mins[0].members)


def test_minimal_normal_subgroup_cp():
    c5 = groups.cyclic_group(5)
    mins = groups.minimal_normal_subgroups(c5)
    assert len(mins) == 1
    assert mins[0].order == 5


def test_abelian_witness_c2_x_c4():
    g = groups.direct_product(groups.cyclic_group(2), groups.cyclic_group(4))
    ws = groups.abelian_witness(g)
    indices = sorted(g.order // w.order for w in ws)
    assert indices == [2, 4]
    assert all(idx <= groups.exponent(g) for idx in indices)
    cut = groups.intersect_subgroups(ws)
    assert cut.members == (g.identity,)


def test_abelian_witness_c5():
    c5 = groups.cyclic_group(5)
    ws = groups.abelian_witness(c5)
    assert len(ws) == 1
    assert ws[0].members == (0,)
    assert c5.order // ws[0].order == 5 == groups.exponent(c5)


def test_abelian_witness_c2_c2_c3():
    g = groups.direct_product_many(
        [groups.cyclic_group(2), groups.cyclic_group(2), groups.cyclic_group(3)]
    )
    ws = groups.abelian_witness(g)
    indices = sorted(g.order // w.order for w in ws)
    # brute-force check of indices and trivial intersection
    assert indices == [2, 2, 3] or indices == [2, 6]
    assert all(i <= 6 for i in indices)
    cut = groups.intersect_subgroups(ws)
    assert cut.members == (g.identity,)


def test_abelian_witness_rejects_nonabelian(s3):
    with pytest.raises(NotAbelian):
        groups.abelian_witness(s3)


def test_product_quotient_check_single_a4(a4):
    h = groups.subgroup(a4, range(12))
    n = groups.subgroup(a4, [a4.identity])
    verdict = groups.product_quotient_check([a4], h, n)
    assert verdict.holds
    assert max(verdict.minimal_normal_orders) == 4


def test_product_quotient_check_diagonal_c2():
    c2 = groups.cyclic_group(2)
    p = groups.direct_product(c2, c2)
    diag = groups.subgroup(p, [0, 3])
    n = groups.subgroup(p, [0])
    verdict = groups.product_quotient_check([c2, c2], diag, n)
    assert verdict.holds
    assert verdict.minimal_normal_orders == (2,)


def test_serialization_round_trip(s3):
    text = groups.write_table(s3)
    back = groups.read_table(text)
    assert np.array_equal(back.mul, s3.mul)
    assert groups.write_table(back) == text


def test_subgroup_enumeration_matches_brute_force():
    g = groups.direct_product(groups.cyclic_group(2), groups.cyclic_group(4))
    mine = {s.member_set() for s in groups.all_subgroups(g)}
    assert mine == brute_force_subgroups(g)


def test_invariants_exponent_divides_order(s3, a4):
    for g in (s3, a4, groups.cyclic_group(12)):
        rep = groups.structure_report(g)
        assert rep.order % rep.exponent == 0
        assert rep.order % rep.derived_order == 0
        assert groups.is_normal(g, groups.center(g).members)
