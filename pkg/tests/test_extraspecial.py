import numpy as np
import pytest

from pqtower import extraspecial as xs
from pqtower import groups
from pqtower.errors import CapExceeded


@pytest.fixture(scope="module")
def heis3():
    return xs.heisenberg(3)


@pytest.fixture(scope="module")
def quot243():
    return xs.extraspecial_by_quotient(3, 2)


def test_heisenberg_3_structure(heis3):
    table, model, iso = heis3
    rep = groups.structure_report(table)
    assert (rep.order, rep.exponent, rep.center_order, rep.derived_order) == (27, 3, 3, 3)
    assert rep.derived_length == 2
    assert iso.verified_pairs == 27 * 27


def test_heisenberg_5_structure():
    table, model, iso = xs.heisenberg(5)
    rep = groups.structure_report(table)
    assert (rep.order, rep.exponent) == (125, 5)
    assert rep.center_order == rep.derived_order == 5


def test_heisenberg_rejects_p2():
    with pytest.raises(ValueError):
        xs.heisenberg(2)


def test_symplectic_model_axioms():
    model = xs.SymplecticExtraspecial(3, 2)
    assert model.order == 243
    table = model.to_table()
    # full table validation: associativity, identity, inverses
    groups.validate_table(table.mul)
    orders = groups.element_orders(table)
    assert set(int(o) for o in orders) == {1, 3}


def test_quotient_construction_order_243(quot243):
    table, model, iso = quot243
    assert table.order == 243
    report = xs.verify_extraspecial(table, 3)
    assert report.verdict
    assert report.exponent == 3
    assert report.center_order == report.derived_order == 3
    assert report.quotient_elementary_abelian


def test_quotient_m1_equals_heisenberg(heis3):
    table, model, iso = xs.extraspecial_by_quotient(3, 1)
    assert table.order == 27
    h_table = heis3[0]
    # N_1 is trivial, so the quotient relabels the Heisenberg table identically
    assert np.array_equal(table.mul, h_table.mul)


def test_quotient_isomorphic_to_symplectic(quot243):
    table, model, iso = quot243
    assert iso.verified_pairs == 243 * 243
    assert len(set(int(v) for v in iso.mapping)) == 243


def test_verify_extraspecial_rejects_abelian():
    c27 = groups.cyclic_group(27)
    report = xs.verify_extraspecial(c27, 3)
    assert not report.verdict
    assert report.center_order == 27


def test_frattini_is_center_for_exponent_p(quot243):
    table, _, _ = quot243
    report = xs.verify_extraspecial(table, 3)
    assert report.frattini_order == 3
    # oracle: Frattini = intersection of the index-3 (maximal) subgroups
    maximal = groups.index_p_subgroups(table, 3)
    cut = groups.intersect_subgroups(maximal)
    assert cut.order == 3
    assert cut.member_set() == groups.center(table).member_set()


def test_index_3_subgroup_count_243(quot243):
    table, _, _ = quot243
    subs = groups.index_p_subgroups(table, 3)
    # (3^4 - 1) / (3 - 1) hyperplanes of the rank-4 quotient
    assert len(subs) == 40
    seen = set()
    for s in subs:
        assert s.order == 81
        assert groups.is_normal(table, s.members)
        seen.add(s.member_set())
    assert len(seen) == 40


def test_max_abelian_order_27(heis3):
    table = heis3[0]
    assert xs.max_abelian_subgroup_order(table) == 9


def test_max_abelian_order_243(quot243):
    table, _, _ = quot243
    report = xs.abelian_bound_report(table, 3, 2)
    assert report.max_order == 27
    assert report.bound_attained
    assert not report.strict_inequality_holds


def test_max_abelian_degenerate_abelian_input():
    c9 = groups.cyclic_group(9)
    assert xs.max_abelian_subgroup_order(c9) == 9


def test_bounded_index_intersection_m1(heis3):
    table = heis3[0]
    cut = xs.bounded_index_intersection(table, 3, 1)
    assert cut.order == 27  # only the index-1 subgroup qualifies


def test_bounded_index_intersection_m2(quot243):
    table, _, _ = quot243
    cut = xs.bounded_index_intersection(table, 3, 2)
    assert cut.order == 3
    assert cut.member_set() == groups.center(table).member_set()


def test_cap_guard():
    with pytest.raises(CapExceeded):
        xs.heisenberg(13)  # 13^3 = 2197 > 2048


def test_word_exponents_reconstruct():
    model = xs.SymplecticExtraspecial(3, 2)
    z = model.central_generator()
    for idx in [0, 1, 7, 100, 242]:
        u, c = model.word_exponents(idx)
        acc = model.identity
        for k in range(model.m):
            for _ in range(u[2 * k]):
                acc = model.multiply(acc, model.generator_x(k + 1))
            for _ in range(u[2 * k + 1]):
                acc = model.multiply(acc, model.generator_y(k + 1))
        for _ in range(c):
            acc = model.multiply(acc, z)
        assert acc == idx
