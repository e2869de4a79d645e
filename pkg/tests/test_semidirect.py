import random

import pytest

from pqtower import semidirect as sd
from pqtower.errors import ParameterMismatch


@pytest.fixture(scope="module")
def fam():
    return sd.GroupAlgebraSemidirect(3, 7, 1)


def test_pure_algebra_order_q(fam):
    a = fam.element({5: 3})
    assert fam.order(a) == 7


def test_pure_point_order_p(fam):
    a = fam.element({}, fam.E.generator_x(1))
    assert fam.order(a) == 3


def test_identity_order(fam):
    assert fam.order(fam.identity) == 1


def test_mixed_element_order_21(fam):
    # nonzero trace component sum_j e^j.w forces order pq
    a = fam.element({0: 1}, fam.E.generator_x(1))
    assert fam.order(a) == 21
    cubed = fam.power(a, 3)
    assert cubed.pt == 0
    assert fam.order(cubed) == 7


def test_group_law_against_translation(fam):
    rng = random.Random(11)
    for _ in range(50):
        a, b = fam.sample(rng), fam.sample(rng)
        ab = fam.multiply(a, b)
        assert ab.pt == fam.E.multiply(a.pt, b.pt)
        inv = fam.inverse(a)
        assert fam.multiply(a, inv).is_identity()
        assert fam.multiply(inv, a).is_identity()


def test_associativity_sampled(fam):
    rng = random.Random(5)
    for _ in range(30):
        a, b, c = fam.sample(rng), fam.sample(rng), fam.sample(rng)
        assert fam.multiply(fam.multiply(a, b), c) == fam.multiply(a, fam.multiply(b, c))


def test_parameter_mismatch(fam):
    other = sd.GroupAlgebraSemidirect(3, 13, 1)
    with pytest.raises(ParameterMismatch):
        fam.multiply(fam.identity, other.identity)


def test_exponent_certificate_m1():
    cert = sd.exponent_certificate(3, 7, 1, samples=1000, seed=42)
    assert cert.all_passed
    assert set(cert.order_histogram) <= {1, 3, 7, 21}
    assert cert.witness_order == 21
    # determinism given the seed
    again = sd.exponent_certificate(3, 7, 1, samples=1000, seed=42)
    assert again.order_histogram == cert.order_histogram


def test_exponent_certificate_m2_smaller_sample():
    cert = sd.exponent_certificate(3, 7, 2, samples=120, seed=1)
    assert cert.all_passed
    assert set(cert.order_histogram) <= {1, 3, 7, 21}


def test_minimal_normal_certificate_m1():
    cert = sd.minimal_normal_certificate(3, 7, 1)
    assert cert.all_passed
    assert cert.subgroup_order == 343 == 7**3
    assert cert.embedding.rank == 3
    assert cert.commutant_dimension == 1


def test_minimal_normal_certificate_m2():
    cert = sd.minimal_normal_certificate(3, 7, 2)
    assert cert.all_passed
    assert cert.subgroup_order == 7**9 == 40353607
    assert cert.embedding.rank == 9


def test_orders_strictly_increase():
    assert sd.minimal_normal_orders_strictly_increase(3, 7, 3)
    assert 7**3 < 7**9
