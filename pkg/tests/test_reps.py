import numpy as np
import pytest

from pqtower import extraspecial as xs
from pqtower import fplinalg as fl
from pqtower import groups, reps
from pqtower.errors import GroupMismatch, NoRootOfUnity


@pytest.fixture(scope="module")
def w37():
    return reps.shift_scale_module(3, 7)


@pytest.fixture(scope="module")
def reg_h3():
    model = xs.SymplecticExtraspecial(3, 1)
    return reps.regular_module(model, 7)


def test_base_module_matrices(w37):
    assert w37.dim == 3
    assert w37.notes["zeta"] == 2  # least primitive cube root mod 7
    model = w37.group
    y = w37.image(model.generator_y(1))
    assert np.array_equal(np.diag(y), np.array([2, 4, 1]))
    x = w37.image(model.generator_x(1))
    assert sorted(np.nonzero(x)[0].tolist()) == [0, 1, 2]  # permutation matrix
    assert np.array_equal(np.sort(x.sum(axis=0)), np.array([1, 1, 1]))


def test_commutator_scalar_computed(w37):
    assert w37.notes["commutator_scalar"] == 2
    model = w37.group
    z = w37.image(model.central_generator())
    assert np.array_equal(z, 2 * np.eye(3, dtype=np.int64) % 7)


def test_no_root_of_unity():
    with pytest.raises(NoRootOfUnity):
        reps.shift_scale_module(3, 5)


def test_commutant_dimension_base(w37):
    assert reps.commutant_dimension(w37) == 1


def test_commutant_dimension_tensor():
    w2 = reps.tensor_power_module(3, 7, 2)
    assert w2.dim == 9
    assert reps.commutant_dimension(w2) == 1


def test_commutant_of_trivial_rep():
    c2 = groups.cyclic_group(2)
    images = np.stack([np.eye(2, dtype=np.int64)] * 2)
    rep = reps.MatrixRep(
        group=c2, q=7, dim=2, table=c2.mul, identity=0,
        generators=(1,), images=images,
    )
    assert reps.commutant_dimension(rep) == 4


def test_faithfulness(w37):
    assert reps.is_faithful(w37)
    w2 = reps.tensor_power_module(3, 7, 2)
    assert reps.is_faithful(w2)


def test_tensor_descent_kernel_is_diagonal_sum_zero():
    same_scalar, kernel = reps.tensor_kills_descent_kernel(3, 7, 2)
    assert same_scalar
    # kernel of the pre-descent action on the product of two Heisenberg
    # factors: central pairs (z^a, z^-a); factor index of z^a is a
    expect = sorted(a * 27 + ((-a) % 3) for a in range(3))
    assert kernel == expect


def test_regular_module_c2():
    rep = reps.regular_module(groups.cyclic_group(2), 7)
    assert rep.dim == 2
    assert np.array_equal(rep.image(0), np.eye(2, dtype=np.int64))
    assert np.array_equal(rep.image(1), np.array([[0, 1], [1, 0]]))


def test_regular_module_row_sums(reg_h3):
    assert reg_h3.dim == 27
    ones = np.ones(27, dtype=np.int64)
    for g in (0, 1, 5, 13, 26):
        assert np.array_equal(reps._apply_image_to_vector(reg_h3, g, ones), ones % 7)


def test_hom_multiplicity_regular_vs_base(w37, reg_h3):
    assert reps.hom_space_dimension(reg_h3, w37) == 3


def test_hom_self_equals_commutant(w37):
    assert reps.hom_space_dimension(w37, w37) == 1


def test_hom_regular_vs_trivial(reg_h3):
    model = reg_h3.group
    triv = reps.MatrixRep(
        group=model, q=7, dim=1, table=reg_h3.table, identity=reg_h3.identity,
        generators=reg_h3.generators,
        images=np.ones((27, 1, 1), dtype=np.int64),
    )
    assert reps.hom_space_dimension(reg_h3, triv) == 1


def test_hom_group_mismatch(w37):
    c2 = groups.cyclic_group(2)
    images = np.stack([np.eye(1, dtype=np.int64)] * 2)
    other = reps.MatrixRep(group=c2, q=7, dim=1, table=c2.mul, identity=0,
                           generators=(1,), images=images)
    with pytest.raises(GroupMismatch):
        reps.hom_space_dimension(w37, other)


def test_equivariant_embedding_base(w37, reg_h3):
    t, sub = reps.equivariant_embedding(w37, reg_h3)
    assert t.shape == (27, 3)
    assert fl.rank(t, 7) == 3
    assert sub.rank == 3
    # closure under all 27 permutation images is asserted inside, re-check one
    v = sub.basis[0]
    moved = reps._apply_image_to_vector(reg_h3, 7, v)
    assert sub.contains(moved)


def test_trivial_module_embeds_on_all_ones_line(reg_h3):
    model = reg_h3.group
    triv = reps.MatrixRep(
        group=model, q=7, dim=1, table=reg_h3.table, identity=reg_h3.identity,
        generators=reg_h3.generators,
        images=np.ones((27, 1, 1), dtype=np.int64),
    )
    t, sub = reps.equivariant_embedding(triv, reg_h3)
    assert sub.rank == 1
    # the line must be spanned by a translation-invariant vector: all ones
    scaled = sub.basis[0]
    assert len(set(int(c) for c in scaled)) == 1


def test_spin_closure_full(w37):
    basis_vectors = np.eye(3, dtype=np.int64)
    assert reps.spin_spans_everything(w37, basis_vectors)
    rng = np.random.default_rng(42)
    vecs = [rng.integers(0, 7, size=3) for _ in range(25)]
    vecs = [v for v in vecs if v.any()]
    assert reps.spin_spans_everything(w37, vecs)


def test_spin_closure_tensor_all_basis_and_random():
    w2 = reps.tensor_power_module(3, 7, 2)
    assert reps.spin_spans_everything(w2, np.eye(9, dtype=np.int64))
    rng = np.random.default_rng(7)
    vecs = [rng.integers(0, 7, size=9) for _ in range(100)]
    vecs = [v for v in vecs if v.any()]
    assert reps.spin_spans_everything(w2, vecs)


def test_module_suite_13():
    for m in (1, 2):
        rep = reps.tensor_power_module(3, 13, m)
        assert reps.commutant_dimension(rep) == 1
        assert reps.is_faithful(rep)


def test_matrix_serialization_round_trip(w37):
    from pqtower.reps import format_matrix, parse_matrix

    m = w37.image(5)
    text = format_matrix(m, 7)
    back, q = parse_matrix(text)
    assert q == 7
    assert np.array_equal(back, m)
    assert format_matrix(back, q) == text
