"""Matrix representations of small groups over prime fields.

Covers the dim-p module on which one generator acts as a cyclic shift and
the other as a diagonal of root-of-unity powers, its tensor powers as
modules of the big extraspecial group, regular (permutation) modules,
commutant and hom-space dimensions, and explicit equivariant embeddings.
All linear algebra is exact mod q (see fplinalg).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fplinalg as fl
from . import groups
from .errors import CapExceeded, GroupMismatch, NoEmbedding, NoRootOfUnity
from .extraspecial import SymplecticExtraspecial
from .groups import DEFAULT_ORDER_CAP, TableGroup


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic parameters mod a prime q."""

    q: int

    def __post_init__(self):
        if not _is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")

    def least_primitive_root_of_unity(self, p: int) -> int:
        """The least z in F_q of multiplicative order exactly p."""
        if (self.q - 1) % p:
            raise NoRootOfUnity(p, self.q)
        for z in range(2, self.q):
            if pow(z, p, self.q) == 1 and all(pow(z, d, self.q) != 1 for d in range(1, p)):
                return z
        raise NoRootOfUnity(p, self.q)


@dataclass(frozen=True)
class FqSubspace:
    """Subspace of F_q^ambient held as a reduced-echelon row basis."""

    ambient: int
    q: int
    basis: np.ndarray  # (rank, ambient), RREF
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def contains(self, v) -> bool:
        return fl.in_row_space(self.basis, list(self.pivots), np.asarray(v), self.q)

    @classmethod
    def from_rows(cls, rows, ambient: int, q: int) -> "FqSubspace":
        r, piv = fl.rref(np.asarray(rows), q)
        return cls(ambient=ambient, q=q, basis=r[: len(piv)].copy(), pivots=tuple(piv))


@dataclass(frozen=True)
class MatrixRep:
    """A homomorphism from a small group into GL_dim(F_q).

    ``group`` is the structured source (TableGroup or SymplecticExtraspecial).
    ``table`` is its multiplication table; images are indexed by element.
    Permutation representations may carry ``perms`` instead of dense images
    (one image column index array per element); dense rows are materialised
    on demand.
    """

    group: object
    q: int
    dim: int
    table: np.ndarray
    identity: int
    generators: tuple[int, ...]
    images: np.ndarray | None = None
    perms: np.ndarray | None = None
    notes: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def image(self, i: int) -> np.ndarray:
        if self.images is not None:
            return self.images[i]
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        m[self.perms[i], np.arange(self.dim)] = 1
        return m

    def same_group(self, other: "MatrixRep") -> bool:
        return self.table.shape == other.table.shape and np.array_equal(self.table, other.table)


def _group_table(group, cap: int) -> TableGroup:
    if isinstance(group, TableGroup):
        return group
    if isinstance(group, SymplecticExtraspecial):
        return group.to_table(cap)
    raise TypeError(f"unsupported group object {type(group)!r}")


def _check_homomorphism_exhaustive(rep: MatrixRep) -> None:
    n = rep.order
    if rep.perms is not None:
        for i in range(n):
            composed = rep.perms[i][rep.perms]
            assert np.array_equal(rep.perms[rep.table[i]], composed), "homomorphism fails"
        return
    imgs = rep.images
    for i in range(n):
        lhs = np.einsum("ab,jbc->jac", imgs[i], imgs) % rep.q
        assert np.array_equal(lhs, imgs[rep.table[i]]), "homomorphism fails"


def check_defining_relations(rep: MatrixRep, model: SymplecticExtraspecial) -> None:
    """Homomorphism check on generators plus the defining relations of the
    symplectic extraspecial presentation."""
    p, q = model.p, rep.q
    eye = np.eye(rep.dim, dtype=np.int64)
    z = rep.image(model.central_generator())
    assert np.array_equal(fl.mat_pow(z, p, q), eye), "z^p != 1"
    for k in range(1, model.m + 1):
        xk = rep.image(model.generator_x(k))
        yk = rep.image(model.generator_y(k))
        assert np.array_equal(fl.mat_pow(xk, p, q), eye), "x^p != 1"
        assert np.array_equal(fl.mat_pow(yk, p, q), eye), "y^p != 1"
        comm = _commutator(xk, yk, q)
        assert np.array_equal(comm, z), "[x_k, y_k] != z"
        for l in range(1, model.m + 1):
            if l == k:
                continue
            xl = rep.image(model.generator_x(l))
            yl = rep.image(model.generator_y(l))
            assert np.array_equal(_commutator(xk, xl, q), eye)
            assert np.array_equal(_commutator(xk, yl, q), eye)
            assert np.array_equal(_commutator(yk, yl, q), eye)
        assert np.array_equal(_commutator(xk, z, q), eye)


def _commutator(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    ai = _matrix_inverse(a, q)
    bi = _matrix_inverse(b, q)
    return fl.mat_mul(fl.mat_mul(ai, bi, q), fl.mat_mul(a, b, q), q)


def _matrix_inverse(a: np.ndarray, q: int) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([np.asarray(a) % q, np.eye(n, dtype=np.int64)], axis=1)
    r, piv = fl.rref(aug, q)
    assert piv == list(range(n)), "matrix is singular"
    return r[:n, n:]


# ---------------------------------------------------------------------------
# the dim-p shift/scale module and its tensor powers


def shift_scale_module(p: int, q: int, cap: int = DEFAULT_ORDER_CAP) -> MatrixRep:
    """Module of dimension p for the order-p^3 group: the first generator
    cyclically shifts the basis e_1 -> e_2 -> ... -> e_p -> e_1, the second
    scales e_i by zeta^i (zeta the least primitive p-th root of unity).
    The scalar by which [x, y] acts is computed and recorded, never assumed.
    """
    return tensor_power_module(p, q, 1, cap=cap)


def tensor_power_module(p: int, q: int, m: int, cap: int = DEFAULT_ORDER_CAP) -> MatrixRep:
    """Dimension p^m module of the extraspecial group of order p^(2m+1),
    built as the m-fold tensor power of the shift/scale module."""
    field_q = PrimeField(q)
    zeta = field_q.least_primitive_root_of_unity(p)
    model = SymplecticExtraspecial(p, m)
    # x cycles the basis (e_i -> e_{i-1}, indices mod p), y scales e_i by
    # zeta^(i+1); this orientation makes [x, y] act by zeta itself
    x_mat = np.zeros((p, p), dtype=np.int64)
    for i in range(p):
        x_mat[(i - 1) % p, i] = 1
    y_mat = np.diag([pow(zeta, i + 1, q) for i in range(p)]).astype(np.int64)
    # scalar action of [x, y], computed from the matrices
    comm = _commutator(x_mat, y_mat, q)
    scalar = int(comm[0, 0])
    assert np.array_equal(comm, scalar * np.eye(p, dtype=np.int64) % q), "[x,y] is not scalar"
    # x^a y^b for one factor
    powers = {}
    for a in range(p):
        for b in range(p):
            powers[(a, b)] = fl.mat_mul(fl.mat_pow(x_mat, a, q), fl.mat_pow(y_mat, b, q), q)
    dim = p**m
    images = np.zeros((model.order, dim, dim), dtype=np.int64)
    for idx in range(model.order):
        u, c = model.word_exponents(idx)
        mat = np.eye(1, dtype=np.int64)
        for k in range(m):
            mat = np.kron(mat, powers[(u[2 * k], u[2 * k + 1])])
        images[idx] = (pow(scalar, c, q) * mat) % q
    rep = MatrixRep(
        group=model,
        q=q,
        dim=dim,
        table=model.to_table(cap).mul,
        identity=model.identity,
        generators=model.generators(),
        images=images,
        notes={"zeta": zeta, "commutator_scalar": scalar},
    )
    check_defining_relations(rep, model)
    _check_homomorphism_exhaustive(rep)
    return rep


def tensor_kills_descent_kernel(p: int, q: int, m: int) -> tuple[bool, list[int]]:
    """On the direct product of m Heisenberg factors, the tensor-power action
    sends exactly the central diagonal-sum-zero subgroup to the identity.
    Returns (every central generator acts by the common scalar, kernel)."""
    base = tensor_power_module(p, q, 1)
    model1: SymplecticExtraspecial = base.group
    scalar = base.notes["commutator_scalar"]
    z_img = base.image(model1.central_generator())
    same_scalar = np.array_equal(z_img, (scalar * np.eye(p, dtype=np.int64)) % q)
    # enumerate the product of m factors, image = kron of factor images
    order1 = model1.order
    kernel: list[int] = []
    dim = p**m
    eye = np.eye(dim, dtype=np.int64)
    for idx in range(order1**m):
        rem = idx
        parts = []
        for _ in range(m):
            rem, r = divmod(rem, order1)
            parts.append(r)
        parts.reverse()
        mat = np.eye(1, dtype=np.int64)
        for part in parts:
            mat = np.kron(mat, base.image(part)) % q
        if np.array_equal(mat, eye):
            kernel.append(idx)
    return bool(same_scalar), kernel


# ---------------------------------------------------------------------------
# regular module


def regular_module(group, q: int, cap: int = DEFAULT_ORDER_CAP) -> MatrixRep:
    """Left-translation permutation module of dimension |group|."""
    table = _group_table(group, cap)
    if table.order > cap:
        raise CapExceeded(table.order, cap)
    PrimeField(q)
    perms = table.mul.astype(np.int64)
    rep = MatrixRep(
        group=group,
        q=q,
        dim=table.order,
        table=table.mul,
        identity=table.identity,
        generators=groups.generating_set(table),
        perms=perms,
    )
    _check_homomorphism_exhaustive(rep)
    return rep


# ---------------------------------------------------------------------------
# hom spaces, commutant, faithfulness


def _constraint_matrix(dom_img: np.ndarray, cod_img: np.ndarray, q: int) -> np.ndarray:
    """Matrix of T -> T @ dom(g) - cod(g) @ T on row-major vec(T)."""
    d_cod, d_dom = cod_img.shape[0], dom_img.shape[0]
    left = np.kron(np.eye(d_cod, dtype=np.int64), dom_img.T % q)
    right = np.kron(cod_img % q, np.eye(d_dom, dtype=np.int64))
    return (left - right) % q


def equivariant_map_basis(dom: MatrixRep, cod: MatrixRep) -> np.ndarray:
    """RREF basis (rows are vec(T), row-major) of
    {T : T dom(g) = cod(g) T for every generator g}."""
    if not dom.same_group(cod):
        raise GroupMismatch()
    q = dom.q
    n_unknowns = cod.dim * dom.dim
    basis = None  # None means the full space
    for g in dom.generators:
        c = _constraint_matrix(dom.image(g), cod.image(g), q)
        if basis is None:
            basis = fl.null_space(c, q)
        else:
            restricted = fl.mat_mul(c, basis.T, q)
            coords = fl.null_space(restricted, q)
            basis = fl.mat_mul(coords, basis, q)
        if basis.shape[0] == 0:
            return np.zeros((0, n_unknowns), dtype=np.int64)
    return fl.row_space(basis, q)


def hom_space_dimension(dom: MatrixRep, cod: MatrixRep) -> int:
    """Dimension of {T : T dom(g) = cod(g) T} over F_q."""
    return int(equivariant_map_basis(dom, cod).shape[0])


def commutant_dimension(rep: MatrixRep) -> int:
    return hom_space_dimension(rep, rep)


def is_faithful(rep: MatrixRep) -> bool:
    eye = np.eye(rep.dim, dtype=np.int64)
    hits = [i for i in range(rep.order) if np.array_equal(rep.image(i), eye)]
    return hits == [rep.identity]


def kernel_elements(rep: MatrixRep) -> list[int]:
    eye = np.eye(rep.dim, dtype=np.int64)
    return [i for i in range(rep.order) if np.array_equal(rep.image(i), eye)]


# ---------------------------------------------------------------------------
# embeddings and spin closure


def equivariant_embedding(module: MatrixRep, regular: MatrixRep) -> tuple[np.ndarray, FqSubspace]:
    """An explicit injective equivariant map from the module into the
    regular module: returns (T, image subspace) where T has shape
    (|G|, dim) and T mod(g) = reg(g) T.  Injectivity is certified by a rank
    check; the image subspace is re-verified invariant under every element.
    """
    basis = equivariant_map_basis(module, regular)
    if basis.shape[0] == 0:
        raise NoEmbedding()
    t = basis[0].reshape(regular.dim, module.dim) % regular.q
    if fl.rank(t, regular.q) != module.dim:
        # a nonzero equivariant map out of an irreducible module is injective;
        # a rank drop here would mean the module was not irreducible
        raise NoEmbedding("first basis map is not injective")
    sub = FqSubspace.from_rows(t.T, ambient=regular.dim, q=regular.q)
    assert sub.rank == module.dim
    _assert_invariant(sub, regular)
    return t, sub


def _assert_invariant(sub: FqSubspace, rep: MatrixRep) -> None:
    for g in range(rep.order):
        for row in sub.basis:
            moved = _apply_image_to_vector(rep, g, row)
            assert sub.contains(moved), "subspace is not invariant"


def _apply_image_to_vector(rep: MatrixRep, g: int, v: np.ndarray) -> np.ndarray:
    if rep.perms is not None:
        out = np.zeros_like(v)
        out[rep.perms[g]] = v
        return out % rep.q
    return fl.mat_vec(rep.image(g), v, rep.q)


def spin_closure(rep: MatrixRep, v) -> FqSubspace:
    """Smallest invariant subspace containing v."""
    q = rep.q
    sub = FqSubspace.from_rows(np.asarray(v, dtype=np.int64).reshape(1, -1), rep.dim, q)
    while True:
        rows = [sub.basis]
        for g in rep.generators:
            for row in sub.basis:
                rows.append(_apply_image_to_vector(rep, g, row).reshape(1, -1))
        nxt = FqSubspace.from_rows(np.concatenate(rows, axis=0), rep.dim, q)
        if nxt.rank == sub.rank:
            return nxt
        sub = nxt


def spin_spans_everything(rep: MatrixRep, vectors) -> bool:
    return all(spin_closure(rep, v).rank == rep.dim for v in vectors)


# ---------------------------------------------------------------------------
# serialization: dense row-major decimal text with a "dim q" header


def format_matrix(m: np.ndarray, q: int) -> str:
    m = np.asarray(m) % q
    lines = [f"{m.shape[0]} {q}"]
    for row in m:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> tuple[np.ndarray, int]:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    dim, q = (int(x) for x in lines[0].split())
    if len(lines) != dim + 1:
        raise ValueError(f"expected {dim} rows, found {len(lines) - 1}")
    rows = [[int(x) % q for x in ln.split()] for ln in lines[1:]]
    m = np.array(rows, dtype=np.int64)
    if m.shape != (dim, dim):
        raise ValueError("row width does not match the declared dimension")
    return m, q
