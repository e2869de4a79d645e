"""Finite groups as explicit multiplication tables.

The table is the brute-force oracle representation: order n, an n-by-n
array ``mul`` of element indices, a distinguished identity and a per-element
inverse array.  Everything here is pure; tables and member tuples are never
mutated after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CapExceeded,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAbelian,
    NotASubgroup,
    NotLatinSquare,
    NotNormal,
)

DEFAULT_ORDER_CAP = 2048


@dataclass(frozen=True)
class TableGroup:
    mul: np.ndarray
    identity: int
    inv: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        self.mul.flags.writeable = False
        self.inv.flags.writeable = False

    @property
    def order(self) -> int:
        return int(self.mul.shape[0])

    def product(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def __repr__(self) -> str:
        return f"TableGroup(order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    parent: TableGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order})"


@dataclass(frozen=True)
class StructureReport:
    order: int
    exponent: int
    center_order: int
    derived_order: int
    is_abelian: bool
    derived_length: int | None


# ---------------------------------------------------------------------------
# validation and construction


def validate_table(mul, labels=None, cap: int = DEFAULT_ORDER_CAP) -> TableGroup:
    """Check the group axioms exhaustively and wrap the table.

    Raises NotLatinSquare / NoIdentity / NoInverse / NonAssociative naming
    the violated axiom; order is limited by ``cap`` so the associativity
    check stays exhaustive.
    """
    m = np.asarray(mul, dtype=np.int32)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("multiplication table must be square")
    n = m.shape[0]
    if n > cap:
        raise CapExceeded(n, cap)
    if m.min() < 0 or m.max() >= n:
        raise ValueError("table entries must be element indices in [0, n)")
    full = np.arange(n, dtype=np.int32)
    for i in range(n):
        if not np.array_equal(np.sort(m[i]), full):
            raise NotLatinSquare("row", i)
        if not np.array_equal(np.sort(m[:, i]), full):
            raise NotLatinSquare("column", i)
    identity = None
    for e in range(n):
        if np.array_equal(m[e], full) and np.array_equal(m[:, e], full):
            identity = e
            break
    if identity is None:
        raise NoIdentity()
    inv = np.full(n, -1, dtype=np.int32)
    for i in range(n):
        js = np.nonzero(m[i] == identity)[0]
        if js.size != 1 or m[js[0], i] != identity:
            raise NoInverse(i)
        inv[i] = js[0]
    # associativity: for each k, (ij)k == i(jk) for all i, j
    for k in range(n):
        col = m[:, k]
        lhs = col[m]
        rhs = m[:, col]
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise NonAssociative(int(bad[0]), int(bad[1]), k)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError("labels length must equal the order")
    return TableGroup(mul=m, identity=identity, inv=inv, labels=labels)


def _wrap_trusted(mul: np.ndarray, identity: int, inv: np.ndarray, labels=None) -> TableGroup:
    # for tables valid by construction (products, quotients)
    return TableGroup(mul=mul.astype(np.int32), identity=identity,
                      inv=inv.astype(np.int32), labels=labels)


def subgroup(parent: TableGroup, members) -> Subgroup:
    """Wrap a member set after checking closure, identity and inverses."""
    mem = tuple(sorted(set(int(x) for x in members)))
    if parent.identity not in mem:
        raise NotASubgroup("member set misses the identity")
    idx = np.array(mem, dtype=np.intp)
    prods = parent.mul[np.ix_(idx, idx)]
    if not set(np.unique(prods)).issubset(mem):
        raise NotASubgroup("member set is not closed under multiplication")
    return Subgroup(parent=parent, members=mem)


def closure(g: TableGroup, generators) -> tuple[int, ...]:
    """Members of the subgroup generated by ``generators`` (sorted)."""
    cur = np.unique(np.array([g.identity] + [int(x) for x in generators], dtype=np.intp))
    while True:
        prods = np.unique(g.mul[np.ix_(cur, cur)])
        if prods.size == cur.size:
            return tuple(int(x) for x in cur)
        cur = prods


def generating_set(g: TableGroup) -> tuple[int, ...]:
    """A small greedy generating set (deterministic)."""
    gens: list[int] = []
    have = {g.identity}
    for x in g.elements():
        if x not in have:
            gens.append(x)
            have = set(closure(g, gens))
            if len(have) == g.order:
                break
    return tuple(gens)


# ---------------------------------------------------------------------------
# structure invariants


def element_orders(g: TableGroup) -> np.ndarray:
    n = g.order
    orders = np.zeros(n, dtype=np.int64)
    cur = np.arange(n, dtype=np.intp)
    base = np.arange(n, dtype=np.intp)
    k = 1
    while (orders == 0).any():
        done = (cur == g.identity) & (orders == 0)
        orders[done] = k
        cur = g.mul[cur, base]
        k += 1
    return orders


def exponent(g: TableGroup) -> int:
    return int(math.lcm(*[int(o) for o in element_orders(g)]))


def center(g: TableGroup) -> Subgroup:
    mask = (g.mul == g.mul.T).all(axis=1)
    return subgroup(g, np.nonzero(mask)[0])


def is_abelian(g: TableGroup) -> bool:
    return bool((g.mul == g.mul.T).all())


def _commutators(g: TableGroup, members: np.ndarray) -> np.ndarray:
    inv = g.inv[members].astype(np.intp)
    left = g.mul[np.ix_(inv, inv)]
    right = g.mul[np.ix_(members, members)]
    return np.unique(g.mul[left, right])


def derived_subgroup(g: TableGroup) -> Subgroup:
    members = np.arange(g.order, dtype=np.intp)
    return subgroup(g, closure(g, _commutators(g, members)))


def _derived_of_members(g: TableGroup, members: tuple[int, ...]) -> tuple[int, ...]:
    arr = np.array(members, dtype=np.intp)
    return closure(g, _commutators(g, arr))


def derived_series(g: TableGroup) -> list[tuple[int, ...]]:
    series = [tuple(range(g.order))]
    while True:
        nxt = _derived_of_members(g, series[-1])
        if len(nxt) == len(series[-1]):
            return series
        series.append(nxt)


def derived_length(g: TableGroup) -> int | None:
    """Length of the derived series, or None if it stabilises above 1."""
    series = derived_series(g)
    if len(series[-1]) != 1:
        return None
    return len(series) - 1


def structure_report(g: TableGroup) -> StructureReport:
    return StructureReport(
        order=g.order,
        exponent=exponent(g),
        center_order=center(g).order,
        derived_order=derived_subgroup(g).order,
        is_abelian=is_abelian(g),
        derived_length=derived_length(g),
    )


# ---------------------------------------------------------------------------
# products and quotients


def direct_product(g: TableGroup, h: TableGroup, cap: int = DEFAULT_ORDER_CAP) -> TableGroup:
    """Direct product with index (i, j) -> i*|H| + j."""
    n, m = g.order, h.order
    if n * m > cap:
        raise CapExceeded(n * m, cap)
    gi, hi = np.divmod(np.arange(n * m, dtype=np.int64), m)
    mul = (g.mul[np.ix_(gi, gi)].astype(np.int64) * m + h.mul[np.ix_(hi, hi)]).astype(np.int32)
    inv = (g.inv[gi].astype(np.int64) * m + h.inv[hi]).astype(np.int32)
    identity = g.identity * m + h.identity
    labels = None
    if g.labels and h.labels:
        labels = tuple(f"({g.labels[a]},{h.labels[b]})" for a, b in zip(gi, hi))
    return _wrap_trusted(mul, identity, inv, labels)


def direct_product_many(factors: list[TableGroup], cap: int = DEFAULT_ORDER_CAP) -> TableGroup:
    if not factors:
        raise ValueError("need at least one factor")
    out = factors[0]
    for f in factors[1:]:
        out = direct_product(out, f, cap=cap)
    return out


def is_normal(g: TableGroup, members) -> bool:
    mem = np.array(sorted(members), dtype=np.intp)
    inside = np.zeros(g.order, dtype=bool)
    inside[mem] = True
    gs = np.arange(g.order, dtype=np.intp)
    conj = g.mul[g.mul[np.ix_(gs, mem)], g.inv[gs].astype(np.intp)[:, None]]
    return bool(inside[conj].all())


def quotient_with_projection(g: TableGroup, n: Subgroup) -> tuple[TableGroup, np.ndarray]:
    """Quotient group plus the projection array elem -> coset index.

    Cosets are labelled by their minimal representative, so the construction
    is deterministic and testable bit for bit.
    """
    if n.parent is not g:
        raise NotASubgroup("subgroup belongs to a different parent group")
    if not is_normal(g, n.members):
        raise NotNormal()
    mem = np.array(n.members, dtype=np.intp)
    rep = g.mul[:, mem].min(axis=1)
    reps = np.unique(rep)
    coset_of = {int(r): i for i, r in enumerate(reps)}
    proj = np.array([coset_of[int(rep[x])] for x in range(g.order)], dtype=np.int32)
    k = reps.size
    mul = np.zeros((k, k), dtype=np.int32)
    for i, r in enumerate(reps):
        mul[i] = proj[g.mul[r, reps]]
    identity = int(proj[g.identity])
    inv = proj[g.inv[reps].astype(np.intp)].astype(np.int32)
    labels = tuple(f"[{g.label(int(r))}]" for r in reps) if g.labels else None
    return _wrap_trusted(mul, identity, inv, labels), proj


def quotient(g: TableGroup, n: Subgroup) -> TableGroup:
    return quotient_with_projection(g, n)[0]


def subgroup_as_group(g: TableGroup, s: Subgroup) -> TableGroup:
    """The subgroup reindexed as a standalone table group."""
    mem = np.array(s.members, dtype=np.intp)
    pos = {int(x): i for i, x in enumerate(mem)}
    mul = np.array([[pos[int(g.mul[a, b])] for b in mem] for a in mem], dtype=np.int32)
    inv = np.array([pos[int(g.inv[a])] for a in mem], dtype=np.int32)
    labels = tuple(g.label(int(a)) for a in mem) if g.labels else None
    return _wrap_trusted(mul, pos[g.identity], inv, labels)


# ---------------------------------------------------------------------------
# subgroup families


def index_p_subgroups(g: TableGroup, p: int) -> list[Subgroup]:
    """Kernels of the surjections onto the cyclic group of order p.

    Computed as preimages of the hyperplanes of the largest elementary
    abelian p-quotient g / (g' * g^p); complete and duplicate free.
    """
    if g.order % p:
        raise ValueError(f"{p} does not divide the group order {g.order}")
    derived = derived_subgroup(g).members
    powers = pth_powers(g, p)
    kern = subgroup(g, closure(g, set(derived) | set(int(x) for x in powers)))
    q, proj = quotient_with_projection(g, kern)
    coords, basis_rank = _elementary_abelian_coordinates(q, p)
    if basis_rank == 0:
        return []
    elem_coords = coords[proj]
    out = []
    for func in _normalized_functionals(basis_rank, p):
        vals = elem_coords @ np.array(func)
        members = np.nonzero(vals % p == 0)[0]
        out.append(subgroup(g, members))
    out.sort(key=lambda s: s.members)
    return out


def pth_powers(g: TableGroup, p: int) -> np.ndarray:
    """The set {g^p : g in G} as a sorted index array."""
    base = np.arange(g.order, dtype=np.intp)
    acc = base.copy()
    for _ in range(p - 1):
        acc = g.mul[acc, base].astype(np.intp)
    return np.unique(acc)


def _elementary_abelian_coordinates(q: TableGroup, p: int):
    """Coordinates of an elementary abelian p-group over F_p."""
    orders = element_orders(q)
    if not ((orders == 1) | (orders == p)).all() or not is_abelian(q):
        raise ValueError("quotient by the kernel is not elementary abelian")
    basis: list[int] = []
    known: dict[int, tuple[int, ...]] = {q.identity: ()}
    for x in q.elements():
        if x in known:
            continue
        basis.append(x)
        updated: dict[int, tuple[int, ...]] = {}
        for elem, vec in known.items():
            cur = elem
            updated[cur] = vec + (0,)
            for a in range(1, p):
                cur = q.product(cur, x)
                updated[cur] = vec + (a,)
        known = updated
    rank = len(basis)
    assert len(known) == q.order
    coord_arr = np.zeros((q.order, rank), dtype=np.int64)
    for elem, vec in known.items():
        coord_arr[elem] = vec
    return coord_arr, rank


def _normalized_functionals(rank: int, p: int):
    # one functional per hyperplane: first nonzero coefficient equals 1
    def rec(prefix):
        if len(prefix) == rank:
            yield prefix
            return
        for c in range(p):
            yield from rec(prefix + (c,))

    for vec in rec(()):
        nz = [c for c in vec if c]
        if nz and nz[0] == 1:
            yield vec


def conjugacy_classes(g: TableGroup) -> list[tuple[int, ...]]:
    n = g.order
    seen = np.zeros(n, dtype=bool)
    gs = np.arange(n, dtype=np.intp)
    out = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = np.unique(g.mul[g.mul[gs, x], g.inv[gs].astype(np.intp)])
        seen[orbit] = True
        out.append(tuple(int(v) for v in orbit))
    return out


def normal_closure(g: TableGroup, x: int) -> tuple[int, ...]:
    gs = np.arange(g.order, dtype=np.intp)
    orbit = np.unique(g.mul[g.mul[gs, x], g.inv[gs].astype(np.intp)])
    return closure(g, orbit)


def minimal_normal_subgroups(g: TableGroup) -> list[Subgroup]:
    """All minimal normal subgroups, via normal closures of single classes."""
    if g.order <= 1:
        raise ValueError("the trivial group has no minimal normal subgroups")
    closures: dict[frozenset[int], tuple[int, ...]] = {}
    for cls in conjugacy_classes(g):
        if cls == (g.identity,):
            continue
        members = normal_closure(g, cls[0])
        closures.setdefault(frozenset(members), members)
    keys = list(closures)
    minimal = []
    for k in keys:
        if not any(other < k for other in keys):
            minimal.append(closures[k])
    out = [subgroup(g, mem) for mem in sorted(minimal, key=lambda m: (len(m), m))]
    for s in out:
        assert is_normal(g, s.members)
        for x in s.members:
            if x != g.identity:
                assert frozenset(normal_closure(g, x)) == s.member_set()
    return out


# ---------------------------------------------------------------------------
# abelian witnesses (cyclic decomposition with small quotients)


def cyclic_decomposition(g: TableGroup) -> list[tuple[int, ...]]:
    """Direct cyclic factors U_1, U_2, ... by greedy maximal-order peeling.

    Each factor is the cyclic subgroup of a maximal-order element (lowest
    element index breaks ties); its complement inside the current layer is
    found by exhaustive search, smallest member tuple first.
    """
    if not is_abelian(g):
        raise NotAbelian()
    orders = element_orders(g)

    def peel(members: tuple[int, ...]) -> list[tuple[int, ...]]:
        if len(members) == 1:
            return []
        best = max(members, key=lambda x: (orders[x], -x))
        u = closure(g, [best])
        if len(u) == len(members):
            return [u]
        want = len(members) // len(u)
        u_set = set(u)
        for cand in sorted(_subgroups_within(g, members)):
            if len(cand) == want and len(u_set.intersection(cand)) == 1:
                return [u] + peel(cand)
        raise AssertionError("cyclic factor without complement in an abelian group")

    return peel(tuple(range(g.order)))


def _subgroups_within(g: TableGroup, members: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All subgroups contained in a (small) member set.  Exhaustive."""
    trivial = (g.identity,)
    subs = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for s in frontier:
            inside = set(s)
            for x in members:
                if x in inside:
                    continue
                t = closure(g, set(s) | {x})
                if set(t).issubset(members) and t not in subs:
                    subs.add(t)
                    nxt.append(t)
        frontier = nxt
    return subs


def abelian_witness(g: TableGroup) -> list[Subgroup]:
    """Subgroups H_i with trivial joint intersection and [G:H_i] <= exp(G).

    H_i is the product of all cyclic factors except the i-th one.
    """
    factors = cyclic_decomposition(g)
    exp = exponent(g)
    out = []
    for i in range(len(factors)):
        gens: set[int] = set()
        for j, u in enumerate(factors):
            if j != i:
                gens.update(u)
        h = subgroup(g, closure(g, gens) if gens else [g.identity])
        out.append(h)
    cut = set(range(g.order))
    for i, h in enumerate(out):
        cut &= set(h.members)
        assert g.order // h.order == len(factors[i])
        assert g.order // h.order <= exp
    assert cut == {g.identity}
    return out


# ---------------------------------------------------------------------------
# product / quotient minimal-normal comparison


@dataclass(frozen=True)
class ProductQuotientVerdict:
    holds: bool
    factor_orders: tuple[int, ...]
    witness_factor: int | None
    minimal_normal_orders: tuple[int, ...]
    quotient_order: int


def product_quotient_check(factors: list[TableGroup], h: Subgroup, n: Subgroup) -> ProductQuotientVerdict:
    """Check that some factor is at least as large as every minimal normal
    subgroup of H/N, for H inside the direct product of the factors."""
    product = h.parent
    if n.parent is not product:
        raise NotASubgroup("N must live in the same product group as H")
    if not set(n.members).issubset(h.members):
        raise NotASubgroup("N is not contained in H")
    expected = math.prod(f.order for f in factors)
    if product.order != expected:
        raise NotASubgroup("H does not live in the direct product of the given factors")
    h_group = subgroup_as_group(product, h)
    pos = {x: i for i, x in enumerate(h.members)}
    n_in_h = subgroup(h_group, [pos[x] for x in n.members])
    if not is_normal(h_group, n_in_h.members):
        raise NotNormal("N is not normal in H")
    q = quotient(h_group, n_in_h)
    if q.order == 1:
        return ProductQuotientVerdict(True, tuple(f.order for f in factors), None, (), 1)
    mins = minimal_normal_subgroups(q)
    orders = tuple(s.order for s in mins)
    largest = max(orders)
    factor_orders = tuple(f.order for f in factors)
    witness = None
    for i, fo in enumerate(factor_orders):
        if fo >= largest:
            witness = i
            break
    return ProductQuotientVerdict(witness is not None, factor_orders, witness, orders, q.order)


def all_subgroups(g: TableGroup, limit_order: int = 64) -> list[Subgroup]:
    """Every subgroup of a small group (exhaustive closure growth).

    Intended only for desk-scale scans; guarded by ``limit_order``.
    """
    if g.order > limit_order:
        raise CapExceeded(g.order, limit_order, "subgroup enumeration order")
    subs = _subgroups_within(g, tuple(range(g.order)))
    return [subgroup(g, s) for s in sorted(subs, key=lambda m: (len(m), m))]


def intersect_subgroups(subgroups_list: list[Subgroup]) -> Subgroup:
    if not subgroups_list:
        raise ValueError("need at least one subgroup")
    parent = subgroups_list[0].parent
    cut = set(subgroups_list[0].members)
    for s in subgroups_list[1:]:
        if s.parent is not parent:
            raise NotASubgroup("subgroups of different parents")
        cut &= set(s.members)
    return subgroup(parent, cut)


# ---------------------------------------------------------------------------
# small standard groups and serialization


def cyclic_group(n: int) -> TableGroup:
    idx = np.arange(n, dtype=np.int64)
    mul = (idx[:, None] + idx[None, :]) % n
    inv = (-idx) % n
    return _wrap_trusted(mul, 0, inv, tuple(f"g^{i}" for i in range(n)))


def group_from_permutations(perms: list[tuple[int, ...]]) -> TableGroup:
    """Table of the group generated by permutations, composed left-to-right
    as mappings (a*b means apply b, then a)."""
    base = tuple(range(len(perms[0])))
    elems = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for s in frontier:
            for p in perms:
                t = tuple(p[i] for i in s)
                if t not in elems:
                    elems.add(t)
                    nxt.append(t)
        frontier = nxt
    ordered = sorted(elems)
    pos = {p: i for i, p in enumerate(ordered)}
    n = len(ordered)
    mul = np.zeros((n, n), dtype=np.int32)
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            mul[i, j] = pos[tuple(a[k] for k in b)]
    return validate_table(mul, labels=[str(p) for p in ordered])


def write_table(g: TableGroup) -> str:
    lines = [f"order {g.order}"]
    for row in g.mul:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def read_table(text: str, cap: int = DEFAULT_ORDER_CAP) -> TableGroup:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise ValueError("first line must be 'order n'")
    n = int(head[1])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} table rows, found {len(lines) - 1}")
    mul = [[int(x) for x in ln.split()] for ln in lines[1:]]
    return validate_table(mul, cap=cap)
