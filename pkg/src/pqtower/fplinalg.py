"""Exact dense linear algebra over a prime field F_p, backed by numpy.

Matrices are integer numpy arrays with entries reduced mod p.  All products
route through float64 matmul in blocks small enough that every accumulated
value stays strictly below 2**53, so the arithmetic is exact; results are
reduced back to integers.  No floating point result is ever trusted beyond
that exactness window.
"""

from __future__ import annotations

import numpy as np

_EXACT_LIMIT = 2**53


def as_field_matrix(a, p: int) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64) % p
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return m


def _max_inner(p: int) -> int:
    # accumulation bound: inner * (p-1)^2 + (p-1) < 2^53
    return max(1, (_EXACT_LIMIT - p) // max(1, (p - 1) ** 2))


def mat_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product of two F_p matrices."""
    a = as_field_matrix(a, p)
    b = as_field_matrix(b, p)
    inner = a.shape[1]
    step = _max_inner(p)
    if inner <= step:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return prod.astype(np.int64) % p
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for lo in range(0, inner, step):
        hi = min(lo + step, inner)
        part = a[:, lo:hi].astype(np.float64) @ b[lo:hi, :].astype(np.float64)
        acc = (acc + part.astype(np.int64)) % p
    return acc


def mat_vec(a: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    return mat_mul(a, as_field_matrix(v, p).reshape(-1, 1), p).ravel()


def mat_pow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    a = as_field_matrix(a, p)
    out = np.eye(a.shape[0], dtype=np.int64)
    base = a
    while e:
        if e & 1:
            out = mat_mul(out, base, p)
        base = mat_mul(base, base, p)
        e >>= 1
    return out


def rref(a: np.ndarray, p: int, block: int = 64) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns (R, pivot_columns) with R canonical: pivot rows first in pivot
    column order, zero rows last.  Elimination is blocked: pivots are found
    on a small panel, then the trailing columns receive one exact matmul
    update per panel (classic block Gauss-Jordan).
    """
    A = as_field_matrix(a, p).copy()
    rows, cols = A.shape
    pivot_cols: list[int] = []
    pivot_rows: list[int] = []
    used = np.zeros(rows, dtype=bool)
    block = min(block, _max_inner(p))
    c0 = 0
    while c0 < cols and len(pivot_rows) < rows:
        c1 = min(c0 + block, cols)
        panel = A[:, c0:c1].copy()
        panel_pc: list[int] = []
        panel_pr: list[int] = []
        for c in range(c1 - c0):
            col = panel[:, c].copy()
            col[used] = 0
            for r in panel_pr:
                col[r] = 0
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            r = int(nz[0])
            inv = pow(int(panel[r, c]), -1, p)
            panel[r] = (panel[r] * inv) % p
            other = panel[:, c].copy()
            other[r] = 0
            hit = np.nonzero(other)[0]
            if hit.size:
                panel[hit] = (panel[hit] - np.outer(other[hit], panel[r])) % p
            panel_pc.append(c0 + c)
            panel_pr.append(r)
        if panel_pc:
            R = np.array(panel_pr, dtype=np.intp)
            if c1 < cols:
                # trailing update from the ORIGINAL values of this panel:
                # B = pivot block, Y = B^-1 * pivot rows, others -= coeff @ Y
                B = A[np.ix_(R, np.array(panel_pc, dtype=np.intp))]
                Y = mat_mul(_small_inverse(B, p), A[R, c1:], p)
                coeff = A[:, np.array(panel_pc, dtype=np.intp)].copy()
                coeff[R] = 0
                A[:, c1:] = (A[:, c1:] - mat_mul(coeff, Y, p)) % p
                A[R, c1:] = Y
            A[:, c0:c1] = panel
            pivot_cols.extend(panel_pc)
            pivot_rows.extend(panel_pr)
            used[R] = True
        c0 = c1
    out = np.zeros_like(A)
    out[: len(pivot_rows)] = A[np.array(pivot_rows, dtype=np.intp)]
    return out, pivot_cols


def _small_inverse(b: np.ndarray, p: int) -> np.ndarray:
    n = b.shape[0]
    aug = np.concatenate([b % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.nonzero(aug[c:, c])[0]
        r = c + int(nz[0])
        if r != c:
            aug[[c, r]] = aug[[r, c]]
        aug[c] = (aug[c] * pow(int(aug[c, c]), -1, p)) % p
        other = aug[:, c].copy()
        other[c] = 0
        hit = np.nonzero(other)[0]
        if hit.size:
            aug[hit] = (aug[hit] - np.outer(other[hit], aug[c])) % p
    return aug[:, n:]


def rank(a: np.ndarray, p: int) -> int:
    return len(rref(a, p)[1])


def null_space(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : a @ x = 0}, one basis vector per row, in RREF order."""
    A = as_field_matrix(a, p)
    cols = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-int(R[r, f])) % p
    return basis


def row_space(a: np.ndarray, p: int) -> np.ndarray:
    """RREF basis of the row span (zero rows dropped)."""
    R, pivots = rref(a, p)
    return R[: len(pivots)].copy()


def in_row_space(basis_rref: np.ndarray, pivots: list[int], v: np.ndarray, p: int) -> bool:
    v = as_field_matrix(v, p).ravel().copy()
    for r, pc in enumerate(pivots):
        c = int(v[pc])
        if c:
            v = (v - c * basis_rref[r]) % p
    return not v.any()


def identity_matrix(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)
