"""Exact linear algebra over a finite field on numpy arrays of element codes."""

from __future__ import annotations

import numpy as np


def rref(field, mat):
    """Reduced row-echelon form.

    Returns (R, pivots) where R is the RREF (zero rows dropped) and pivots is
    the tuple of pivot column indices.
    """
    a = field.arr(mat).copy()
    if a.size == 0:
        return a.reshape(0, a.shape[1] if a.ndim == 2 else 0), ()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = field.inv(int(a[r, c]))
        a[r] = field.mul_arr(a[r], inv)
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = a[others, c][:, None]
            a[others] = field.sub_arr(a[others], field.mul_arr(factors, a[r][None, :]))
        pivots.append(c)
        r += 1
    return a[: len(pivots)], tuple(pivots)


def rank(field, mat):
    return len(rref(field, mat)[1])


def nullspace(field, mat):
    """RREF basis of {x : mat @ x = 0} (rows of the result are the basis)."""
    a = np.asarray(mat)
    if a.ndim != 2:
        raise ValueError("matrix expected")
    cols = a.shape[1]
    R, pivots = rref(field, a)
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return field.arr(np.zeros((0, cols), dtype=np.int64))
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = field.neg(int(R[r, fc]))
    B, _ = rref(field, basis)
    return B


def solve(field, mat, rhs):
    """One solution of mat @ x = rhs, or None when inconsistent."""
    a = field.arr(mat)
    b = field.arr(rhs).reshape(-1, 1)
    aug = np.concatenate([a, b], axis=1)
    R, pivots = rref(field, aug)
    cols = a.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, cols]
    return x


def row_space_equal(field, a, b):
    """Equality of row spaces via canonical RREF comparison."""
    Ra, _ = rref(field, a)
    Rb, _ = rref(field, b)
    return Ra.shape == Rb.shape and bool(np.array_equal(Ra, Rb))


def row_space_contains(field, a, rows):
    """True when every given row lies in the row space of a."""
    Ra, _ = rref(field, a)
    r0 = Ra.shape[0]
    stacked = np.concatenate([Ra, field.arr(rows).reshape(-1, Ra.shape[1])], axis=0)
    return rank(field, stacked) == r0


def matmul(field, a, b):
    """Exact a @ b over the field (small operands; loops over the inner axis)."""
    a = field.arr(a)
    b = field.arr(b)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = field.add_arr(out, field.mul_arr(a[:, t][:, None], b[t][None, :]))
    return out
