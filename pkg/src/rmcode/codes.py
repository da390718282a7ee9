"""Evaluation codes, duals, minimum distance, generalized Hamming weights,
footprint values, and the weight-matrix resolver.

Enumeration kernels run batched on numpy arrays of field codes so that exact
brute force stays fast enough for the documented budgets.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .errors import BudgetExceeded, InternalInconsistency, Unsupported
from .groebner import monomial_colon, monomial_dim_degree, standard_monomials_upto

DEFAULT_CODEWORD_BUDGET = 10**7
DEFAULT_SUBSPACE_BUDGET = 10**6
_CHUNK = 1 << 17


def enumeration_budget(default):
    env = os.environ.get("RMCODE_BUDGET")
    return int(env) if env else default


@dataclass
class LinearCode:
    """An [m, k] linear code, canonically represented by an RREF basis."""

    field: object
    length: int
    basis: np.ndarray  # k x m, RREF
    provenance: tuple = ()

    @classmethod
    def from_rows(cls, field, rows, length=None, provenance=()):
        rows = field.arr(rows)
        if rows.size == 0:
            if length is None:
                raise ValueError("zero code needs an explicit length")
            return cls(field, length, np.zeros((0, length), dtype=np.int64), provenance)
        R, _ = linalg.rref(field, rows.reshape(-1, rows.shape[-1]))
        return cls(field, rows.shape[-1], R, provenance)

    @property
    def dimension(self):
        return self.basis.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.length == other.length
            and np.array_equal(self.basis, other.basis)
        )

    def contains_code(self, other):
        if other.dimension == 0:
            return True
        return linalg.row_space_contains(self.field, self.basis, other.basis)

    def scaled(self, beta):
        """The monomially equivalent code beta . C (entrywise column scaling)."""
        f = self.field
        beta = f.arr(beta)
        if np.any(beta == 0):
            raise ValueError("scaling vector must have nonzero entries")
        return LinearCode.from_rows(
            f, f.mul_arr(self.basis, beta[None, :]), length=self.length
        )


def code_of_degree(X, gb, d):
    """C_X(d): the row space of the degree-d standard-monomial evaluations."""
    if d < 0:
        return LinearCode(
            X.field, X.m, np.zeros((0, X.m), dtype=np.int64), provenance=("X", d)
        )
    monos = standard_monomials_upto(gb, X.s, d)[d]
    rows = X.eval_monomials(monos)
    C = LinearCode.from_rows(X.field, rows, length=X.m, provenance=("X", d))
    if C.dimension != len(monos):
        # the evaluation map is injective on the span of standard monomials
        raise InternalInconsistency(
            f"dim C_X({d}) = {C.dimension} != |footprint_{d}| = {len(monos)}"
        )
    return C


def dual_code(C):
    """C^perp as an RREF nullspace basis."""
    f = C.field
    if C.dimension == 0:
        eye = np.eye(C.length, dtype=np.int64)
        return LinearCode(f, C.length, eye, provenance=("dual",) + C.provenance)
    N = linalg.nullspace(f, C.basis)
    return LinearCode(f, C.length, N, provenance=("dual",) + C.provenance)


def gaussian_binomial(k, r, q):
    """Number of r-dimensional subspaces of F_q^k."""
    if r < 0 or r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def projective_count(k, q):
    return (q**k - 1) // (q - 1)


def _digits(n_arr, base, ndigits):
    out = np.empty((len(n_arr), ndigits), dtype=np.int64)
    c = n_arr.copy()
    for i in range(ndigits):
        out[:, i] = c % base
        c //= base
    return out


def min_distance(C, limit=None):
    """Exact minimum Hamming weight by scalar-class codeword enumeration."""
    limit = limit if limit is not None else enumeration_budget(DEFAULT_CODEWORD_BUDGET)
    f = C.field
    k, m = C.dimension, C.length
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    total = projective_count(k, f.q)
    if total > limit:
        raise BudgetExceeded(
            f"{total} projective codewords exceed budget {limit}",
            required=total,
            budget=limit,
        )
    G = C.basis
    best = m
    # one representative per scalar class: first nonzero message entry = 1
    for lead in range(k):
        nfree = k - lead - 1
        count = f.q**nfree
        for start in range(0, count, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, count))
            cw = np.broadcast_to(G[lead], (len(idx), m)).copy()
            if nfree:
                digs = _digits(idx, f.q, nfree)
                for t in range(nfree):
                    col = digs[:, t]
                    cw = f.add_arr(cw, f.mul_arr(col[:, None], G[lead + 1 + t][None, :]))
            w = (cw != 0).sum(axis=1)
            best = min(best, int(w.min()))
            if best == 1:
                return 1
    return best


def _pivot_free_slots(pivots, k):
    """Free coordinate slots (row, col) of an RREF pattern, column-major."""
    pset = set(pivots)
    slots = []
    for col in range(k):
        if col in pset:
            continue
        for row, p in enumerate(pivots):
            if p < col:
                slots.append((row, col))
    return slots


def ghw(C, r, limit=None):
    """Exact r-th generalized Hamming weight by RREF subspace enumeration."""
    limit = limit if limit is not None else enumeration_budget(DEFAULT_SUBSPACE_BUDGET)
    f = C.field
    k, m = C.dimension, C.length
    if not 1 <= r <= k:
        raise ValueError(f"r must be in 1..{k}")
    total = gaussian_binomial(k, r, f.q)
    if total > limit:
        raise BudgetExceeded(
            f"{total} subspaces exceed budget {limit}", required=total, budget=limit
        )
    G = C.basis
    best = m
    for pivots in itertools.combinations(range(k), r):
        slots = _pivot_free_slots(pivots, k)
        nfree = len(slots)
        count = f.q**nfree
        for start in range(0, count, _CHUNK):
            idx = np.arange(start, min(start + _CHUNK, count))
            n = len(idx)
            cw = np.empty((n, r, m), dtype=np.int64)
            for i, p in enumerate(pivots):
                cw[:, i, :] = G[p]
            if nfree:
                digs = _digits(idx, f.q, nfree)
                for t, (row, col) in enumerate(slots):
                    cw[:, row, :] = f.add_arr(
                        cw[:, row, :], f.mul_arr(digs[:, t][:, None], G[col][None, :])
                    )
            support = (cw != 0).any(axis=1).sum(axis=1)
            best = min(best, int(support.min()))
            if best == r:
                return r
    return best


# -- footprint -------------------------------------------------------------------


def footprint(gb, d, r, nvars=None, degree=None):
    """fp(d, r) = deg(S/I) - max over r-subsets F of the degree-d standard
    monomials of: deg(S/(in(I)+(F))) when (in(I) : F) != in(I), else 0."""
    init = gb.initial_ideal()
    if degree is None:
        _, degree = monomial_dim_degree(init)
    monos = standard_monomials_upto(gb, nvars or gb.nvars, d)[d]
    if not 1 <= r <= len(monos):
        raise ValueError(f"r must be in 1..{len(monos)}")
    best = 0
    for F in itertools.combinations(monos, r):
        if monomial_colon(init, list(F)) == init:
            contrib = 0
        else:
            _, degF = monomial_dim_degree(init.plus(F))
            contrib = degF
        best = max(best, contrib)
    return degree - best


# -- weight matrix ---------------------------------------------------------------


@dataclass
class Cell:
    """One weight-matrix entry: exact value, interval, or infinity."""

    kind: str          # "exact" | "interval" | "infinity"
    lo: int = 0
    hi: int = 0
    method: str = ""   # how an exact value was obtained

    @classmethod
    def exact(cls, n, method):
        return cls("exact", n, n, method)

    @classmethod
    def infinity(cls):
        return cls("infinity")

    @property
    def value(self):
        if self.kind != "exact":
            raise ValueError("cell is not exact")
        return self.lo

    def as_dict(self):
        if self.kind == "infinity":
            return {"kind": "infinity"}
        if self.kind == "exact":
            return {"kind": "exact", "value": self.lo, "method": self.method}
        return {"kind": "interval", "lo": self.lo, "hi": self.hi}


@dataclass
class WeightMatrix:
    r0: int
    m: int
    H: tuple
    cells: list                 # cells[d-1][r-1]
    fp: list                    # fp[d-1][r-1] or None where r > H(d)
    budget: int

    def cell(self, d, r):
        return self.cells[d - 1][r - 1]

    def all_exact(self):
        return all(
            c.kind != "interval" for row in self.cells for c in row
        )

    def as_dict(self):
        return {
            "r0": self.r0,
            "length": self.m,
            "budget": self.budget,
            "cells": [[c.as_dict() for c in row] for row in self.cells],
            "footprint": self.fp,
        }

    def render(self):
        def fmt(c):
            if c.kind == "infinity":
                return "∞"
            if c.kind == "exact":
                return str(c.lo)
            return f"[{c.lo},{c.hi}]"

        widths = [
            max(len(fmt(self.cells[d][r])) for d in range(self.r0))
            for r in range(self.m)
        ]
        lines = []
        for d in range(self.r0):
            lines.append(
                "  ".join(fmt(self.cells[d][r]).rjust(widths[r]) for r in range(self.m))
            )
        return "\n".join(lines)


def weight_matrix(X, gb, hd, isx, budget=None):
    """Resolve every delta_X(d, r) cell for 1 <= d <= r0, 1 <= r <= m.

    Resolution order per cell: brute force within budget; infinity when
    r > H(d); the regularity-index pin delta(d, r) = r for d >= v_r; then
    interval tightening from the footprint lower bound, the generalized
    Singleton bound, and strict row/column monotonicity.  Unresolved cells
    stay honest intervals.
    """
    budget = budget if budget is not None else enumeration_budget(DEFAULT_SUBSPACE_BUDGET)
    f = X.field
    m = X.m
    r0 = hd.r0

    def Hval(d):
        return hd.H[d] if d <= r0 else m

    v_sorted = isx.v_sorted  # v_sorted[r-1] = R_r
    init = gb.initial_ideal()
    _, deg_total = monomial_dim_degree(init)
    if deg_total != m:
        raise InternalInconsistency("deg(S/in(I)) must equal |X|")

    codes_by_d = {d: code_of_degree(X, gb, d) for d in range(1, r0 + 1)}

    cells = [[None] * m for _ in range(r0)]
    fpm = [[None] * m for _ in range(r0)]
    lo = [[1] * m for _ in range(r0)]
    hi = [[m] * m for _ in range(r0)]

    for d in range(1, r0 + 1):
        k = Hval(d)
        for r in range(1, m + 1):
            if r > k:
                cells[d - 1][r - 1] = Cell.infinity()
                continue
            # the footprint enumerates r-subsets of the degree-d footprint;
            # it obeys the same explicit budget as the subspace sweeps
            fp_val = None
            if comb(k, r) <= budget:
                fp_val = footprint(gb, d, r, nvars=X.s, degree=deg_total)
            fpm[d - 1][r - 1] = fp_val
            if gaussian_binomial(k, r, f.q) <= budget:
                val = ghw(codes_by_d[d], r, limit=budget)
                if fp_val is not None and val < fp_val:
                    raise InternalInconsistency(
                        f"footprint bound violated at (d={d}, r={r})"
                    )
                cells[d - 1][r - 1] = Cell.exact(val, "brute")
                continue
            if d >= v_sorted[r - 1]:
                cells[d - 1][r - 1] = Cell.exact(r, "regularity-pin")
                continue
            lo[d - 1][r - 1] = max(r, fp_val if fp_val is not None else r)
            hi[d - 1][r - 1] = m - k + r  # generalized Singleton

    # constraint propagation on the unresolved cells
    changed = True
    while changed:
        changed = False
        for d in range(1, r0 + 1):
            for r in range(1, m + 1):
                c = cells[d - 1][r - 1]
                if c is not None and c.kind != "interval":
                    continue

                def bounds(dd, rr):
                    if not (1 <= dd <= r0 and 1 <= rr <= m):
                        return None
                    cc = cells[dd - 1][rr - 1]
                    if cc is None:
                        return lo[dd - 1][rr - 1], hi[dd - 1][rr - 1]
                    if cc.kind == "exact":
                        return cc.lo, cc.hi
                    if cc.kind == "interval":
                        return cc.lo, cc.hi
                    return None

                L, U = lo[d - 1][r - 1], hi[d - 1][r - 1]
                if cells[d - 1][r - 1] is not None:
                    L, U = cells[d - 1][r - 1].lo, cells[d - 1][r - 1].hi
                # strict row increase: delta(d, r-1) < delta(d, r) < delta(d, r+1)
                b = bounds(d, r - 1)
                if b:
                    L = max(L, b[0] + 1)
                b = bounds(d, r + 1)
                if b:
                    U = min(U, b[1] - 1)
                # columns strictly decrease until they stabilize at r (the
                # stabilization degree is the pinned r-th v-number)
                b = bounds(d + 1, r)
                if b and d + 1 <= r0:
                    L = max(L, b[0] + 1 if d + 1 <= v_sorted[r - 1] else b[0])
                b = bounds(d - 1, r)
                if b and d - 1 >= 1 and d <= v_sorted[r - 1]:
                    U = min(U, b[1] - 1)
                if L > U:
                    raise InternalInconsistency(
                        f"bound contradiction at (d={d}, r={r})"
                    )
                prev = cells[d - 1][r - 1]
                if L == U:
                    new = Cell.exact(L, "bounds")
                else:
                    new = Cell("interval", L, U)
                if prev is None or (prev.lo, prev.hi, prev.kind) != (
                    new.lo,
                    new.hi,
                    new.kind,
                ):
                    cells[d - 1][r - 1] = new
                    lo[d - 1][r - 1], hi[d - 1][r - 1] = L, U
                    changed = True

    return WeightMatrix(r0, m, tuple(hd.H), cells, fpm, budget)


# -- monomial equivalence ----------------------------------------------------------


def monomially_equivalent(C1, C2, beta=None):
    """Verify C2 = beta . C1 for a supplied witness; blind search is out of
    scope and raises Unsupported."""
    if C1.length != C2.length:
        raise ValueError("codes of different lengths")
    if beta is None:
        raise Unsupported("blind monomial-equivalence search is not provided")
    ok = C1.scaled(beta) == C2
    if ok:
        # symmetric form of the witness (dual equation)
        d1, d2 = dual_code(C1), dual_code(C2)
        if not d2 == d1.scaled([C1.field.inv(int(b)) for b in beta]):
            raise InternalInconsistency("dual form of the witness failed")
    return ok
