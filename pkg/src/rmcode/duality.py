"""Duality predicates and certificates: the global criterion with its
parity-check vector, local (essential-monomial) duality, self-orthogonal and
self-dual classification, and the affine criterion via projective closure."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .errors import (
    BudgetExceeded,
    ConditionFailed,
    InternalInconsistency,
    NotEssential,
    NotGorenstein,
)
from .codes import LinearCode, code_of_degree, dual_code, min_distance
from .groebner import normal_form, standard_monomials_upto
from .indicators import standard_indicators
from .polyring import GREVLEX, Poly, monomial_support
from .variety import hilbert_data, projective_closure, vanishing_ideal


@dataclass
class DualityCertificate:
    """Outcome of the global duality criterion.

    ``holds`` iff the Hilbert sums are symmetric and every local v-number
    equals the regularity index; in that case ``beta`` spans the
    one-dimensional dual of C_X(r0-1) and every degree 0..r0 was verified
    directly against C_X(d)^perp = beta . C_X(r0-d-1).
    """

    symmetric_sum: bool
    v_all_r0: bool
    holds: bool
    beta: list | None = None
    verified_degrees: list = dc_field(default_factory=list)
    failure_witness: dict | None = None

    def as_dict(self, field=None):
        out = {
            "holds": self.holds,
            "symmetric_sum": self.symmetric_sum,
            "v_all_r0": self.v_all_r0,
            "beta": None
            if self.beta is None
            else [field.format_element(int(b), signed=True) for b in self.beta],
            "verified_degrees": list(self.verified_degrees),
            "failure_witness": self.failure_witness,
        }
        return out


def _code_at(X, gb, d):
    if d < 0:
        return LinearCode(X.field, X.m, np.zeros((0, X.m), dtype=np.int64))
    return code_of_degree(X, gb, d)


def global_duality(X, gb, hd, isx, check_min_distance=True):
    """The global criterion, evaluated and then verified degree by degree."""
    f = X.field
    m, r0 = X.m, hd.r0

    def Hval(d):
        if d < 0:
            return 0
        return hd.H[d] if d <= r0 else m

    symmetric_sum = all(Hval(d) + Hval(r0 - d - 1) == m for d in range(r0 + 1))
    v_all_r0 = all(v == r0 for v in isx.degrees)
    holds = symmetric_sum and v_all_r0
    if not holds:
        if not v_all_r0:
            witness = {
                "reason": "v_number_below_regularity",
                "v": isx.v_number,
                "r0": r0,
            }
        else:
            bad = next(
                d for d in range(r0 + 1) if Hval(d) + Hval(r0 - d - 1) != m
            )
            witness = {
                "reason": "hilbert_sum",
                "d": bad,
                "sum": Hval(bad) + Hval(r0 - bad - 1),
                "m": m,
            }
        return DualityCertificate(symmetric_sum, v_all_r0, False, None, [], witness)

    C_r0m1 = _code_at(X, gb, r0 - 1)
    if C_r0m1.dimension != m - 1:
        raise InternalInconsistency("H(r0-1) must be m-1 when condition (b) holds")
    N = linalg.nullspace(f, C_r0m1.basis)
    if N.shape[0] != 1:
        raise InternalInconsistency("parity-check space must be one-dimensional")
    beta = N[0]
    if np.any(beta == 0):
        raise InternalInconsistency("parity-check vector must have no zero entry")

    verified = []
    for d in range(r0 + 1):
        lhs = dual_code(_code_at(X, gb, d))
        rhs_code = _code_at(X, gb, r0 - d - 1)
        rhs = rhs_code.scaled(beta) if rhs_code.dimension else rhs_code
        if not lhs == rhs:
            raise InternalInconsistency(
                f"direct duality verification failed at degree {d}"
            )
        verified.append(d)

    if check_min_distance:
        try:
            if r0 >= 1 and min_distance(C_r0m1) != 2:
                raise InternalInconsistency(
                    "min distance at degree r0-1 must be 2 under the criterion"
                )
        except BudgetExceeded:
            pass

    return DualityCertificate(True, True, True, [int(b) for b in beta], verified, None)


def gorenstein_crosscheck(cert, cls):
    """The duality criterion and the Gorenstein property must agree."""
    if cert.holds != cls.gorenstein:
        raise InternalInconsistency(
            f"duality criterion ({cert.holds}) disagrees with the Gorenstein "
            f"classification ({cls.gorenstein})"
        )
    return cert.holds


def local_duality_verify(X, gb, isx, gamma1, gamma2, t_e, projective_mode=False, hd=None):
    """Verify the essential-monomial duality for subsets Gamma1, Gamma2.

    Checks (1) d + k = r0 (relaxed to <= in projective mode), (2)
    |Gamma1| + |Gamma2| = m, (3) t_e absent from every remainder of u1*u2;
    then confirms gamma . ev(K Gamma1) = ev(K Gamma2)^perp with
    gamma_i = (coefficient of t_e in f_i) / f_i(P_i).
    """
    f = X.field
    m = X.m
    if hd is None:
        hd = hilbert_data(gb, m, nvars=X.s)
    r0 = hd.r0
    t_e = tuple(t_e)
    if t_e not in set(isx.essential):
        raise NotEssential(f"{t_e} is not an essential monomial")
    if projective_mode:
        last = X.s - 1
        if not np.all(X.coords[:, last] == 1):
            raise NotEssential("projective mode needs t_s(P_i) = 1 for all i")
        if last in monomial_support(t_e):
            raise NotEssential(
                "projective mode needs the essential monomial free of t_s"
            )
    gamma1 = [tuple(u) for u in gamma1]
    gamma2 = [tuple(u) for u in gamma2]
    if not gamma1 or not gamma2:
        raise ConditionFailed(2, "both subsets must be nonempty")
    d = {sum(u) for u in gamma1}
    k = {sum(u) for u in gamma2}
    if len(d) != 1 or len(k) != 1:
        raise ConditionFailed(1, "subsets must be homogeneous in degree")
    d, k = d.pop(), k.pop()
    std = standard_monomials_upto(gb, X.s, max(d, k))
    if not set(gamma1) <= set(std[d]) or not set(gamma2) <= set(std[k]):
        raise ConditionFailed(1, "subsets must consist of standard monomials")
    if projective_mode:
        if d + k > r0:
            raise ConditionFailed(1, f"d + k = {d + k} > r0 = {r0}")
    elif d + k != r0:
        raise ConditionFailed(1, f"d + k = {d + k} != r0 = {r0}")
    if len(gamma1) + len(gamma2) != m:
        raise ConditionFailed(
            2, f"|Gamma1| + |Gamma2| = {len(gamma1) + len(gamma2)} != m = {m}"
        )
    for u1 in gamma1:
        for u2 in gamma2:
            prod = Poly.monomial(f, X.s, tuple(a + b for a, b in zip(u1, u2)))
            rem = normal_form(prod, gb)
            if t_e in rem.terms:
                raise ConditionFailed(
                    3, f"{t_e} appears in the remainder of a product"
                )

    gamma = [
        f.div(fi.coeff(t_e), val) for fi, val in zip(isx.fs, isx.values)
    ]
    ev1 = X.eval_monomials(gamma1)
    ev2 = X.eval_monomials(gamma2)
    lhs = LinearCode.from_rows(f, f.mul_arr(ev1, f.arr(gamma)[None, :]), length=m)
    rhs = dual_code(LinearCode.from_rows(f, ev2, length=m))
    if not lhs == rhs:
        raise InternalInconsistency("local duality identity failed verification")
    return {
        "d": d,
        "k": k,
        "essential": t_e,
        "gamma": gamma,
        "projective_mode": projective_mode,
    }


def self_orthogonal(X, gb, d, hd=None):
    """C_X(d) subset of its dual, via the all-ones parity condition on
    C_X(2d), cross-checked against the direct containment test."""
    f = X.field
    if hd is None:
        hd = hilbert_data(gb, X.m, nvars=X.s)
    monos2d = standard_monomials_upto(gb, X.s, 2 * d)[2 * d]
    sums = X.eval_monomials(monos2d).copy()
    ones_in_dual = all(int(_row_sum(f, row)) == 0 for row in sums)
    C = code_of_degree(X, gb, d)
    direct = dual_code(C).contains_code(C)
    if ones_in_dual != direct:
        raise InternalInconsistency(
            "parity-sum self-orthogonality test disagrees with direct RREF test"
        )
    return ones_in_dual


def self_dual(X, gb, d, hd=None):
    if hd is None:
        hd = hilbert_data(gb, X.m, nvars=X.s)
    H_d = hd.H[d] if d <= hd.r0 else X.m
    result = self_orthogonal(X, gb, d, hd) and X.m == 2 * H_d
    C = code_of_degree(X, gb, d)
    direct = C == dual_code(C)
    if result != direct:
        raise InternalInconsistency(
            "self-duality criterion disagrees with direct RREF equality"
        )
    return result


def _row_sum(field, row):
    total = 0
    for x in row:
        total = field.add(total, int(x))
    return total


def self_dual_report(X, gb, hd):
    """Per-degree self-orthogonal / self-dual classification for 0..r0."""
    so = [d for d in range(hd.r0 + 1) if self_orthogonal(X, gb, d, hd)]
    sd = [d for d in range(hd.r0 + 1) if self_dual(X, gb, d, hd)]
    return {"self_orthogonal_degrees": so, "self_dual_degrees": sd}


def gorenstein_selfdual_classify(X, gb, hd, cls):
    """Classification of (monomially) self-dual degrees over a Gorenstein
    ideal: monomially self-dual iff r0 = 2d+1; strictly self-dual iff the
    all-ones vector is additionally a parity check of C_X(2d)."""
    if not cls.gorenstein:
        raise NotGorenstein("classification requires a Gorenstein ideal")
    f = X.field
    m, r0 = X.m, hd.r0
    report = []
    for d in range(1, r0 + 1):
        mono_sd = r0 == 2 * d + 1
        strict_sd = False
        if mono_sd:
            monos2d = standard_monomials_upto(gb, X.s, 2 * d)[2 * d]
            sums = X.eval_monomials(monos2d)
            ones_parity = all(int(_row_sum(f, row)) == 0 for row in sums)
            H2d = hd.H[2 * d] if 2 * d <= r0 else m
            strict_sd = ones_parity and H2d == m - 1
            if strict_sd != self_dual(X, gb, d, hd):
                raise InternalInconsistency(
                    "parity-check classification disagrees with direct self-duality"
                )
        entry = {"d": d, "monomially_self_dual": mono_sd, "self_dual": strict_sd}
        if (
            d == 1
            and bool(np.all(X.coords[:, -1] == 1))
            and hd.H[1] == X.s
        ):
            # point-matrix criterion: m = 2s and pairwise-orthogonal columns
            P = X.coords
            cols_orth = True
            for i in range(X.s):
                for j in range(i, X.s):
                    dot = 0
                    for t in range(m):
                        dot = f.add(dot, f.mul(int(P[t, i]), int(P[t, j])))
                    if dot != 0:
                        cols_orth = False
            matrix_sd = (m == 2 * X.s) and cols_orth
            if matrix_sd != strict_sd:
                raise InternalInconsistency(
                    "point-matrix self-duality criterion disagrees"
                )
            entry["point_matrix_self_dual"] = matrix_sd
        report.append(entry)
    return report


def affine_duality(field, affine_rows, check_min_distance=True):
    """The affine criterion via the projective closure Y = [X, 1]."""
    Y = projective_closure(field, affine_rows)
    gb = vanishing_ideal(Y, GREVLEX)
    hd = hilbert_data(gb, Y.m, nvars=Y.s)
    isx = standard_indicators(Y, gb)
    cert = global_duality(Y, gb, hd, isx, check_min_distance=check_min_distance)
    return cert, {"affine_hilbert_function": list(hd.H), "r0": hd.r0}, (Y, gb, hd, isx)
