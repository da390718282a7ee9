"""Projective point sets, their vanishing ideals, and Hilbert invariants.

The vanishing ideal is computed degree by degree from the kernel of the
evaluation map (exact linear algebra), then certified with Buchberger's
criterion; a full Buchberger run is the fallback.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    CertificationFailed,
    DimensionMismatch,
    DuplicatePoint,
    InternalInconsistency,
    ParseError,
    TooFewPoints,
    ZeroPoint,
)
from .gf import Field
from .groebner import GroebnerBasis, buchberger, gb_certify
from .polyring import GREVLEX, Poly, TermOrder, monomials_of_degree


class PointSet:
    """Distinct points of P^{s-1} over a finite field.

    ``coords`` is an (m, s) array of element codes, one representative per
    point; ``canonical`` is True when every representative has its last
    nonzero coordinate scaled to 1.
    """

    def __init__(self, field, coords, canonicalize=True, dedup=False):
        coords = field.arr(coords)
        if coords.ndim != 2:
            raise DimensionMismatch("coordinates must form an (m, s) array")
        rows = []
        seen = {}
        for row in coords:
            row = tuple(int(x) for x in row)
            if all(x == 0 for x in row):
                raise ZeroPoint("the zero vector defines no projective point")
            key = _canonical_row(field, row)
            if key in seen:
                if dedup:
                    continue
                raise DuplicatePoint(f"projectively repeated point {list(row)}")
            seen[key] = True
            rows.append(key if canonicalize else row)
        if len(rows) < 2:
            raise TooFewPoints(f"need at least 2 points, got {len(rows)}")
        self.field = field
        self.coords = field.arr(rows)
        self.s = self.coords.shape[1]

    @property
    def m(self):
        return self.coords.shape[0]

    @property
    def canonical(self):
        return all(
            tuple(int(x) for x in row) == _canonical_row(self.field, tuple(int(x) for x in row))
            for row in self.coords
        )

    def canonicalized(self):
        return PointSet(self.field, self.coords, canonicalize=True)

    def rescaled(self, lambdas):
        """The same projective set with representative i scaled by lambdas[i]."""
        f = self.field
        lam = f.arr(lambdas)
        if np.any(lam == 0):
            raise ZeroPoint("scaling factors must be nonzero")
        return PointSet(f, f.mul_arr(self.coords, lam[:, None]), canonicalize=False)

    def lift(self, big):
        """Coordinatewise image in an extension field."""
        table = self.field.embedding_into(big)
        return PointSet(big, table[self.coords], canonicalize=False)

    # evaluation helpers ----------------------------------------------------

    def power_columns(self, dmax):
        """POW[j][e] = column of codes x_j^e over the points, 0 <= e <= dmax."""
        f = self.field
        cols = []
        for j in range(self.s):
            col = self.coords[:, j]
            pows = [np.ones(self.m, dtype=np.int64)]
            for _ in range(dmax):
                pows.append(f.mul_arr(pows[-1], col))
            cols.append(pows)
        return cols

    def eval_monomials(self, monomials, pow_cols=None):
        """Evaluation matrix: one row per monomial, one column per point."""
        f = self.field
        if pow_cols is None:
            dmax = max((sum(u) for u in monomials), default=0)
            pow_cols = self.power_columns(dmax)
        rows = np.ones((len(monomials), self.m), dtype=np.int64)
        for r, u in enumerate(monomials):
            vec = rows[r]
            for j, e in enumerate(u):
                if e:
                    vec = f.mul_arr(vec, pow_cols[j][e])
            rows[r] = vec
        return rows

    def eval_poly(self, poly):
        """Vector (f(P_1), ..., f(P_m)) of codes."""
        f = self.field
        out = np.zeros(self.m, dtype=np.int64)
        pow_cols = self.power_columns(max(poly.degree(), 0))
        for u, c in poly.terms.items():
            vec = np.full(self.m, c, dtype=np.int64)
            for j, e in enumerate(u):
                if e:
                    vec = f.mul_arr(vec, pow_cols[j][e])
            out = f.add_arr(out, vec)
        return out

    def __repr__(self):
        return f"PointSet(q={self.field.q}, s={self.s}, m={self.m})"


def _canonical_row(field, row):
    last = max(i for i, x in enumerate(row) if x)
    inv = field.inv(row[last])
    return tuple(field.mul(x, inv) for x in row)


# -- generators ------------------------------------------------------------------


def points_full_projective(s, field):
    """All points of P^{s-1}(F_q), canonical representatives."""
    rows = []
    for j in range(s - 1, -1, -1):
        for prefix in itertools.product(range(field.q), repeat=j):
            rows.append(list(prefix) + [1] + [0] * (s - 1 - j))
    return PointSet(field, rows, canonicalize=False)


def points_torus(s, field):
    """The projective torus: all-nonzero coordinates, last scaled to 1."""
    nz = [c for c in range(1, field.q)]
    rows = [list(prefix) + [1] for prefix in itertools.product(nz, repeat=s - 1)]
    return PointSet(field, rows, canonicalize=False)


def points_parameterized(vs, n, field):
    """The algebraic toric set of the integer exponent vectors v_1..v_s:
    evaluate (y^{v_1}, ..., y^{v_s}) over all y in (K^*)^n and deduplicate."""
    f = field
    s = len(vs)
    if any(len(v) != n for v in vs):
        raise DimensionMismatch("every exponent vector must have length n")
    rows = []
    for x in itertools.product(range(1, f.q), repeat=n):
        row = []
        for v in vs:
            val = 1
            for xj, e in zip(x, v):
                val = f.mul(val, f.pow_(xj, e))
            row.append(val)
        rows.append(row)
    return PointSet(f, rows, canonicalize=True, dedup=True)


def projective_closure(field, affine_rows):
    """[X, 1]: append 1 as the LAST coordinate of each affine point."""
    rows = [list(r) + [1] for r in affine_rows]
    return PointSet(field, rows, canonicalize=False)


# -- points file format -----------------------------------------------------------


@dataclass
class ParsedPoints:
    field: Field
    s: int
    rows: list
    order: TermOrder | None


def parse_points_text(text):
    """Parse the points file format.

    Line 1: ``field p k [m_0 ... m_k]``; line 2: ``vars s``; optional
    ``order grevlex|glex perm=i1,...,is``; then one point per line as
    whitespace-separated element literals.  ``#`` starts a comment.
    """
    field = None
    s = None
    order = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "field":
                if len(parts) < 3:
                    raise ParseError("field line needs `field p k`", line=lineno)
                p, k = int(parts[1]), int(parts[2])
                modulus = [int(x) for x in parts[3:]] or None
                field = Field(p, k, modulus)
            elif parts[0] == "vars":
                s = int(parts[1])
                if s < 1:
                    raise ParseError("vars must be positive", line=lineno)
            elif parts[0] == "order":
                kind = parts[1]
                perm = ()
                for extra in parts[2:]:
                    if extra.startswith("perm="):
                        perm = tuple(int(x) for x in extra[5:].split(","))
                order = TermOrder(kind, perm)
            else:
                if field is None or s is None:
                    raise ParseError(
                        "field/vars must precede point rows", line=lineno
                    )
                if len(parts) != s:
                    raise ParseError(
                        f"expected {s} coordinates, got {len(parts)}", line=lineno
                    )
                rows.append([field.parse_element(tok) for tok in parts])
        except ParseError:
            raise
        except Exception as exc:
            raise ParseError(str(exc), line=lineno) from exc
    if field is None:
        raise ParseError("missing `field` line")
    if s is None:
        raise ParseError("missing `vars` line")
    if not rows:
        raise ParseError("no points given")
    if order is not None:
        order.resolved_perm(s)
    return ParsedPoints(field, s, rows, order)


def points_parse(text, canonicalize=True):
    parsed = parse_points_text(text)
    ps = PointSet(parsed.field, parsed.rows, canonicalize=canonicalize)
    return ps, parsed.order


def format_points(field, s, rows, order=None, header=()):
    lines = [f"# {h}" for h in header]
    if field.k == 1:
        lines.append(f"field {field.p} 1")
    else:
        lines.append(
            f"field {field.p} {field.k} " + " ".join(str(c) for c in field.modulus)
        )
    lines.append(f"vars {s}")
    if order is not None:
        perm = order.resolved_perm(s)
        lines.append(f"order {order.kind} perm=" + ",".join(str(i) for i in perm))
    for row in rows:
        lines.append(" ".join(field.format_element(int(x)) for x in row))
    return "\n".join(lines) + "\n"


# -- vanishing ideal --------------------------------------------------------------


def vanishing_ideal(X, order=GREVLEX):
    """Reduced certified Groebner basis of the homogeneous vanishing ideal.

    Degree-by-degree interpolation: at each degree the monomials outside the
    current leading-term ideal are scanned in ascending order; a candidate
    whose evaluation vector depends linearly on those of the standard
    monomials accepted so far yields a basis element (candidate minus the
    dependence combination), otherwise the candidate is standard.
    """
    f = X.field
    s = X.s
    m = X.m
    order.resolved_perm(s)
    gens = []
    leads = []
    r0 = None
    d = 0
    pow_cols = X.power_columns(8)
    while True:
        d += 1
        if len(pow_cols[0]) <= d:
            pow_cols = X.power_columns(2 * d)
        candidates = sorted(
            (
                u
                for u in monomials_of_degree(s, d)
                if not any(_divides(v, u) for v in leads)
            ),
            key=order.key,
        )
        accepted = []          # standard monomials of degree d
        basis_rows = []        # their evaluation vectors, row-reduced
        combos = []            # expression of each reduced row over `accepted`
        for u in candidates:
            vec = np.ones(m, dtype=np.int64)
            for j, e in enumerate(u):
                if e:
                    vec = f.mul_arr(vec, pow_cols[j][e])
            coeffs = np.zeros(len(accepted), dtype=np.int64)
            red = vec.copy()
            for i, row in enumerate(basis_rows):
                piv = _pivot(row)
                c = int(red[piv])
                if c:
                    factor = f.div(c, int(row[piv]))
                    red = f.sub_arr(red, f.mul_arr(factor, row))
                    coeffs = f.sub_arr(coeffs, f.mul_arr(factor, combos[i]))
            if np.any(red):
                accepted.append(u)
                basis_rows.append(red)
                combos.append(
                    np.concatenate([coeffs, np.array([1], dtype=np.int64)])
                )
                for i in range(len(combos) - 1):
                    combos[i] = np.concatenate(
                        [combos[i], np.zeros(1, dtype=np.int64)]
                    )
            else:
                terms = {u: 1}
                for v, c in zip(accepted, coeffs):
                    if c:
                        terms[v] = int(c)
                g = Poly(f, s, terms)
                gens.append(g)
                leads.append(u)
        if len(accepted) == m and r0 is None:
            r0 = d
        if r0 is not None and d >= r0 + 1:
            break
        if d > 4 * (m + s):  # unreachable for honest inputs; loud bug trap
            raise CertificationFailed("interpolation failed to stabilize")

    gb = GroebnerBasis(order, sorted(gens, key=lambda g: order.key(g.leading_monomial(order))))
    if gb_certify(gb):
        gb.certified = True
    else:
        gb = buchberger(gens, order)
        if not gb_certify(gb):
            raise CertificationFailed("Buchberger fallback failed certification")
    # every generator must vanish on X
    for g in gb.gens:
        if np.any(X.eval_poly(g)):
            raise InternalInconsistency("basis element does not vanish on X")
    return gb


def _divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def _pivot(row):
    return int(np.nonzero(row)[0][0])


# -- Hilbert data -----------------------------------------------------------------


@dataclass
class HilbertData:
    H: tuple           # H(0), ..., H(r0)
    h_vector: tuple
    r0: int
    degree: int        # = m
    a_invariant: int
    symmetric: bool

    def as_dict(self):
        return {
            "H": list(self.H),
            "h_vector": list(self.h_vector),
            "r0": self.r0,
            "degree": self.degree,
            "a_invariant": self.a_invariant,
            "symmetric_h_vector": self.symmetric,
        }


def hilbert_data(gb, m, nvars=None):
    """Hilbert function, regularity index and h-vector from standard-monomial
    counts of a certified vanishing-ideal basis."""
    nv = nvars if nvars is not None else gb.nvars
    leads = gb.leading_monomials()
    H = [1]
    d = 0
    while H[-1] != m:
        d += 1
        count = sum(
            1
            for u in monomials_of_degree(nv, d)
            if not any(_divides(v, u) for v in leads)
        )
        if count <= H[-1] and count != m:
            raise InternalInconsistency(
                "Hilbert function must strictly increase until it reaches m"
            )
        H.append(count)
        if d > 8 * (m + nv):
            raise InternalInconsistency("Hilbert function failed to reach m")
    r0 = d
    h = tuple(H[i] - (H[i - 1] if i else 0) for i in range(r0 + 1))
    symmetric = all(h[i] == h[r0 - i] for i in range(r0 + 1))
    return HilbertData(tuple(H), h, r0, m, r0 - 1, symmetric)


def symmetry_equiv_check(hd):
    """h-vector symmetry, re-derived from H-products, with the equivalence
    between the two formulations asserted."""
    r0, m = hd.r0, hd.degree

    def Hval(d):
        if d < 0:
            return 0
        return hd.H[d] if d <= r0 else m

    via_sums = all(Hval(d) + Hval(r0 - d - 1) == m for d in range(r0 + 1))
    if via_sums != hd.symmetric:
        raise InternalInconsistency(
            "h-vector symmetry disagrees with the Hilbert-sum formulation"
        )
    return hd.symmetric
