"""Sparse multivariate polynomials over F_q and graded monomial orders.

Monomials are plain exponent tuples; a ``Poly`` maps exponent tuples to
nonzero coefficient codes of its field.  Only graded orders (GRevLex, GLex,
each with a variable permutation) are exposed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DimensionMismatch, ParseError, RingMismatch

# -- monomials ----------------------------------------------------------------


def monomial_degree(u):
    return sum(u)

def monomial_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))

def monomial_divides(u, v):
    """True when u | v."""
    return all(a <= b for a, b in zip(u, v))

def monomial_div(v, u):
    """v / u, assuming u | v."""
    return tuple(b - a for a, b in zip(u, v))

def monomial_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))

def monomial_coprime(u, v):
    return all(a == 0 or b == 0 for a, b in zip(u, v))

def monomial_support(u):
    return tuple(i for i, e in enumerate(u) if e)


def monomials_of_degree(s, d):
    """All exponent tuples of length s and total degree d (generation order
    is not meaningful; sort with a TermOrder key)."""
    if s == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(s - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class TermOrder:
    """A graded monomial order: total degree first, tie-break per kind on the
    permuted coordinates t_{perm[0]} > t_{perm[1]} > ... (perm is 1-based)."""

    kind: str = "grevlex"
    perm: tuple = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "glex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def resolved_perm(self, s):
        if not self.perm:
            return tuple(range(1, s + 1))
        if sorted(self.perm) != list(range(1, s + 1)):
            raise DimensionMismatch(
                f"perm {self.perm} is not a permutation of 1..{s}"
            )
        return self.perm

    def key(self, u):
        """Sort key: ascending key order is ascending in the monomial order."""
        perm = self.resolved_perm(len(u))
        if self.kind == "glex":
            return (sum(u), tuple(u[i - 1] for i in perm))
        # grevlex: compare reversed permuted coordinates, negated
        return (sum(u), tuple(-u[i - 1] for i in reversed(perm)))

    def compare(self, u, v):
        if len(u) != len(v):
            raise DimensionMismatch("monomials of different variable counts")
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def sorted_desc(self, monomials):
        return sorted(monomials, key=self.key, reverse=True)

    def descriptor(self, s):
        perm = self.resolved_perm(s)
        return {"kind": self.kind, "perm": list(perm)}


GREVLEX = TermOrder("grevlex")


def monomial_compare(order, u, v):
    """-1, 0 or 1 as u <, =, > v under the order."""
    return order.compare(u, v)


# -- polynomials ----------------------------------------------------------------


class Poly:
    """A sparse polynomial: ``terms`` maps exponent tuples to nonzero codes."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms = {}
        if terms:
            for u, c in terms.items():
                if len(u) != nvars:
                    raise DimensionMismatch("exponent tuple of wrong length")
                c = int(c)
                if c:
                    self.terms[tuple(u)] = c

    # construction helpers

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, code):
        return cls(field, nvars, {(0,) * nvars: code})

    @classmethod
    def monomial(cls, field, nvars, u, code=1):
        return cls(field, nvars, {tuple(u): code})

    @classmethod
    def variable(cls, field, nvars, i):
        """t_{i+1} (0-based index i)."""
        u = [0] * nvars
        u[i] = 1
        return cls.monomial(field, nvars, tuple(u))

    def _check_ring(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise RingMismatch("polynomials live in different rings")

    def is_zero(self):
        return not self.terms

    def copy(self):
        return Poly(self.field, self.nvars, dict(self.terms))

    # arithmetic

    def __add__(self, other):
        self._check_ring(other)
        f = self.field
        out = dict(self.terms)
        for u, c in other.terms.items():
            nc = f.add(out.get(u, 0), c)
            if nc:
                out[u] = nc
            else:
                out.pop(u, None)
        return Poly(f, self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return Poly(f, self.nvars, {u: f.neg(c) for u, c in self.terms.items()})

    def scale(self, code):
        f = self.field
        if code == 0:
            return Poly.zero(f, self.nvars)
        return Poly(f, self.nvars, {u: f.mul(c, code) for u, c in self.terms.items()})

    def mul_term(self, u, code=1):
        f = self.field
        if code == 0:
            return Poly.zero(f, self.nvars)
        return Poly(
            f,
            self.nvars,
            {monomial_mul(v, u): f.mul(c, code) for v, c in self.terms.items()},
        )

    def __mul__(self, other):
        self._check_ring(other)
        f = self.field
        out = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = monomial_mul(u, v)
                nc = f.add(out.get(w, 0), f.mul(cu, cv))
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
        return Poly(f, self.nvars, out)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # structure

    def degree(self):
        """Total degree (-1 for the zero polynomial)."""
        return max((sum(u) for u in self.terms), default=-1)

    def homogeneous_degree(self):
        """The common degree of all terms, or None if inhomogeneous/zero."""
        degs = {sum(u) for u in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self):
        return len({sum(u) for u in self.terms}) <= 1

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order):
        lc = self.leading_coeff(order)
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    def support(self):
        return set(self.terms)

    def coeff(self, u):
        return self.terms.get(tuple(u), 0)

    # evaluation

    def evaluate(self, point):
        """Exact value at a coordinate list of codes."""
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, ring has {self.nvars}"
            )
        f = self.field
        total = 0
        for u, c in self.terms.items():
            val = c
            for x, e in zip(point, u):
                if e:
                    val = f.mul(val, f.pow_(int(x), e))
            total = f.add(total, val)
        return total

    # homogenization with respect to a new LAST variable

    def homogenize(self):
        f = self.field
        d = max(self.degree(), 0)
        out = {}
        for u, c in self.terms.items():
            out[u + (d - sum(u),)] = c
        return Poly(f, self.nvars + 1, out)

    def dehomogenize(self):
        """Set the last variable to 1."""
        f = self.field
        out = {}
        for u, c in self.terms.items():
            v = u[:-1]
            nc = f.add(out.get(v, 0), c)
            if nc:
                out[v] = nc
            else:
                out.pop(v, None)
        return Poly(f, self.nvars - 1, out)

    def extend_vars(self, n_new):
        """The same polynomial viewed in a ring with n_new extra last variables."""
        return Poly(
            self.field,
            self.nvars + n_new,
            {u + (0,) * n_new: c for u, c in self.terms.items()},
        )

    def map_field(self, big, table):
        """Coefficientwise image under an embedding code table."""
        return Poly(big, self.nvars, {u: int(table[c]) for u, c in self.terms.items()})

    # text form

    def to_str(self, order=GREVLEX, var_names=None):
        if not self.terms:
            return "0"
        f = self.field
        names = var_names or [f"t{i + 1}" for i in range(self.nvars)]
        parts = []
        for u in order.sorted_desc(self.terms):
            c = self.terms[u]
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(u)
                if e
            )
            cs = f.format_element(c, signed=True)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if "+" in cs or "-" in cs:
                cs = f"({cs})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    def __repr__(self):
        return self.to_str()


_VARTOK = re.compile(r"(t(\d+)|u)(?:\^(\d+))?")


def parse_poly(field, nvars, text, var_names=None):
    """Parse the polynomial grammar: +/- separated terms `c*t1^e1*...*ts^es`.

    The homogenizing variable `u` is accepted as an alias for the last
    variable.  Compound extension-field coefficients must be parenthesized.
    """
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty polynomial")
    # split into signed terms at top level (outside parentheses)
    terms, depth, cur, sign = [], 0, "", 1
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0:
            if cur:
                terms.append((sign, cur))
                cur = ""
                sign = 1 if ch == "+" else -1
            else:
                sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    if cur:
        terms.append((sign, cur))
    if not terms:
        raise ParseError(f"no terms in {text!r}")

    name_index = None
    if var_names:
        name_index = {n: i for i, n in enumerate(var_names)}

    out = Poly.zero(field, nvars)
    for sign, term in terms:
        coeff = 1
        expo = [0] * nvars
        # factor scan: (..) or bare coefficients and variable powers, *-separated
        rest = term
        while rest:
            if rest[0] == "(":
                close = rest.index(")")
                coeff = field.mul(coeff, field.parse_element(rest[1:close]))
                rest = rest[close + 1 :].lstrip("*")
                continue
            m = _VARTOK.match(rest)
            if m and (name_index is None or m.group(1) in name_index or m.group(1) == "u"):
                if m.group(1) == "u":
                    idx = nvars - 1
                elif name_index is not None:
                    idx = name_index[m.group(1)]
                else:
                    idx = int(m.group(2)) - 1
                if not 0 <= idx < nvars:
                    raise ParseError(f"variable {m.group(1)} out of range in {text!r}")
                e = int(m.group(3)) if m.group(3) else 1
                expo[idx] += e
                rest = rest[m.end() :].lstrip("*")
                continue
            # otherwise a bare coefficient literal up to the next '*'
            stop = rest.find("*")
            tok = rest if stop < 0 else rest[:stop]
            if not tok:
                raise ParseError(f"bad term {term!r} in {text!r}")
            coeff = field.mul(coeff, field.parse_element(tok))
            rest = rest[len(tok) :].lstrip("*")
        if sign < 0:
            coeff = field.neg(coeff)
        out = out + Poly.monomial(field, nvars, tuple(expo), coeff)
    return out


def poly_eval(f, point):
    """Exact evaluation of f at a point (list of codes or FqElements)."""
    coords = [getattr(x, "code", x) for x in point]
    return f.evaluate(coords)


def format_monomial(u, var_names=None):
    names = var_names or [f"t{i + 1}" for i in range(len(u))]
    body = "*".join(
        names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(u) if e
    )
    return body or "1"


def parse_monomial(nvars, text):
    text = text.replace(" ", "")
    expo = [0] * nvars
    if text == "1":
        return tuple(expo)
    for factor in text.split("*"):
        m = _VARTOK.fullmatch(factor)
        if not m:
            raise ParseError(f"{text!r} is not a monomial")
        idx = nvars - 1 if m.group(1) == "u" else int(m.group(2)) - 1
        if not 0 <= idx < nvars:
            raise ParseError(f"variable {m.group(1)} out of range in {text!r}")
        expo[idx] += int(m.group(3)) if m.group(3) else 1
    return tuple(expo)
