import numpy as np
import pytest

from rmcode.errors import (
    DivisionByZero,
    FieldMismatch,
    NoModulusAvailable,
    NonPrimeP,
    ParseError,
    ReducibleModulus,
)
from rmcode.gf import BUILTIN_MODULI, Field, FqElement, field_create, primitive_element

def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


# every field order up to 81: all primes plus the built-in extension orders
ALL_Q = sorted([p for p in range(2, 82) if _is_prime(p)] + sorted(BUILTIN_MODULI))


def _field_for(q):
    for p in (2, 3, 5, 7):
        if q % p == 0:
            k = 0
            qq = q
            while qq > 1:
                qq //= p
                k += 1
            return Field(p, k)
    return Field(q)


def test_field_create_prime():
    F = field_create(3, 1)
    assert F.q == 3 and F.generator == 2


def test_field_create_with_modulus():
    F = field_create(3, 2, [1, 0, 1])  # x^2 + 1
    assert F.q == 9
    assert F.format_element(F.generator) == "1+a"


def test_field_create_nonprime():
    with pytest.raises(NonPrimeP):
        field_create(4, 1)


def test_field_create_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        field_create(3, 2, [1, 2, 1])  # (x+1)^2


def test_field_create_no_modulus_outside_table():
    with pytest.raises(NoModulusAvailable):
        field_create(11, 2)


def test_inverse_examples():
    F5 = Field(5)
    assert F5.inv(3) == 2
    assert F5.inv(2) == 3
    # inv(-2) = inv(3) = 2 = -3 mod 5
    assert F5.inv(F5.neg(2)) == F5.neg(3)


def test_generator_power_identity():
    F9 = Field(3, 2)
    assert F9.pow_(F9.generator, F9.q - 1) == 1


def _orders(F):
    return {x: FqElement(F, x).multiplicative_order() for x in range(1, F.q)}


def test_primitive_element_f4():
    F = Field(2, 2)
    g = primitive_element(F)
    assert g.code == F.p  # the basis root a
    # every element of F_4^* other than 1 has order 3
    assert all(o == 3 for x, o in _orders(F).items() if x != 1)


def test_primitive_element_f9_x2_plus_1():
    F = Field(3, 2, [1, 0, 1])
    # independent oracle: exhaustive orders over the 8 nonzero elements
    orders = _orders(F)
    smallest = min(x for x, o in orders.items() if o == 8)
    assert F.generator == smallest
    assert F.format_element(smallest) == "1+a"
    # the basis root itself only has order 4 for this modulus
    assert orders[F.p] == 4


def test_primitive_element_f7():
    F = Field(7)
    orders = _orders(F)
    assert orders[3] == 6 and orders[2] == 3
    assert F.generator == 3


@pytest.mark.parametrize("q", ALL_Q)
def test_field_axioms_exhaustive(q):
    """Associativity, commutativity, distributivity, inverses: all of F_q^3."""
    F = _field_for(q)
    xs = np.arange(q)
    a = xs[:, None, None]
    b = xs[None, :, None]
    c = xs[None, None, :]
    A = np.broadcast_to(a, (q, q, q))
    B = np.broadcast_to(b, (q, q, q))
    C = np.broadcast_to(c, (q, q, q))
    assert np.array_equal(F.add_arr(F.add_arr(A, B), C), F.add_arr(A, F.add_arr(B, C)))
    assert np.array_equal(F.mul_arr(F.mul_arr(A, B), C), F.mul_arr(A, F.mul_arr(B, C)))
    assert np.array_equal(F.add_arr(A[..., 0], B[..., 0]), F.add_arr(B[..., 0], A[..., 0]))
    assert np.array_equal(F.mul_arr(A[..., 0], B[..., 0]), F.mul_arr(B[..., 0], A[..., 0]))
    assert np.array_equal(
        F.mul_arr(A, F.add_arr(B, C)),
        F.add_arr(F.mul_arr(A, B), F.mul_arr(A, C)),
    )
    # unique additive/multiplicative inverses
    add_tab = F.add_arr(A[..., 0], B[..., 0])
    assert np.array_equal((add_tab == 0).sum(axis=1), np.ones(q, dtype=int))
    mul_tab = F.mul_arr(A[..., 0], B[..., 0])
    assert np.array_equal((mul_tab[1:, :] == 1).sum(axis=1), np.ones(q - 1, dtype=int))


@pytest.mark.parametrize("q", ALL_Q)
def test_frobenius_and_unit_group_exhaustive(q):
    F = _field_for(q)
    xs = np.arange(q)
    X = np.broadcast_to(xs[:, None], (q, q))
    Y = np.broadcast_to(xs[None, :], (q, q))
    assert np.array_equal(
        F.pow_arr(F.add_arr(X, Y), F.p),
        F.add_arr(F.pow_arr(X, F.p), F.pow_arr(Y, F.p)),
    )
    assert np.all(F.pow_arr(xs[1:], q - 1) == 1)


def test_element_operators():
    F = Field(3, 2)
    a = primitive_element(F)
    assert (a + 1) - 1 == a
    assert a * a.inverse() == FqElement(F, 1)
    assert (-a) + a == FqElement(F, 0)
    assert a**0 == FqElement(F, 1)
    assert 2 / (a / a) == FqElement(F, 2)
    with pytest.raises(DivisionByZero):
        a / FqElement(F, 0)


def test_field_mismatch():
    x = FqElement(Field(3), 1)
    y = FqElement(Field(5), 1)
    with pytest.raises(FieldMismatch):
        x + y


def test_literal_roundtrip():
    F = Field(3, 2)
    for code in range(F.q):
        assert F.parse_element(F.format_element(code)) == code
    assert F.parse_element("a^3") == F.pow_(F.p, 3)
    with pytest.raises(ParseError):
        F.parse_element("")
    with pytest.raises(ParseError):
        Field(5).parse_element("a")


@pytest.mark.parametrize(
    "small,big",
    [((3, 2), (3, 4)), ((2, 2), (2, 4)), ((2, 2), (2, 6)), ((2, 3), (2, 6))],
)
def test_embedding_preserves_arithmetic(small, big):
    F, G = Field(*small), Field(*big)
    t = F.embedding_into(G)
    assert t[0] == 0 and t[1] == 1
    for x in range(F.q):
        for y in range(F.q):
            assert t[F.add(x, y)] == G.add(int(t[x]), int(t[y]))
            assert t[F.mul(x, y)] == G.mul(int(t[x]), int(t[y]))
    # images are distinct (a ring embedding)
    assert len(set(int(v) for v in t)) == F.q


def test_irreducibility_against_sympy_oracle():
    sympy = pytest.importorskip("sympy")
    from rmcode.gf import is_irreducible

    rng = __import__("random").Random(314159)
    x = sympy.symbols("x")
    for _ in range(120):
        p = rng.choice([2, 3, 5])
        k = rng.randint(2, 5)
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        poly = sympy.Poly(
            sum(c * x**i for i, c in enumerate(coeffs)), x, domain=sympy.GF(p)
        )
        assert is_irreducible(tuple(coeffs), p) == poly.is_irreducible
