import itertools
import random

import numpy as np
import pytest

from rmcode.errors import DimensionTooLarge, Unsupported
from rmcode.groebner import (
    GroebnerBasis,
    MonomialIdeal,
    buchberger,
    gb_certify,
    minimal_generator_count,
    monomial_colon,
    monomial_dim_degree,
    normal_form,
    standard_monomials,
)
from rmcode.polyring import GREVLEX, Poly, parse_monomial, parse_poly


def test_buchberger_quartic_completion(F4):
    gens = [parse_poly(F4, 3, "t1*t2"), parse_poly(F4, 3, "t1^3+t2^3+t3^3")]
    gb = buchberger(gens, GREVLEX)
    assert gb.to_strings() == ["t1*t2", "t1^3+t2^3+t3^3", "t2^4+t2*t3^3"]
    assert gb.certified


def test_buchberger_coprime_leads(F3):
    gens = [parse_poly(F3, 3, "t2^3-t2*t3^2"), parse_poly(F3, 3, "t1^3-t1*t3^2")]
    gb = buchberger(gens, GREVLEX)
    assert gb.to_strings() == ["t2^3-t2*t3^2", "t1^3-t1*t3^2"]


def test_buchberger_zero_input(F3):
    gb = buchberger([Poly.zero(F3, 3)], GREVLEX)
    assert gb.gens == [] and gb.certified


def test_buchberger_input_order_independence(F3):
    gens = [
        parse_poly(F3, 4, "t3^2-t4^2"),
        parse_poly(F3, 4, "t2*t3-t2*t4"),
        parse_poly(F3, 4, "t2^2-t1*t3-t1*t4+t3*t4+t4^2"),
        parse_poly(F3, 4, "t1*t2"),
        parse_poly(F3, 4, "t1^2-t1*t4"),
    ]
    reference = buchberger(gens, GREVLEX)
    rng = random.Random(5)
    for _ in range(6):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, GREVLEX).gens == reference.gens


def test_certify_true_for_buchberger_output(F4):
    gb = buchberger(
        [parse_poly(F4, 3, "t1*t2"), parse_poly(F4, 3, "t1^3+t2^3+t3^3")], GREVLEX
    )
    assert gb_certify(gb)


def test_certify_with_last_variable_appended(five_points_socle, F3):
    X, gb, hd, isx = five_points_socle
    extended = GroebnerBasis(gb.order, gb.gens + [parse_poly(F3, 4, "t4")])
    assert gb_certify(extended)


def test_certify_false(F3):
    bad = GroebnerBasis(GREVLEX, [parse_poly(F3, 2, "t1+t2"), parse_poly(F3, 2, "t1^2")])
    assert not gb_certify(bad)
    # running buchberger adds the missing element
    fixed = buchberger(bad.gens, GREVLEX)
    assert any(g.leading_monomial(GREVLEX) == (0, 2) for g in fixed.gens)


def test_standard_monomials_frame_example(five_points_frame):
    X, gb, hd, isx = five_points_frame
    got = standard_monomials(gb, 2)
    want = {
        parse_monomial(4, t) for t in ("t1*t4", "t2*t4", "t3^2", "t3*t4", "t4^2")
    }
    assert set(got) == want
    # descending under the order
    keys = [gb.order.key(u) for u in got]
    assert keys == sorted(keys, reverse=True)


def test_standard_monomials_degree_zero(nine_points):
    X, gb, hd, isx = nine_points
    assert standard_monomials(gb, 0) == [(0, 0, 0)]


def test_standard_monomials_degree_one(nine_points):
    X, gb, hd, isx = nine_points
    assert set(standard_monomials(gb, 1)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_monomial_dim_degree_cases():
    assert monomial_dim_degree(MonomialIdeal(3, ((1, 0, 0), (0, 1, 0)))) == (1, 1)
    assert monomial_dim_degree(MonomialIdeal(3, ((3, 0, 0), (0, 3, 0)))) == (1, 9)
    assert monomial_dim_degree(MonomialIdeal(3, ((1, 0, 0), (0, 1, 0), (0, 0, 2)))) == (0, 2)
    with pytest.raises(DimensionTooLarge):
        monomial_dim_degree(MonomialIdeal(3, ((1, 0, 0),)))


def test_monomial_colon_cases():
    L = MonomialIdeal(2, ((2, 0),))
    assert monomial_colon(L, [(1, 0)]).gens == ((1, 0),)
    L2 = MonomialIdeal(2, ((3, 0), (0, 3)))
    got = monomial_colon(L2, [(2, 2)])
    assert set(got.gens) == {(1, 0), (0, 1)}
    # exhaustive membership oracle on monomials of degree <= 4
    for u in itertools.product(range(5), repeat=2):
        if sum(u) > 4:
            continue
        in_colon = got.contains(u)
        direct = L2.contains((u[0] + 2, u[1] + 2))
        assert in_colon == direct
    assert monomial_colon(L2, [(0, 0)]) == L2


def test_membership_oracle_equivalence(nine_points, F3):
    """normal_form(f, G) = 0 iff f vanishes on all of X."""
    X, gb, hd, isx = nine_points
    rng = random.Random(11)
    from rmcode.polyring import monomials_of_degree

    for d in (2, 3, 4):
        monos = list(monomials_of_degree(3, d))
        for _ in range(20):
            f = Poly(F3, 3, {u: rng.randrange(3) for u in rng.sample(monos, 4)})
            if f.is_zero():
                continue
            vanishes = not np.any(X.eval_poly(f))
            assert normal_form(f, gb).is_zero() == vanishes


def test_minimal_generator_counts(five_points_frame, nine_points, four_points):
    X, gb, hd, _ = five_points_frame
    assert minimal_generator_count(gb, hd.r0, points=X.coords) == 5  # not CI
    X9, gb9, hd9, _ = nine_points
    assert minimal_generator_count(gb9, hd9.r0) == 2  # CI: s - 1 = 2
    X4, gb4, hd4, _ = four_points
    assert minimal_generator_count(gb4, hd4.r0) == 3  # CI in s = 4


def test_monomial_ideal_guard():
    with pytest.raises(Unsupported):
        monomial_dim_degree(MonomialIdeal(11, ((1,) + (0,) * 10,)))
