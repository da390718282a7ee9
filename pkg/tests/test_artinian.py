import numpy as np
import pytest

from rmcode.artinian import (
    artinian_reduce,
    classify,
    find_regular_linear_form,
    lift_basis,
    socle,
    verify_socle_identities,
)
from rmcode.errors import NotGorenstein, NotRegular
from rmcode.gf import Field
from rmcode.groebner import standard_monomials_upto
from rmcode.polyring import parse_monomial, parse_poly
from rmcode.variety import PointSet, points_full_projective, vanishing_ideal


def test_find_regular_form_prefers_last_variable(nine_points, F3):
    X = nine_points[0]
    h, e, workX = find_regular_linear_form(X)
    assert e == 1 and h == parse_poly(F3, 3, "t3")


def test_both_printed_forms_are_regular(five_points_socle, F3):
    X = five_points_socle[0]
    for text in ("t1+t4", "t4"):
        h = parse_poly(F3, 4, text)
        assert not np.any(X.eval_poly(h) == 0)


def test_projective_line_f3_needs_extension(F3):
    X = points_full_projective(2, F3)
    # oracle: every normalized linear form over F_3 hits one of the 4 points
    for a in range(3):
        for b in range(3):
            if a == 0 and b == 0:
                continue
            vals = [F3.add(F3.mul(a, int(p)), F3.mul(b, int(q))) for p, q in X.coords]
            assert 0 in vals
    h, e, bigX = find_regular_linear_form(X)
    assert e == 2 and bigX.field.q == 9
    assert not np.any(bigX.eval_poly(h) == 0)


def test_artinian_reduce_shortcut(five_points_frame, F3):
    X, gb, hd, isx = five_points_frame
    J = artinian_reduce(gb, parse_poly(F3, 4, "t4"), X)
    assert J.certified
    per = standard_monomials_upto(J, 4, hd.r0 + 1)
    assert tuple(len(p) for p in per[: hd.r0 + 1]) == hd.h_vector


def test_artinian_reduce_general_form(five_points_socle, F3):
    X, gb, hd, isx = five_points_socle
    J = artinian_reduce(gb, parse_poly(F3, 4, "t1+t4"), X)
    per = standard_monomials_upto(J, 4, hd.r0 + 1)
    assert tuple(len(p) for p in per[: hd.r0 + 1]) == (1, 3, 1)
    assert per[hd.r0] == [parse_monomial(4, "t3*t4")]


def test_artinian_reduce_two_points(F3):
    X = PointSet(F3, [[1, 1], [0, 1]])
    gb = vanishing_ideal(X)
    J = artinian_reduce(gb, parse_poly(F3, 2, "t2"), X)
    per = standard_monomials_upto(J, 2, 2)
    assert per[0] == [(0, 0)] and per[1] == [(1, 0)] and per[2] == []


def test_artinian_reduce_rejects_zero_divisor(nine_points, F3):
    X, gb, hd, isx = nine_points
    with pytest.raises(NotRegular):
        artinian_reduce(gb, parse_poly(F3, 3, "t1"), X)


def test_socle_five_points(five_points_socle, F3):
    X, gb, hd, isx = five_points_socle
    cls = classify(X, gb, hd, h=parse_poly(F3, 4, "t1+t4"))
    assert cls.gorenstein and cls.type_ == 1 and cls.level
    assert cls.socle_monomial == parse_monomial(4, "t3*t4")
    assert [g.to_str() for _, g in cls.socle] == ["t3*t4"]
    rep = verify_socle_identities(cls, isx, gb, X, hd)
    # remainders are nonzero multiples of the socle monomial
    assert all(lam != 0 for lam in rep["lambdas"])
    assert rep["lambdas"] == [F3.parse_element(t) for t in ("-1", "-1", "1", "1", "1")]


def test_socle_four_points_essential_contains_top_monomial(four_points):
    X, gb, hd, isx = four_points
    cls = classify(X, gb, hd)
    assert cls.gorenstein
    assert cls.socle_monomial in set(isx.essential)
    rep = verify_socle_identities(cls, isx, gb, X, hd)
    assert rep["special_form"]


def test_socle_five_points_auto_h(five_points_socle, F3):
    X, gb, hd, isx = five_points_socle
    cls = classify(X, gb, hd)
    assert cls.h == parse_poly(F3, 4, "t4")
    assert cls.gorenstein and cls.type_ == 1 and cls.s_number == hd.r0
    rep = verify_socle_identities(cls, isx, gb, X, hd)
    assert rep["special_form"]  # exercises the t_s-form identities
    assert rep["lambdas"] == [1] * 5


def test_socle_plane_f3(plane_f3):
    X, gb, hd, isx = plane_f3
    cls = classify(X, gb, hd)
    assert not cls.gorenstein
    assert cls.type_ == 2 and not cls.level
    assert cls.s_number == 3 and cls.socle_degrees == [3, 5]
    assert cls.extension_degree == 3  # no avoiding line exists over F_9 either
    with pytest.raises(NotGorenstein):
        verify_socle_identities(cls, isx, gb, X, hd)


def test_socle_maximal_ideal_guard(F3):
    from rmcode.groebner import buchberger
    from rmcode.polyring import GREVLEX

    J = buchberger([parse_poly(F3, 2, "t1"), parse_poly(F3, 2, "t2")], GREVLEX)
    soc, top, type_, level, gorenstein, s_number = socle(J, 2)
    assert type_ == 1 and gorenstein and s_number == 0 and top == 0


def test_socle_rejects_positive_dimension(F3):
    from rmcode.errors import NotArtinian
    from rmcode.groebner import buchberger
    from rmcode.polyring import GREVLEX

    J = buchberger([parse_poly(F3, 3, "t1"), parse_poly(F3, 3, "t2^2")], GREVLEX)
    with pytest.raises(NotArtinian):
        socle(J, 3)


def test_extension_invariance(five_points_frame, F3):
    """Classifying after a forced scalar extension gives the same verdicts."""
    X, gb, hd, isx = five_points_frame
    base = classify(X, gb, hd)
    big = Field(3, 2)
    bigX = X.lift(big)
    big_gb = lift_basis(gb, X, bigX)
    from rmcode.artinian import _candidate_forms, _avoids_all, _linear_form

    hpoly = next(
        _linear_form(big, X.s, c)
        for c in _candidate_forms(big, X.s)
        if _avoids_all(bigX, c)
    )
    J = artinian_reduce(big_gb, hpoly, bigX)
    soc, top, type_, level, gorenstein, s_number = socle(J, X.s)
    assert (type_, level, gorenstein, s_number) == (
        base.type_,
        base.level,
        base.gorenstein,
        base.s_number,
    )


def test_ci_implies_gorenstein(four_points, nine_points):
    from rmcode.groebner import minimal_generator_count

    for X, gb, hd, isx in (four_points, nine_points):
        if minimal_generator_count(gb, hd.r0) == X.s - 1:
            assert classify(X, gb, hd).gorenstein


def test_level_symmetric_consistency(plane_f3, five_points_frame):
    """level + symmetric h-vector forces Gorenstein; the classifier enforces
    it as an internal trap, so classified instances must satisfy it."""
    for X, gb, hd, isx in (plane_f3, five_points_frame):
        cls = classify(X, gb, hd)
        if cls.level and hd.symmetric:
            assert cls.gorenstein
