"""Structured input constructors."""

import random

import pytest

from koszulbench.constructions import (generic_form, generic_points,
                                       pinched_veronese, point_linear_ideal,
                                       points_ideal, symmetric_det_cubic)
from koszulbench.errors import InputError
from koszulbench.fields import QQ
from koszulbench.groebner import ideals_equal
from koszulbench.poly import Ideal, Ring, graded_slice, monomials_of_degree


def test_pinched_veronese_332():
    monos = pinched_veronese(3, 3, 2)
    assert len(monos) == 9
    assert (1, 1, 1) not in monos


def test_pinched_veronese_full_support():
    assert len(pinched_veronese(4, 3, 4)) == len(monomials_of_degree(4, 3))


def test_pinched_veronese_452():
    assert len(pinched_veronese(4, 5, 2)) == 28


def test_generic_form_single_variable():
    R = Ring(1, QQ, ("x",))
    f = generic_form(R, 2, random.Random(1))
    assert len(f.terms) == 1 and f.degree() == 2


def test_generic_form_dense_cubic():
    R = Ring(3, QQ)
    f = generic_form(R, 3, random.Random(5))
    assert len(f.terms) == 10


def test_symmetric_det_cubic_expansion():
    f = symmetric_det_cubic()
    R = f.ring
    x = [R.var(i) for i in range(6)]
    expected = (x[0] * x[3] * x[5] - x[0] * x[4] * x[4] - x[1] * x[1] * x[5]
                + (x[1] * x[2] * x[4]).scale(2) - x[2] * x[2] * x[3])
    assert f == expected


def test_point_ideal_single():
    R = Ring(2, QQ, ("x", "y"))
    ideal = points_ideal(R, [(1, 0)])
    assert ideals_equal(ideal, Ideal(R, [R.var(1)]))


def test_point_ideal_two_points():
    R = Ring(2, QQ, ("x", "y"))
    ideal = points_ideal(R, [(1, 0), (0, 1)])
    assert ideals_equal(ideal, Ideal(R, [R.var(0) * R.var(1)]))


def test_point_ideal_rejects_repeats():
    R = Ring(2, QQ, ("x", "y"))
    with pytest.raises(InputError):
        points_ideal(R, [(1, 2), (2, 4)])
    with pytest.raises(InputError):
        points_ideal(R, [(0, 0)])


def test_four_general_points_give_two_conics():
    R = Ring(3, QQ, ("x", "y", "z"))
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    ideal = points_ideal(R, pts)
    degrees = sorted(g.degree() for g in ideal.gens)
    assert degrees == [2, 2]
    for f in ideal.gens:
        for p in pts:
            assert f.evaluate(p) == 0


def test_generic_points_vanishing_and_codimension():
    rng = random.Random(23)
    R = Ring(3, QQ, ("x", "y", "z"))
    pts = generic_points(R, 4, rng)
    ideal = points_ideal(R, pts)
    for f in ideal.gens:
        for p in pts:
            assert f.evaluate(p) == 0
    # codim of the degree-2 slice is min(#points, dim S_2)
    assert len(monomials_of_degree(3, 2)) - graded_slice(ideal, 2).dim == 4


def test_point_linear_ideal_dimension():
    R = Ring(4, QQ)
    ideal = point_linear_ideal(R, (1, 2, 3, 4))
    assert len(ideal.gens) == 3
