"""Buchberger engine and the ideal calculus."""

import random

import pytest

from koszulbench.errors import InputError
from koszulbench.fields import QQ
from koszulbench.groebner import (buchberger, colon, colon_ideal, eliminate,
                                  ideals_equal, intersect, is_quadratic_ideal,
                                  minimal_generator_degrees, normal_form,
                                  toric_fiber_generator_degrees, toric_ideal)
from koszulbench.orders import degrevlex, lex
from koszulbench.poly import Ideal, Ring, graded_slice, monomials_of_degree
from koszulbench.quotient import QuotientRing, quotient_hilbert_basis


def ring(n, names=None):
    return Ring(n, QQ, names)


def test_single_generator():
    R = ring(1, ("x",))
    gb = buchberger(Ideal(R, [R.var(0)]))
    assert [g for g in gb.elements] == [R.var(0)]


def test_lex_pair_example():
    # {xy-1, y^2-1} under lex x>y reduces to {x-y, y^2-1}
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    gb = buchberger(Ideal(R, [x * y - R.one(), y * y - R.one()]), lex(2))
    assert gb.elements == [y * y - R.one(), x - y]  # canonical: ascending leading term


def test_caviglia_shape_is_its_own_basis():
    # y_i^2 + q_i with q_i in the x-block: disjoint leading squares, all
    # S-pairs drop to zero, so the input is already the reduced basis
    R = ring(4, ("y1", "y2", "x1", "x2"))
    y1, y2, x1, x2 = (R.var(i) for i in range(4))
    gens = [y1 * y1 + x1 * x1, y2 * y2 + x2 * x2]
    gb = buchberger(Ideal(R, gens), degrevlex(4))
    assert sorted(map(str, gb.elements)) == sorted(map(str, gens))
    assert gb.stats["basis_growth"] == 0


def test_normal_form_membership():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    gb = buchberger(Ideal(R, [x * x, x * y]))
    for g in gb.elements:
        assert gb.normal_form(g).is_zero()
    assert gb.normal_form(R.one()) == R.one()
    assert gb.normal_form(x * (x + y)).is_zero()


def test_reduced_basis_is_generator_order_independent():
    R = ring(3, ("x", "y", "z"))
    x, y, z = (R.var(i) for i in range(3))
    gens = [x * x - y * z, x * y - z * z, y * y + x * z]
    rng = random.Random(2)
    reference = buchberger(Ideal(R, gens)).elements
    for _ in range(4):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(Ideal(R, shuffled)).elements == reference


def test_membership_matches_graded_slice_oracle():
    rng = random.Random(17)
    R = ring(3, ("x", "y", "z"))
    for _ in range(6):
        gens = []
        for _ in range(2):
            g = R.zero()
            for m in monomials_of_degree(3, 2):
                g = g + R.monomial(m, rng.randint(-2, 2))
            if not g.is_zero():
                gens.append(g)
        if not gens:
            continue
        ideal = Ideal(R, gens)
        gb = buchberger(ideal)
        for d in range(2, 6):
            sl = graded_slice(ideal, d)
            for m in monomials_of_degree(3, d):
                f = R.monomial(m, QQ.one)
                assert gb.contains(f) == sl.contains(f)


def test_standard_monomial_count_is_codimension():
    rng = random.Random(19)
    R = ring(3, ("x", "y", "z"))
    for _ in range(5):
        gens = []
        for _ in range(2):
            g = R.zero()
            for m in monomials_of_degree(3, 2):
                g = g + R.monomial(m, rng.randint(-1, 1))
            if not g.is_zero():
                gens.append(g)
        if not gens:
            continue
        ideal = Ideal(R, gens)
        Q = QuotientRing(ideal)
        for d in range(5):
            total = len(monomials_of_degree(3, d))
            assert Q.dim_degree(d) == total - graded_slice(ideal, d).dim


def test_colon_simple():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    out = colon(Ideal(R, [x * y]), x)
    assert ideals_equal(out, Ideal(R, [y]))


def test_colon_two_generators():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    out = colon(Ideal(R, [x * x, x * y]), x)
    assert ideals_equal(out, Ideal(R, [x, y]))


def test_colon_rejects_zero():
    R = ring(2, ("x", "y"))
    with pytest.raises(InputError):
        colon(Ideal(R, [R.var(0)]), R.zero())


def test_colon_against_degreewise_oracle():
    # g ∈ (I:f)_d  ⇔  g·f ∈ I_{d+deg f}, over the full monomial basis
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    ideal = Ideal(R, [x * x * y, y * y * x])
    f = x * y
    quotient = colon(ideal, f)
    qgb = buchberger(quotient)
    igb = buchberger(ideal)
    for d in range(0, 5):
        for m in monomials_of_degree(2, d):
            g = R.monomial(m, QQ.one)
            assert qgb.contains(g) == igb.contains(g * f)


def test_intersection_examples():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    assert ideals_equal(intersect(Ideal(R, [x]), Ideal(R, [y])), Ideal(R, [x * y]))
    assert ideals_equal(intersect(Ideal(R, [x]), Ideal(R, [x])), Ideal(R, [x]))
    got = intersect(Ideal(R, [x * x, y]), Ideal(R, [x]))
    assert ideals_equal(got, Ideal(R, [x * x, x * y]))


def test_colon_ideal_via_intersection():
    R = ring(3, ("x", "y", "z"))
    x, y, z = (R.var(i) for i in range(3))
    ideal = Ideal(R, [x * y, x * z])
    out = colon_ideal(ideal, Ideal(R, [y, z]))
    assert ideals_equal(out, Ideal(R, [x]))


def test_eliminate_block_order():
    # eliminate x from (x - y^2): nothing survives in K[y] for the ideal,
    # but from (x - y, x) we recover (y)
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    kept = eliminate(Ideal(R, [x - y, x]), 1)
    assert kept == [y]


def test_degree_cap_truncation_flag():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    ideal = Ideal(R, [x * x - y * y, x * y])
    capped = buchberger(ideal, degree_cap=2)
    assert capped.truncated
    full = buchberger(ideal)
    assert any(g.degree() == 3 for g in full.elements)
    with pytest.raises(InputError):
        buchberger(Ideal(R, [x - R.one()]), degree_cap=2)


def test_is_quadratic_ideal():
    R = ring(3, ("x", "y", "z"))
    x, y, z = (R.var(i) for i in range(3))
    assert is_quadratic_ideal(Ideal(R, [x * x, x * y, y * y - x * z, y * z]))
    R1 = ring(1, ("x",))
    assert not is_quadratic_ideal(Ideal(R1, [R1.var(0) ** 3]))
    assert is_quadratic_ideal(Ideal(R1, []))  # zero ideal, vacuously


def test_minimal_generator_degrees():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    # x^2, x^3 minimally generated by x^2 alone
    assert minimal_generator_degrees(Ideal(R, [x * x, x * x * x])) == {2: 1}
    # maximal ideal squared plus a cubic that is already inside
    degs = minimal_generator_degrees(Ideal(R, [x * x, x * y, y * y, x * y * y]))
    assert degs == {2: 3}


def test_toric_twisted_cubic():
    out = toric_ideal([(2, 0), (1, 1), (0, 2)])
    T = out.ring
    t1, t2, t3 = (T.var(i) for i in range(3))
    assert ideals_equal(out, Ideal(T, [t1 * t3 - t2 * t2]))


def test_toric_single_monomial_zero_ideal():
    out = toric_ideal([(3, 0)])
    assert out.is_zero()


def test_toric_rejects_mixed_degrees():
    with pytest.raises(InputError):
        toric_ideal([(1, 0), (2, 0)])


def test_toric_fiber_degrees_match_twisted_cubic():
    counts = toric_fiber_generator_degrees([(2, 0), (1, 1), (0, 2)], 3)
    assert counts == {2: 1}


def test_quotient_hilbert_basis():
    R = ring(1, ("x",))
    Q = QuotientRing(Ideal(R, [R.var(0) ** 2]))
    assert quotient_hilbert_basis(Q, 1) == [(1,)]
    assert quotient_hilbert_basis(Q, 2) == []
    R2 = ring(2, ("x", "y"))
    Q2 = QuotientRing(Ideal(R2, [R2.var(0) * R2.var(1)]))
    assert quotient_hilbert_basis(Q2, 3) == [(3, 0), (0, 3)]
