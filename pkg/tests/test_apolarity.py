"""Inverse systems, catalecticants, Hessian criteria."""

import random
from itertools import combinations_with_replacement

import pytest

from koszulbench.apolarity import (apply_operator, catalecticant,
                                   filtration_pair_condition,
                                   filtration_pair_search, flag_cubic_condition,
                                   hessian, hessian_det, inverse_system,
                                   is_cone, minors_ideal, quadric_rank,
                                   theorem_codim_check)
from koszulbench.constructions import generic_form, symmetric_det_cubic
from koszulbench.errors import InputError
from koszulbench.fields import QQ, PrimeField
from koszulbench.groebner import ideals_equal, is_quadratic_ideal, minimal_generator_degrees
from koszulbench.invariants import hilbert_series
from koszulbench.poly import Ideal, Ring, monomials_of_degree
from koszulbench.verdicts import NO, UNDETERMINED, YES


def ring(n, names=None):
    return Ring(n, QQ, names)


def test_inverse_system_single_variable():
    R = ring(1, ("x",))
    x = R.var(0)
    out = inverse_system(x ** 3)
    assert ideals_equal(out.ideal, Ideal(R, [x ** 4]))
    assert out.h_vector == (1, 1, 1, 1)


def test_inverse_system_xyz():
    R = ring(3, ("x", "y", "z"))
    x, y, z = (R.var(i) for i in range(3))
    out = inverse_system(x * y * z)
    assert ideals_equal(out.ideal, Ideal(R, [x * x, y * y, z * z]))
    assert out.h_vector == (1, 3, 3, 1)


def test_inverse_system_fermat_not_quadratic():
    R = ring(3)
    f = R.var(0) ** 3 + R.var(1) ** 3 + R.var(2) ** 3
    out = inverse_system(f)
    degs = minimal_generator_degrees(out.ideal)
    assert degs[2] == 3 and degs.get(3, 0) >= 1
    assert not is_quadratic_ideal(out.ideal)


def test_inverse_system_monomial_oracle_exhaustive():
    # for monomial f the annihilator is the ideal of non-divisors of f
    from koszulbench.groebner import minimalize_monomials
    R = ring(3)
    for combo in combinations_with_replacement(range(3), 3):
        mono = tuple(combo.count(i) for i in range(3))
        f = R.monomial(mono, 1)
        out = inverse_system(f)
        non_divisors = []
        for d in range(1, 5):
            for m in monomials_of_degree(3, d):
                if not all(a <= b for a, b in zip(m, mono)):
                    non_divisors.append(m)
        expected = Ideal(R, [R.monomial(m, 1) for m in minimalize_monomials(non_divisors)])
        assert ideals_equal(out.ideal, expected)


def test_inverse_system_rejects_small_prime():
    R = Ring(2, PrimeField(3), ("x", "y"))
    f = R.var(0) ** 3
    with pytest.raises(InputError):
        inverse_system(f)


def test_gorenstein_h_vector_generic_cubics():
    rng = random.Random(2026)
    for n in (3, 4):
        R = ring(n)
        for _ in range(3):
            f = generic_form(R, 3, rng)
            if is_cone(f):
                continue
            out = inverse_system(f)
            assert out.h_vector == (1, n, n, 1)
            assert hilbert_series(out.quotient, 5).prefix_ints() == [1, n, n, 1, 0, 0]
            # Gorenstein symmetry of the middle catalecticants
            assert catalecticant(f, 1).rank() == n
            assert catalecticant(f, 2).rank() == n


def test_is_cone():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    assert is_cone(x ** 3)
    assert not is_cone(x ** 3 + y ** 3)
    assert is_cone((x + y) ** 3)


def test_apply_operator_is_differentiation():
    R = ring(2, ("x", "y"))
    x, y = R.var(0), R.var(1)
    f = x * x * y
    assert apply_operator(x * y, f) == x.scale(2)
    assert apply_operator(y * y, f).is_zero()


def test_inverse_system_kernel_matches_differentiation():
    rng = random.Random(12)
    R = ring(3)
    f = generic_form(R, 3, rng)
    out = inverse_system(f)
    for g in out.ideal.gens:
        assert apply_operator(g, f).is_zero()
    # and a non-member does not annihilate
    x = R.var(0)
    assert not out.quotient.nf(x).is_zero()
    assert not apply_operator(x, f).is_zero()


def test_hessian_fermat():
    R = ring(3)
    f = R.var(0) ** 3 + R.var(1) ** 3 + R.var(2) ** 3
    H = hessian(f)
    assert H[0][0] == R.var(0).scale(6)
    assert H[0][1].is_zero()
    two = minors_ideal(H, 2)
    expected = Ideal(R, [R.var(0) * R.var(1), R.var(0) * R.var(2), R.var(1) * R.var(2)])
    assert ideals_equal(two, expected)


def test_hessian_of_quadric_is_constant():
    R = ring(2, ("x", "y"))
    q = R.var(0) * R.var(1)
    H = hessian(q)
    assert all(entry.degree() <= 0 for row in H for entry in row)


def test_quadric_rank():
    R = ring(3)
    x, y, z = (R.var(i) for i in range(3))
    assert quadric_rank(x * x) == 1
    assert quadric_rank(x * y) == 2
    assert quadric_rank(x * x + y * y + z * z) == 3
    assert quadric_rank(x.scale(3) * x + z * z) == 2


def test_theorem_check_fermat_no():
    R = ring(3)
    f = R.var(0) ** 3 + R.var(1) ** 3 + R.var(2) ** 3
    v = theorem_codim_check(f)
    assert v.outcome == NO and v.witness["codim"] == 2


def test_theorem_check_generic_yes_and_quadratic_equivalence():
    rng = random.Random(99)
    R = ring(3)
    hits = 0
    while hits < 3:
        f = generic_form(R, 3, rng)
        if is_cone(f):
            continue
        v = theorem_codim_check(f)
        assert v.outcome == YES and v.witness["codim"] == 3
        assert is_quadratic_ideal(inverse_system(f).ideal)
        hits += 1


def test_theorem_check_rejects_cone_and_odd_sizes():
    R = ring(2, ("x", "y"))
    with pytest.raises(InputError):
        theorem_codim_check(R.var(0) ** 3)
    f6 = symmetric_det_cubic()
    v = theorem_codim_check(f6)
    assert v.outcome == UNDETERMINED
    assert v.witness["kind"] == "criterion_out_of_scope"


def test_theorem_check_invariant_under_coordinate_change():
    from koszulbench.linalg import Matrix
    rng = random.Random(4)
    R = ring(3)
    f = generic_form(R, 3, rng)
    assert not is_cone(f)
    base = theorem_codim_check(f)
    for _ in range(3):
        while True:
            m = Matrix(QQ, [[QQ.of(rng.randint(-3, 3)) for _ in range(3)]
                            for _ in range(3)])
            if m.is_invertible():
                break
        moved = theorem_codim_check(f.substitute_linear(m))
        assert moved.outcome == base.outcome


def test_filtration_pair_condition_worked_example():
    R = ring(3)
    x1, x2, x3 = (R.var(i) for i in range(3))
    f = x1 ** 3 + x2 ** 3 + x1 * x3 * x3 + x2 * x3 * x3
    assert filtration_pair_condition(f, x1, x2)
    fermat = x1 ** 3 + x2 ** 3 + x3 ** 3
    assert not filtration_pair_condition(fermat, x1, x2)


def test_filtration_pair_search_finds_worked_example():
    R = ring(3)
    x1, x2, x3 = (R.var(i) for i in range(3))
    f = x1 ** 3 + x2 ** 3 + x1 * x3 * x3 + x2 * x3 * x3
    assert filtration_pair_search(f, random.Random(0), attempts=400) is not None


def test_flag_cubic_condition():
    R = ring(3)
    x1, x2, x3 = (R.var(i) for i in range(3))
    assert flag_cubic_condition(x1 * x2 * x3, x1)
    fermat = x1 ** 3 + x2 ** 3 + x3 ** 3
    assert not flag_cubic_condition(fermat, x1)


def test_veronese_cubic_hessian_identity():
    f = symmetric_det_cubic()
    det = hessian_det(f)
    f2 = f * f
    # det H = lambda * f^2 for a nonzero scalar
    m, c = next(iter(f2.terms.items())), None
    lead_mono, lead_coeff = m
    ratio = det.coefficient(lead_mono) / lead_coeff
    assert ratio != 0
    assert det == f2.scale(ratio)
