"""Fields, dense linear algebra and truncated series."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koszulbench.errors import InputError
from koszulbench.fields import QQ, PrimeField, parse_field
from koszulbench.linalg import Matrix, SpanBuilder
from koszulbench.series import TruncatedSeries, expand_rational, geometric_power


def test_rational_field_basics():
    assert QQ.of(4, 6) == Fraction(2, 3)
    assert QQ.add(QQ.of(1, 2), QQ.of(1, 3)) == Fraction(5, 6)
    assert QQ.inv(QQ.of(-3, 7)) == Fraction(-7, 3)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_prime_field_basics():
    F7 = PrimeField(7)
    assert F7.of(-4) == 3
    assert F7.of(3, 5) == 3 * pow(5, -1, 7) % 7
    assert F7.mul(3, 5) == 1
    assert F7.inv(2) == 4
    with pytest.raises(InputError):
        PrimeField(6)


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("fp:101").p == 101
    with pytest.raises(InputError):
        parse_field("fp:10")
    with pytest.raises(InputError):
        parse_field("r")


def test_rref_identity():
    m = Matrix.identity(QQ, 2)
    red, pivots, rank = m.rref()
    assert red == m and rank == 2 and pivots == (0, 1)


def test_rref_proportional_rows():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    red, _, rank = m.rref()
    assert rank == 1
    assert red.rows == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]]


def test_rref_f2():
    F2 = PrimeField(2)
    m = Matrix(F2, [[1, 1], [1, 0]])
    assert m.rank() == 2


def test_kernel_zero_matrix():
    m = Matrix.zeros(QQ, 2, 3)
    basis = m.kernel_basis()
    assert len(basis) == 3
    assert basis[0] == [Fraction(1), Fraction(0), Fraction(0)]


def test_kernel_identity_empty():
    assert Matrix.identity(QQ, 3).kernel_basis() == []


def test_kernel_single_row():
    m = Matrix(QQ, [[1, 1, 0]])
    basis = m.kernel_basis()
    assert basis == [[Fraction(-1), Fraction(1), Fraction(0)],
                     [Fraction(0), Fraction(0), Fraction(1)]]


def _random_matrix(field, rng, nrows, ncols, lo=-5, hi=5):
    return Matrix(field, [[field.of(rng.randint(lo, hi)) for _ in range(ncols)]
                          for _ in range(nrows)])


def test_rank_nullity_random():
    rng = random.Random(7)
    for _ in range(25):
        m = _random_matrix(QQ, rng, rng.randint(1, 5), rng.randint(1, 5))
        assert m.rank() + len(m.kernel_basis()) == m.ncols


def test_rref_idempotent_random():
    rng = random.Random(11)
    for _ in range(25):
        m = _random_matrix(QQ, rng, rng.randint(1, 5), rng.randint(1, 5))
        red = m.rref()[0]
        assert red.rref()[0] == red


def test_rank_agrees_large_prime():
    rng = random.Random(13)
    Fp = PrimeField(1000003)
    for _ in range(20):
        rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        over_q = Matrix(QQ, [[QQ.of(v) for v in r] for r in rows])
        over_p = Matrix(Fp, [[Fp.of(v) for v in r] for r in rows])
        assert over_q.rank() == over_p.rank()


def test_inverse_roundtrip():
    rng = random.Random(3)
    for _ in range(10):
        while True:
            m = _random_matrix(QQ, rng, 3, 3)
            if m.is_invertible():
                break
        assert m.mul(m.inverse()) == Matrix.identity(QQ, 3)


def test_span_builder_membership():
    sb = SpanBuilder(QQ, 3)
    assert sb.add([QQ.of(1), QQ.of(2), QQ.of(0)]) is not None
    assert sb.add([QQ.of(2), QQ.of(4), QQ.of(0)]) is None
    assert sb.add([QQ.of(0), QQ.of(0), QQ.of(5)]) is not None
    assert sb.rank == 2
    assert sb.contains([QQ.of(3), QQ.of(6), QQ.of(-1)])


# ----------------------------------------------------------------- series

def test_geometric_inverse():
    s = TruncatedSeries([1, -1], 4).inverse()
    assert s.coeffs == [Fraction(1)] * 5


def test_series_mul():
    s = TruncatedSeries([1, 1], 4).mul(TruncatedSeries([1, -1], 4))
    assert s.coeffs == [Fraction(1), Fraction(0), Fraction(-1), Fraction(0), Fraction(0)]


def test_series_inverse_hand_example():
    s = TruncatedSeries([1, -1, 1], 4).inverse()
    assert s.as_ints() == [1, 1, 0, -1, -1]


def test_series_inverse_rejects_zero_constant():
    with pytest.raises(InputError):
        TruncatedSeries([0, 1], 3).inverse()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7),
       st.integers(1, 6))
def test_series_inverse_roundtrip(coeffs, c0):
    coeffs = [c0] + coeffs
    s = TruncatedSeries(coeffs, len(coeffs) - 1)
    unit = s.mul(s.inverse())
    assert unit.coeffs[0] == 1
    assert all(c == 0 for c in unit.coeffs[1:])


def test_expand_rational_binomial():
    # (1+z)^2 expanded out of (1+2z+z^2)/1
    s = expand_rational([1, 2, 1], [1], 5)
    assert s.as_ints() == [1, 2, 1, 0, 0, 0]


def test_geometric_power():
    assert geometric_power(2, 4).as_ints() == [1, 2, 3, 4, 5]
    assert geometric_power(1, 3, sign=-1).as_ints() == [1, -1, 1, -1]
