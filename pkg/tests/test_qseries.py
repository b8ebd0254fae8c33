from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from borcherds.errors import (
    NotInvertibleError,
    PreconditionError,
    RingMismatchError,
    TruncationError,
)
from borcherds.qseries import (
    QQ,
    ZZ,
    ExactSeries,
    QuadExt,
    Residues,
    add,
    agree,
    d_operator,
    dilate,
    exp_series,
    invert,
    log_series,
    monomial,
    mul,
    mul_dilated,
    one,
    parse_series,
    pow_int,
    reduce_mod,
    render_series,
    scale,
    shift,
    sub,
    truncate,
    zero,
)

small_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def series(draw, ring=ZZ, max_len=12, valuation=None):
    coeffs = draw(st.lists(small_ints, min_size=1, max_size=max_len))
    v = draw(st.integers(-3, 3)) if valuation is None else valuation
    return ExactSeries.make(ring, coeffs, v, v + len(coeffs))


def test_make_normalises():
    s = ExactSeries.make(ZZ, [0, 0, 3, 0, 5], -2)
    assert s.valuation == 0
    assert s.trunc == 3
    assert s.coeffs == (3, 0, 5)
    assert s.as_dict() == {0: 3, 2: 5}

    z = ExactSeries.make(ZZ, [0, 0, 0], 1)
    assert z.is_zero()
    assert z.valuation == z.trunc == 4


def test_coefficient_beyond_truncation_raises():
    s = ExactSeries.make(ZZ, [1, 2, 3], 0, 3)
    assert s.coefficient(2) == 3
    assert s.coefficient(-5) == 0
    with pytest.raises(TruncationError):
        s.coefficient(3)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        add(one(ZZ, 5), one(QQ, 5))


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    left = mul(a, add(b, c))
    right = add(mul(a, b), mul(a, c))
    # distributivity holds on the common truncation
    t = min(left.trunc, right.trunc)
    assert truncate(left, t) == truncate(right, t)
    assert sub(a, a).is_zero()


@given(series(max_len=10))
def test_precision_bookkeeping(a):
    b = monomial(ZZ, 2, 7, 6)
    product = mul(a, b)
    assert product.trunc == min(a.trunc + 2, 6 + a.valuation)


def test_agree_compares_the_common_prefix():
    a = ExactSeries.make(ZZ, [1, 2, 3, 4])
    assert agree(a, ExactSeries.make(ZZ, [1, 2]))
    assert agree(ExactSeries.make(ZZ, [1, 2, 3, 4, 9], 0, 6), a)
    assert not agree(a, ExactSeries.make(ZZ, [1, 2, 5]))


@given(st.lists(small_ints, min_size=1, max_size=15), st.integers(-2, 2))
def test_invert_over_rationals(coeffs, v):
    coeffs[0] = coeffs[0] or 1
    a = ExactSeries.make(QQ, coeffs, v)
    b = invert(a)
    assert b.valuation == -v
    assert mul(a, b) == one(QQ, a.relative_precision)


def test_invert_requires_unit_leading_coefficient():
    with pytest.raises(NotInvertibleError):
        invert(ExactSeries.make(ZZ, [2, 1, 1]))
    with pytest.raises(NotInvertibleError):
        invert(zero(QQ, 5))
    # 1 - q inverts over ZZ to the geometric series
    geometric = invert(ExactSeries.make(ZZ, [1, -1], 0, 8))
    assert geometric.coefficients(0, 8) == [1] * 8


def test_pow_int_matches_repeated_multiplication():
    a = ExactSeries.make(ZZ, [1, 3, -2, 5], 0, 10)
    assert pow_int(a, 5) == mul(mul(mul(mul(a, a), a), a), a)
    assert pow_int(a, 0) == one(ZZ, 10)
    assert mul(pow_int(a, -2), pow_int(a, 2)) == one(ZZ, 10)


@given(series(ring=ZZ, max_len=8, valuation=0), st.integers(1, 4))
def test_mul_dilated_equals_dilate_then_mul(a, k):
    b = ExactSeries.make(ZZ, [1, -2, 3, 4, -5], -1)
    fast = mul_dilated(a, b, k)
    slow = mul(a, dilate(b, k))
    t = min(fast.trunc, slow.trunc)
    assert truncate(fast, t) == truncate(slow, t)


@settings(max_examples=30)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=10))
def test_exp_log_inverse(coeffs):
    a = ExactSeries.make(QQ, [0] + coeffs, 0)
    assert log_series(exp_series(a)) == truncate(a, a.trunc)


def test_exp_of_q_is_factorial_series():
    e = exp_series(monomial(QQ, 1, 1, 6))
    assert e.coefficients(0, 6) == [Fraction(1, f) for f in (1, 1, 2, 6, 24, 120)]


def test_log_needs_constant_term_one():
    with pytest.raises(PreconditionError):
        log_series(ExactSeries.make(QQ, [2, 1], 0, 4))
    with pytest.raises(PreconditionError):
        exp_series(ExactSeries.make(ZZ, [0, 1], 0, 4))


def test_d_operator_and_shift():
    a = ExactSeries.make(ZZ, [1, 2, 3], -1)
    assert d_operator(a).as_dict() == {-1: -1, 1: 3}
    assert shift(a, 2).valuation == 1
    assert shift(a, 2).trunc == a.trunc + 2


@given(series(), series())
def test_d_operator_is_a_derivation(a, b):
    lhs = d_operator(mul(a, b))
    rhs = add(mul(d_operator(a), b), mul(a, d_operator(b)))
    trunc = min(lhs.trunc, rhs.trunc)
    assert truncate(lhs, trunc) == truncate(rhs, trunc)


def test_residues():
    ring = Residues(11)
    assert ring == Residues(11, 1)
    assert ring != Residues(11, 2)
    assert ring.coerce(-1) == 10
    assert ring.coerce(Fraction(1, 2)) == 6
    with pytest.raises(NotInvertibleError):
        ring.coerce(Fraction(1, 11))
    with pytest.raises(PreconditionError):
        Residues(12)

    s = reduce_mod(ExactSeries.make(ZZ, [22, 13, -1], 0), 11)
    assert s.ring == ring
    assert s.valuation == 1
    assert s.as_dict() == {1: 2, 2: 10}
    assert render_series(s) == "2*q + 10*q^2 + O(q^3)"


def test_residue_products_agree_with_integers():
    a = ExactSeries.make(ZZ, [3, -7, 100, 4, 9], 0)
    b = ExactSeries.make(ZZ, [-1, 5, 5, 2, 8], 0)
    assert reduce_mod(mul(a, b), 5, 2) == mul(reduce_mod(a, 5, 2), reduce_mod(b, 5, 2))


def test_quadratic_field_arithmetic():
    K = QuadExt(2)
    root = K.coerce((0, 1))
    assert K.mul(root, root) == K.coerce(2)
    assert K.mul(K.inverse(K.coerce((1, 1))), K.coerce((1, 1))) == K.one
    with pytest.raises(PreconditionError):
        QuadExt(8)
    a = ExactSeries.make(K, [K.one, root, K.coerce((Fraction(1, 2), -3))], 0)
    assert mul(a, invert(a)) == one(K, 3)


def test_render_and_parse():
    s = ExactSeries.make(ZZ, [1, 0, 0, 0, -248, 0, 0, 26752], -3, 5)
    text = render_series(s)
    assert text == "q^-3 - 248*q + 26752*q^4 + O(q^5)"
    assert parse_series(text, ZZ) == s
    assert render_series(zero(ZZ, 7)) == "O(q^7)"
    assert parse_series("O(q^7)", ZZ) == zero(ZZ, 7)

    K = QuadExt(-3)
    t = ExactSeries.make(K, [K.coerce((1, -1)), K.zero, K.coerce((0, 2))], 0, 4)
    assert parse_series(render_series(t), K) == t

    with pytest.raises(PreconditionError):
        parse_series("1 + q", ZZ)


def test_scale_coerces():
    s = scale(ExactSeries.make(ZZ, [1, 2], 0, 3), 3)
    assert s.as_dict() == {0: 3, 1: 6}
