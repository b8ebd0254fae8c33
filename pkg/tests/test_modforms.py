from fractions import Fraction

import mpmath
import pytest

from borcherds.errors import IntegralityError, PrecisionError, PreconditionError
from borcherds.modforms import (
    bernoulli,
    check_normalised,
    delta,
    eisenstein,
    eisenstein_congruence_report,
    eval_j_at_heegner,
    f3,
    hilbert_class_polynomial,
    j_invariant,
    kohnen_basis,
    plus_space_form,
    theta,
)
from borcherds.qseries import ExactSeries, ZZ, mul, pow_int, truncate
from borcherds.quadforms import QuadForm, heegner_point

F3_VALUES = {
    -3: 1,
    1: -248,
    4: 26752,
    5: -85995,
    8: 1707264,
    9: -4096248,
    12: 44330496,
}


def test_bernoulli():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(10) == Fraction(5, 66)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_eisenstein_series():
    assert eisenstein(4, 4).coefficients(0, 4) == [1, 240, 2160, 6720]
    assert eisenstein(6, 3).coefficients(0, 3) == [1, -504, -16632]
    e12 = eisenstein(12, 3)
    assert e12.ring != ZZ
    assert e12.coefficient(1) == Fraction(65520, 691)


def test_delta_and_j():
    d = delta(6)
    assert d.coefficients(0, 6) == [0, 1, -24, 252, -1472, 4830]
    j = j_invariant(3)
    assert j.valuation == -1
    assert j.coefficients(-1, 3) == [1, 744, 196884, 21493760]
    # j * Delta = E_4^3
    product = mul(j_invariant(10), delta(11))
    e4_cubed = pow_int(eisenstein(4, 10), 3)
    assert truncate(product, 10) == e4_cubed


def test_theta():
    assert theta(10).as_dict() == {0: 1, 1: 2, 4: 2, 9: 2}
    with pytest.raises(PreconditionError):
        theta(0)


def test_f3_coefficients():
    f = f3(13)
    for n, value in F3_VALUES.items():
        assert f.coefficient(n) == value, n
    assert f.coefficient(0) == 0
    assert f.principal_part() == {-3: 1}
    check_normalised(3, f.series)


def test_kohnen_basis():
    basis = kohnen_basis(40, 60)
    assert [f.d for f in basis] == [0, 3, 4, 7, 8, 11, 12, 15, 16, 19, 20, 23, 24, 27, 28, 31, 32, 35, 36, 39, 40]
    for f in basis:
        assert f.series.trunc == 60
        check_normalised(f.d, f.series)
        assert f.principal_part() == ({-f.d: 1} if f.d else {})
    f4 = basis[2]
    assert f4.coefficient(-4) == 1
    assert f4.coefficient(1) == 492
    assert f4.coefficient(4) == 143376
    assert basis[0].series == theta(60)
    # the f_3 built by recursion agrees with the direct formula
    assert basis[1].series == f3(60).series


def test_plus_space_form_precision():
    f = plus_space_form(3, 20)
    assert f.precision == 20
    assert f.coefficient(20) == f3(21).coefficient(20)
    with pytest.raises(PrecisionError):
        f.coefficient(21)
    with pytest.raises(PreconditionError):
        plus_space_form(5, 10)
    truncated = f.truncated(8)
    assert truncated.precision == 8
    assert truncated.coefficient(8) == 1707264


def test_check_normalised_rejects_bad_support():
    bad = ExactSeries.make(ZZ, [1, 0, 0, 0, 0, 7], -3)
    with pytest.raises(IntegralityError):
        check_normalised(3, bad)


def test_eisenstein_congruences():
    report = eisenstein_congruence_report(range(4, 21, 2), 24, 200)
    assert report == {k: None for k in range(4, 21, 2)}
    for p in (5, 7, 11, 13):
        assert eisenstein_congruence_report([p - 1], p, 200) == {p - 1: None}
    # E_4 is not 1 modulo 7
    assert eisenstein_congruence_report([4], 7, 10) == {4: 1}


def test_hilbert_class_polynomials():
    h15 = hilbert_class_polynomial(-15)
    assert h15.coefficients == (-121287375, 191025, 1)
    assert h15.render() == "X^2 + 191025*X - 121287375"
    assert h15.residual < 1e-10

    h4 = hilbert_class_polynomial(-4)
    assert h4.omega_denominator == 2
    assert h4.render(root=False) == "X - 1728"
    assert h4.render() == "(X - 1728)^(1/2)"

    h3 = hilbert_class_polynomial(-3)
    assert h3.omega_denominator == 3
    assert h3.coefficients == (0, 1)
    assert h3.render(root=False) == "X"

    h23 = hilbert_class_polynomial(-23)
    assert h23.coefficients == (12771880859375, -5151296875, 3491750, 1)


def test_j_at_heegner_points():
    i_value = eval_j_at_heegner(heegner_point(QuadForm(1, 0, 1)), 40)
    assert abs(i_value - 1728) < mpmath.mpf(10) ** -30
    rho_value = eval_j_at_heegner(heegner_point(QuadForm(1, 1, 1)), 40)
    assert abs(rho_value) < mpmath.mpf(10) ** -30
    with pytest.raises(PreconditionError):
        eval_j_at_heegner(heegner_point(QuadForm(1, 0, 1)), 10)
    with pytest.raises(PrecisionError):
        eval_j_at_heegner(heegner_point(QuadForm(1, 0, 1)), 40, max_j_terms=5)
