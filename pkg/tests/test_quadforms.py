from math import gcd

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given, settings

from borcherds.errors import PreconditionError
from borcherds.quadforms import (
    QuadForm,
    analytic_class_number,
    class_number,
    field_class_number,
    fundamental_part,
    genus_character,
    heegner_point,
    hurwitz_forms,
    is_fundamental,
    kronecker,
    reduce,
    reduced_forms,
    stabilizer_order,
    validate_twist,
)
from borcherds.quadforms.forms import HeegnerPoint

CLASS_NUMBERS = {
    -3: 1,
    -4: 1,
    -15: 2,
    -23: 3,
    -60: 2,
    -111: 8,
    -159: 10,
    -168: 4,
    -267: 2,
    -276: 8,
    -291: 4,
    -312: 4,
}


def test_class_numbers():
    for disc, h in CLASS_NUMBERS.items():
        assert class_number(disc) == h, disc
        assert analytic_class_number(disc) == h, disc


def test_non_fundamental_class_numbers():
    # -240 = -15 * 4^2
    assert fundamental_part(-240) == (-15, 4)
    assert class_number(-240) == 4
    assert analytic_class_number(-240) == 4
    assert field_class_number(-240) == 2
    # the order of conductor 2 in Z[i] has one class
    assert class_number(-16) == 1


@given(st.integers(min_value=3, max_value=2000))
def test_form_count_matches_character_sum(n):
    disc = -n
    assume(disc % 4 in (0, 1))
    assert class_number(disc) == analytic_class_number(disc)


def test_reduced_forms():
    data = reduced_forms(-15)
    assert data.reduced_forms == (QuadForm(1, 1, 4), QuadForm(2, 1, 2))
    assert all(Q.is_reduced() for Q in data.reduced_forms)
    assert reduced_forms(-3).stabilizer_orders == (3,)
    assert reduced_forms(-4).stabilizer_orders == (2,)
    # hurwitz_forms keeps the imprimitive [2,0,2] of discriminant -16
    assert QuadForm(2, 0, 2) in hurwitz_forms(-16)
    assert QuadForm(2, 0, 2) not in reduced_forms(-16).reduced_forms


@given(
    st.sampled_from(list(reduced_forms(-168).reduced_forms) + list(reduced_forms(-159).reduced_forms)),
    st.integers(-6, 6),
    st.integers(-6, 6),
    st.integers(-6, 6),
)
def test_reduction_is_orbit_invariant(Q, alpha, beta, gamma):
    # complete (alpha, beta; gamma, delta) to SL2(Z) when possible
    assume(alpha != 0 and (1 + beta * gamma) % alpha == 0)
    delta = (1 + beta * gamma) // alpha
    moved = Q.act(alpha, beta, gamma, delta)
    assert moved.discriminant == Q.discriminant
    assert reduce(moved) == Q


def test_reduce_requires_definite_form():
    with pytest.raises(PreconditionError):
        reduce(QuadForm(1, 3, 1))
    assert stabilizer_order(QuadForm(1, 1, 1)) == 3
    assert stabilizer_order(QuadForm(1, 1, 4)) == 1


def test_heegner_points():
    point = heegner_point(QuadForm(1, 1, 1))
    assert point == HeegnerPoint(1, 1, 3)
    assert abs(point.imaginary_part - 3 ** 0.5 / 2) < 1e-12
    assert abs(heegner_point(QuadForm(2, 1, 3)).imaginary_part - 23 ** 0.5 / 4) < 1e-12
    with pytest.raises(PreconditionError):
        heegner_point(QuadForm(1, 0, -1))


def test_kronecker():
    assert kronecker(-3, 2) == -1
    assert kronecker(-15, 2) == 1
    assert kronecker(8, 2) == 0
    assert kronecker(-4, -1) == -1
    assert kronecker(5, -1) == 1
    assert kronecker(-15, 11) == -1
    assert kronecker(1, 0) == 1
    assert kronecker(5, 0) == 0
    for n in range(1, 60):
        assert kronecker(-4, n) == (0 if n % 2 == 0 else (1 if n % 4 == 1 else -1))


@given(st.integers(-500, 500).filter(lambda D: D % 4 in (0, 1) and D != 0), st.integers(1, 300), st.integers(1, 300))
def test_kronecker_is_multiplicative(D, m, n):
    assert kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n)


def test_fundamental_discriminants():
    assert [D for D in range(2, 30) if is_fundamental(D)] == [5, 8, 12, 13, 17, 21, 24, 28, 29]
    assert is_fundamental(-3)
    assert not is_fundamental(20)


def test_genus_characters():
    # discriminant -24 = -3 * 8 has the two classes [1,0,6] and [2,0,3]
    assert genus_character(QuadForm(1, 0, 6), 8, 3) == 1
    assert genus_character(QuadForm(2, 0, 3), 8, 3) == -1
    # -15 = -3 * 5: both classes of -15 with D = 5
    values = [genus_character(Q, 5, 3) for Q in reduced_forms(-15).reduced_forms]
    assert sorted(values) == [-1, 1]
    with pytest.raises(PreconditionError):
        genus_character(QuadForm(1, 1, 4), 8, 3)


GENUS_CASES = [
    (Q, D, d)
    for d, D in ((3, 5), (3, 8), (4, 5), (7, 5), (3, 17), (7, 8), (4, 13), (11, 8), (3, 29), (8, 5))
    for Q in reduced_forms(-d * D).reduced_forms
]

MOVES = {"S": (0, -1, 1, 0), "T": (1, 1, 0, 1), "U": (1, -1, 0, 1)}


@settings(max_examples=100)
@given(st.sampled_from(GENUS_CASES), st.lists(st.sampled_from(sorted(MOVES)), max_size=8))
def test_genus_character_is_a_class_invariant(case, word):
    Q, D, d = case
    chi = genus_character(Q, D, d)
    moved = Q
    for move in word:
        moved = moved.act(*MOVES[move])
    assert genus_character(reduce(moved), D, d) == chi
    # every represented value prime to D gives the same symbol
    for x in range(-4, 5):
        for y in range(-4, 5):
            n = moved(x, y)
            if gcd(x, y) == 1 and gcd(n, D) == 1:
                assert kronecker(D, n) == chi


def test_validate_twist():
    validate_twist(5, 3)
    validate_twist(20, 3)
    for D, d in ((4, 3), (9, 7), (6, 3), (12, 3), (-8, 3), (1, 3)):
        with pytest.raises(PreconditionError):
            validate_twist(D, d)
