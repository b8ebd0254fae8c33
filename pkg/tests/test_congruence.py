import itertools
import json
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from borcherds.congruence import (
    CongruenceCertificate,
    SearchConfig,
    admissible_discriminants,
    canonicalise,
    choose_discriminant_set,
    class_number_upper_bound,
    column_series,
    column_vector,
    combination_series,
    congruence_weight,
    find_congruences,
    h_S,
    howell_form,
    in_span,
    index_gamma0,
    kernel_mod_prime_power,
    lhat_set_size,
    load_certificate,
    load_certificates,
    nullspace_mod_prime,
    rank_mod_prime,
    required_set_size,
    rref_mod_prime,
    s_p_membership,
    save_certificate,
    save_certificates,
    sturm_bound,
    verify_congruence,
)
from borcherds.congruence.certificate import symmetric
from borcherds.congruence.linalg import mat_vec_mod
from borcherds.errors import PrecisionError, PreconditionError
from borcherds.modforms import plus_space_form
from borcherds.products import log_deriv
from borcherds.quadforms import class_number, field_class_number
from borcherds.workers import ColumnPool

EXAMPLE_S = (5, 20, 37, 53, 56, 80, 89, 92, 97, 104)

# q^1..q^9 of L_D modulo 11 for d = 3
EXAMPLE_COLUMNS = {
    5: {1: 3, 2: 5, 3: 3, 4: 6, 5: 3, 6: 5, 9: 5},
    20: {1: 4, 3: 4, 4: 3, 5: 4, 8: 5, 9: 3},
    37: {1: 6, 2: 10, 3: 4, 4: 1, 5: 6, 6: 3, 7: 9, 9: 1},
    53: {1: 3, 2: 5, 3: 3, 4: 6, 5: 3, 6: 5, 7: 10, 9: 5},
    56: {1: 9, 2: 4, 3: 9, 4: 7, 5: 9, 6: 4, 7: 4, 9: 4},
    80: {2: 7, 4: 8, 6: 7, 8: 3},
    89: {1: 1, 2: 9, 3: 1, 4: 2, 5: 1, 6: 9, 9: 9},
    92: {1: 5, 2: 1, 3: 5, 4: 10, 5: 5, 6: 1, 7: 2, 9: 1},
    97: {1: 7, 2: 8, 3: 1, 4: 3, 5: 7, 6: 9, 9: 3},
    104: {1: 5, 2: 1, 3: 5, 4: 10, 5: 5, 6: 1, 9: 1},
}

# the six relations modulo 11, coefficients over EXAMPLE_S
EXAMPLE_RELATIONS = [
    (7, 0, 0, -7, 1, 0, 2, 0, 0, 0),
    (0, 3, 2, 0, 0, 6, 0, 2, 3, 0),
    (3, 0, 0, 0, 0, 0, 2, 0, 0, 0),
    (0, 0, 0, 3, -2, 0, -2, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 2, -2, 0, 2),
    (2, 0, 0, -2, 0, 0, 0, -1, 0, 1),
]


def test_index_gamma0():
    assert index_gamma0(1) == 1
    assert index_gamma0(4) == 6
    assert index_gamma0(6) == 12
    assert index_gamma0(11) == 12
    with pytest.raises(PreconditionError):
        index_gamma0(0)


def test_thresholds():
    assert required_set_size(11, 1, 10) == Fraction(102, 12)
    assert required_set_size(11, 2, 10, N=4) == Fraction(11 * 10 * 10 + 2, 12) * 6
    assert lhat_set_size(2, 1, 10) == Fraction(122, 12)
    assert congruence_weight(11, 1, 10) == 102
    assert sturm_bound(102) == Fraction(102, 12)
    bound = required_set_size(11, 1, 0, variant="ii", D_S=104, support=[-3])
    assert bound > required_set_size(11, 1, 10)
    with pytest.raises(PreconditionError):
        required_set_size(11, 1, 10, variant="ii")
    with pytest.raises(PreconditionError):
        required_set_size(12, 1, 10)


def test_class_number_bound():
    for disc in (-15, -60, -159, -312, -2003):
        assert class_number(disc) <= class_number_upper_bound(-disc)


def test_membership_matches_residues():
    # for d = 3 and p = 11, p is inert or ramified exactly when D mod 11 lies here
    residues = {0, 1, 3, 4, 5, 9}
    for D in range(2, 300):
        if D % 4 not in (0, 1) or D in (4, 9, 16, 25, 36, 49, 64, 81, 100, 121, 144, 169, 196, 225, 256, 289):
            assert not s_p_membership(D, 3, 11)
            continue
        assert s_p_membership(D, 3, 11) == (D % 11 in residues), D


def test_admissible_range():
    assert admissible_discriminants(3, 11, 104) == list(EXAMPLE_S)
    assert admissible_discriminants(3, 11, 104, lower=50) == [53, 56, 80, 89, 92, 97, 104]
    assert 44 not in admissible_discriminants(3, 11, 104)
    assert 44 in admissible_discriminants(3, 11, 104, allow_ramified=True)
    assert admissible_discriminants(3, 11, 104, fundamental_only=True) == [5, 37, 53, 56, 89, 92, 97, 104]


def test_example_class_numbers():
    assert [field_class_number(-3 * D) for D in EXAMPLE_S] == [2, 2, 8, 10, 4, 2, 2, 8, 4, 4]
    assert h_S(EXAMPLE_S, 3) == 10
    assert h_S([5], 3, N=4) == 12
    with pytest.raises(PreconditionError):
        h_S([], 3)


def test_search_config():
    config = SearchConfig(d=3, p=11, j=1, S=tuple(reversed(EXAMPLE_S)))
    assert config.n_terms is None
    assert config.S == EXAMPLE_S
    assert config.mode == "logderiv"
    assert config.h_S == 10
    assert config.threshold == Fraction(102, 12)
    assert config.strict
    assert config.threshold_met
    assert config.terms == 9
    assert config.modulus == 11
    assert config.required_precision() == 104 * 81
    restored = SearchConfig.from_dict(config.to_dict())
    assert restored == SearchConfig(d=3, p=11, j=1, S=EXAMPLE_S, n_terms=9)

    # h(-15) = 2 gives the threshold 22/12
    small = SearchConfig(d=3, p=11, j=1, S=(5,))
    assert not small.threshold_met

    lhat_config = SearchConfig(d=7, p=2, j=1, S=(5, 8))
    assert lhat_config.mode == "lhat"
    assert lhat_config.modulus == 4
    assert not lhat_config.strict


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(d=3, p=12, j=1, S=(5,)),
        dict(d=3, p=11, j=0, S=(5,)),
        dict(d=5, p=11, j=1, S=(5,)),
        dict(d=3, p=11, j=1, S=()),
        dict(d=3, p=11, j=1, S=(6,)),
        dict(d=3, p=11, j=1, S=(12,)),
        dict(d=3, p=11, j=1, S=(17,)),
        dict(d=3, p=11, j=1, S=(5,), n_terms=0),
        dict(d=3, p=11, j=1, S=(5,), mode="lhat"),
        dict(d=7, p=2, j=1, S=(5,), mode="logderiv"),
    ],
)
def test_search_config_rejects(kwargs):
    with pytest.raises(PreconditionError):
        SearchConfig(**kwargs)


def test_canonical_form_and_rendering():
    assert canonicalise((3, 0, 2), 11, 11) == (1, 0, 8)
    with pytest.raises(PreconditionError):
        canonicalise((0, 11, 22), 11, 11)
    assert symmetric(10, 11) == -1
    assert symmetric(5, 11) == 5
    assert symmetric(6, 11) == -5

    config = SearchConfig(d=3, p=11, j=1, S=EXAMPLE_S)
    cert = CongruenceCertificate(config, EXAMPLE_RELATIONS[0], verified_to=9)
    assert cert.render() == "-4*L5 + 4*L53 + L56 + 2*L89"
    assert str(cert) == "-4*L5 + 4*L53 + L56 + 2*L89 = 0 (mod 11)"
    assert cert.support == [(5, 7), (53, 4), (56, 1), (89, 2)]


def test_canonicalise_scales_first_unit_to_one():
    assert canonicalise((2, 1, 3), 2, 4) == (2, 1, 3)
    assert canonicalise((0, 3, 2), 2, 4) == (0, 1, 2)
    assert canonicalise((3, 0, 2), 11, 11)[0] == 1


def brute_force_kernel(M, modulus):
    ncols = len(M[0])
    return [
        v
        for v in itertools.product(range(modulus), repeat=ncols)
        if not any(mat_vec_mod(M, v, modulus))
    ]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2)]), st.lists(st.integers(0, 8), min_size=16, max_size=16))
def test_howell_kernel_matches_brute_force(prime_power, entries):
    p, k = prime_power
    modulus = p ** k
    M = [[x % modulus for x in entries[4 * i : 4 * i + 4]] for i in range(4)]
    kernel = kernel_mod_prime_power(M, p, k)
    for v in kernel:
        assert not any(mat_vec_mod(M, v, modulus))
    for v in brute_force_kernel(M, modulus):
        assert in_span(kernel, v, p, k)


def test_howell_form_saturates():
    # over Z/4 the span of (2, 1) contains 2 * (2, 1) = (0, 2)
    rows = howell_form([[2, 1]], 2, 2)
    assert rows == [[2, 1], [0, 2]]
    assert in_span([[2, 1]], [0, 2], 2, 2)
    assert not in_span([[2, 1]], [0, 1], 2, 2)


def test_kernel_examples():
    # 2x = 0 over Z/4
    assert sorted(kernel_mod_prime_power([[2]], 2, 2)) == [[2]]
    assert kernel_mod_prime_power([[1, 1]], 3, 2) == [[1, 8]]
    # empty matrix: every vector is in the kernel
    assert len(kernel_mod_prime_power([], 5, 1, ncols=3)) == 3
    assert len(kernel_mod_prime_power([], 5, 2, ncols=3)) == 3


@given(st.lists(st.lists(st.integers(0, 6), min_size=5, max_size=5), min_size=1, max_size=5))
def test_rank_nullity(M):
    assert rank_mod_prime(M, 7) + len(nullspace_mod_prime(M, 7)) == 5
    for v in nullspace_mod_prime(M, 7):
        assert not any(mat_vec_mod(M, v, 7))


def test_rref_mod_prime():
    rows, pivots = rref_mod_prime([[2, 4, 1], [1, 2, 3]], 5)
    assert rows == [[1, 2, 3]]
    assert pivots == [0]
    assert rref_mod_prime([[2, 4], [1, 3]], 5) == ([[1, 0], [0, 1]], [0, 1])


def test_duplicate_discriminant(f3_small):
    config = SearchConfig(d=3, p=11, j=1, S=(5, 5), n_terms=5)
    certs = find_congruences(config, form=f3_small)
    assert [cert.coeffs for cert in certs] == [(1, 10)]
    assert certs[0].render() == "L5 - L5"


def test_find_congruences_needs_precision(f3_small):
    # six terms of L_53 need f_3 to q^1908
    config = SearchConfig(d=3, p=11, j=1, S=(5, 20, 53), n_terms=6)
    with pytest.raises(PrecisionError):
        find_congruences(config, form=f3_small)


def test_column_pool_matches_direct(f3_small):
    config = SearchConfig(d=3, p=11, j=1, S=(5, 20), n_terms=4)
    with ColumnPool(f3_small, config) as pool:
        columns = pool.map(config.S)
    assert pool.stats["columns"] == 2
    assert columns[0] == log_deriv(f3_small, 5, 4).reduce(11).coefficients(1, 5)
    assert columns[1] == log_deriv(f3_small, 20, 4).reduce(11).coefficients(1, 5)


def test_columns_of_the_example(f3_small):
    config = SearchConfig(d=3, p=11, j=1, S=(5, 20), n_terms=4)
    assert column_vector(f3_small, 5, config) == [3, 5, 3, 6]
    assert column_vector(f3_small, 20, config, 3) == [4, 0, 4]
    series = column_series(f3_small, 5, config)
    assert series.trunc == 5
    assert series.coefficient(4) == 6


def test_certificate_files(tmp_path):
    config = SearchConfig(d=3, p=11, j=1, S=EXAMPLE_S, n_terms=9)
    certs = [CongruenceCertificate(config, relation, verified_to=9) for relation in EXAMPLE_RELATIONS]
    path = str(tmp_path / "certs.json")
    save_certificates(certs, path)
    loaded = load_certificates(path)
    assert [c.coeffs for c in loaded] == [c.coeffs for c in certs]
    assert loaded[0].config == config

    single = str(tmp_path / "one.json")
    save_certificate(certs[2], single)
    with open(single) as f:
        data = json.load(f)
    assert data["relation"] == "3*L5 + 2*L89"
    assert data["modulus"] == 11
    assert load_certificate(single).coeffs == certs[2].coeffs
    with pytest.raises(PreconditionError):
        load_certificate(path)

    data["format"] = 99
    with open(single, "w") as f:
        json.dump(data, f)
    with pytest.raises(PreconditionError):
        load_certificates(single)
    with pytest.raises(PreconditionError):
        load_certificates(str(tmp_path / "missing.json"))


@pytest.mark.slow
def test_example_columns(f3_example):
    for D, expected in EXAMPLE_COLUMNS.items():
        assert log_deriv(f3_example, D, 9).reduce(11).as_dict() == expected, D


@pytest.mark.slow
def test_example_search(f3_example):
    config = SearchConfig(d=3, p=11, j=1, S=EXAMPLE_S)
    certs = find_congruences(config, form=f3_example)
    kernel = [cert.coeffs for cert in certs]
    for relation in EXAMPLE_RELATIONS:
        assert in_span(kernel, relation, 11)
    for vector in kernel:
        assert in_span(EXAMPLE_RELATIONS, vector, 11)
    for cert in certs:
        assert cert.verified_to == 9
        assert all(cert.nontrivial)
        assert verify_congruence(cert, 9, form=f3_example)


@pytest.mark.slow
def test_example_residual():
    T = 14
    config = SearchConfig(d=3, p=11, j=1, S=EXAMPLE_S)
    cert = CongruenceCertificate(config, EXAMPLE_RELATIONS[2], verified_to=9)
    form = plus_space_form(3, 89 * T * T)
    combination = combination_series(cert, T, form=form)
    assert combination.as_dict() == {13: 1, 14: 5}
    assert not verify_congruence(cert, T, form=form)
    assert cert.verified_to == 9
    assert verify_congruence(cert, 12, form=form)
    assert cert.verified_to == 12


@pytest.mark.slow
def test_modified_series_search_for_p_2():
    S = choose_discriminant_set(7, 2, 1)
    config = SearchConfig(d=7, p=2, j=1, S=S)
    assert config.threshold_met
    form = plus_space_form(7, config.required_precision())
    certs = find_congruences(config, form=form)
    assert certs
    for cert in certs:
        assert cert.modulus == 4
        assert "Lhat" in cert.render()
        assert verify_congruence(cert, config.terms, form=form)
