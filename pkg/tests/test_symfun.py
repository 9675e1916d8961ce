import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from hurwitz_atlas.characters import normalized_character
from hurwitz_atlas.core import Partition, ResourceLimitError, partitions_of, simple_profile
from hurwitz_atlas.symfun import (
    PSeries,
    cut_and_join,
    from_schur,
    p,
    p_monomial_in_schur,
    schur_in_p,
    series_exp,
    series_log,
    to_schur,
    w_operator,
)

half = Fraction(1, 2)


def test_schur_small():
    assert schur_in_p((1,)) == p(1)
    assert schur_in_p((2,)) == PSeries({(1, 1): half, (2,): half})
    assert schur_in_p((1, 1)) == PSeries({(1, 1): half, (2,): -half})


def test_p_in_schur_small():
    assert p_monomial_in_schur((1,)) == {(1,): 1}
    assert p_monomial_in_schur((2,)) == {(2,): 1, (1, 1): -1}


@pytest.mark.parametrize("d", range(1, 9))
def test_basis_round_trip(d):
    for delta in partitions_of(d):
        mono = PSeries.monomial(delta)
        assert from_schur(p_monomial_in_schur(delta)) == mono
        assert to_schur(mono) == {k: v for k, v in p_monomial_in_schur(delta).items() if v}
    for lam in partitions_of(d):
        assert to_schur(schur_in_p(lam)) == {lam: 1}


def test_cut_and_join_examples():
    assert cut_and_join(p(2)) == PSeries.monomial((1, 1))
    assert cut_and_join(PSeries.monomial((1, 1))) == p(2)
    assert cut_and_join(schur_in_p((2,))) == schur_in_p((2,))
    assert cut_and_join(schur_in_p((1, 1))) == schur_in_p((1, 1)).scale(-1)


@pytest.mark.parametrize("d", range(2, 9))
def test_cut_and_join_eigenvalues(d):
    simple = simple_profile(d)
    for mu in partitions_of(d):
        s = schur_in_p(mu)
        assert cut_and_join(s) == s.scale(normalized_character(mu, simple))


@given(st.dictionaries(partitions(0, 8), st.fractions(max_denominator=20), max_size=6), st.fractions(max_denominator=9))
def test_cut_and_join_linear_and_graded(coeffs, c):
    a = PSeries(coeffs, 8)
    b = PSeries({(2, 1): 1, (4,): Fraction(-3, 5)}, 8)
    assert cut_and_join(a.scale(c) + b) == cut_and_join(a).scale(c) + cut_and_join(b)
    for k in range(9):
        assert cut_and_join(a.component(k)).is_homogeneous(k)


def test_w_examples():
    for d in range(1, 6):
        for mu in partitions_of(d):
            s = PSeries.monomial(mu)
            assert w_operator((1,) * d, s) == s
    assert w_operator((3,), schur_in_p((3,))) == schur_in_p((3,)).scale(2)


@pytest.mark.parametrize("d", range(2, 7))
def test_w_simple_is_cut_and_join(d):
    for mu in partitions_of(d):
        mono = PSeries.monomial(mu)
        assert w_operator(simple_profile(d), mono) == cut_and_join(mono)


def test_w_pads_with_ones():
    # on degree 4, W^(2) acts as W^(2,1,1)
    mixed = PSeries({(4,): 1, (2, 1, 1): 3, (1,): 5, (1, 1): 2}, 6)
    got = w_operator((2,), mixed)
    want = w_operator((2, 1, 1), mixed.component(4)) + w_operator((2,), mixed.component(2))
    assert got == want
    assert got[(1,)] == 0  # degree below |delta| is annihilated
    with pytest.raises(ValueError):
        w_operator((2,), mixed, strict=True)
    assert w_operator((2, 1, 1), mixed.component(4), strict=True) == want.component(4)


@pytest.mark.parametrize("d", range(1, 6))
def test_w_operators_commute(d):
    parts = partitions_of(d)
    for mu in parts:
        probe = PSeries.monomial(mu)
        for a, b in itertools.combinations(parts, 2):
            assert w_operator(a, w_operator(b, probe)) == w_operator(b, w_operator(a, probe))


def test_exp_log_examples():
    assert series_exp(PSeries({}, 5)) == PSeries.one(5)
    for cap in range(1, 9):
        assert series_log(series_exp(p(1, cap))) == p(1, cap).truncate(cap)
    got = series_exp(PSeries({(1,): 1, (1, 1): half}, 2))
    assert got == PSeries({(): 1, (1,): 1, (1, 1): 1}, 2)


@given(st.dictionaries(partitions(1, 6), st.fractions(max_denominator=7), max_size=4))
def test_exp_log_round_trip(coeffs):
    a = PSeries(coeffs, 6)
    assert series_log(series_exp(a)) == a


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        series_exp(PSeries.one(3))
    with pytest.raises(ValueError):
        series_log(p(1, 3))


def test_degree_cap():
    with pytest.raises(ResourceLimitError):
        PSeries({}, 11)
    with pytest.raises(ResourceLimitError):
        schur_in_p((11,))
    with pytest.raises(ValueError):
        PSeries({(3,): 1}, 2)


def test_product_truncates_to_smaller_degree():
    a = PSeries({(1,): 1}, 2)
    b = PSeries({(1,): 1, (3,): 1}, 4)
    assert (a * b).max_degree == 2
    assert a * b == PSeries({(1, 1): 1}, 2)


def test_json_order():
    s = schur_in_p((2, 1))
    keys = list(s.to_json()["coefficients"])
    assert keys == ["3", "1,1,1"]
    assert s.to_json()["coefficients"]["1,1,1"] == "1/3"
    assert Partition((2, 1)) not in s.coeffs
