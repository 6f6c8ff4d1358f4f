from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import spinor_indices

from spinorium.indices import (
    HalfInt,
    InvalidIndexError,
    SpinorIndex,
    jl_to_kappa,
    kappa_to_j,
    kappa_to_l,
    mu_range,
)

kappas = st.integers(-200, 200).filter(bool)


def test_small_kappa_table():
    assert (kappa_to_l(-1), kappa_to_j(-1)) == (0, HalfInt(1))
    assert (kappa_to_l(1), kappa_to_j(1)) == (1, HalfInt(1))
    assert (kappa_to_l(-2), kappa_to_j(-2)) == (1, HalfInt(3))
    assert (kappa_to_l(2), kappa_to_j(2)) == (2, HalfInt(3))


def test_roundtrip_exhaustive():
    for kappa in range(-50, 51):
        if kappa == 0:
            continue
        assert jl_to_kappa(kappa_to_j(kappa), kappa_to_l(kappa)) == kappa


@given(kappas)
def test_kappa_formula(kappa):
    l, j = kappa_to_l(kappa), kappa_to_j(kappa).to_fraction()
    assert (l - j) * (2 * j + 1) == kappa
    assert abs(l - j) == Fraction(1, 2)


@pytest.mark.parametrize("func", [kappa_to_l, kappa_to_j, mu_range])
def test_zero_kappa_rejected(func):
    with pytest.raises(InvalidIndexError, match="kappa must be nonzero"):
        func(0)


@pytest.mark.parametrize("j, l", [("1/2", 2), ("3/2", 0), ("1", 1), ("1/2", -1)])
def test_bad_couplings(j, l):
    with pytest.raises(InvalidIndexError):
        jl_to_kappa(HalfInt.parse(j), l)


@given(kappas)
def test_mu_range_size(kappa):
    mus = mu_range(kappa)
    assert len(mus) == 2 * abs(kappa)
    assert len(mus) == kappa_to_j(kappa).twice + 1
    assert all(SpinorIndex.is_valid(kappa, mu) for mu in mus)
    assert not SpinorIndex.is_valid(kappa, mus[-1] + 1)


@pytest.mark.parametrize(
    "text, twice",
    [("1/2", 1), ("-3/2", -3), ("0.5", 1), ("-1.5", -3), ("+2.50", 5), ("3", 6), (".5", 1), ("-0.5", -1)],
)
def test_parse(text, twice):
    assert HalfInt.parse(text) == HalfInt(twice)


@pytest.mark.parametrize("text", ["0.3", "1/3", "abc", "", "1.25", "0.5000001"])
def test_parse_rejects(text):
    with pytest.raises(InvalidIndexError):
        HalfInt.parse(text)


@given(st.integers(-10**6, 10**6))
def test_parse_str_roundtrip(twice):
    h = HalfInt(twice)
    assert HalfInt.parse(str(h)) == h
    assert float(h) == twice / 2


@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_arithmetic_exact(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
    assert (x - y).to_fraction() == x.to_fraction() - y.to_fraction()
    assert (-x).twice == -a
    assert abs(x).twice == abs(a)


def test_half_of_rejects_thirds():
    with pytest.raises(InvalidIndexError):
        HalfInt.of(Fraction(1, 3))


@pytest.mark.parametrize("kappa, mu", [(0, "1/2"), (1, "3/2"), (-1, "-3/2"), (2, "1"), (2, "5/2")])
def test_invalid_spinor_index(kappa, mu):
    assert not SpinorIndex.is_valid(kappa, HalfInt.parse(mu))
    with pytest.raises(InvalidIndexError):
        SpinorIndex(kappa, HalfInt.parse(mu))


@given(spinor_indices())
def test_spinor_index_properties(idx):
    assert idx.l == kappa_to_l(idx.kappa)
    assert abs(idx.mu.twice) <= idx.j.twice
    assert idx.mu.twice % 2 == 1 or idx.mu.twice % 2 == -1
