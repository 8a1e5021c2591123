from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcsl import oracle
from hexcsl.coincidence import CoincidenceIsometry, isometries
from hexcsl.eisenstein import EisensteinInt, EisensteinRational, Unit
from hexcsl.multilattice import (
    HONEYCOMB_SHIFT,
    Multilattice,
    csml,
    honeycomb,
    honeycomb_index,
    in_gamma_plus_rgamma,
    multilattice_index,
    shifted_csml,
    shifted_honeycomb,
    shifted_honeycomb_index,
    shifted_multilattice_index,
    shifted_sigma,
    sigma,
)

Z7 = EisensteinInt(3, 1)
SMALL = list(isometries(50))
iso = st.sampled_from(SMALL)
lattice_pt = st.builds(EisensteinInt, st.integers(-6, 6), st.integers(-6, 6))


def test_honeycomb_shift():
    assert HONEYCOMB_SHIFT * (1 - EisensteinInt(0, 1)) == EisensteinRational(EisensteinInt(1))


def test_multilattice_validation():
    with pytest.raises(ValueError):
        Multilattice((HONEYCOMB_SHIFT,))
    with pytest.raises(ValueError):
        Multilattice((0, EisensteinInt(1, 2)))
    assert honeycomb().m == 2


def test_honeycomb_examples():
    assert honeycomb_index(CoincidenceIsometry(Z7)) == 7
    assert honeycomb_index(CoincidenceIsometry(Z7, Unit(3))) == 14
    assert honeycomb_index(CoincidenceIsometry()) == 1
    assert len(sigma(honeycomb(), CoincidenceIsometry(Z7, Unit(3)))) == 1
    assert sigma(honeycomb(), CoincidenceIsometry(Z7)).pairs == {(0, 0), (1, 1)}


def test_shifted_honeycomb_examples():
    x, lat = shifted_honeycomb()
    assert lat.shifts[1] == -2 * x
    for k in range(6):
        r = CoincidenceIsometry(Z7, Unit(k))
        assert shifted_multilattice_index(x, lat, r) == 7 == shifted_honeycomb_index(r)
    assert shifted_sigma(x, lat, CoincidenceIsometry(Z7, Unit(3))).labelled() == {(x, -x), (-x, x)}


def test_single_lattice_reduces_to_csl():
    lat = Multilattice((0,))
    for r in SMALL[:40]:
        assert multilattice_index(lat, r) == r.z.norm()


def test_csml_json():
    c = csml(honeycomb(), CoincidenceIsometry(Z7, Unit(3)))
    d = c.to_json()
    assert (d["index_num"], d["index_den"]) == (14, 1)
    assert len(d["components"]) == 1


def test_gamma_plus_rgamma_against_oracle():
    grid = oracle.rational_grid(5)
    for r in (CoincidenceIsometry(Z7), CoincidenceIsometry(EisensteinInt(4, 1), Unit(2), reflect=True)):
        res = oracle.brute_gamma_plus_rgamma(r)
        for a, b in grid:
            assert in_gamma_plus_rgamma(EisensteinRational.from_coords(a, b), r) == oracle.brute_in_gamma_plus_rgamma((a, b), res)


@settings(max_examples=80, deadline=None)
@given(iso, lattice_pt)
def test_csml_points_coincide(r, g):
    lat = honeycomb()
    c = csml(lat, r)
    for comp in c.components:
        y = comp.shift + r.z * g
        assert y in c
        assert any((y - s).is_integral() for s in lat.shifts)
        back = r.inverse().apply(y)
        assert any((back - s).is_integral() for s in lat.shifts)


@settings(max_examples=40, deadline=None)
@given(iso)
def test_honeycomb_index_matches_sigma_and_oracle(r):
    lat = honeycomb()
    assert multilattice_index(lat, r) == honeycomb_index(r)
    assert oracle.brute_multilattice_index(lat.shifts, r, 1).exact == honeycomb_index(r)


@settings(max_examples=40, deadline=None)
@given(iso, st.builds(Fraction, st.integers(-3, 3), st.integers(2, 4)), st.builds(Fraction, st.integers(-3, 3), st.integers(2, 4)))
def test_general_multilattice_index_matches_oracle(r, a, b):
    s = EisensteinRational.from_coords(a, b)
    if s.is_integral():
        return
    lat = Multilattice((0, s))
    try:
        idx = multilattice_index(lat, r)
    except ValueError:
        assert oracle.brute_multilattice_index(lat.shifts, r, 1).exact == 0
        return
    assert oracle.brute_multilattice_index(lat.shifts, r, 1).exact == idx
    c = shifted_csml(0, lat, r)
    assert c.index == idx
