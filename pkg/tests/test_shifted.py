from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcsl import oracle
from hexcsl.coincidence import IDENTITY, CoincidenceIsometry, compose, isometries, numerators
from hexcsl.eisenstein import EisensteinInt, EisensteinRational, Unit
from hexcsl.multilattice import HONEYCOMB_SHIFT
from hexcsl.shifted import (
    AffinelyRelated,
    BothIndependent,
    IrrationalA,
    IrrationalB,
    RationalShift,
    coset_offset,
    ez_barz_member,
    in_fundamental_domain,
    is_group_certified,
    is_member,
    oc_description,
    oc_group_irrational,
    parse_shift,
    reduce_to_fundamental_domain,
    reflection_unit,
    shifted_csl,
    soc_unit_set,
    symbolic_member,
    to_denominator_form,
    unit_status,
)

SMALL = list(isometries(50))
iso = st.sampled_from(SMALL)
frac = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 9))
shift = st.builds(EisensteinRational.from_coords, frac, frac)
lattice_pt = st.builds(EisensteinInt, st.integers(-10, 10), st.integers(-10, 10))


def test_parse_shift():
    assert parse_shift("2/3,1/3") == RationalShift(Fraction(2, 3), Fraction(1, 3))
    assert parse_shift("0,1").point == EisensteinRational(EisensteinInt(0, 1))
    with pytest.raises(ValueError):
        parse_shift("1/2")
    with pytest.raises(ValueError):
        AffinelyRelated(2, 4, 1, 1)
    with pytest.raises(ValueError):
        AffinelyRelated(1, 1, 0, 1)


def test_denominator_form():
    d = to_denominator_form(HONEYCOMB_SHIFT)
    assert d.q == EisensteinInt(2, 1)
    assert d.p == EisensteinInt(1, 1)  # a unit
    assert d.value == HONEYCOMB_SHIFT
    assert to_denominator_form(EisensteinRational(EisensteinInt(1), 2)).q == EisensteinInt(2)
    assert to_denominator_form(0).q == EisensteinInt(1)


def test_example_shift_description():
    d = oc_description(parse_shift("2/3,1/3"))
    assert [u.k for u in d.units] == [0, 2, 4]  # 1, xi, xi^2
    assert d.reflection == CoincidenceIsometry(eps=Unit(1), reflect=True)  # T_{1,-xi^2}
    assert d.certified_group
    assert d.kind == "rotation-subgroup-with-reflection"
    assert soc_unit_set(HONEYCOMB_SHIFT).structure == "C3 x Z^(aleph_0)"
    for k in range(6):
        assert is_member(CoincidenceIsometry(eps=Unit(k), reflect=True), HONEYCOMB_SHIFT) == (k % 2 == 1)


def test_zero_shift_is_full():
    d = oc_description(parse_shift("0/1,0/1"))
    assert d.kind == "full-oc" and len(d.units) == 6
    assert all(is_member(r, 0) for r in SMALL)


def test_irrational_groups():
    assert oc_description(BothIndependent()).elements == (IDENTITY,)
    assert set(oc_group_irrational(IrrationalA(3)).elements) == {IDENTITY, CoincidenceIsometry(reflect=True)}
    assert oc_group_irrational(IrrationalA(Fraction(1, 2))).kind == "trivial"
    t = CoincidenceIsometry(eps=Unit(4), reflect=True)  # T_{1,xi^2}
    assert set(oc_group_irrational(IrrationalB(-1)).elements) == {IDENTITY, t}
    assert oc_group_irrational(AffinelyRelated(1, 3, 2, 1)).kind == "trivial"  # q1 does not divide q2


@pytest.mark.parametrize(
    "x",
    [IrrationalA(0), IrrationalA(Fraction(2, 5)), IrrationalB(4), IrrationalB(Fraction(1, 2)), BothIndependent(),
     AffinelyRelated(1, 1, 1, 1), AffinelyRelated(2, 1, 5, 1), AffinelyRelated(1, 2, 1, 2), AffinelyRelated(0, 1, 2, 5),
     AffinelyRelated(5, 3, 4, 3), AffinelyRelated(1, 5, 7, 10)],
)
def test_irrational_groups_match_symbolic_search(x):
    got = set(oc_group_irrational(x).elements)
    found = {r for r in SMALL if symbolic_member(r, x)}
    assert found == {r for r in got if r.index <= 50}
    for r in got:
        assert symbolic_member(r, x)


@settings(max_examples=200, deadline=None)
@given(iso, shift)
def test_membership_agrees_with_oracle(r, x):
    assert is_member(r, x) == oracle.brute_member(r, x) == ez_barz_member(r, x)


@settings(max_examples=150, deadline=None)
@given(iso, shift, lattice_pt)
def test_shifted_csl_points_coincide(r, x, g):
    if not is_member(r, x):
        with pytest.raises(ValueError):
            shifted_csl(r, x)
        return
    c = shifted_csl(r, x)
    y = c.shift + r.z * g
    assert y in c
    assert (y - x).is_integral()
    assert (r.inverse().apply(y) - x).is_integral()


@settings(max_examples=100, deadline=None)
@given(iso, lattice_pt, lattice_pt)
def test_coset_offset(r, a, b):
    y = EisensteinRational(a) + r.apply(b) + EisensteinRational(r.z * a)
    l = coset_offset(y, r)
    assert r.inverse().apply(y - l).is_integral()


small_den = st.builds(
    EisensteinRational.from_coords,
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 6)),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 6)),
)
SWEEP = numerators(400)


@settings(max_examples=60, deadline=None)
@given(small_den)
def test_unit_status_matches_sweep(x):
    # denominators <= 6 keep the residue modulus small enough that norm <= 400 meets every class
    zs = SWEEP
    for reflect in (False, True):
        status = unit_status(x, reflect)
        for k, s in status.items():
            hits = {is_member(CoincidenceIsometry(z, Unit(k), reflect), x) for z in zs}
            if s == "all":
                assert hits == {True}
            elif s == "none":
                assert hits == {False}
            elif s == "partial":
                assert hits == {True, False}


@settings(max_examples=40, deadline=None)
@given(shift)
def test_certified_groups_are_closed(x):
    if not is_group_certified(x):
        return
    members = [r for r in isometries(30) if is_member(r, x)]
    for a in members:
        for b in members:
            assert is_member(compose(a, b), x)


@given(shift)
def test_reflection_unit_is_symmetry(x):
    eps = reflection_unit(x)
    if eps is not None:
        assert is_member(CoincidenceIsometry(eps=eps, reflect=True), x)


@given(shift)
def test_fundamental_domain_reduction(x):
    y, u, refl, g = reduce_to_fundamental_domain(x)
    assert in_fundamental_domain(y)
    assert y == u.value * (x.conj() if refl else x) - g
    # symmetric shifts have conjugate coincidence groups, so the SOC sizes agree
    assert len(soc_unit_set(x).units) == len(soc_unit_set(y).units)


def test_fundamental_domain_corners():
    for p in (0, EisensteinRational(EisensteinInt(1), 2), HONEYCOMB_SHIFT):
        assert in_fundamental_domain(p)
    assert not in_fundamental_domain(EisensteinRational(EisensteinInt(0, 1), 2))
