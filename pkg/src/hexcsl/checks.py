"""Closed-form versus brute-force checks run by ``hexcsl verify``.

Each check returns one VerificationReport; ``observed`` lists the
disagreements found (empty when the check passes).
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import oracle
from .coincidence import (
    CoincidenceIsometry,
    count_csls,
    count_rotations,
    csl_of,
    dirichlet_coefficients,
    isometries,
    numerators,
)
from .eisenstein import EisensteinInt, EisensteinRational, Unit, factor, gcd, xgcd
from .multilattice import (
    HONEYCOMB_SHIFT,
    honeycomb,
    honeycomb_index,
    in_gamma_plus_rgamma,
    multilattice_index,
    shifted_honeycomb,
    shifted_multilattice_index,
    shifted_sigma,
)
from .oracle import SuiteConfig, VerificationReport, register
from .shifted import (
    AffinelyRelated,
    BothIndependent,
    IrrationalA,
    IrrationalB,
    is_member,
    oc_group_irrational,
    oc_member,
    shifted_csl,
    symbolic,
)

HALF = EisensteinRational(EisensteinInt(1), 2)
XI_SQ = Unit.from_value(EisensteinInt(-1, -1))
NEG_XI_SQ = Unit.from_value(EisensteinInt(1, 1))
NEG_ONE = Unit.from_value(EisensteinInt(-1))

# the series 1 + 2/7^s + 2/13^s + 2/19^s + 2/31^s + 2/37^s + 2/43^s + ...
EXPECTED_SERIES = {1: 1, 7: 2, 13: 2, 19: 2, 31: 2, 37: 2, 43: 2}


def _report(name, failures, context="", expected="no mismatches") -> VerificationReport:
    return VerificationReport(name, expected, failures[:20], not failures, context)


@register("a1_dirichlet_series")
def check_dirichlet(cfg: SuiteConfig) -> VerificationReport:
    coeffs = dirichlet_coefficients(43)
    expected = [EXPECTED_SERIES.get(m, 0) for m in range(1, 44)]
    return VerificationReport("", expected, coeffs, coeffs == expected, "f(m), m = 1..43")


@register("a2_rotation_counts")
def check_counts(cfg: SuiteConfig) -> VerificationReport:
    bad = []
    for m in range(1, cfg.count_bound + 1):
        f = count_csls(m)
        if count_rotations(m) != 6 * f:
            bad.append(("rotations", m))
        b = oracle.brute_count_csls(m)
        if b != f:
            bad.append((m, f, b))
    return _report("", bad, f"m <= {cfg.count_bound}")


@register("a3_csl_patches")
def check_csl_patches(cfg: SuiteConfig) -> VerificationReport:
    bad = []
    zs = numerators(cfg.norm_bound)
    for z in zs:
        if oracle.brute_index(z) != z.norm():
            bad.append(("index", str(z)))
    for r in isometries(cfg.norm_bound):
        brute = oracle.isometry_patch_intersection(r, 0, cfg.radius)
        closed = oracle.coset_patch(0, csl_of(r).z, cfg.radius)
        if not oracle.same_points(brute, closed):
            bad.append(str(r))
    return _report("", bad, f"{len(zs)} numerators, norm <= {cfg.norm_bound}, radius {cfg.radius}")


@register("a4_shifted_example")
def check_shifted_example(cfg: SuiteConfig) -> VerificationReport:
    x = HONEYCOMB_SHIFT  # (2 + xi)/3
    bad = []
    per_index: dict[int, int] = {}
    for r in isometries(cfg.example_bound, reflections=False):
        closed = is_member(r, x)
        if closed != r.eps.is_square():
            bad.append(("unit rule", str(r)))
        if closed != oracle.brute_member(r, x):
            bad.append(("oracle", str(r)))
        if closed:
            per_index[r.index] = per_index.get(r.index, 0) + 1
    t = CoincidenceIsometry(eps=NEG_XI_SQ, reflect=True)
    if not (oc_member(t, x) and oracle.brute_member(t, x)):
        bad.append(("reflection", str(t)))
    for m in range(1, cfg.example_bound + 1):
        if per_index.get(m, 0) != 3 * count_csls(m):
            bad.append(("count", m, per_index.get(m, 0)))
    return _report("", bad, f"x = (2+ξ)/3, norm <= {cfg.example_bound}")


@register("a5_honeycomb_indices")
def check_honeycomb(cfg: SuiteConfig) -> VerificationReport:
    lat = honeycomb()
    bad = []
    for r in isometries(cfg.norm_bound):
        n = r.index
        closed = honeycomb_index(r)
        if not r.reflect and closed != (n if r.eps.is_square() else 2 * n):
            bad.append(("unit rule", str(r), closed))
        if multilattice_index(lat, r) != closed:
            bad.append(("sigma route", str(r)))
        exact = oracle.brute_multilattice_index(lat.shifts, r, 1).exact
        if exact != closed:
            bad.append(("oracle", str(r), str(exact)))
    z = EisensteinInt(3, 1)
    pair = (honeycomb_index(CoincidenceIsometry(z)), honeycomb_index(CoincidenceIsometry(z, NEG_ONE)))
    if pair != (7, 14):
        bad.append(("sigma-7", pair))
    return _report("", bad, f"norm <= {cfg.norm_bound}, rotations and reflections")


@register("a6_shifted_honeycomb")
def check_shifted_honeycomb(cfg: SuiteConfig) -> VerificationReport:
    x, lat = shifted_honeycomb()
    pos, neg = x, -x
    bad = []
    for r in isometries(cfg.norm_bound):
        n = r.index
        if shifted_multilattice_index(x, lat, r) != n:
            bad.append(("index", str(r)))
        want = {(pos, pos), (neg, neg)} if is_member(r, x) else {(pos, neg), (neg, pos)}
        if shifted_sigma(x, lat, r).labelled() != want:
            bad.append(("sigma", str(r)))
        exact = oracle.brute_multilattice_index(lat.shifts, r, 1, x=x).exact
        if exact != n:
            bad.append(("oracle", str(r), str(exact)))
    return _report("", bad, f"norm <= {cfg.norm_bound}")


@register("shifted_coset_csls")
def check_shifted_cosets(cfg: SuiteConfig) -> VerificationReport:
    bad = []
    shifts = [EisensteinRational(EisensteinInt(0)), HONEYCOMB_SHIFT, HALF]
    for x in shifts:
        for r in isometries(cfg.norm_bound):
            brute = oracle.isometry_patch_intersection(r, x, cfg.radius)
            member = is_member(r, x)
            if member != oracle.brute_member(r, x):
                bad.append(("membership", str(x), str(r)))
            if member:
                c = shifted_csl(r, x)
                if not oracle.same_points(brute, oracle.coset_patch(c.shift, c.z, cfg.radius)):
                    bad.append(("coset", str(x), str(r)))
            elif len(brute):
                bad.append(("nonempty", str(x), str(r)))
    return _report("", bad, f"x in {{0, 1/(1-ξ), 1/2}}, norm <= {cfg.norm_bound}")


def irrational_cases():
    """(shift, generator of OC(x+Γ) as ((m, n), eps) for the numerator before normalisation, or None)."""
    one, m1 = Unit(0), NEG_ONE
    return [
        (IrrationalA(0), ((1, 0), one)),
        (IrrationalA(5), ((1, 0), one)),
        (IrrationalA(Fraction(1, 2)), None),
        (IrrationalB(0), ((1, 0), XI_SQ)),
        (IrrationalB(-2), ((1, 0), XI_SQ)),
        (IrrationalB(Fraction(1, 3)), None),
        (BothIndependent(), None),
        # p2 q2 = 0, 1 mod 3: T_{p2 + q2 xi, 1} when q1 | q2
        (AffinelyRelated(1, 1, 1, 1), ((1, 1), one)),
        (AffinelyRelated(0, 1, 3, 1), ((3, 1), one)),
        (AffinelyRelated(1, 2, 1, 4), ((1, 4), one)),
        (AffinelyRelated(3, 2, 7, 4), ((7, 4), one)),
        (AffinelyRelated(1, 3, 1, 4), None),
        # p2 q2 = 2 mod 3: T_{(2q2-p2)/3 + (q2-2p2)xi/3, -1} when q1 | q2
        (AffinelyRelated(2, 1, 5, 1), ((-1, -3), m1)),
        (AffinelyRelated(1, 2, 1, 2), ((1, 0), m1)),
        (AffinelyRelated(3, 7, 5, 7), ((3, -1), m1)),
        (AffinelyRelated(1, 3, 2, 1), None),
    ]


@register("a7_irrational_classifier")
def check_irrational(cfg: SuiteConfig) -> VerificationReport:
    bad = []
    candidates = list(isometries(cfg.norm_bound))
    for shift, gen in irrational_cases():
        desc = oc_group_irrational(shift)
        got = set(desc.elements)
        want = {CoincidenceIsometry()}
        if gen is not None:
            (m, n), eps = gen
            want.add(CoincidenceIsometry.from_numerator(EisensteinInt(m, n), eps, reflect=True))
        if got != want:
            bad.append(("closed form", repr(shift), [str(e) for e in got]))
        s = symbolic(shift)
        base = s.base.coords()
        dirs = [d.coords() for d in s.directions]
        for e in got:
            if not oracle.symbolic_accepts(e, base, dirs):
                bad.append(("ez-barz", repr(shift), str(e)))
        found = {r for r in candidates if oracle.symbolic_accepts(r, base, dirs)}
        if found != {e for e in got if e.index <= cfg.norm_bound}:
            bad.append(("search", repr(shift), [str(e) for e in found]))
        if len(got) > 2:
            bad.append(("order", repr(shift)))
    return _report("", bad, f"{len(irrational_cases())} shifts, search norm <= {cfg.norm_bound}")


@register("a8_gamma_plus_rgamma")
def check_gamma_plus_rgamma(cfg: SuiteConfig) -> VerificationReport:
    bad = []
    grid = oracle.rational_grid(cfg.grid_den)
    points = [EisensteinRational.from_coords(a, b) for a, b in grid]
    for z in numerators(cfg.norm_bound):
        for r in (CoincidenceIsometry(z), CoincidenceIsometry(z, Unit(1), reflect=True)):
            residues = oracle.brute_gamma_plus_rgamma(r)
            for (a, b), y in zip(grid, points):
                if in_gamma_plus_rgamma(y, r) != oracle.brute_in_gamma_plus_rgamma((a, b), residues):
                    bad.append((str(r), str(y)))
    return _report("", bad, f"norm <= {cfg.norm_bound}, {len(grid)} grid points (den <= {cfg.grid_den})")


@register("a8_ring_invariants")
def check_ring(cfg: SuiteConfig) -> VerificationReport:
    rng = random.Random(cfg.seed)
    bad = []
    for _ in range(cfg.random_cases):
        a = EisensteinInt(rng.randint(-300, 300), rng.randint(-300, 300))
        b = EisensteinInt(rng.randint(-300, 300), rng.randint(-300, 300))
        if (a * b).norm() != a.norm() * b.norm():
            bad.append(("norm", str(a), str(b)))
        if b:
            q, r = divmod(a, b)
            if q * b + r != a or r.norm() >= b.norm():
                bad.append(("divmod", str(a), str(b)))
        if a or b:
            g, s, t = xgcd(a, b)
            if s * a + t * b != g or not (g.divides(a) and g.divides(b)) or g != gcd(b, a):
                bad.append(("gcd", str(a), str(b)))
        if a:
            fa = factor(a)
            if fa.product() != a:
                bad.append(("factor", str(a)))
            for f in fa.factors:
                p = f.rational_prime
                ok = {
                    "split": f.prime.norm() == p and p % 3 == 1,
                    "ramified": f.prime.norm() == 3,
                    "inert": f.prime.norm() == p * p and p % 3 == 2,
                }[f.kind]
                if not ok:
                    bad.append(("factor kind", str(a), str(f.prime)))
    return _report("", bad, f"{cfg.random_cases} random pairs, seed {cfg.seed}")
