"""Coincidences of shifted hexagonal lattices x + Z[xi].

A coincidence isometry R of Z[xi] is one of x + Z[xi] iff ``R x - x`` lies in
``Z[xi] + R Z[xi]``.  For a rotation ``R_{z,eps}`` this reads
``(eps*z - conj(z)) * x in Z[xi]``; for a reflection ``T_{z,eps}`` it reads
``eps*z*conj(x) - conj(z)*x in Z[xi]``.  Writing ``x = p/q`` with coprime
p, q the rotation test becomes ``q | eps*z - conj(z)``.

Irrational shifts are handled symbolically: a shift is a rational base point
plus real multiples of fixed directions whose coefficients, together with 1,
are rationally independent.  Membership never touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from sympy import factorint

from .coincidence import IDENTITY, CoincidenceIsometry
from .eisenstein import (
    ONE,
    UNITS,
    XI,
    EisensteinInt,
    EisensteinRational,
    Unit,
    canonical_associate,
    gcd,
    xgcd,
)

# --------------------------------------------------------------------------
# shift descriptions


@dataclass(frozen=True)
class RationalShift:
    """x = a + b*xi with a, b rational."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @property
    def point(self) -> EisensteinRational:
        return EisensteinRational.from_coords(self.a, self.b)

    @classmethod
    def from_point(cls, x) -> RationalShift:
        return cls(*EisensteinRational.coerce(x).coords())


@dataclass(frozen=True)
class IrrationalA:
    """a irrational, b rational."""

    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", Fraction(self.b))


@dataclass(frozen=True)
class IrrationalB:
    """a rational, b irrational."""

    a: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))


@dataclass(frozen=True)
class BothIndependent:
    """1, a and b rationally independent."""


@dataclass(frozen=True)
class AffinelyRelated:
    """b irrational and a = p1/q1 + (p2/q2)*b."""

    p1: int
    q1: int
    p2: int
    q2: int

    def __post_init__(self) -> None:
        for p, q in ((self.p1, self.q1), (self.p2, self.q2)):
            if q < 1 or math.gcd(p, q) != 1:
                raise ValueError(f"{p}/{q} must be reduced with positive denominator")
        if self.p2 == 0:
            raise ValueError("p2 = 0 makes a rational; use IrrationalB")


IrrationalShift = Union[IrrationalA, IrrationalB, BothIndependent, AffinelyRelated]
ShiftSpec = Union[RationalShift, IrrationalShift]


def as_point(x) -> EisensteinRational:
    if isinstance(x, RationalShift):
        return x.point
    return EisensteinRational.coerce(x)


def parse_shift(text: str) -> RationalShift:
    """Parse ``"a_num/a_den,b_num/b_den"`` (denominators optional)."""
    try:
        a, b = text.split(",")
        return RationalShift(Fraction(a.strip()), Fraction(b.strip()))
    except ValueError as exc:
        raise ValueError(f"bad shift {text!r}; expected 'a,b' with rationals like 2/3") from exc


# --------------------------------------------------------------------------
# rational shifts


@dataclass(frozen=True)
class DenominatorForm:
    """x = p/q with gcd(p, q) = 1 in Z[xi] and q canonical."""

    p: EisensteinInt
    q: EisensteinInt

    @property
    def value(self) -> EisensteinRational:
        return self.p / self.q

    def to_json(self) -> dict:
        return {"p": self.p.to_json(), "q": self.q.to_json()}


def to_denominator_form(x) -> DenominatorForm:
    x = as_point(x)
    p, q = x.num, EisensteinInt(x.den)
    g = gcd(p, q)
    p, q = p.exact_div(g), q.exact_div(g)
    eta, qc = canonical_associate(q)
    return DenominatorForm(eta.value * p, qc)


def _eps_z_minus_zbar(r: CoincidenceIsometry) -> EisensteinInt:
    return r.eps.value * r.z - r.z.conj()


def ez_barz_member(r: CoincidenceIsometry, x) -> bool:
    """Direct membership test of R in OC(x + Z[xi]) for a rational shift x."""
    x = as_point(x)
    if r.reflect:
        t = EisensteinRational(r.eps.value * r.z) * x.conj() - x * r.z.conj()
    else:
        t = x * _eps_z_minus_zbar(r)
    return t.is_integral()


def soc_member(r: CoincidenceIsometry, x) -> bool:
    """R_{z,eps} in SOC(x + Z[xi]) iff the denominator q of x divides eps*z - conj(z)."""
    if r.reflect:
        raise ValueError("soc_member expects a rotation")
    return to_denominator_form(x).q.divides(_eps_z_minus_zbar(r))


def oc_member(t: CoincidenceIsometry, x) -> bool:
    if not t.reflect:
        raise ValueError("oc_member expects a reflection")
    return ez_barz_member(t, x)


def is_member(r: CoincidenceIsometry, x) -> bool:
    return oc_member(r, x) if r.reflect else soc_member(r, x)


# units for which T_{1,eps} is a symmetry of x + Z[xi]
_REFLECTION_CASES = (
    (lambda a, b: b, Unit.from_value(ONE)),
    (lambda a, b: a - b, Unit.from_value(XI)),
    (lambda a, b: a, Unit.from_value(EisensteinInt(-1, -1))),  # xi^2
    (lambda a, b: -2 * a + b, Unit.from_value(EisensteinInt(-1))),
    (lambda a, b: a + b, Unit.from_value(EisensteinInt(0, -1))),  # -xi
    (lambda a, b: a - 2 * b, Unit.from_value(EisensteinInt(1, 1))),  # -xi^2
)


def reflection_unit(x) -> Unit | None:
    """eps such that T_{1,eps} in OC(x + Z[xi]) by the congruence table, or None.

    Several rows can match; any of them generates the same OC.  The last
    matching row is returned.
    """
    a, b = as_point(x).coords()
    for cond, eps in reversed(_REFLECTION_CASES):
        if cond(a, b).denominator == 1:
            return eps
    return None


def _admissible(rm: int, rn: int, k: int) -> bool:
    # residue class mod k that contains coincidence numerators
    if math.gcd(rm, rn, k) != 1:
        return False
    return k % 3 != 0 or (rm + rn) % 3 != 0


def _ideal_modulus(q: EisensteinInt) -> int:
    """Smallest positive rational integer divisible by q."""
    c = q.content()
    prim = EisensteinInt(q.m // c, q.n // c)
    return c * prim.norm()


# beyond this modulus the residue scan is skipped
MAX_RESIDUE_MODULUS = 400


def unit_status(x, reflect: bool = False) -> dict[int, str]:
    """For each unit k classify {R_{z,eps_k}} ∩ OC(x+Z[xi]) as 'all', 'none' or 'partial'.

    The membership condition only depends on z modulo a rational integer K
    (K = smallest integer in (q) for rotations, the rational denominator of x
    for reflections), so it suffices to scan the residue classes mod K that
    contain numerators.  Returns 'unknown' when K exceeds MAX_RESIDUE_MODULUS.
    """
    x = as_point(x)
    if reflect:
        K = x.den
        P = x.num
        Pb = P.conj()

        def ok(eps: EisensteinInt, z: EisensteinInt) -> bool:
            t = eps * z * Pb - z.conj() * P
            return t.m % K == 0 and t.n % K == 0
    else:
        q = to_denominator_form(x).q
        K = _ideal_modulus(q)
        qb, nq = q.conj(), q.norm()

        def ok(eps: EisensteinInt, z: EisensteinInt) -> bool:
            t = (eps * z - z.conj()) * qb
            return t.m % nq == 0 and t.n % nq == 0

    out = {}
    for u in UNITS:
        e = u.value
        if K == 1 or (ok(e, ONE) and ok(e, XI)):
            # the condition is Z-linear in z, so holding on a basis means it always holds
            out[u.k] = "all"
            continue
        if K > MAX_RESIDUE_MODULUS:
            out[u.k] = "unknown"
            continue
        hit = miss = False
        for rm in range(K):
            for rn in range(K):
                if not _admissible(rm, rn, K):
                    continue
                if ok(e, EisensteinInt(rm, rn)):
                    hit = True
                else:
                    miss = True
                if hit and miss:
                    break
            if hit and miss:
                break
        out[u.k] = "partial" if hit and miss else ("all" if hit else "none")
    return out


@dataclass(frozen=True)
class SocDescription:
    denominator: DenominatorForm
    status: dict  # unit k -> 'all' | 'none' | 'partial' | 'unknown'

    @property
    def is_unit_set(self) -> bool:
        return all(s in ("all", "none") for s in self.status.values())

    @property
    def units(self) -> tuple[Unit, ...]:
        return tuple(Unit(k) for k, s in sorted(self.status.items()) if s == "all")

    @property
    def structure(self) -> str | None:
        if not self.is_unit_set:
            return None
        return f"C{len(self.units)} x Z^(aleph_0)"

    def predicate(self) -> str:
        return f"R_(z,eps) in SOC(x+Γ) iff ({self.denominator.q}) | (eps*z - conj(z))"

    def to_json(self) -> dict:
        return {
            "denominator": self.denominator.to_json(),
            "unit_status": {str(k): s for k, s in sorted(self.status.items())},
            "units": [u.k for u in self.units] if self.is_unit_set else None,
            "structure": self.structure,
            "predicate": self.predicate(),
        }


def soc_unit_set(x) -> SocDescription:
    return SocDescription(to_denominator_form(x), unit_status(x))


def is_group_certified(x) -> bool:
    """Sufficient conditions for OC(x + Z[xi]) to be a group.

    True when no rational prime below N(q) is 1 mod 3, or when a symmetry
    reflection T_{1,eps} is available.  False only means "not certified".
    """
    q = to_denominator_form(x).q
    if all(p % 3 != 1 for p in factorint(q.norm())):
        return True
    return reflection_unit(x) is not None


# --------------------------------------------------------------------------
# OC descriptions


@dataclass(frozen=True)
class OcDescription:
    kind: str
    units: tuple[Unit, ...] = ()
    reflection: CoincidenceIsometry | None = None
    certified_group: bool = True
    elements: tuple[CoincidenceIsometry, ...] | None = None
    soc: SocDescription | None = None
    reflection_status: dict | None = None

    def to_json(self) -> dict:
        d = {
            "kind": self.kind,
            "units": [u.k for u in self.units],
            "reflection": self.reflection.to_json() if self.reflection else None,
            "certified_group": self.certified_group,
        }
        if self.elements is not None:
            d["elements"] = [r.to_json() for r in self.elements]
        if self.soc is not None:
            d["soc"] = self.soc.to_json()
        if self.reflection_status is not None:
            d["reflection_unit_status"] = {str(k): s for k, s in sorted(self.reflection_status.items())}
        return d


def _finite_group(*gens: CoincidenceIsometry) -> OcDescription:
    if not gens:
        return OcDescription("trivial", units=(Unit(0),), elements=(IDENTITY,))
    (t,) = gens
    return OcDescription("single-reflection", units=(Unit(0),), reflection=t, elements=(IDENTITY, t))


def oc_group_irrational(x: IrrationalShift) -> OcDescription:
    """OC(x + Z[xi]) when a or b is irrational: a group of order at most two."""
    if isinstance(x, IrrationalA):
        if x.b.denominator == 1:
            return _finite_group(CoincidenceIsometry(reflect=True))
        return _finite_group()
    if isinstance(x, IrrationalB):
        if x.a.denominator == 1:
            return _finite_group(CoincidenceIsometry(eps=Unit.from_value(EisensteinInt(-1, -1)), reflect=True))
        return _finite_group()
    if isinstance(x, BothIndependent):
        return _finite_group()
    if isinstance(x, AffinelyRelated):
        if x.q2 % x.q1 != 0:
            return _finite_group()
        p2, q2 = x.p2, x.q2
        if (p2 * q2) % 3 in (0, 1):
            z, eps = EisensteinInt(p2, q2), Unit.from_value(ONE)
        else:
            z = EisensteinInt((2 * q2 - p2) // 3, (q2 - 2 * p2) // 3)
            eps = Unit.from_value(EisensteinInt(-1))
        return _finite_group(CoincidenceIsometry.from_numerator(z, eps, reflect=True))
    raise TypeError(f"not an irrational shift: {x!r}")


def oc_description(x: ShiftSpec) -> OcDescription:
    if not isinstance(x, RationalShift) and not isinstance(x, EisensteinRational):
        return oc_group_irrational(x)
    soc = soc_unit_set(x)
    refl = unit_status(x, reflect=True)
    certified = is_group_certified(x)
    eps = reflection_unit(x)
    t = CoincidenceIsometry(eps=eps, reflect=True) if eps is not None else None
    if t is None:
        for k, s in sorted(refl.items()):
            if s == "all":
                t = CoincidenceIsometry(eps=Unit(k), reflect=True)
                break
    common = dict(units=soc.units, reflection=t, certified_group=certified, soc=soc, reflection_status=refl)
    if soc.is_unit_set and len(soc.units) == 6 and all(s == "all" for s in refl.values()):
        kind = "full-oc"
    elif soc.is_unit_set and t is not None:
        kind = "rotation-subgroup-with-reflection"
    elif soc.is_unit_set and all(s == "none" for s in refl.values()):
        kind = "rotation-subgroup-only"
    else:
        kind = "membership-predicate" if certified else "not-certified-group"
    return OcDescription(kind, **common)


# --------------------------------------------------------------------------
# shifted CSLs


@dataclass(frozen=True)
class CosetCsl:
    """The coset ``shift + z Z[xi]``."""

    shift: EisensteinRational
    z: EisensteinInt

    @property
    def index(self) -> int:
        return self.z.norm()

    def __contains__(self, y) -> bool:
        return ((EisensteinRational.coerce(y) - self.shift) / self.z).is_integral()

    def to_json(self) -> dict:
        return {"shift": self.shift.to_json(), "z": self.z.to_json()}


def coset_offset(y, r: CoincidenceIsometry) -> EisensteinInt:
    """Return l in Z[xi] with y in l + R Z[xi].

    Uses Z[xi] + R Z[xi] = (1/conj(z)) Z[xi]: w = conj(z)*y is integral and
    w = conj(z)*l + z*g is solved from a Bezout identity for (conj(z), z).
    """
    y = EisensteinRational.coerce(y)
    zb = r.z.conj()
    w = y * zb
    if not w.is_integral():
        raise ValueError(f"{y} is not in Γ + RΓ for {r}")
    g, s, _ = xgcd(zb, r.z)
    if g != ONE:
        raise AssertionError(f"numerator {r.z} is not coprime to its conjugate")
    return (s * w.num) % r.z


def shifted_csl(r: CoincidenceIsometry, x) -> CosetCsl:
    """(x + Γ) ∩ R(x + Γ) as the coset (x + l) + z Γ."""
    x = as_point(x)
    if not ez_barz_member(r, x):
        raise ValueError(f"{r} is not a coincidence isometry of x + Γ for x = {x}")
    l = coset_offset(r.apply(x) - x, r)
    return CosetCsl(x + l, r.z)


# --------------------------------------------------------------------------
# symbolic (irrational) shifts


@dataclass(frozen=True)
class SymbolicShift:
    """x = base + sum_i s_i * directions[i] with 1, s_1, ..., s_k rationally independent reals."""

    base: EisensteinRational
    directions: tuple[EisensteinRational, ...] = field(default=())


def symbolic(x: ShiftSpec) -> SymbolicShift:
    if isinstance(x, RationalShift):
        return SymbolicShift(x.point)
    if isinstance(x, IrrationalA):
        return SymbolicShift(EisensteinRational.from_coords(0, x.b), (EisensteinRational(ONE),))
    if isinstance(x, IrrationalB):
        return SymbolicShift(EisensteinRational.from_coords(x.a, 0), (EisensteinRational(XI),))
    if isinstance(x, BothIndependent):
        return SymbolicShift(EisensteinRational(EisensteinInt(0)), (EisensteinRational(ONE), EisensteinRational(XI)))
    if isinstance(x, AffinelyRelated):
        # a + b xi = p1/q1 + b (p2/q2 + xi)
        return SymbolicShift(
            EisensteinRational.from_coords(Fraction(x.p1, x.q1), 0),
            (EisensteinRational.from_coords(Fraction(x.p2, x.q2), 1),),
        )
    raise TypeError(f"unknown shift {x!r}")


def symbolic_member(r: CoincidenceIsometry, x: SymbolicShift | ShiftSpec) -> bool:
    """Exact test of R in OC(x + Γ) for a symbolic shift.

    R x - x is real-linear in x; it lies in (1/conj(z))Γ only if the image of
    every irrational direction vanishes and the rational part is in range.
    """
    s = x if isinstance(x, SymbolicShift) else symbolic(x)
    ez = EisensteinRational(r.eps.value * r.z)
    zb = r.z.conj()

    def f(y: EisensteinRational) -> EisensteinRational:
        if r.reflect:
            return ez * y.conj() - y * zb
        return y * (ez - zb)

    if any(f(d) for d in s.directions):
        return False
    return f(s.base).is_integral()


# --------------------------------------------------------------------------
# fundamental domain {a + b xi : 0 <= 4b <= 2a <= b + 1}


def in_fundamental_domain(x) -> bool:
    a, b = as_point(x).coords()
    return 0 <= 4 * b <= 2 * a <= b + 1


def _point_symmetries():
    for reflect in (False, True):
        for u in UNITS:
            yield u, reflect


def reduce_to_fundamental_domain(x) -> tuple[EisensteinRational, Unit, bool, EisensteinInt]:
    """Map x into D by a symmetry of Γ.

    Returns ``(y, u, reflect, g)`` with ``y = u * (conj(x) if reflect else x) - g``.
    """
    x = as_point(x)
    for u, reflect in _point_symmetries():
        y = u.value * (x.conj() if reflect else x)
        a, b = y.coords()
        fa, fb = math.floor(a), math.floor(b)
        for i in range(fa - 1, fa + 3):
            for j in range(fb - 1, fb + 3):
                g = EisensteinInt(i, j)
                cand = y - g
                if in_fundamental_domain(cand):
                    return cand, u, reflect, g
    raise AssertionError(f"no image of {x} in the fundamental domain")
