"""Coincidence isometries and CSLs of the hexagonal lattice Z[xi].

A coincidence rotation is multiplication by ``eps * z / conj(z)`` where the
numerator ``z`` is a primitive Eisenstein integer with ``3 ∤ N(z)`` and
``eps`` is one of the six units.  Its CSL is the principal ideal ``z Z[xi]``
of index ``N(z)``.  A coincidence reflection composes such a rotation with
complex conjugation.

Numerators are always stored as canonical associates; the unit ``eps`` is
defined relative to that representative.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from sympy import factorint

from .eisenstein import (
    ONE,
    EisensteinInt,
    EisensteinRational,
    Unit,
    UNITS,
    canonical_associate,
    factor,
    gcd,
    is_canonical,
    split_prime,
)


def is_numerator(z: EisensteinInt) -> bool:
    """True iff the primitive element z is the numerator of a coincidence rotation."""
    if not z.is_primitive():
        raise ValueError(f"{z} is not primitive")
    return (z.m + z.n) % 3 != 0


@dataclass(frozen=True)
class CoincidenceIsometry:
    """``y -> eps*z*y/conj(z)``, or ``y -> eps*z*conj(y)/conj(z)`` if ``reflect``."""

    z: EisensteinInt = ONE
    eps: Unit = Unit(0)
    reflect: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.eps, Unit):
            object.__setattr__(self, "eps", Unit(self.eps))
        if not is_canonical(self.z):
            raise ValueError(f"numerator {self.z} is not a canonical associate")
        if not is_numerator(self.z):
            raise ValueError(f"{self.z} is not a coincidence numerator (3 | N(z))")

    @classmethod
    def from_numerator(cls, z: EisensteinInt, eps: Unit | int = 0, reflect: bool = False) -> CoincidenceIsometry:
        """Build from any associate of the numerator; eps is re-expressed for the canonical one."""
        eps = eps if isinstance(eps, Unit) else Unit(eps)
        eta, zc = canonical_associate(z)
        # (eta z)/conj(eta z) = eta^2 z/conj(z)
        return cls(zc, eps * eta.inverse() ** 2, reflect)

    @property
    def index(self) -> int:
        return self.z.norm()

    def value(self) -> EisensteinRational:
        """The unit-modulus multiplier eps*z/conj(z), exact."""
        return EisensteinRational(self.eps.value * self.z) / self.z.conj()

    def angle(self) -> float:
        """Rotation angle in degrees of the rotational part; display only."""
        a = math.degrees(math.atan2(*reversed(_xy(self.value()))))
        return 0.0 if abs(a) < 1e-12 else a

    def apply(self, y) -> EisensteinRational:
        y = EisensteinRational.coerce(y)
        if self.reflect:
            y = y.conj()
        return self.value() * y

    __call__ = apply

    def csl(self) -> Csl:
        return Csl(self.z)

    def __mul__(self, other: CoincidenceIsometry) -> CoincidenceIsometry:
        return compose(self, other)

    def inverse(self) -> CoincidenceIsometry:
        return inverse(self)

    def to_json(self) -> dict:
        return {"z": self.z.to_json(), "eps": self.eps.k, "reflect": self.reflect}

    @classmethod
    def from_json(cls, d: dict) -> CoincidenceIsometry:
        return cls(EisensteinInt.from_json(d["z"]), Unit(int(d["eps"])), bool(d["reflect"]))

    def __str__(self) -> str:
        kind = "T" if self.reflect else "R"
        return f"{kind}[z={self.z}, eps={self.eps}]"


IDENTITY = CoincidenceIsometry()
T_R = CoincidenceIsometry(reflect=True)


def _xy(y: EisensteinRational) -> tuple[float, float]:
    c = y.to_complex()
    return c.real, c.imag


@dataclass(frozen=True)
class Csl:
    """The coincidence site lattice ``z Z[xi]``."""

    z: EisensteinInt

    @property
    def index(self) -> int:
        return self.z.norm()

    def __contains__(self, y) -> bool:
        q = EisensteinRational.coerce(y) / self.z
        return q.is_integral()

    def to_json(self) -> dict:
        return {"z": self.z.to_json(), "index": self.index}


def csl_of(r: CoincidenceIsometry) -> Csl:
    return r.csl()


def index(r: CoincidenceIsometry) -> int:
    return r.index


@dataclass(frozen=True)
class ExponentVector:
    """``eps * prod_p (omega_p / conj(omega_p)) ** t_p`` with omega_p = split_prime(p)."""

    eps: Unit = Unit(0)
    t: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        t = self.t.items() if isinstance(self.t, Mapping) else self.t
        clean = tuple(sorted((int(p), int(e)) for p, e in t if e))
        for p, _ in clean:
            split_prime(p)  # validates p
        object.__setattr__(self, "t", clean)

    def as_dict(self) -> dict[int, int]:
        return dict(self.t)

    def __mul__(self, other: ExponentVector) -> ExponentVector:
        acc = Counter(self.as_dict())
        acc.update(other.as_dict())
        return ExponentVector(self.eps * other.eps, dict(acc))

    def conj(self) -> ExponentVector:
        return ExponentVector(self.eps.inverse(), {p: -e for p, e in self.t})

    def value(self) -> EisensteinRational:
        z = _raw_numerator(self.t)
        return EisensteinRational(self.eps.value * z) / z.conj()


def _raw_numerator(t) -> EisensteinInt:
    z = ONE
    for p, e in t:
        w = split_prime(p)
        z = z * (w ** e if e > 0 else w.conj() ** -e)
    return z


def numerator_from_exponents(v: ExponentVector | Mapping[int, int]) -> EisensteinInt:
    t = v.t if isinstance(v, ExponentVector) else ExponentVector(Unit(0), v).t
    return canonical_associate(_raw_numerator(t))[1]


def exponents_from_numerator(z: EisensteinInt) -> ExponentVector:
    """Exponent vector of the rotation ``z/conj(z)`` (i.e. R with eps = 1)."""
    if not z or not is_numerator(z):
        raise ValueError(f"{z} is not a coincidence numerator")
    t: dict[int, int] = {}
    for f in factor(z).factors:
        if f.kind != "split":
            raise ValueError(f"{z} has a non-split prime factor {f.prime}")
        p = f.rational_prime
        if p in t:
            raise ValueError(f"{z} is divisible by {p}")
        t[p] = f.exponent if f.prime == split_prime(p) else -f.exponent
    raw = _raw_numerator(sorted(t.items()))
    eta = Unit.from_value(z.exact_div(raw))
    return ExponentVector(eta ** 2, t)


def exponents_of(r: CoincidenceIsometry) -> ExponentVector:
    v = exponents_from_numerator(r.z)
    return ExponentVector(v.eps * r.eps, v.t)


def isometry_from_exponents(v: ExponentVector, reflect: bool = False) -> CoincidenceIsometry:
    raw = _raw_numerator(v.t)
    eta, z = canonical_associate(raw)
    return CoincidenceIsometry(z, v.eps * eta.inverse() ** 2, reflect)


def compose(r1: CoincidenceIsometry, r2: CoincidenceIsometry) -> CoincidenceIsometry:
    """``r1 ∘ r2`` (apply r2 first), computed on exponent vectors."""
    v1, v2 = exponents_of(r1), exponents_of(r2)
    if r1.reflect:
        # conj(u2 * y) = conj(u2) * conj(y)
        v2 = v2.conj()
    return isometry_from_exponents(v1 * v2, r1.reflect != r2.reflect)


def inverse(r: CoincidenceIsometry) -> CoincidenceIsometry:
    if r.reflect:
        return r  # every reflection is an involution
    return isometry_from_exponents(exponents_of(r).conj())


def isometry_from_value(u: EisensteinRational, reflect: bool = False) -> CoincidenceIsometry:
    """Recover (z, eps) from a unit-modulus multiplier ``u = eps*z/conj(z)``.

    Independent of the exponent-vector route; used to cross-check ``compose``.
    """
    if u.norm() != 1:
        raise ValueError(f"{u} does not have modulus 1")
    num, den = u.num, EisensteinInt(u.den)
    g = gcd(num, den)
    num, den = num.exact_div(g), den.exact_div(g)
    # now num = v*eps*z and den = v*conj(z) for a unit v
    eta, z = canonical_associate(den.conj())
    eps = u * z.conj() / z
    return CoincidenceIsometry(z, Unit.from_value(eps.to_int()), reflect)


def misorientation_angle(z: EisensteinInt) -> float:
    """Smallest |rotation angle| among R_{z,eps} over all six units, in degrees (display only)."""
    base = 2 * z.arg_degrees()
    return min(abs(((base + 60 * k + 180) % 360) - 180) for k in range(6))


def numerators(max_norm: int) -> list[EisensteinInt]:
    """All canonical coincidence numerators with norm <= max_norm, sorted by (norm, m, n)."""
    out = []
    # canonical z = a + b(1+xi) with a >= 1, b >= 0 and N = a^2 + ab + b^2
    a = 1
    while a * a <= max_norm:
        b = 0
        while a * a + a * b + b * b <= max_norm:
            z = EisensteinInt(a + b, b)
            if z.is_primitive() and is_numerator(z):
                out.append(z)
            b += 1
        a += 1
    out.sort(key=lambda z: (z.norm(), z.m, z.n))
    return out


def enumerate_csls(max_index: int) -> Iterator[tuple[Csl, int]]:
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    for z in numerators(max_index):
        yield Csl(z), z.norm()


def isometries(max_norm: int, reflections: bool = True) -> Iterator[CoincidenceIsometry]:
    """Every coincidence isometry whose CSL has index <= max_norm."""
    flags = (False, True) if reflections else (False,)
    for z in numerators(max_norm):
        for reflect in flags:
            for u in UNITS:
                yield CoincidenceIsometry(z, u, reflect)


def count_csls(m: int) -> int:
    """f(m): the number of CSLs of index m, from the Euler product."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = 1
    for p in factorint(m):
        if p % 3 != 1:
            return 0
        out *= 2
    return out


def count_rotations(m: int) -> int:
    return 6 * count_csls(m)


def dirichlet_coefficients(M: int) -> list[int]:
    """[f(1), ..., f(M)]."""
    if M < 1:
        raise ValueError("M must be >= 1")
    return [count_csls(m) for m in range(1, M + 1)]
