"""Exact arithmetic in the Eisenstein integers Z[xi] and the field Q(xi).

``xi = exp(2*pi*i/3)`` satisfies ``xi**2 + xi + 1 == 0``.  An element is stored
as the coefficient pair ``(m, n)`` of ``m + n*xi``; all arithmetic is done on
Python ints, so nothing ever overflows or rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import factorint, isprime

IntLike = Union[int, "EisensteinInt"]


@dataclass(frozen=True)
class EisensteinInt:
    m: int
    n: int = 0

    def __post_init__(self) -> None:
        # bool is an int subclass; reject it and anything non-integral
        for c in (self.m, self.n):
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {c!r}")

    @classmethod
    def coerce(cls, x: IntLike) -> EisensteinInt:
        if isinstance(x, EisensteinInt):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x, 0)
        raise TypeError(f"cannot convert {x!r} to EisensteinInt")

    def __add__(self, other: IntLike) -> EisensteinInt:
        try:
            o = EisensteinInt.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinInt(self.m + o.m, self.n + o.n)

    __radd__ = __add__

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.m, -self.n)

    def __sub__(self, other: IntLike) -> EisensteinInt:
        try:
            o = EisensteinInt.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinInt(self.m - o.m, self.n - o.n)

    def __rsub__(self, other: IntLike) -> EisensteinInt:
        return EisensteinInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> EisensteinInt:
        try:
            o = EisensteinInt.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.m, self.n, o.m, o.n
        # (a + b xi)(c + d xi) with xi^2 = -1 - xi
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> EisensteinInt:
        if k < 0:
            raise ValueError("negative powers leave Z[xi]; use EisensteinRational")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.m or self.n)

    def conj(self) -> EisensteinInt:
        return EisensteinInt(self.m - self.n, -self.n)

    def norm(self) -> int:
        return (self.m - self.n) ** 2 + self.m * self.n

    def content(self) -> int:
        """gcd of the two coefficients (0 for the zero element)."""
        return math.gcd(self.m, self.n)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def __divmod__(self, other: IntLike) -> tuple[EisensteinInt, EisensteinInt]:
        b = EisensteinInt.coerce(other)
        nb = b.norm()
        if nb == 0:
            raise ZeroDivisionError("division by zero in Z[xi]")
        # self / b = self * conj(b) / N(b); round each coordinate, ties to -inf
        t = self * b.conj()
        q = EisensteinInt(_round_half_down(t.m, nb), _round_half_down(t.n, nb))
        return q, self - q * b

    def __floordiv__(self, other: IntLike) -> EisensteinInt:
        return divmod(self, other)[0]

    def __mod__(self, other: IntLike) -> EisensteinInt:
        return divmod(self, other)[1]

    def __truediv__(self, other: IntLike | EisensteinRational) -> EisensteinRational:
        return EisensteinRational(self) / other

    def __rtruediv__(self, other: IntLike) -> EisensteinRational:
        return EisensteinRational(EisensteinInt.coerce(other)) / self

    def divides(self, other: IntLike) -> bool:
        if not self:
            return not EisensteinInt.coerce(other)
        return not (EisensteinInt.coerce(other) % self)

    def exact_div(self, other: IntLike) -> EisensteinInt:
        """Return ``self / other``, raising ``ValueError`` unless it lies in Z[xi]."""
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def to_complex(self) -> complex:
        # display only
        return complex(self.m - self.n / 2, self.n * math.sqrt(3) / 2)

    def arg_degrees(self) -> float:
        return math.degrees(math.atan2(self.n * math.sqrt(3) / 2, self.m - self.n / 2))

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, d: dict) -> EisensteinInt:
        return cls(int(d["m"]), int(d["n"]))

    def __str__(self) -> str:
        return _format_pair(self.m, self.n)


def _round_half_down(u: int, d: int) -> int:
    """Nearest integer to u/d (d > 0), ties rounded toward -infinity."""
    return -((d - 2 * u) // (2 * d))


def _format_pair(m, n) -> str:
    if not n:
        return str(m)
    coef = {1: "", -1: "-"}.get(n, str(n))
    if not m:
        return f"{coef}ξ"
    sign = "+" if n > 0 else "-"
    return f"{m}{sign}{str(abs(n)) if abs(n) != 1 else ''}ξ"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
XI = EisensteinInt(0, 1)
RAMIFIED = EisensteinInt(2, 1)  # canonical associate of 1 - xi

# (-xi^2)^k = exp(i k pi / 3), k = 0..5
_UNIT_VALUES = (
    EisensteinInt(1, 0),
    EisensteinInt(1, 1),
    EisensteinInt(0, 1),
    EisensteinInt(-1, 0),
    EisensteinInt(-1, -1),
    EisensteinInt(0, -1),
)


@dataclass(frozen=True)
class Unit:
    """The unit ``(-xi^2)**k``, i.e. rotation by ``60*k`` degrees."""

    k: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % 6)

    @property
    def value(self) -> EisensteinInt:
        return _UNIT_VALUES[self.k]

    @classmethod
    def from_value(cls, u: IntLike) -> Unit:
        u = EisensteinInt.coerce(u)
        try:
            return cls(_UNIT_VALUES.index(u))
        except ValueError:
            raise ValueError(f"{u} is not a unit of Z[xi]") from None

    def __mul__(self, other):
        if isinstance(other, Unit):
            return Unit(self.k + other.k)
        if isinstance(other, (int, EisensteinInt)):
            return self.value * other
        if isinstance(other, EisensteinRational):
            return EisensteinRational(self.value) * other
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Unit:
        return Unit(self.k * e)

    def inverse(self) -> Unit:
        return Unit(-self.k)

    # units lie on the unit circle, so conjugation is inversion
    conj = inverse

    def is_square(self) -> bool:
        """True for 1, xi, xi^2 (the squares of units)."""
        return self.k % 2 == 0

    def __str__(self) -> str:
        return str(self.value)


UNITS = tuple(Unit(k) for k in range(6))


def norm(g: IntLike) -> int:
    return EisensteinInt.coerce(g).norm()


def conj(g: IntLike) -> EisensteinInt:
    return EisensteinInt.coerce(g).conj()


def is_canonical(g: EisensteinInt) -> bool:
    # argument in [0, 60 deg) <=> g = a + b(1+xi) with a > 0, b >= 0
    return g.m - g.n > 0 and g.n >= 0


def canonical_associate(g: IntLike) -> tuple[Unit, EisensteinInt]:
    """Return ``(u, u*g)`` where ``u*g`` is the associate with argument in [0, 60)."""
    g = EisensteinInt.coerce(g)
    if not g:
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        h = u.value * g
        if is_canonical(h):
            return u, h
    raise AssertionError("unreachable: exactly one associate is canonical")


def canonical(g: IntLike) -> EisensteinInt:
    return canonical_associate(g)[1]


def gcd(a: IntLike, b: IntLike) -> EisensteinInt:
    return xgcd(a, b)[0]


def xgcd(a: IntLike, b: IntLike) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    """Extended Euclid: ``(g, s, t)`` with ``s*a + t*b == g``, g canonical."""
    a, b = EisensteinInt.coerce(a), EisensteinInt.coerce(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u, g = canonical_associate(r0)
    return g, u.value * s0, u.value * t0


@lru_cache(maxsize=None)
def split_prime(p: int) -> EisensteinInt:
    """Return the distinguished prime factor omega_p of a rational prime p = 1 mod 3.

    omega_p is canonical and, of the two canonical conjugate factors, the one
    with argument below 30 degrees (e.g. 3+xi for p = 7).
    """
    if p % 3 != 1 or not isprime(p):
        raise ValueError(f"{p} is not a rational prime congruent to 1 mod 3")
    g = 2
    while (t := pow(g, (p - 1) // 3, p)) == 1:
        g += 1
    # t is a primitive cube root of unity mod p, so (p, t - xi) is a prime ideal over p
    w = gcd(p, EisensteinInt(t, -1))
    if w.norm() != p:
        raise AssertionError(f"splitting {p} failed: got {w}")
    w_bar = canonical(w.conj())
    return w if 2 * w.n < w.m else w_bar


def prime_kind(p: int) -> str:
    if p == 3:
        return "ramified"
    return "split" if p % 3 == 1 else "inert"


@dataclass(frozen=True)
class PrimeFactor:
    prime: EisensteinInt
    exponent: int
    kind: str  # "ramified" | "inert" | "split"

    @property
    def rational_prime(self) -> int:
        """The rational prime below this factor."""
        if self.kind == "inert":
            return self.prime.m
        return self.prime.norm()


@dataclass(frozen=True)
class PrimeFactorization:
    unit: Unit
    factors: tuple[PrimeFactor, ...]

    def product(self) -> EisensteinInt:
        out = self.unit.value
        for f in self.factors:
            out = out * f.prime ** f.exponent
        return out

    def __str__(self) -> str:
        parts = [f"({f.prime})" + (f"^{f.exponent}" if f.exponent > 1 else "") for f in self.factors]
        head = "" if self.unit.k == 0 else f"({self.unit})"
        return "·".join(([head] if head else []) + parts) or "1"


def factor(g: IntLike) -> PrimeFactorization:
    """Factor g into a unit times canonical primes of Z[xi]."""
    g = EisensteinInt.coerce(g)
    if not g:
        raise ValueError("cannot factor zero")
    rest = g
    factors: list[PrimeFactor] = []

    def strip(pi: EisensteinInt, kind: str) -> None:
        nonlocal rest
        e = 0
        while True:
            q, r = divmod(rest, pi)
            if r:
                break
            rest, e = q, e + 1
        if e:
            factors.append(PrimeFactor(pi, e, kind))

    for p in sorted(factorint(g.norm())):
        kind = prime_kind(p)
        if kind == "ramified":
            strip(RAMIFIED, kind)
        elif kind == "inert":
            strip(EisensteinInt(p, 0), kind)
        else:
            w = split_prime(p)
            strip(w, kind)
            strip(canonical(w.conj()), kind)
    return PrimeFactorization(Unit.from_value(rest), tuple(factors))


@dataclass(frozen=True)
class EisensteinRational:
    """``num / den`` with ``num`` in Z[xi] and ``den`` a positive int, kept reduced."""

    num: EisensteinInt
    den: int = 1

    def __post_init__(self) -> None:
        num = EisensteinInt.coerce(self.num)
        den = self.den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.m, num.n, den)
        object.__setattr__(self, "num", EisensteinInt(num.m // g, num.n // g))
        object.__setattr__(self, "den", den // g)

    @classmethod
    def coerce(cls, x) -> EisensteinRational:
        if isinstance(x, EisensteinRational):
            return x
        if isinstance(x, Fraction):
            return cls(EisensteinInt(x.numerator), x.denominator)
        if isinstance(x, Unit):
            return cls(x.value)
        return cls(EisensteinInt.coerce(x))

    @classmethod
    def from_coords(cls, a, b) -> EisensteinRational:
        """Build ``a + b*xi`` from rationals (int, Fraction or 'p/q' strings)."""
        a, b = Fraction(a), Fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        return cls(EisensteinInt(int(a * d), int(b * d)), d)

    def coords(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.num.m, self.den), Fraction(self.num.n, self.den)

    def __add__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> EisensteinRational:
        return EisensteinRational(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return EisensteinRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.num.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(xi)")
        # 1/(a/d) = d * conj(a) / N(a)
        return EisensteinRational(self.num * o.num.conj() * o.den, self.den * n)

    def __rtruediv__(self, other):
        return EisensteinRational.coerce(other) / self

    def __bool__(self) -> bool:
        return bool(self.num)

    def conj(self) -> EisensteinRational:
        return EisensteinRational(self.num.conj(), self.den)

    def norm(self) -> Fraction:
        """Squared length a^2 - ab + b^2 as an exact rational."""
        return Fraction(self.num.norm(), self.den * self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_int(self) -> EisensteinInt:
        if self.den != 1:
            raise ValueError(f"{self} is not in Z[xi]")
        return self.num

    def to_complex(self) -> complex:
        return self.num.to_complex() / self.den

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den}

    @classmethod
    def from_json(cls, d: dict) -> EisensteinRational:
        return cls(EisensteinInt.from_json(d["num"]), int(d["den"]))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/{self.den}"
