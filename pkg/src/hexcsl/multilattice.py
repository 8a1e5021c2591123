"""Coincidences of multilattices L = ∪_k (x_k + Γ) and shifted multilattices x + L.

The sigma-set of R collects the coset pairs (j, k) for which
``R x_j - x_k`` lies in ``Γ + RΓ``; every such pair contributes one coset of
the CSL ``z Γ`` to ``L ∩ RL`` and the index is ``m / |sigma| * N(z)``.

Membership in ``Γ + RΓ`` is decided via ``Γ + RΓ = (1/conj(z)) Γ``, which
holds because z and conj(z) are coprime for every coincidence numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coincidence import CoincidenceIsometry
from .eisenstein import EisensteinInt, EisensteinRational
from .shifted import CosetCsl, coset_offset, is_member

HONEYCOMB_SHIFT = EisensteinRational(EisensteinInt(2, 1), 3)  # 1/(1 - xi)


@dataclass(frozen=True)
class Multilattice:
    shifts: tuple[EisensteinRational, ...]

    def __post_init__(self) -> None:
        shifts = tuple(EisensteinRational.coerce(s) for s in self.shifts)
        if not shifts or shifts[0]:
            raise ValueError("a multilattice must start with the shift 0")
        for i in range(len(shifts)):
            for j in range(i):
                if (shifts[i] - shifts[j]).is_integral():
                    raise ValueError(f"shifts {shifts[j]} and {shifts[i]} differ by a lattice vector")
        object.__setattr__(self, "shifts", shifts)

    @property
    def m(self) -> int:
        return len(self.shifts)

    def to_json(self) -> dict:
        return {"shifts": [s.to_json() for s in self.shifts]}


def honeycomb() -> Multilattice:
    """The hexagonal packing Γ ∪ (x + Γ), x = 1/(1 - xi) = (2 + xi)/3."""
    return Multilattice((EisensteinRational(EisensteinInt(0)), HONEYCOMB_SHIFT))


def shifted_honeycomb() -> tuple[EisensteinRational, Multilattice]:
    """(x, L) with L = Γ ∪ (-2x + Γ), so that x + L = (x + Γ) ∪ (-x + Γ) is centred on a hexagon."""
    x = HONEYCOMB_SHIFT
    return x, Multilattice((EisensteinRational(EisensteinInt(0)), -2 * x))


def in_gamma_plus_rgamma(y, r: CoincidenceIsometry) -> bool:
    return (EisensteinRational.coerce(y) * r.z.conj()).is_integral()


@dataclass(frozen=True)
class SigmaSet:
    pairs: frozenset[tuple[int, int]]
    labels: tuple[EisensteinRational, ...]  # the (possibly shifted) coset shifts the indices refer to

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def labelled(self) -> set[tuple[EisensteinRational, EisensteinRational]]:
        return {(self.labels[j], self.labels[k]) for j, k in self.pairs}

    def to_json(self) -> list:
        return [list(p) for p in sorted(self.pairs)]


@dataclass(frozen=True)
class Csml:
    z: EisensteinInt
    components: tuple[CosetCsl, ...]
    index: Fraction

    def __contains__(self, y) -> bool:
        return any(y in c for c in self.components)

    def to_json(self) -> dict:
        return {
            "z": self.z.to_json(),
            "components": [{"shift": c.shift.to_json()} for c in self.components],
            "index_num": self.index.numerator,
            "index_den": self.index.denominator,
        }


def _labels(x, lat: Multilattice) -> tuple[EisensteinRational, ...]:
    x = EisensteinRational.coerce(x)
    return tuple(x + s for s in lat.shifts)


def shifted_sigma(x, lat: Multilattice, r: CoincidenceIsometry) -> SigmaSet:
    """Pairs (j, k) with R(x + x_j) - (x + x_k) in Γ + RΓ."""
    labels = _labels(x, lat)
    images = [r.apply(v) for v in labels]
    pairs = frozenset(
        (j, k)
        for j in range(lat.m)
        for k in range(lat.m)
        if in_gamma_plus_rgamma(images[j] - labels[k], r)
    )
    return SigmaSet(pairs, labels)


def sigma(lat: Multilattice, r: CoincidenceIsometry) -> SigmaSet:
    return shifted_sigma(0, lat, r)


def shifted_multilattice_index(x, lat: Multilattice, r: CoincidenceIsometry) -> Fraction:
    s = shifted_sigma(x, lat, r)
    if not s.pairs:
        raise ValueError(f"{r} is not a coincidence isometry of x + L")
    return Fraction(lat.m, len(s)) * r.z.norm()


def multilattice_index(lat: Multilattice, r: CoincidenceIsometry) -> Fraction:
    return shifted_multilattice_index(0, lat, r)


def shifted_csml(x, lat: Multilattice, r: CoincidenceIsometry) -> Csml:
    """(x + L) ∩ R(x + L) as a union of cosets of z Γ, one per sigma pair."""
    s = shifted_sigma(x, lat, r)
    if not s.pairs:
        raise ValueError(f"{r} is not a coincidence isometry of x + L")
    comps = []
    for j, k in sorted(s.pairs, key=lambda p: (p[1], p[0])):
        l = coset_offset(r.apply(s.labels[j]) - s.labels[k], r)
        comps.append(CosetCsl(s.labels[k] + l, r.z))
    return Csml(r.z, tuple(comps), Fraction(lat.m, len(s)) * r.z.norm())


def csml(lat: Multilattice, r: CoincidenceIsometry) -> Csml:
    return shifted_csml(0, lat, r)


def honeycomb_index(r: CoincidenceIsometry) -> int:
    """Coincidence index of R for the hexagonal packing (closed form)."""
    n = r.z.norm()
    return n if is_member(r, HONEYCOMB_SHIFT) else 2 * n


def shifted_honeycomb_index(r: CoincidenceIsometry) -> int:
    """Every R in OC(Γ) is a coincidence of the hexagon-centred packing, with index N(z)."""
    return r.z.norm()
