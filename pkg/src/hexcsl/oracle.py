"""Brute-force ground truth for the closed-form coincidence results.

Everything here works directly on coordinate pairs (a, b) meaning a + b*xi,
with its own multiplication and conjugation, and never calls the library's
ring arithmetic, CSL formulas or membership criteria.  Isometries are taken
apart into their raw data (z, eps, reflect) and turned into exact 2x2 rational
matrices.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

Pair = tuple  # (a, b) with int or Fraction entries

# ---------------------------------------------------------------------------
# private pair arithmetic


def _mul(x: Pair, y: Pair) -> Pair:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c - b * d)


def _conj(x: Pair) -> Pair:
    return (x[0] - x[1], -x[1])


def _sqlen(x: Pair):
    a, b = x
    return a * a - a * b + b * b


def _unit(k: int) -> Pair:
    u = (1, 0)
    for _ in range(k % 6):
        u = _mul(u, (1, 1))  # -xi^2 = 1 + xi
    return u


def _is_int_pair(x: Pair) -> bool:
    return all(Fraction(c).denominator == 1 for c in x)


@dataclass(frozen=True)
class Isometry:
    """Exact action on coordinates: y -> (cols @ y) / den."""

    cols: tuple[Pair, Pair]  # integer images of 1 and xi, scaled by den
    den: int

    def image(self, a, b) -> Pair:
        (p, q), (r, s) = self.cols
        return (Fraction(p * a + r * b, self.den), Fraction(q * a + s * b, self.den))

    def image_int(self, a: int, b: int) -> tuple[int, int]:
        """Numerators of the image (denominator self.den)."""
        (p, q), (r, s) = self.cols
        return p * a + r * b, q * a + s * b

    def inverse(self) -> Isometry:
        (p, q), (r, s) = self.cols
        det = p * s - q * r  # = +-den^2 for an isometry of the lattice
        # inverse of (M/den) is den * adj(M) / det
        inv = ((Fraction(s * self.den, det), Fraction(-q * self.den, det)),
               (Fraction(-r * self.den, det), Fraction(p * self.den, det)))
        d = math.lcm(*(c.denominator for col in inv for c in col))
        cols = tuple(tuple(int(c * d) for c in col) for col in inv)
        return Isometry(cols, d)


def isometry_of(r) -> Isometry:
    """Matrix of y -> eps*z*y/conj(z) (or with conj(y)), from the raw data of r."""
    z = (r.z.m, r.z.n)
    n = _sqlen(z)
    # 1/conj(z) = z / N(z)
    u = _mul(_mul(_unit(r.eps.k), z), z)
    img_xi = _mul(u, _conj((0, 1)) if r.reflect else (0, 1))
    return Isometry((u, img_xi), n)


# ---------------------------------------------------------------------------
# point patches


@dataclass(frozen=True)
class PointPatch:
    """Points (A/den, B/den) with squared length <= radius_sq."""

    den: int
    points: frozenset
    radius_sq: Fraction
    source: str = ""

    def rescaled(self, den: int) -> frozenset:
        f = den // self.den
        if f * self.den != den:
            raise ValueError("target denominator must be a multiple")
        return frozenset((a * f, b * f) for a, b in self.points)

    def rationals(self) -> set[tuple[Fraction, Fraction]]:
        return {(Fraction(a, self.den), Fraction(b, self.den)) for a, b in self.points}

    def __len__(self) -> int:
        return len(self.points)


def _coords(shift) -> tuple[Fraction, Fraction]:
    if hasattr(shift, "coords"):
        return shift.coords()
    if isinstance(shift, tuple):
        return Fraction(shift[0]), Fraction(shift[1])
    return Fraction(shift), Fraction(0)


def patch(shift, r) -> PointPatch:
    """All points of shift + Γ within distance r of the origin."""
    r2 = Fraction(r) ** 2
    if r2 <= 0:
        raise ValueError("radius must be positive")
    sa, sb = _coords(shift)
    d = math.lcm(sa.denominator, sb.denominator)
    A0, B0 = int(sa * d), int(sb * d)
    # a^2 - ab + b^2 >= 3/4 max(a, b)^2
    bound = math.isqrt(math.ceil(4 * r2 / 3)) + 2
    lo_m, hi_m = math.floor(-sa) - bound, math.ceil(-sa) + bound
    lo_n, hi_n = math.floor(-sb) - bound, math.ceil(-sb) + bound
    lim = r2 * d * d
    pts = set()
    for m in range(lo_m, hi_m + 1):
        A = A0 + m * d
        for n in range(lo_n, hi_n + 1):
            B = B0 + n * d
            if A * A - A * B + B * B <= lim:
                pts.add((A, B))
    return PointPatch(d, frozenset(pts), r2, f"{sa}+{sb}ξ + Γ")


def union(*patches: PointPatch) -> PointPatch:
    d = math.lcm(*(p.den for p in patches))
    pts = frozenset().union(*(p.rescaled(d) for p in patches))
    return PointPatch(d, pts, patches[0].radius_sq, " ∪ ".join(p.source for p in patches))


def transformed(p: PointPatch, iso: Isometry) -> PointPatch:
    """Image of a patch; a ball about the origin maps to itself."""
    pts = frozenset(iso.image_int(a, b) for a, b in p.points)
    return PointPatch(p.den * iso.den, pts, p.radius_sq, f"R({p.source})")


def brute_intersection(a: PointPatch, b: PointPatch) -> PointPatch:
    if a.radius_sq != b.radius_sq:
        raise ValueError("patches must share a radius")
    d = math.lcm(a.den, b.den)
    return PointPatch(d, a.rescaled(d) & b.rescaled(d), a.radius_sq, f"{a.source} ∩ {b.source}")


def same_points(a: PointPatch, b: PointPatch) -> bool:
    d = math.lcm(a.den, b.den)
    return a.rescaled(d) == b.rescaled(d)


def coset_patch(shift, z, r) -> PointPatch:
    """Points of shift + zΓ within radius r (z given as an (m, n) pair or object)."""
    zp = (z.m, z.n) if hasattr(z, "m") else tuple(z)
    n = _sqlen(zp)
    base = patch(shift, r)
    sa, sb = _coords(shift)
    A0, B0 = int(sa * base.den), int(sb * base.den)
    zb = _conj(zp)
    keep = set()
    for A, B in base.points:
        # (p - shift)/z = (p - shift) * conj(z) / N(z); p - shift is integral
        da, db = (A - A0) // base.den, (B - B0) // base.den
        t = _mul((da, db), zb)
        if t[0] % n == 0 and t[1] % n == 0:
            keep.add((A, B))
    return PointPatch(base.den, frozenset(keep), base.radius_sq, f"{shift}+({zp})Γ")


def isometry_patch_intersection(r, shift, radius) -> PointPatch:
    """(shift + Γ) ∩ R(shift + Γ) inside the ball."""
    p = patch(shift, radius)
    return brute_intersection(p, transformed(p, isometry_of(r)))


# ---------------------------------------------------------------------------
# counting


def brute_index(z) -> int:
    """[Γ : zΓ], by counting lattice points in a half-open fundamental cell of zΓ."""
    m, n = (z.m, z.n) if hasattr(z, "m") else z
    if not (m or n):
        raise ValueError("z must be nonzero")
    v1, v2 = (m, n), _mul((m, n), (0, 1))
    det = v1[0] * v2[1] - v1[1] * v2[0]
    sgn = 1 if det > 0 else -1
    det = abs(det)
    xs = [0, v1[0], v2[0], v1[0] + v2[0]]
    ys = [0, v1[1], v2[1], v1[1] + v2[1]]
    count = 0
    for a in range(min(xs), max(xs) + 1):
        for b in range(min(ys), max(ys) + 1):
            # solve (a, b) = s v1 + t v2 with the adjugate
            s = sgn * (v2[1] * a - v2[0] * b)
            t = sgn * (-v1[1] * a + v1[0] * b)
            if 0 <= s < det and 0 <= t < det:
                count += 1
    return count


def _canonical_pair(z: Pair) -> Pair:
    return min(_mul(_unit(k), z) for k in range(6))


def brute_numerators(m: int) -> set[Pair]:
    """Representatives (one per associate class) of numerators of norm m."""
    bound = math.isqrt(4 * m // 3 + 1) + 1
    found = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if _sqlen((a, b)) == m and math.gcd(a, b) == 1 and (a + b) % 3:
                found.add(_canonical_pair((a, b)))
    return found


def brute_count_csls(m: int) -> int:
    if m < 1:
        raise ValueError("m must be >= 1")
    return len(brute_numerators(m))


def _iso_period(iso: Isometry) -> int:
    inv = iso.inverse()
    return math.lcm(iso.den, inv.den)


def brute_coincidence_residues(r, shifts_from, shifts_to) -> tuple[int, list[tuple[int, Pair]]]:
    """Points p of ∪_k (to_k + Γ) with p in R(∪_j (from_j + Γ)), modulo KΓ.

    K is a period of the intersection (KΓ ⊂ Γ ∩ RΓ).  Returns (K, [(k, p)...]).
    """
    iso = isometry_of(r)
    inv = iso.inverse()
    K = _iso_period(iso)
    coords_from = [_coords(s) for s in shifts_from]
    coords_to = [_coords(s) for s in shifts_to]
    d = math.lcm(*(c.denominator for pair in coords_from + coords_to for c in pair))
    D = inv.den * d
    # everything scaled by d; preimages scaled by inv.den * d
    froms = [(int(fa * d) * inv.den, int(fb * d) * inv.den) for fa, fb in coords_from]
    hits = []
    for k, (sa, sb) in enumerate(coords_to):
        A0, B0 = int(sa * d), int(sb * d)
        for a in range(K):
            for b in range(K):
                qa, qb = inv.image_int(A0 + a * d, B0 + b * d)
                if any((qa - fa) % D == 0 and (qb - fb) % D == 0 for fa, fb in froms):
                    hits.append((k, (sa + a, sb + b)))
    return K, hits


def brute_member(r, shift) -> bool:
    """R in OC(x + Γ) iff (x + Γ) ∩ R(x + Γ) is nonempty."""
    _, hits = brute_coincidence_residues(r, [shift], [shift])
    return bool(hits)


@dataclass(frozen=True)
class IndexEstimate:
    ball_ratio: Fraction
    radius: Fraction
    exact: Fraction


def brute_multilattice_index(shifts, r, radius, x=0) -> IndexEstimate:
    """Density ratio of x + L to (x + L) ∩ R(x + L), by ball counts and exactly by residues."""
    xa, xb = _coords(x)
    labels = [(xa + a, xb + b) for a, b in (_coords(s) for s in shifts)]
    lp = union(*(patch(s, radius) for s in labels))
    inter = brute_intersection(lp, transformed(lp, isometry_of(r)))
    ratio = Fraction(len(lp), len(inter)) if len(inter) else Fraction(0)
    K, hits = brute_coincidence_residues(r, labels, labels)
    exact = Fraction(len(labels) * K * K, len(hits)) if hits else Fraction(0)
    return IndexEstimate(ratio, Fraction(radius), exact)


def brute_gamma_plus_rgamma(r) -> frozenset:
    """(Γ + RΓ)/Γ as a set of fractional coordinate pairs in [0, 1)^2."""
    iso = isometry_of(r)
    K = _iso_period(iso)
    out = set()
    for a in range(K):
        for b in range(K):
            p = iso.image(a, b)
            out.add((p[0] % 1, p[1] % 1))
    return frozenset(out)


def brute_in_gamma_plus_rgamma(y, residues: frozenset) -> bool:
    a, b = _coords(y)
    return (a % 1, b % 1) in residues


def rational_grid(max_den: int) -> list[tuple[Fraction, Fraction]]:
    """All a + b xi in [0,1)^2 with a, b having denominators <= max_den."""
    vals = sorted({Fraction(i, d) for d in range(1, max_den + 1) for i in range(d)})
    return [(a, b) for a in vals for b in vals]


# ---------------------------------------------------------------------------
# irrational shifts: exact symbolic test with private arithmetic


def symbolic_accepts(r, base: Pair, directions: Iterable[Pair]) -> bool:
    """R x - x in (1/conj z) Γ for x = base + sum s_i d_i, s_i independent irrationals."""
    z = (r.z.m, r.z.n)
    ez = _mul(_unit(r.eps.k), z)
    zb = _conj(z)

    def f(y):
        y = (Fraction(y[0]), Fraction(y[1]))
        lhs = _mul(ez, _conj(y)) if r.reflect else _mul(ez, y)
        t = _mul(zb, y)
        return (lhs[0] - t[0], lhs[1] - t[1])

    if any(f(d) != (0, 0) for d in directions):
        return False
    return _is_int_pair(f(base))


# ---------------------------------------------------------------------------
# suite


@dataclass
class VerificationReport:
    name: str
    expected: object
    observed: object
    passed: bool
    context: str = ""
    seconds: float = 0.0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "observed": _jsonable(self.observed),
            "verdict": self.verdict,
            "context": self.context,
            "seconds": round(self.seconds, 3),
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


@dataclass
class SuiteConfig:
    norm_bound: int = 50
    radius: Fraction = Fraction(15)
    count_bound: int = 200
    example_bound: int = 100
    grid_den: int = 9
    random_cases: int = 10_000
    seed: int = 20240101
    only: tuple[str, ...] = field(default=())


_CHECKS: list[tuple[str, Callable[[SuiteConfig], VerificationReport]]] = []


def register(name: str):
    def deco(fn):
        _CHECKS.append((name, fn))
        return fn

    return deco


def check_names() -> list[str]:
    return [n for n, _ in _CHECKS]


def run_suite(config: SuiteConfig | None = None) -> list[VerificationReport]:
    from . import checks  # noqa: F401  registers the closed-form-vs-oracle checks

    config = config or SuiteConfig()
    out = []
    for name, fn in _CHECKS:
        if config.only and name not in config.only:
            continue
        t0 = time.perf_counter()
        try:
            rep = fn(config)
        except Exception as exc:  # a crashing check is a failing check
            rep = VerificationReport(name, "no exception", repr(exc), False)
        rep.name = name
        rep.seconds = time.perf_counter() - t0
        out.append(rep)
    return sorted(out, key=lambda r: r.name)


def random_elements(rng: random.Random, count: int, span: int = 60):
    for _ in range(count):
        yield rng.randint(-span, span), rng.randint(-span, span)
