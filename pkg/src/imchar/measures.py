"""Signed measures with finite atom lists and piecewise analytic densities.

A measure is a finite list of weighted atoms plus a finite list of
density segments. A segment carries one polynomial (coefficients in
ascending degree) and any number of weighted named-family terms over a
common interval; the density at a point is the sum of all term values.
Measures on Z and Z_n are purely atomic. Measures on R^n are products
of univariate factors and support only the set-measuring operations.

Construction normalizes: atoms are merged per location and sorted,
overlapping segments are split on the common endpoint grid and their
terms combined, so equality of representations is meaningful. All atom
weight reductions use exactly rounded summation (math.fsum), which
keeps discrete total variations order-independent and lets the cyclic
oracle agree with the measure path bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from imchar import densities
from imchar.domains import (TWO_PI, BorelSet, GroupDomain, canonical_point,
                            check_same_domain, negate_point)
from imchar.errors import (ParameterError, PreconditionError,
                           UnsupportedDomainError)
from imchar.quadrature import QuadResult, integrate_fn

#: sampling resolution for sign-change isolation on named segments
_SIGN_SAMPLES = 4096
#: bisection width target when isolating a density sign change
_ROOT_TOL = 1e-12


@dataclass(frozen=True)
class Atom:
    t: float | int
    w: float


@dataclass(frozen=True)
class NamedTerm:
    """One weighted named-family density term, possibly reflected.

    ``weight * pdf(t)`` when not reflected, ``weight * pdf(-t)`` (with
    the circle's ``2*pi - t`` reflection on T) when reflected.
    """

    name: str
    params: tuple[tuple[str, float], ...]
    weight: float = 1.0
    reflected: bool = False

    @property
    def params_dict(self) -> dict:
        return dict(self.params)

    def key(self):
        return (self.name, self.params, self.reflected)


def _named(name: str, params: dict, weight: float = 1.0, reflected: bool = False) -> NamedTerm:
    fam = densities.family(name)
    fam.validate(params)
    items = tuple(sorted((str(k), float(v)) for k, v in params.items()))
    return NamedTerm(name, items, float(weight), bool(reflected))


@dataclass(frozen=True)
class DensitySegment:
    """Density terms over one interval. ``coeffs`` ascending, or None."""

    lower: float
    upper: float
    coeffs: tuple[float, ...] | None = None
    named: tuple[NamedTerm, ...] = ()


@dataclass(frozen=True)
class SignedMeasure:
    domain: GroupDomain
    atoms: tuple[Atom, ...] = ()
    density: tuple[DensitySegment, ...] = ()
    factors: tuple["SignedMeasure", ...] = ()

    def __post_init__(self):
        k = self.domain.kind
        if k == "Rbox":
            if self.atoms or self.density:
                raise ParameterError("measures on Rbox are pure products; "
                                     "atoms and density must be empty")
            if len(self.factors) != self.domain.n:
                raise ParameterError(f"Rbox({self.domain.n}) measure needs "
                                     f"{self.domain.n} factors, got {len(self.factors)}")
            for f in self.factors:
                if f.domain.kind != "R":
                    raise ParameterError("product factors must be measures on R")
        else:
            if self.factors:
                raise ParameterError(f"factors are only defined on Rbox, not {k}")
            if k in ("Z", "Zn") and self.density:
                raise ParameterError(f"measures on {self.domain.describe()} are purely atomic")

    def is_zero(self) -> bool:
        if self.domain.kind == "Rbox":
            return any(f.is_zero() for f in self.factors)
        return not self.atoms and not self.density


# ---------------------------------------------------------------------------
# construction and normalization


def build_measure(domain: GroupDomain, atoms=(), segments=(), factors=()) -> SignedMeasure:
    """Normalized constructor. ``atoms`` holds (t, w) pairs or Atom objects."""
    if domain.kind == "Rbox":
        return SignedMeasure(domain, factors=tuple(factors))
    raw = []
    for a in atoms:
        t, w = (a.t, a.w) if isinstance(a, Atom) else a
        raw.append((canonical_point(domain, t), float(w)))
    merged: dict = {}
    for t, w in raw:
        merged[t] = merged.get(t, 0.0) + w
    out_atoms = tuple(Atom(t, w) for t, w in sorted(merged.items()) if w != 0.0)
    for a in out_atoms:
        if not math.isfinite(a.w):
            raise ParameterError(f"atom weight at {a.t} is not finite")
        if domain.kind == "R" and not math.isfinite(a.t):
            raise ParameterError("atoms on R need finite locations")
    out_segs = _normalize_segments(domain, segments)
    return SignedMeasure(domain, out_atoms, out_segs)


def _normalize_segments(domain: GroupDomain, segments) -> tuple[DensitySegment, ...]:
    segs = list(segments)
    if not segs:
        return ()
    if domain.kind in ("Z", "Zn"):
        raise ParameterError(f"density segments are not allowed on {domain.describe()}")
    for s in segs:
        lo, hi = s.lower, s.upper
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise ParameterError(f"bad segment bounds [{lo}, {hi}]")
        if domain.kind == "T" and not (0.0 <= lo and hi <= TWO_PI):
            raise ParameterError(f"circle segment [{lo}, {hi}] must sit inside [0, 2*pi]")
        if s.coeffs and any(c != 0.0 for c in s.coeffs) and (math.isinf(lo) or math.isinf(hi)):
            raise ParameterError("polynomial terms need finite segment bounds")
    # split on the combined endpoint grid so interiors are disjoint
    cuts = sorted({s.lower for s in segs} | {s.upper for s in segs})
    out = []
    for a, b in zip(cuts, cuts[1:]):
        covering = [s for s in segs if s.lower <= a and b <= s.upper]
        piece = _combine_piece(a, b, covering)
        if piece is not None:
            out.append(piece)
    return tuple(out)


def _combine_piece(a, b, covering) -> DensitySegment | None:
    coeffs: list[float] = []
    for s in covering:
        if s.coeffs:
            for i, c in enumerate(s.coeffs):
                while len(coeffs) <= i:
                    coeffs.append(0.0)
                coeffs[i] += c
    while coeffs and coeffs[-1] == 0.0:
        coeffs.pop()
    protos: dict = {}
    for s in covering:
        for nt in s.named:
            protos.setdefault(nt.key(), nt)
    named_terms = []
    for key, proto in protos.items():
        w = math.fsum(nt.weight for s in covering for nt in s.named if nt.key() == key)
        if w != 0.0:
            named_terms.append(NamedTerm(proto.name, proto.params, w, proto.reflected))
    named_terms.sort(key=lambda nt: (nt.name, nt.params, nt.reflected))
    if not coeffs and not named_terms:
        return None
    return DensitySegment(a, b, tuple(coeffs) if coeffs else None, tuple(named_terms))


def zero_measure(domain: GroupDomain) -> SignedMeasure:
    return build_measure(domain)


def point_mass(domain: GroupDomain, t, w: float = 1.0) -> SignedMeasure:
    return build_measure(domain, atoms=[(t, w)])


def from_atoms(domain: GroupDomain, pairs) -> SignedMeasure:
    return build_measure(domain, atoms=pairs)


def poly_density_measure(domain: GroupDomain, a: float, b: float, coeffs) -> SignedMeasure:
    seg = DensitySegment(float(a), float(b), tuple(float(c) for c in coeffs))
    return build_measure(domain, segments=[seg])


def named_density_measure(domain: GroupDomain, name: str, params: dict,
                          weight: float = 1.0, support=None) -> SignedMeasure:
    """A measure whose density is ``weight`` times a named family pdf."""
    nt = _named(name, params, weight)
    fam = densities.family(name)
    if fam.circular and domain.kind != "T":
        raise ParameterError(f"density family {name!r} lives on the circle")
    if not fam.circular and domain.kind != "R":
        raise ParameterError(f"density family {name!r} lives on the real line")
    lo, hi = fam.support(params) if support is None else support
    seg = DensitySegment(float(lo), float(hi), None, (nt,))
    return build_measure(domain, segments=[seg])


def product_measure(factors) -> SignedMeasure:
    factors = tuple(factors)
    domain = GroupDomain("Rbox", len(factors))
    return SignedMeasure(domain, factors=factors)


# ---------------------------------------------------------------------------
# pointwise density evaluation


def segment_value(domain: GroupDomain, seg: DensitySegment, t) -> np.ndarray:
    """Density value of one segment at locations t (no support clipping)."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    if seg.coeffs:
        out += npoly.polyval(t, seg.coeffs)
    for nt in seg.named:
        fam = densities.family(nt.name)
        if not nt.reflected:
            out += nt.weight * fam.pdf(nt.params_dict, t)
        elif domain.kind == "T":
            out += nt.weight * fam.pdf(nt.params_dict, (TWO_PI - t) % TWO_PI)
        else:
            out += nt.weight * fam.pdf(nt.params_dict, -t)
    return out


def density_value(m: SignedMeasure, t) -> np.ndarray:
    """Total density of m at locations t (atoms not included)."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    for seg in m.density:
        inside = (t >= seg.lower) & (t <= seg.upper)
        if inside.any():
            out = np.where(inside, out + segment_value(m.domain, seg, t), out)
    return out


# ---------------------------------------------------------------------------
# integration of segments


def _named_term_mass(domain: GroupDomain, nt: NamedTerm, c: float, d: float) -> QuadResult:
    """weight * integral of the (possibly reflected) family pdf over [c, d]."""
    fam = densities.family(nt.name)
    params = nt.params_dict
    if nt.reflected:
        if domain.kind == "T":
            c, d = TWO_PI - d, TWO_PI - c
        else:
            c, d = -d, -c
    slo, shi = fam.support(params)
    lo, hi = max(c, slo), min(d, shi)
    if lo >= hi:
        return QuadResult(0.0, 0.0)
    r = integrate_fn(lambda t: float(fam.pdf(params, t)), lo, hi)
    return QuadResult(nt.weight * r.value, abs(nt.weight) * r.error, r.warned)


def _poly_mass(coeffs, c: float, d: float) -> float:
    anti = npoly.polyint(coeffs)
    return npoly.polyval(d, anti) - npoly.polyval(c, anti)


def segment_mass(domain: GroupDomain, seg: DensitySegment, c: float, d: float) -> QuadResult:
    """Signed integral of one segment's density over [c, d] (caller clips)."""
    if c >= d:
        return QuadResult(0.0, 0.0)
    val, err, warned = 0.0, 0.0, False
    if seg.coeffs:
        val += _poly_mass(seg.coeffs, c, d)
    for nt in seg.named:
        r = _named_term_mass(domain, nt, c, d)
        val += r.value
        err += r.error
        warned = warned or r.warned
    return QuadResult(val, err, warned)


# ---------------------------------------------------------------------------
# sign-change isolation


def sign_subsegments(domain: GroupDomain, seg: DensitySegment) -> list[tuple[float, float, int]]:
    """Split one segment into maximal single-signed pieces.

    Returns (lo, hi, sign) triples covering [seg.lower, seg.upper] in
    order, sign in {-1, 0, +1}. Polynomial-only segments use exact
    roots; anything involving named terms is sampled and the isolated
    sign changes are bisected to ~1e-12. Pieces where the density
    vanishes identically come back with sign 0.
    """
    if not seg.coeffs and seg.named:
        signs = {1 if nt.weight > 0 else -1 for nt in seg.named}
        if signs == {1}:
            return [(seg.lower, seg.upper, 1)]
        if signs == {-1}:
            return [(seg.lower, seg.upper, -1)]
    if seg.coeffs and not seg.named:
        return _poly_subsegments(seg)
    return _sampled_subsegments(domain, seg)


def _poly_subsegments(seg: DensitySegment) -> list[tuple[float, float, int]]:
    coeffs = seg.coeffs
    roots = []
    if len(coeffs) > 1:
        rr = npoly.polyroots(coeffs)
        scale = max(1.0, abs(seg.lower), abs(seg.upper))
        for z in rr:
            if abs(z.imag) <= 1e-12 * scale and seg.lower < z.real < seg.upper:
                roots.append(float(z.real))
    cuts = [seg.lower] + sorted(set(roots)) + [seg.upper]
    pieces = []
    for a, b in zip(cuts, cuts[1:]):
        if a >= b:
            continue
        v = float(npoly.polyval(0.5 * (a + b), coeffs))
        pieces.append((a, b, 0 if v == 0.0 else (1 if v > 0.0 else -1)))
    return _fuse_same_sign(pieces)


def _sample_grid(lower: float, upper: float) -> np.ndarray:
    u = (np.arange(_SIGN_SAMPLES) + 0.5) / _SIGN_SAMPLES
    lo_inf, hi_inf = math.isinf(lower), math.isinf(upper)
    if not lo_inf and not hi_inf:
        return lower + (upper - lower) * u
    if lo_inf and hi_inf:
        return np.tan(math.pi * (u - 0.5))
    if hi_inf:
        return lower + u / (1.0 - u)
    return upper - u[::-1] / (1.0 - u[::-1])


def _sampled_subsegments(domain, seg) -> list[tuple[float, float, int]]:
    ts = _sample_grid(seg.lower, seg.upper)
    vals = np.asarray(segment_value(domain, seg, ts), dtype=float)
    signs = np.sign(vals)
    live = np.nonzero(signs)[0]
    roots = []
    for i, j in zip(live, live[1:]):
        if signs[i] * signs[j] < 0:
            roots.append(_bisect_sign_change(domain, seg, ts[i], ts[j]))
    cuts = [seg.lower] + roots + [seg.upper]
    pieces = []
    for a, b in zip(cuts, cuts[1:]):
        if a >= b:
            continue
        inside = ts[(ts > a) & (ts < b)]
        if inside.size:
            v = segment_value(domain, seg, inside)
            k = int(np.argmax(np.abs(v)))
            s = float(v[k])
        else:
            s = float(segment_value(domain, seg, np.array([0.5 * (a + b)]))[0])
        pieces.append((a, b, 0 if s == 0.0 else (1 if s > 0.0 else -1)))
    return _fuse_same_sign(pieces)


def _bisect_sign_change(domain, seg, a: float, b: float) -> float:
    fa = float(segment_value(domain, seg, np.array([a]))[0])
    for _ in range(200):
        mid = 0.5 * (a + b)
        if b - a <= _ROOT_TOL * max(1.0, abs(mid)):
            return mid
        fm = float(segment_value(domain, seg, np.array([mid]))[0])
        if fm == 0.0:
            return mid
        if (fa > 0) == (fm > 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def _fuse_same_sign(pieces):
    out = []
    for p in pieces:
        if out and out[-1][2] == p[2] and out[-1][1] == p[0]:
            out[-1] = (out[-1][0], p[1], p[2])
        else:
            out.append(list(p) if isinstance(p, tuple) else p)
    return [tuple(p) for p in out]


# ---------------------------------------------------------------------------
# measure-level operations


def mass(m: SignedMeasure) -> float:
    """Signed total mass m(G)."""
    if m.domain.kind == "Rbox":
        return math.prod(mass(f) for f in m.factors)
    total = math.fsum(a.w for a in m.atoms)
    return total + math.fsum(
        segment_mass(m.domain, s, s.lower, s.upper).value for s in m.density)


def total_variation(m: SignedMeasure) -> float:
    """The total variation norm ||m||: atom |weights| plus integral of |density|."""
    cached = m.__dict__.get("_tv_cache")
    if cached is not None:
        return cached
    if m.domain.kind == "Rbox":
        tv = math.prod(total_variation(f) for f in m.factors)
    else:
        parts = [math.fsum(abs(a.w) for a in m.atoms)]
        for seg in m.density:
            for lo, hi, sgn in sign_subsegments(m.domain, seg):
                if sgn != 0:
                    parts.append(abs(segment_mass(m.domain, seg, lo, hi).value))
        tv = math.fsum(parts)
    object.__setattr__(m, "_tv_cache", tv)
    return tv


def scale(m: SignedMeasure, c: float) -> SignedMeasure:
    c = float(c)
    if m.domain.kind == "Rbox":
        if c == 1.0:
            return m
        raise UnsupportedDomainError("product measures cannot be rescaled")
    atoms = [(a.t, c * a.w) for a in m.atoms]
    segs = []
    for s in m.density:
        coeffs = tuple(c * x for x in s.coeffs) if s.coeffs else None
        named = tuple(NamedTerm(nt.name, nt.params, c * nt.weight, nt.reflected)
                      for nt in s.named)
        segs.append(DensitySegment(s.lower, s.upper, coeffs, named))
    return build_measure(m.domain, atoms, segs)


def add(a: SignedMeasure, b: SignedMeasure) -> SignedMeasure:
    check_same_domain(a.domain, b.domain, "measures")
    if a.domain.kind == "Rbox":
        raise UnsupportedDomainError("sums of product measures are not representable")
    return build_measure(a.domain,
                         [(x.t, x.w) for x in a.atoms] + [(x.t, x.w) for x in b.atoms],
                         list(a.density) + list(b.density))


def subtract(a: SignedMeasure, b: SignedMeasure) -> SignedMeasure:
    return add(a, scale(b, -1.0))


def reflect(m: SignedMeasure) -> SignedMeasure:
    """The pushforward of m under t -> -t."""
    if m.domain.kind == "Rbox":
        return SignedMeasure(m.domain, factors=tuple(reflect(f) for f in m.factors))
    atoms = [(negate_point(m.domain, a.t), a.w) for a in m.atoms]
    segs = []
    for s in m.density:
        if m.domain.kind == "T":
            lo, hi = TWO_PI - s.upper, TWO_PI - s.lower
        else:
            lo, hi = -s.upper, -s.lower
        coeffs = None
        if s.coeffs:
            coeffs = tuple((c if i % 2 == 0 else -c) for i, c in enumerate(s.coeffs))
        named = tuple(NamedTerm(nt.name, nt.params, nt.weight, not nt.reflected)
                      for nt in s.named)
        segs.append(DensitySegment(lo, hi, coeffs, named))
    return build_measure(m.domain, atoms, segs)


def measure_of(m: SignedMeasure, s: BorelSet) -> float:
    """m(S) for a finitely described Borel set on the same domain."""
    check_same_domain(m.domain, s.domain, "measure and set")
    kind = m.domain.kind
    if kind == "Rbox":
        if not s.boxes_pairwise_disjoint():
            raise ParameterError("Rbox sets must have pairwise disjoint boxes "
                                 "to be measured")
        total = 0.0
        for box in s.boxes:
            per_axis = []
            for f, iv in zip(m.factors, box):
                axis_set = BorelSet.from_intervals(
                    f.domain, [(iv.lo, iv.hi, iv.closed_lo, iv.closed_hi)])
                per_axis.append(measure_of(f, axis_set))
            total += math.prod(per_axis)
        return total
    if kind in ("Z", "Zn"):
        return math.fsum(a.w for a in m.atoms if a.t in s.indices)
    parts = [math.fsum(a.w for a in m.atoms if s.contains_point(a.t))]
    for seg in m.density:
        for iv in s.intervals:
            c, d = max(seg.lower, iv.lo), min(seg.upper, iv.hi)
            if c < d:
                parts.append(segment_mass(m.domain, seg, c, d).value)
    return math.fsum(parts)
