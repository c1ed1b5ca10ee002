"""Group domains and the Borel set algebra used for supports and Hahn sets.

Five locally compact abelian groups are supported:

========  ========================  =====================
kind      group                     set representation
========  ========================  =====================
``R``     real line                 finite interval unions
``Z``     integers                  finite index sets
``T``     circle, [0, 2*pi)         finite arc unions
``Zn``    integers mod n            index sets mod n
``Rbox``  R^n                       unions of axis boxes
========  ========================  =====================

Points on ``T`` are canonicalized into [0, 2*pi); residues mod n into
[0, n). Negation, intersection, union and (where representable)
complement are closed on each representation, which is what the
decomposition routines rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from imchar.errors import DomainMismatchError, ParameterError, UnsupportedDomainError

TWO_PI = 2.0 * math.pi

_KINDS = ("R", "Z", "T", "Zn", "Rbox")


@dataclass(frozen=True)
class GroupDomain:
    """A supported group. ``n`` is the order for Zn, the dimension for Rbox."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown domain kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind in ("Zn", "Rbox"):
            if not isinstance(self.n, int) or self.n < 1:
                raise ParameterError(f"domain {self.kind} needs a positive integer n, got {self.n!r}")
        elif self.n is not None:
            raise ParameterError(f"domain {self.kind} takes no n parameter")

    @property
    def discrete(self) -> bool:
        return self.kind in ("Z", "Zn")

    def describe(self) -> str:
        if self.kind == "Zn":
            return f"Z_{self.n}"
        if self.kind == "Rbox":
            return f"R^{self.n}"
        return {"R": "R", "Z": "Z", "T": "T"}[self.kind]


REAL_LINE = GroupDomain("R")
INTEGERS = GroupDomain("Z")
CIRCLE = GroupDomain("T")


def cyclic(n: int) -> GroupDomain:
    return GroupDomain("Zn", n)


def real_box(dim: int) -> GroupDomain:
    return GroupDomain("Rbox", dim)


def check_same_domain(a: GroupDomain, b: GroupDomain, what: str = "operands"):
    if a != b:
        raise DomainMismatchError(f"{what} live on different domains: {a.describe()} vs {b.describe()}")


def canonical_point(domain: GroupDomain, t):
    """Map a location into the domain's canonical fundamental set."""
    if domain.kind == "R":
        v = float(t)
        if not math.isfinite(v):
            raise ParameterError(f"real-line location must be finite, got {t!r}")
        return v
    if domain.kind == "Z":
        return _as_index(t)
    if domain.kind == "T":
        v = float(t)
        if not math.isfinite(v):
            raise ParameterError(f"circle location must be finite, got {t!r}")
        x = v % TWO_PI
        # float modulo can land exactly on 2*pi for tiny negative inputs
        if x >= TWO_PI:
            x = 0.0
        return x
    if domain.kind == "Zn":
        return _as_index(t) % domain.n
    raise UnsupportedDomainError("points on Rbox are vectors; use tuple coordinates directly")


def negate_point(domain: GroupDomain, t):
    """The group inverse of a canonical location, canonicalized again."""
    if domain.kind == "R":
        return -float(t)
    if domain.kind == "Z":
        return -_as_index(t)
    if domain.kind == "T":
        return canonical_point(domain, -float(t))
    if domain.kind == "Zn":
        return (-_as_index(t)) % domain.n
    raise UnsupportedDomainError("points on Rbox are vectors; negate coordinatewise")


def _as_index(t) -> int:
    if isinstance(t, bool):
        raise ParameterError("atom location must be an integer, got a bool")
    if isinstance(t, int):
        return t
    f = float(t)
    if f != int(f):
        raise ParameterError(f"atom location {t!r} is not an integer")
    return int(f)


# ---------------------------------------------------------------------------
# interval primitives (shared by R and T)


@dataclass(frozen=True, order=True)
class Interval:
    """An interval with explicit endpoint closure. Degenerate points allowed."""

    lo: float
    hi: float
    closed_lo: bool = True
    closed_hi: bool = True

    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        if self.lo == self.hi:
            return not (self.closed_lo and self.closed_hi)
        return False

    def contains(self, t: float) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.closed_lo:
            return False
        if t == self.hi and not self.closed_hi:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval":
        if self.lo > other.lo or (self.lo == other.lo and (not self.closed_lo or other.closed_lo)):
            lo, cl = self.lo, self.closed_lo
        else:
            lo, cl = other.lo, other.closed_lo
        if self.hi < other.hi or (self.hi == other.hi and (not self.closed_hi or other.closed_hi)):
            hi, ch = self.hi, self.closed_hi
        else:
            hi, ch = other.hi, other.closed_hi
        if lo == self.lo and lo == other.lo:
            cl = self.closed_lo and other.closed_lo
        if hi == self.hi and hi == other.hi:
            ch = self.closed_hi and other.closed_hi
        return Interval(lo, hi, cl, ch)

    def negated(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.closed_hi, self.closed_lo)


def _merge_intervals(items: list[Interval]) -> tuple[Interval, ...]:
    """Drop empties, sort, fuse overlapping or touching intervals."""
    live = sorted((iv for iv in items if not iv.is_empty()),
                  key=lambda iv: (iv.lo, not iv.closed_lo))
    out: list[Interval] = []
    for iv in live:
        if out:
            last = out[-1]
            touches = iv.lo < last.hi or (iv.lo == last.hi and (last.closed_hi or iv.closed_lo))
            if touches:
                if iv.hi > last.hi or (iv.hi == last.hi and iv.closed_hi and not last.closed_hi):
                    out[-1] = Interval(last.lo, iv.hi, last.closed_lo, iv.closed_hi)
                continue
        out.append(iv)
    return tuple(out)


def _complement_intervals(items: tuple[Interval, ...], lo: float, hi: float,
                          closed_lo: bool, closed_hi: bool) -> tuple[Interval, ...]:
    """Complement of a merged interval union inside the ambient [lo, hi]."""
    out: list[Interval] = []
    cur, cur_closed = lo, closed_lo
    for iv in items:
        gap = Interval(cur, iv.lo, cur_closed, not iv.closed_lo)
        if not gap.is_empty():
            out.append(gap)
        cur, cur_closed = iv.hi, not iv.closed_hi
    tail = Interval(cur, hi, cur_closed, closed_hi)
    if not tail.is_empty():
        out.append(tail)
    return tuple(out)


# ---------------------------------------------------------------------------
# Borel sets


@dataclass(frozen=True)
class BorelSet:
    """A finitely describable Borel subset of one group domain.

    Exactly one payload field is meaningful, chosen by ``domain.kind``:
    ``intervals`` on R and T, ``indices`` on Z and Zn, ``boxes`` on Rbox
    (each box is a tuple of per-axis intervals). Instances are
    normalized: intervals merged and sorted, T arcs folded into
    [0, 2*pi), residues reduced mod n.
    """

    domain: GroupDomain
    intervals: tuple[Interval, ...] = ()
    indices: frozenset[int] = field(default_factory=frozenset)
    boxes: tuple[tuple[Interval, ...], ...] = ()

    # -- constructors -------------------------------------------------

    @staticmethod
    def empty(domain: GroupDomain) -> "BorelSet":
        return BorelSet(domain)

    @staticmethod
    def from_intervals(domain: GroupDomain, spans) -> "BorelSet":
        """Build from (lo, hi) or (lo, hi, closed_lo, closed_hi) tuples."""
        if domain.kind not in ("R", "T"):
            raise UnsupportedDomainError(f"interval sets are not defined on {domain.describe()}")
        ivs = []
        for span in spans:
            if len(span) == 2:
                lo, hi = span
                cl = ch = True
            else:
                lo, hi, cl, ch = span
            lo, hi = float(lo), float(hi)
            if domain.kind == "T":
                ivs.extend(_fold_arc(lo, hi, cl, ch))
            else:
                if math.isinf(lo):
                    cl = False
                if math.isinf(hi):
                    ch = False
                ivs.append(Interval(lo, hi, cl, ch))
        return BorelSet(domain, intervals=_merge_intervals(ivs))

    @staticmethod
    def points(domain: GroupDomain, locations) -> "BorelSet":
        if domain.kind in ("Z", "Zn"):
            return BorelSet.from_indices(domain, locations)
        if domain.kind in ("R", "T"):
            pts = [canonical_point(domain, t) for t in locations]
            return BorelSet(domain, intervals=_merge_intervals(
                [Interval(p, p, True, True) for p in pts]))
        raise UnsupportedDomainError("point sets on Rbox are not supported")

    @staticmethod
    def from_indices(domain: GroupDomain, ks) -> "BorelSet":
        if domain.kind not in ("Z", "Zn"):
            raise UnsupportedDomainError(f"index sets are not defined on {domain.describe()}")
        return BorelSet(domain, indices=frozenset(canonical_point(domain, k) for k in ks))

    @staticmethod
    def box(domain: GroupDomain, axis_spans) -> "BorelSet":
        """One axis-aligned box in Rbox; spans as in from_intervals."""
        if domain.kind != "Rbox":
            raise UnsupportedDomainError("box sets only exist on Rbox domains")
        if len(axis_spans) != domain.n:
            raise ParameterError(f"expected {domain.n} axis spans, got {len(axis_spans)}")
        axes = []
        for span in axis_spans:
            if len(span) == 2:
                lo, hi = span
                cl = ch = True
            else:
                lo, hi, cl, ch = span
            lo, hi = float(lo), float(hi)
            axes.append(Interval(lo, hi, cl and not math.isinf(lo), ch and not math.isinf(hi)))
        b = tuple(axes)
        if any(iv.is_empty() for iv in b):
            return BorelSet(domain)
        return BorelSet(domain, boxes=(b,))

    @staticmethod
    def whole(domain: GroupDomain) -> "BorelSet":
        if domain.kind == "R":
            return BorelSet.from_intervals(domain, [(-math.inf, math.inf, False, False)])
        if domain.kind == "T":
            return BorelSet(domain, intervals=(Interval(0.0, TWO_PI, True, False),))
        if domain.kind == "Zn":
            return BorelSet(domain, indices=frozenset(range(domain.n)))
        if domain.kind == "Rbox":
            return BorelSet(domain, boxes=(tuple(
                Interval(-math.inf, math.inf, False, False) for _ in range(domain.n)),))
        raise UnsupportedDomainError("the whole of Z is not finitely representable here")

    # -- predicates ----------------------------------------------------

    def is_empty(self) -> bool:
        if self.domain.kind in ("R", "T"):
            return not self.intervals
        if self.domain.kind in ("Z", "Zn"):
            return not self.indices
        return not self.boxes

    def contains_point(self, t) -> bool:
        if self.domain.kind in ("Z", "Zn"):
            return canonical_point(self.domain, t) in self.indices
        if self.domain.kind in ("R", "T"):
            x = canonical_point(self.domain, t)
            return any(iv.contains(x) for iv in self.intervals)
        coords = tuple(float(c) for c in t)
        if len(coords) != self.domain.n:
            raise ParameterError(f"point has {len(coords)} coordinates, domain has {self.domain.n}")
        return any(all(iv.contains(c) for iv, c in zip(b, coords)) for b in self.boxes)

    # -- algebra ---------------------------------------------------------

    def union(self, other: "BorelSet") -> "BorelSet":
        check_same_domain(self.domain, other.domain, "sets")
        if self.domain.kind in ("R", "T"):
            return BorelSet(self.domain, intervals=_merge_intervals(
                list(self.intervals) + list(other.intervals)))
        if self.domain.kind in ("Z", "Zn"):
            return BorelSet(self.domain, indices=self.indices | other.indices)
        return BorelSet(self.domain, boxes=self.boxes + other.boxes)

    def intersect(self, other: "BorelSet") -> "BorelSet":
        check_same_domain(self.domain, other.domain, "sets")
        if self.domain.kind in ("R", "T"):
            pieces = [a.intersect(b) for a in self.intervals for b in other.intervals]
            return BorelSet(self.domain, intervals=_merge_intervals(pieces))
        if self.domain.kind in ("Z", "Zn"):
            return BorelSet(self.domain, indices=self.indices & other.indices)
        hits = []
        for b1 in self.boxes:
            for b2 in other.boxes:
                cand = tuple(a.intersect(b) for a, b in zip(b1, b2))
                if not any(iv.is_empty() for iv in cand):
                    hits.append(cand)
        return BorelSet(self.domain, boxes=tuple(hits))

    def complement(self) -> "BorelSet":
        if self.domain.kind == "R":
            return BorelSet(self.domain, intervals=_complement_intervals(
                self.intervals, -math.inf, math.inf, False, False))
        if self.domain.kind == "T":
            return BorelSet(self.domain, intervals=_complement_intervals(
                self.intervals, 0.0, TWO_PI, True, False))
        if self.domain.kind == "Zn":
            return BorelSet(self.domain, indices=frozenset(range(self.domain.n)) - self.indices)
        raise UnsupportedDomainError(
            f"complement is not finitely representable on {self.domain.describe()}")

    def negate(self) -> "BorelSet":
        """The pointwise group-inverse image {-t : t in set}."""
        if self.domain.kind == "R":
            return BorelSet(self.domain, intervals=_merge_intervals(
                [iv.negated() for iv in self.intervals]))
        if self.domain.kind == "T":
            out: list[Interval] = []
            for iv in self.intervals:
                out.extend(_negate_arc(iv))
            return BorelSet(self.domain, intervals=_merge_intervals(out))
        if self.domain.kind in ("Z", "Zn"):
            return BorelSet(self.domain, indices=frozenset(
                negate_point(self.domain, k) for k in self.indices))
        return BorelSet(self.domain, boxes=tuple(
            tuple(iv.negated() for iv in b) for b in self.boxes))

    def boxes_pairwise_disjoint(self) -> bool:
        for i in range(len(self.boxes)):
            for j in range(i + 1, len(self.boxes)):
                cand = [a.intersect(b) for a, b in zip(self.boxes[i], self.boxes[j])]
                if not any(iv.is_empty() for iv in cand):
                    return False
        return True


def _fold_arc(lo: float, hi: float, cl: bool, ch: bool) -> list[Interval]:
    """Fold an arc given by raw angles into canonical [0, 2*pi) pieces."""
    if hi - lo > TWO_PI:
        return [Interval(0.0, TWO_PI, True, False)]
    if lo > hi or (lo == hi and not (cl and ch)):
        return []
    a = canonical_point(CIRCLE, lo)
    b = a + (hi - lo)
    if b < TWO_PI or (b == TWO_PI and not ch):
        return [Interval(a, min(b, TWO_PI), cl, ch if b < TWO_PI else False)]
    # wraps past 2*pi: split
    pieces = [Interval(a, TWO_PI, cl, False)]
    b_wrapped = b - TWO_PI
    pieces.append(Interval(0.0, b_wrapped, True, ch))
    return [iv for iv in pieces if not iv.is_empty()]


def _negate_arc(iv: Interval) -> list[Interval]:
    """Image of a canonical arc under theta -> -theta mod 2*pi."""
    out = []
    if iv.contains(0.0):
        out.append(Interval(0.0, 0.0, True, True))
    # the part strictly inside (0, 2*pi) maps to (2*pi - hi, 2*pi - lo)
    lo, cl = (iv.lo, iv.closed_lo) if iv.lo > 0.0 else (0.0, False)
    hi, ch = iv.hi, iv.closed_hi
    piece = Interval(lo, hi, cl, ch)
    if not piece.is_empty():
        new_lo = TWO_PI - piece.hi
        new_hi = TWO_PI - piece.lo
        ncl, nch = piece.closed_hi, piece.closed_lo
        if new_lo <= 0.0:
            # hi was exactly 2*pi (open); image starts at 0 open
            new_lo, ncl = 0.0, False
        out.append(Interval(new_lo, new_hi, ncl, nch))
    return out
