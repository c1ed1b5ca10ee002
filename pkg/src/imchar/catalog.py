"""Catalog of distributions with known determination classifications.

Each entry builds a measure from validated parameters, states the
expected classification together with a one-line reason, and, where the
support criterion applies, exposes the certifying set. classify() runs
the appropriate test (norm test on R/Z/T/Zn, support criterion on Rbox
products) and reports whether the verdict matches the expectation, so
the whole catalog doubles as a regression suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy import stats

from imchar.determine import (DeterminationVerdict, is_determined,
                              support_criterion_verdict, NORM_TOLERANCE)
from imchar.domains import (CIRCLE, INTEGERS, REAL_LINE, TWO_PI, BorelSet,
                            GroupDomain, real_box)
from imchar.errors import ParameterError
from imchar.measures import (SignedMeasure, build_measure,
                             named_density_measure, poly_density_measure,
                             product_measure)

DETERMINED = "determined"
NOT_DETERMINED = "not_determined"

#: tail mass below which discrete supports are truncated
_TAIL = 1e-13


@dataclass(frozen=True)
class DistributionSpec:
    """A catalog entry pinned to concrete parameter values."""

    name: str
    params: tuple[tuple[str, float], ...]

    @property
    def params_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class ClassifyResult:
    spec: DistributionSpec
    verdict: DeterminationVerdict
    expected: str
    agrees: bool


@dataclass(frozen=True)
class _Entry:
    name: str
    defaults: dict
    domain: Callable[[dict], GroupDomain]
    build: Callable[[dict], SignedMeasure]
    expected: Callable[[dict], str]
    provenance: str
    criterion: Callable[[dict], BorelSet | None] = lambda p: None
    validate: Callable[[dict], None] = lambda p: None
    int_params: tuple[str, ...] = ()
    flexible: bool = False


_ENTRIES: dict[str, _Entry] = {}


def _register(entry: _Entry):
    _ENTRIES[entry.name] = entry


def catalog_names() -> list[str]:
    return sorted(_ENTRIES)


def spec(name: str, **params) -> DistributionSpec:
    """Validated parameter binding for a catalog entry."""
    entry = _entry(name)
    merged = dict(entry.defaults)
    if entry.flexible and params:
        merged = dict(params)
    else:
        for k, v in params.items():
            if k not in merged:
                raise ParameterError(f"{name} takes parameters {sorted(merged)}, "
                                     f"not {k!r}")
            merged[k] = v
    clean = {}
    for k, v in merged.items():
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParameterError(f"parameter {k!r} must be a number, got {v!r}")
        if k in entry.int_params:
            if float(v) != int(v):
                raise ParameterError(f"parameter {k!r} must be an integer, got {v!r}")
            clean[k] = int(v)
        else:
            clean[k] = float(v)
    entry.validate(clean)
    return DistributionSpec(name, tuple(sorted(clean.items())))


def _entry(name: str) -> _Entry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise ParameterError(f"unknown distribution {name!r}; "
                             f"catalog holds {catalog_names()}") from None


def make_measure(sp: DistributionSpec) -> SignedMeasure:
    return _entry(sp.name).build(sp.params_dict)


def domain_of(sp: DistributionSpec) -> GroupDomain:
    return _entry(sp.name).domain(sp.params_dict)


def expected_classification(sp: DistributionSpec) -> str:
    return _entry(sp.name).expected(sp.params_dict)


def criterion_set(sp: DistributionSpec) -> BorelSet | None:
    return _entry(sp.name).criterion(sp.params_dict)


def provenance(sp: DistributionSpec) -> str:
    return _entry(sp.name).provenance


def classify(sp: DistributionSpec, tolerance: float = NORM_TOLERANCE) -> ClassifyResult:
    """Run the determination test and compare with the catalog expectation."""
    entry = _entry(sp.name)
    params = sp.params_dict
    m = entry.build(params)
    if entry.domain(params).kind == "Rbox":
        u = entry.criterion(params)
        if u is None:
            raise ParameterError(f"{sp.name} has no criterion set; products "
                                 "classify via the support criterion only")
        verdict = support_criterion_verdict(m, u)
    else:
        verdict = is_determined(m, tolerance)
    expected = entry.expected(params)
    agrees = verdict.determined == (expected == DETERMINED)
    return ClassifyResult(sp, verdict, expected, agrees)


def classify_all(tolerance: float = NORM_TOLERANCE) -> list[ClassifyResult]:
    return [classify(spec(name), tolerance) for name in catalog_names()]


def catalog_list_obj() -> list[dict]:
    """JSON-ready listing: one object per entry with defaults and expectation."""
    out = []
    for name in catalog_names():
        e = _ENTRIES[name]
        out.append({
            "name": name,
            "params": dict(e.defaults),
            "domain": e.domain(e.defaults).describe(),
            "expected": e.expected(e.defaults),
            "provenance": e.provenance,
        })
    return out


# ---------------------------------------------------------------------------
# builders


def _named_builder(family: str, **rename):
    def build(params):
        mapped = {rename.get(k, k): v for k, v in params.items()}
        return named_density_measure(REAL_LINE, family, mapped)
    return build


def _circle_named_builder(family: str):
    def build(params):
        return named_density_measure(CIRCLE, family, params)
    return build


def _uniform_build(p):
    a, b = p["a"], p["b"]
    return poly_density_measure(REAL_LINE, a, b, (1.0 / (b - a),))


def _uniform_validate(p):
    if not p["a"] < p["b"]:
        raise ParameterError(f"uniform needs a < b, got a={p['a']}, b={p['b']}")


def _interval_expected(p):
    return NOT_DETERMINED if p["a"] < 0.0 < p["b"] else DETERMINED


def _interval_criterion(p):
    a, b = p["a"], p["b"]
    if a < 0.0 < b:
        return None
    if a >= 0.0:
        return BorelSet.from_intervals(REAL_LINE, [(a, b, False, True)])
    return BorelSet.from_intervals(REAL_LINE, [(a, b, True, False)])


def _triangular_build(p):
    a, b = p["a"], p["b"]
    c = 0.5 * (a + b)
    d1 = (b - a) * (c - a)
    d2 = (b - a) * (b - c)
    left = poly_density_measure(REAL_LINE, a, c, (-2.0 * a / d1, 2.0 / d1))
    right = poly_density_measure(REAL_LINE, c, b, (2.0 * b / d2, -2.0 / d2))
    return build_measure(REAL_LINE, [], list(left.density) + list(right.density))


def _pmf_measure_bounded(dist, lo: int, hi: int) -> SignedMeasure:
    atoms = [(k, float(dist.pmf(k))) for k in range(lo, hi + 1)]
    return build_measure(INTEGERS, [(k, w) for k, w in atoms if w > 0.0])


def _pmf_measure_tail(dist, lo: int, shift: int = 0) -> SignedMeasure:
    atoms = []
    k = lo
    while True:
        w = float(dist.pmf(k))
        if w > 0.0:
            atoms.append((k + shift, w))
        if float(dist.sf(k)) < _TAIL and k > lo:
            break
        k += 1
        if k - lo > 100000:
            raise ParameterError("discrete support truncation did not converge")
    return build_measure(INTEGERS, atoms)


def _positive_params(*names):
    def check(p):
        for nm in names:
            if p[nm] <= 0:
                raise ParameterError(f"parameter {nm!r} must be positive, got {p[nm]}")
    return check


def _prob_param(name):
    def check(p):
        if not 0.0 < p[name] < 1.0:
            raise ParameterError(f"parameter {name!r} must sit in (0, 1), got {p[name]}")
    return check


def _and(*checks):
    def run(p):
        for c in checks:
            c(p)
    return run


_R = lambda p: REAL_LINE
_Z = lambda p: INTEGERS
_T = lambda p: CIRCLE

_HALF_LINE = lambda p: BorelSet.from_intervals(REAL_LINE, [(0.0, math.inf, False, False)])
_UNIT = lambda p: BorelSet.from_intervals(REAL_LINE, [(0.0, 1.0, False, False)])


# continuous on R, one-sided support: determined

_register(_Entry(
    "exponential", {"lam": 1.0}, _R, _named_builder("exponential"),
    lambda p: DETERMINED,
    "support (0, inf) is disjoint from its reflection and carries full mass",
    criterion=_HALF_LINE, validate=_positive_params("lam")))

_register(_Entry(
    "gamma", {"k": 2.0, "theta": 1.0}, _R, _named_builder("gamma"),
    lambda p: DETERMINED,
    "support (0, inf) is disjoint from its reflection and carries full mass",
    criterion=_HALF_LINE, validate=_positive_params("k", "theta")))

_register(_Entry(
    "chi2", {"n": 2.0}, _R, _named_builder("chi2"),
    lambda p: DETERMINED,
    "support (0, inf) is disjoint from its reflection and carries full mass",
    criterion=_HALF_LINE, validate=_positive_params("n")))

_register(_Entry(
    "levy", {"c": 1.0}, _R, _named_builder("levy"),
    lambda p: DETERMINED,
    "support (0, inf) is disjoint from its reflection and carries full mass",
    criterion=_HALF_LINE, validate=_positive_params("c")))

_register(_Entry(
    "maxwell", {"a": 1.0}, _R, _named_builder("maxwell"),
    lambda p: DETERMINED,
    "support (0, inf) is disjoint from its reflection and carries full mass",
    criterion=_HALF_LINE, validate=_positive_params("a")))

_register(_Entry(
    "pareto", {"alpha": 2.0, "xm": 1.0}, _R, _named_builder("pareto"),
    lambda p: DETERMINED,
    "support (xm, inf) with xm > 0 misses its reflection entirely",
    criterion=lambda p: BorelSet.from_intervals(
        REAL_LINE, [(p["xm"], math.inf, False, False)]),
    validate=_positive_params("alpha", "xm")))

_register(_Entry(
    "beta", {"a": 2.0, "b": 3.0}, _R, _named_builder("beta"),
    lambda p: DETERMINED,
    "support (0, 1) is disjoint from its reflection and carries full mass",
    criterion=_UNIT, validate=_positive_params("a", "b")))

_register(_Entry(
    "arcsine", {}, _R, _named_builder("arcsine"),
    lambda p: DETERMINED,
    "support (0, 1) is disjoint from its reflection and carries full mass",
    criterion=_UNIT))

_register(_Entry(
    "hyperexponential",
    {"p1": 0.3, "lam1": 1.0, "p2": 0.7, "lam2": 3.0}, _R,
    _named_builder("hyperexponential"),
    lambda p: DETERMINED,
    "mixture of one-sided exponentials; support (0, inf) misses its reflection",
    criterion=_HALF_LINE, flexible=True))

# continuous on R, two-sided support: never determined

_register(_Entry(
    "normal", {"mu": 1.0, "sigma": 1.0}, _R, _named_builder("normal"),
    lambda p: NOT_DETERMINED,
    "positive density on both half-lines; the reflection overlap has mass",
    validate=_positive_params("sigma")))

_register(_Entry(
    "laplace", {"mu": 1.0, "b": 1.0}, _R, _named_builder("laplace"),
    lambda p: NOT_DETERMINED,
    "positive density on both half-lines; the reflection overlap has mass",
    validate=_positive_params("b")))

_register(_Entry(
    "cauchy", {"mu": 1.0, "gamma": 1.0}, _R, _named_builder("cauchy"),
    lambda p: NOT_DETERMINED,
    "positive density on both half-lines; the reflection overlap has mass",
    validate=_positive_params("gamma")))

# bounded-interval families with a location-dependent answer

_register(_Entry(
    "uniform", {"a": 1.0, "b": 3.0}, _R, _uniform_build,
    _interval_expected,
    "determined exactly when [a, b] avoids straddling 0; a symmetric "
    "sub-interval of positive length around 0 would lower the norm",
    criterion=_interval_criterion, validate=_uniform_validate))

_register(_Entry(
    "triangular", {"a": 1.0, "b": 3.0}, _R, _triangular_build,
    _interval_expected,
    "determined exactly when [a, b] avoids straddling 0; a symmetric "
    "sub-interval of positive length around 0 would lower the norm",
    criterion=_interval_criterion, validate=_uniform_validate))

# lattice families on Z

_register(_Entry(
    "poisson", {"lam": 1.0}, _Z,
    lambda p: _pmf_measure_tail(stats.poisson(p["lam"]), 0),
    lambda p: NOT_DETERMINED,
    "the atom at 0 is its own reflection, so the norm is 1 - exp(-lam) < 1",
    validate=_positive_params("lam")))

def _poisson_shifted_criterion(p):
    if p["shift"] < 1:
        return None
    m = _pmf_measure_tail(stats.poisson(p["lam"]), 0, shift=p["shift"])
    return BorelSet.from_indices(INTEGERS, [a.t for a in m.atoms])


_register(_Entry(
    "poisson_shifted", {"lam": 1.0, "shift": 1}, _Z,
    lambda p: _pmf_measure_tail(stats.poisson(p["lam"]), 0, shift=p["shift"]),
    lambda p: DETERMINED if p["shift"] >= 1 else NOT_DETERMINED,
    "shifting the support into {1, 2, ...} removes the overlap at 0",
    criterion=_poisson_shifted_criterion,
    int_params=("shift",), validate=_positive_params("lam")))

_register(_Entry(
    "binomial", {"n": 5, "p": 0.4}, _Z,
    lambda p: _pmf_measure_bounded(stats.binom(p["n"], p["p"]), 0, p["n"]),
    lambda p: NOT_DETERMINED,
    "the atom at 0 is its own reflection; the norm is 1 - (1-p)^n < 1",
    int_params=("n",),
    validate=_and(_positive_params("n"), _prob_param("p"))))

_register(_Entry(
    "negative_binomial", {"r": 2.0, "p": 0.5}, _Z,
    lambda p: _pmf_measure_tail(stats.nbinom(p["r"], p["p"]), 0),
    lambda p: NOT_DETERMINED,
    "the atom at 0 is its own reflection; the norm is 1 - p^r < 1",
    validate=_and(_positive_params("r"), _prob_param("p"))))


def _hypergeom_lo(p):
    return max(0, p["n"] + p["K"] - p["N"])


def _hypergeom_validate(p):
    if p["N"] < 1 or not (0 <= p["K"] <= p["N"]) or not (0 <= p["n"] <= p["N"]):
        raise ParameterError("hypergeometric needs 0 <= K, n <= N")


_register(_Entry(
    "hypergeometric", {"N": 10, "K": 4, "n": 3}, _Z,
    lambda p: _pmf_measure_bounded(stats.hypergeom(p["N"], p["K"], p["n"]),
                                   _hypergeom_lo(p), min(p["n"], p["K"])),
    lambda p: DETERMINED if _hypergeom_lo(p) >= 1 else NOT_DETERMINED,
    "determined exactly when the support's lower end n+K-N clears 0",
    criterion=lambda p: None if _hypergeom_lo(p) < 1 else BorelSet.from_indices(
        INTEGERS, range(_hypergeom_lo(p), min(p["n"], p["K"]) + 1)),
    int_params=("N", "K", "n"), validate=_hypergeom_validate))

# circle families


def _arc_overlap_length(p) -> float:
    u = BorelSet.from_intervals(CIRCLE, [(p["a"], p["b"], False, False)])
    overlap = u.intersect(u.negate())
    return sum(iv.hi - iv.lo for iv in overlap.intervals)


def _uniform_arc_validate(p):
    if not (0.0 <= p["a"] < p["b"] <= TWO_PI):
        raise ParameterError("uniform_arc needs 0 <= a < b <= 2*pi")


_register(_Entry(
    "uniform_arc", {"a": 0.5, "b": 2.5}, _T,
    lambda p: poly_density_measure(CIRCLE, p["a"], p["b"],
                                   (1.0 / (p["b"] - p["a"]),)),
    lambda p: DETERMINED if _arc_overlap_length(p) == 0.0 else NOT_DETERMINED,
    "determined exactly when the arc meets its reflection in zero length",
    criterion=lambda p: (
        None if _arc_overlap_length(p) > 0.0 else BorelSet.from_intervals(
            CIRCLE, [(p["a"], p["b"], False, False)])),
    validate=_uniform_arc_validate))

_register(_Entry(
    "wrapped_cauchy", {"mu": 1.0, "gamma": 1.0}, _T,
    _circle_named_builder("wrapped_cauchy"),
    lambda p: NOT_DETERMINED,
    "density positive on the whole circle; the reflection overlap has mass",
    validate=_positive_params("gamma")))

_register(_Entry(
    "wrapped_normal", {"mu": 1.0, "sigma": 1.0}, _T,
    _circle_named_builder("wrapped_normal"),
    lambda p: NOT_DETERMINED,
    "density positive on the whole circle; the reflection overlap has mass",
    validate=_positive_params("sigma")))

_register(_Entry(
    "wrapped_exponential", {"lam": 1.0}, _T,
    _circle_named_builder("wrapped_exponential"),
    lambda p: NOT_DETERMINED,
    "density positive on the whole circle; the reflection overlap has mass",
    validate=_positive_params("lam")))

# product measures on Rbox


def _mv_pareto_build(p):
    dim = p["dim"]
    factor = named_density_measure(REAL_LINE, "pareto",
                                   {"alpha": p["alpha"], "xm": 1.0})
    return product_measure([factor] * dim)


def _mv_pareto_criterion(p):
    dim = p["dim"]
    return BorelSet.box(real_box(dim), [(1.0, math.inf, False, False)] * dim)


_register(_Entry(
    "multivariate_pareto", {"alpha": 2.0, "dim": 2},
    lambda p: real_box(p["dim"]), _mv_pareto_build,
    lambda p: DETERMINED,
    "the box (1, inf)^d misses its reflection and carries full mass",
    criterion=_mv_pareto_criterion, int_params=("dim",),
    validate=_positive_params("alpha", "dim")))


def _dirichlet_build(p):
    a = (p["a1"], p["a2"], p["a3"])
    a0 = sum(a)
    factors = [named_density_measure(REAL_LINE, "beta",
                                     {"a": ai, "b": a0 - ai}) for ai in a[:2]]
    return product_measure(factors)


_register(_Entry(
    "dirichlet", {"a1": 2.0, "a2": 3.0, "a3": 4.0},
    lambda p: real_box(2), _dirichlet_build,
    lambda p: DETERMINED,
    "stand-in by the product of its Beta marginals; the box (0, 1)^2 "
    "contains the simplex, misses its reflection and carries full mass",
    criterion=lambda p: BorelSet.box(real_box(2), [(0.0, 1.0, False, False)] * 2),
    validate=_positive_params("a1", "a2", "a3")))
