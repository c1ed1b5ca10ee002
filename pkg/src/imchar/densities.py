"""Registry of named analytic density families.

Every family maps a parameter dict and an array of locations to density
values, vectorized, with zero returned outside the support. Families on
the real line use log-space evaluation where the naive formula would
overflow near a support edge. The three wrapped families live on the
circle with support [0, 2*pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special

from imchar.errors import ParameterError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class DensityFamily:
    name: str
    support_fn: Callable[[dict], tuple[float, float]]
    pdf: Callable[[dict, np.ndarray], np.ndarray]
    validate: Callable[[dict], None]
    circular: bool = False

    def support(self, params: dict) -> tuple[float, float]:
        return self.support_fn(params)


_REGISTRY: dict[str, DensityFamily] = {}


def register(family: DensityFamily):
    _REGISTRY[family.name] = family


def family(name: str) -> DensityFamily:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ParameterError(f"unknown density family {name!r}; "
                             f"known: {sorted(_REGISTRY)}") from None


def family_names() -> list[str]:
    return sorted(_REGISTRY)


def _need(params: dict, *names: str):
    for nm in names:
        if nm not in params:
            raise ParameterError(f"missing density parameter {nm!r}")
        v = params[nm]
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise ParameterError(f"density parameter {nm!r} must be a finite number, got {v!r}")


def _positive(params: dict, *names: str):
    _need(params, *names)
    for nm in names:
        if params[nm] <= 0:
            raise ParameterError(f"density parameter {nm!r} must be positive, got {params[nm]}")


def _masked_exp(logp: np.ndarray, mask: np.ndarray) -> np.ndarray:
    out = np.zeros_like(logp, dtype=float)
    np.exp(logp, where=mask, out=out)
    return out


# -- families on R ----------------------------------------------------------

def _normal_pdf(p, t):
    z = (t - p["mu"]) / p["sigma"]
    return np.exp(-0.5 * z * z) / (p["sigma"] * math.sqrt(TWO_PI))


def _laplace_pdf(p, t):
    return np.exp(-np.abs(t - p["mu"]) / p["b"]) / (2.0 * p["b"])


def _cauchy_pdf(p, t):
    g = p["gamma"]
    d = t - p["mu"]
    return g / (math.pi * (d * d + g * g))


def _gamma_pdf(p, t):
    k, th = p["k"], p["theta"]
    t = np.asarray(t, dtype=float)
    mask = t > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        logp = (k - 1.0) * np.log(t) - t / th - special.gammaln(k) - k * math.log(th)
    return _masked_exp(np.where(mask, logp, -np.inf), mask)


def _chi2_pdf(p, t):
    n = p["n"]
    t = np.asarray(t, dtype=float)
    mask = t > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        logp = (0.5 * n - 1.0) * np.log(t) - 0.5 * t - special.gammaln(0.5 * n) - 0.5 * n * math.log(2.0)
    return _masked_exp(np.where(mask, logp, -np.inf), mask)


def _levy_pdf(p, t):
    c = p["c"]
    t = np.asarray(t, dtype=float)
    mask = t > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        logp = 0.5 * math.log(c / TWO_PI) - 1.5 * np.log(t) - c / (2.0 * t)
    return _masked_exp(np.where(mask, logp, -np.inf), mask)


def _maxwell_pdf(p, t):
    a = p["a"]
    t = np.asarray(t, dtype=float)
    mask = t > 0.0
    tt = np.where(mask, t, 0.0)
    return np.where(mask, math.sqrt(2.0 / math.pi) * tt * tt * np.exp(-tt * tt / (2 * a * a)) / a**3, 0.0)


def _pareto_pdf(p, t):
    alpha, xm = p["alpha"], p["xm"]
    t = np.asarray(t, dtype=float)
    mask = t > xm
    with np.errstate(divide="ignore", invalid="ignore"):
        logp = math.log(alpha) + alpha * math.log(xm) - (alpha + 1.0) * np.log(np.where(mask, t, 1.0))
    return _masked_exp(np.where(mask, logp, -np.inf), mask)


def _beta_pdf(p, t):
    a, b = p["a"], p["b"]
    t = np.asarray(t, dtype=float)
    mask = (t > 0.0) & (t < 1.0)
    tt = np.where(mask, t, 0.5)
    logp = (a - 1.0) * np.log(tt) + (b - 1.0) * np.log1p(-tt) - special.betaln(a, b)
    return _masked_exp(np.where(mask, logp, -np.inf), mask)


def _arcsine_pdf(p, t):
    t = np.asarray(t, dtype=float)
    mask = (t > 0.0) & (t < 1.0)
    tt = np.where(mask, t, 0.5)
    return np.where(mask, 1.0 / (math.pi * np.sqrt(tt * (1.0 - tt))), 0.0)


def _expon_pdf(p, t):
    lam = p["lam"]
    t = np.asarray(t, dtype=float)
    mask = t > 0.0
    return np.where(mask, lam * np.exp(-lam * np.where(mask, t, 0.0)), 0.0)


def _hyperexp_pdf(p, t):
    t = np.asarray(t, dtype=float)
    mask = t > 0.0
    out = np.zeros_like(t, dtype=float)
    for i in range(1, _hyperexp_branches(p) + 1):
        pi, li = p[f"p{i}"], p[f"lam{i}"]
        out += np.where(mask, pi * li * np.exp(-li * np.where(mask, t, 0.0)), 0.0)
    return out


def _hyperexp_branches(p: dict) -> int:
    k = 0
    while f"p{k + 1}" in p:
        k += 1
    return k


def _hyperexp_validate(p: dict):
    k = _hyperexp_branches(p)
    if k < 1:
        raise ParameterError("hyperexponential needs branch parameters p1, lam1, ...")
    names = [f"p{i}" for i in range(1, k + 1)] + [f"lam{i}" for i in range(1, k + 1)]
    _positive(p, *names)
    extra = set(p) - set(names)
    if extra:
        raise ParameterError(f"unexpected hyperexponential parameters {sorted(extra)}")
    tot = math.fsum(p[f"p{i}"] for i in range(1, k + 1))
    if abs(tot - 1.0) > 1e-9:
        raise ParameterError(f"hyperexponential branch probabilities sum to {tot}, expected 1")


# -- families on T ----------------------------------------------------------

def _wrapped_cauchy_pdf(p, t):
    mu, gamma = p["mu"], p["gamma"]
    rho = math.exp(-gamma)
    t = np.asarray(t, dtype=float)
    return (1.0 - rho * rho) / (TWO_PI * (1.0 + rho * rho - 2.0 * rho * np.cos(t - mu)))


def _wrapped_normal_pdf(p, t):
    # direct wrapping; the tail beyond the truncation is < 1e-16 for
    # the sigma range the validator admits
    mu, sigma = p["mu"], p["sigma"]
    t = np.asarray(t, dtype=float)
    kmax = int(math.ceil((9.0 * sigma + abs(mu) + TWO_PI) / TWO_PI)) + 1
    out = np.zeros_like(t, dtype=float)
    c = 1.0 / (sigma * math.sqrt(TWO_PI))
    for k in range(-kmax, kmax + 1):
        z = (t + TWO_PI * k - mu) / sigma
        out += c * np.exp(-0.5 * z * z)
    return out


def _wrapped_exp_pdf(p, t):
    lam = p["lam"]
    t = np.asarray(t, dtype=float)
    return lam * np.exp(-lam * t) / (1.0 - math.exp(-TWO_PI * lam))


def _wrapped_normal_validate(p):
    _positive(p, "sigma")
    _need(p, "mu")
    if p["sigma"] > 20.0:
        raise ParameterError("wrapped normal sigma above 20 loses all angular structure")


def _const(lo: float, hi: float):
    return lambda p: (lo, hi)


def _v_loc_scale(scale_name: str):
    def check(p):
        _positive(p, scale_name)
        _need(p, "mu")
    return check


register(DensityFamily("normal", _const(-math.inf, math.inf), _normal_pdf,
                       _v_loc_scale("sigma")))
register(DensityFamily("laplace", _const(-math.inf, math.inf), _laplace_pdf,
                       _v_loc_scale("b")))
register(DensityFamily("cauchy", _const(-math.inf, math.inf), _cauchy_pdf,
                       _v_loc_scale("gamma")))
register(DensityFamily("gamma", _const(0.0, math.inf), _gamma_pdf,
                       lambda p: _positive(p, "k", "theta")))
register(DensityFamily("chi2", _const(0.0, math.inf), _chi2_pdf,
                       lambda p: _positive(p, "n")))
register(DensityFamily("levy", _const(0.0, math.inf), _levy_pdf,
                       lambda p: _positive(p, "c")))
register(DensityFamily("maxwell", _const(0.0, math.inf), _maxwell_pdf,
                       lambda p: _positive(p, "a")))
register(DensityFamily("pareto", lambda p: (p["xm"], math.inf), _pareto_pdf,
                       lambda p: _positive(p, "alpha", "xm")))
register(DensityFamily("beta", _const(0.0, 1.0), _beta_pdf,
                       lambda p: _positive(p, "a", "b")))
register(DensityFamily("arcsine", _const(0.0, 1.0), _arcsine_pdf, lambda p: None))
register(DensityFamily("exponential", _const(0.0, math.inf), _expon_pdf,
                       lambda p: _positive(p, "lam")))
register(DensityFamily("hyperexponential", _const(0.0, math.inf), _hyperexp_pdf,
                       _hyperexp_validate))
register(DensityFamily("wrapped_cauchy", _const(0.0, TWO_PI), _wrapped_cauchy_pdf,
                       _v_loc_scale("gamma"), circular=True))
register(DensityFamily("wrapped_normal", _const(0.0, TWO_PI), _wrapped_normal_pdf,
                       _wrapped_normal_validate, circular=True))
register(DensityFamily("wrapped_exponential", _const(0.0, TWO_PI), _wrapped_exp_pdf,
                       lambda p: _positive(p, "lam"), circular=True))
