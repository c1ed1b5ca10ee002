"""Catalog density families: normalization, support, validation."""

import math

import numpy as np
import pytest

from imchar.densities import family, family_names
from imchar.errors import ParameterError
from imchar.quadrature import integrate_fn

LINE_FAMILIES = {
    "normal": {"mu": 1.0, "sigma": 1.5},
    "laplace": {"mu": 0.5, "b": 2.0},
    "cauchy": {"mu": -1.0, "gamma": 0.7},
    "gamma": {"k": 2.5, "theta": 1.3},
    "chi2": {"n": 3},
    "levy": {"c": 1.0},
    "maxwell": {"a": 2.0},
    "pareto": {"alpha": 2.5, "xm": 1.5},
    "beta": {"a": 2.0, "b": 3.0},
    "arcsine": {},
    "exponential": {"lam": 2.0},
    "hyperexponential": {"p1": 0.3, "lam1": 1.0, "p2": 0.7, "lam2": 3.0},
}

CIRCLE_FAMILIES = {
    "wrapped_cauchy": {"mu": 1.0, "gamma": 0.5},
    "wrapped_normal": {"mu": 2.0, "sigma": 1.0},
    "wrapped_exponential": {"lam": 0.8},
}


@pytest.mark.parametrize("name,params", sorted(LINE_FAMILIES.items()))
def test_line_density_integrates_to_one(name, params):
    fam = family(name)
    lo, hi = fam.support(params)
    total = integrate_fn(lambda t: fam.pdf(params, t), lo, hi)
    assert total.value == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("name,params", sorted(CIRCLE_FAMILIES.items()))
def test_circle_density_integrates_to_one(name, params):
    fam = family(name)
    assert fam.circular
    total = integrate_fn(lambda t: fam.pdf(params, t), 0.0, 2.0 * math.pi)
    assert total.value == pytest.approx(1.0, abs=1e-8)


def test_density_vanishes_off_support():
    fam = family("gamma")
    params = {"k": 2.0, "theta": 1.0}
    vals = fam.pdf(params, np.array([-1.0, -0.5, 0.0]))
    assert np.all(vals == 0.0)
    fam = family("pareto")
    assert fam.pdf({"alpha": 2.0, "xm": 1.5}, np.array([1.0]))[0] == 0.0
    assert fam.support({"alpha": 2.0, "xm": 1.5})[0] == 1.5


def test_beta_edges_are_finite():
    # shape parameters below one blow up at the edges; the evaluator
    # must still return finite values strictly inside the support
    fam = family("arcsine")
    v = fam.pdf({}, np.array([1e-9, 0.5, 1 - 1e-9]))
    assert np.all(np.isfinite(v)) and np.all(v > 0)
    assert fam.pdf({}, np.array([0.0, 1.0])).tolist() == [0.0, 0.0]


def test_parameter_validation():
    with pytest.raises(ParameterError):
        family("normal").validate({"mu": 0.0, "sigma": -1.0})
    with pytest.raises(ParameterError):
        family("gamma").validate({"k": 0.0, "theta": 1.0})
    with pytest.raises(ParameterError):
        family("beta").validate({"a": 1.0, "b": 0.0})
    with pytest.raises(ParameterError):
        family("no-such-family")


def test_hyperexponential_mixture_weights():
    # weights must sum to one
    with pytest.raises(ParameterError):
        family("hyperexponential").validate(
            {"p1": 0.5, "lam1": 1.0, "p2": 0.2, "lam2": 2.0})
    # three branches are fine
    params = {"p1": 0.2, "lam1": 1.0, "p2": 0.3, "lam2": 2.0, "p3": 0.5, "lam3": 5.0}
    family("hyperexponential").validate(params)
    total = integrate_fn(lambda t: family("hyperexponential").pdf(params, t),
                         0.0, math.inf)
    assert total.value == pytest.approx(1.0, abs=1e-9)


def test_family_names_cover_catalog():
    names = family_names()
    for needed in ("normal", "gamma", "levy", "maxwell", "wrapped_cauchy"):
        assert needed in names
