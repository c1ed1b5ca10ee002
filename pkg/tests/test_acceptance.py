"""Acceptance gate: eight release criteria, one printed verdict line each.

Every criterion runs in full and prints PASS or FAIL even when an
earlier check inside it has already gone wrong; the assertion fires
afterwards with the collected problems.
"""

import math

import numpy as np
import pytest

import helpers
from imchar import catalog
from imchar.charfn import (default_dual_grid, eval_cf_with_error, psd_check)
from imchar.decompose import hahn_jordan, sym_anti_split, v_set_certificate
from imchar.determine import bnorm_im, companion, is_determined, reconstruct
from imchar.domains import REAL_LINE
from imchar.errors import UnsupportedDomainError
from imchar.finite import oracle_agreement, random_measures, to_measure
from imchar.measures import from_atoms, mass, measure_of, subtract, total_variation

SEED = 20260817


def _run(capsys, idx, name, body):
    problems = []
    try:
        body(problems)
    except Exception as exc:  # the gate line must still print
        problems.append(f"unexpected {type(exc).__name__}: {exc}")
    verdict = "PASS" if not problems else "FAIL"
    with capsys.disabled():
        print(f"\nACCEPTANCE {idx} {name}: {verdict}")
    assert not problems, (f"criterion {idx} ({name}), "
                          f"{len(problems)} problem(s):\n"
                          + "\n".join(problems[:20]))


def _measure(name, **params):
    return catalog.make_measure(catalog.spec(name, **params))


def test_criterion_1_catalog_regression(capsys):
    def body(problems):
        one_sided = ("arcsine", "beta", "gamma", "hyperexponential",
                     "levy", "maxwell", "pareto", "chi2")
        for name in one_sided:
            v = is_determined(_measure(name))
            if not v.determined or abs(v.norm_im - 1.0) > 1e-6:
                problems.append(f"{name}: determined={v.determined} "
                                f"norm={v.norm_im!r}")

        straddling = (("normal", {}), ("normal", {"mu": 3.0}),
                      ("laplace", {}), ("laplace", {"mu": 2.0}),
                      ("cauchy", {}), ("cauchy", {"mu": 1.5}))
        for name, params in straddling:
            v = is_determined(_measure(name, **params))
            if v.determined:
                problems.append(f"{name}{params}: wrongly determined, "
                                f"norm={v.norm_im!r}")

        endpoints = ((1.0, 3.0, True), (-1.0, 3.0, False),
                     (-3.0, -1.0, True), (-1.0, 1.0, False))
        for family in ("uniform", "triangular"):
            for a, b, want in endpoints:
                v = is_determined(_measure(family, a=a, b=b))
                if v.determined != want:
                    problems.append(f"{family}[{a},{b}]: determined="
                                    f"{v.determined}, expected {want}")

        for name in ("poisson", "binomial", "negative_binomial",
                     "hypergeometric"):
            v = is_determined(_measure(name))
            if v.determined:
                problems.append(f"{name}: wrongly determined")

        for name in ("wrapped_cauchy", "wrapped_normal",
                     "wrapped_exponential"):
            v = is_determined(_measure(name))
            if v.determined:
                problems.append(f"{name}: wrongly determined")

        mismatches = [r for r in catalog.classify_all() if not r.agrees]
        for r in mismatches:
            problems.append(f"catalog mismatch: {r!r}")

    _run(capsys, 1, "catalog-regression", body)


def test_criterion_2_reference_norms(capsys):
    def body(problems):
        cases = (
            ("uniform[-1,3]", bnorm_im(_measure("uniform", a=-1.0, b=3.0)),
             0.5, 1e-9),
            ("normal(1,1)", bnorm_im(_measure("normal", mu=1.0, sigma=1.0)),
             math.erf(1.0 / math.sqrt(2.0)), 1e-6),
            ("poisson(1)", bnorm_im(_measure("poisson", lam=1.0)),
             1.0 - math.exp(-1.0), 1e-9),
        )
        for label, got, want, tol in cases:
            if abs(got - want) > tol:
                problems.append(f"{label}: norm {got!r}, expected {want!r} "
                                f"within {tol}")

    _run(capsys, 2, "reference-norms", body)


def test_criterion_3_round_trip(capsys):
    def body(problems):
        covered = 0
        for entry in catalog.catalog_list_obj():
            m = _measure(entry["name"])
            try:
                norm = bnorm_im(m)
            except UnsupportedDomainError:
                continue
            if norm < 1.0 - 1e-9:
                continue
            rebuilt = reconstruct(sym_anti_split(m).antisymmetric_part)
            diff = total_variation(subtract(rebuilt, m))
            covered += 1
            if diff > 1e-9:
                problems.append(f"{entry['name']}: round trip off by {diff:.3e}")
        if covered < 10:
            problems.append(f"only {covered} determined catalog measures seen")

        # imaginary part sin(x) comes from the antisymmetric half of a
        # unit atom at 1; reconstruction must return exactly that atom
        eta = from_atoms(REAL_LINE, [(1.0, 0.5), (-1.0, -0.5)])
        rebuilt = reconstruct(eta)
        atoms = [(a.t, a.w) for a in rebuilt.atoms]
        if atoms != [(1.0, 1.0)] or rebuilt.density:
            problems.append(f"sine reconstruction gave {atoms}, "
                            f"{len(rebuilt.density)} density terms")

    _run(capsys, 3, "round-trip", body)


def test_criterion_4_companions(capsys):
    def body(problems):
        rng = np.random.default_rng(SEED)
        for i in range(100):
            m = helpers.paired_discrete_probability(rng)
            a = float(rng.uniform(0.5, 6.0))
            zero = companion(m, "zero")
            pair = companion(m, ("pair", a))
            for c in (zero, pair):
                nu = c.companion
                if abs(mass(nu) - 1.0) > 1e-12:
                    problems.append(f"trial {i} {c.sigma_choice}: mass "
                                    f"{mass(nu)!r}")
                if nu.atoms and min(at.w for at in nu.atoms) < 0.0:
                    problems.append(f"trial {i} {c.sigma_choice}: negative weight")
                if c.max_im_discrepancy > 1e-9:
                    problems.append(f"trial {i} {c.sigma_choice}: im gap "
                                    f"{c.max_im_discrepancy:.3e}")
                if c.distinctness <= 1e-6:
                    problems.append(f"trial {i} {c.sigma_choice}: companion "
                                    f"too close to the original")
            if total_variation(subtract(zero.companion, pair.companion)) <= 1e-6:
                problems.append(f"trial {i}: the two sigma companions coincide")

    _run(capsys, 4, "companions", body)


def test_criterion_5_carrier_sets(capsys):
    def body(problems):
        rng = np.random.default_rng(SEED + 1)

        def check(eta, cert, sets, exact, tag):
            tol = 0.0 if exact else 1e-12
            if not cert.disjointness_ok:
                problems.append(f"{tag}: V meets -V")
            half = 0.5 * total_variation(eta)
            for mval in cert.masses:
                if abs(mval - half) > 1e-12:
                    problems.append(f"{tag}: mass {mval!r} vs half-norm {half!r}")
            if exact and len(set(cert.masses)) > 1:
                problems.append(f"{tag}: masses not bitwise equal {cert.masses}")
            jp = hahn_jordan(eta)
            v = cert.v_set
            for e in sets:
                lhs = measure_of(jp.positive_part, e)
                rhs = measure_of(eta, e.intersect(v))
                if abs(lhs - rhs) > tol:
                    problems.append(f"{tag}: positive carrier identity off "
                                    f"by {abs(lhs - rhs):.3e}")
                lhs = measure_of(jp.negative_part, e)
                rhs = -measure_of(eta, e.intersect(v.negate()))
                if abs(lhs - rhs) > tol:
                    problems.append(f"{tag}: negative carrier identity off "
                                    f"by {abs(lhs - rhs):.3e}")

        for i in range(500):
            eta = helpers.antisymmetric_discrete(rng)
            cert = v_set_certificate(eta)
            anchors = [a.t for a in eta.atoms]
            sets = [helpers.random_borel_r(rng, anchors) for _ in range(10)]
            check(eta, cert, sets, exact=False, tag=f"R trial {i}")

        for i in range(500):
            n = int(rng.integers(2, 17))
            vec = random_measures(n, 1, "antisymmetric",
                                  seed=int(rng.integers(0, 2**31)))[0]
            eta = to_measure(vec)
            cert = v_set_certificate(eta)
            sets = [helpers.random_subset_zn(rng, n) for _ in range(10)]
            check(eta, cert, sets, exact=True, tag=f"Z_{n} trial {i}")

    _run(capsys, 5, "carrier-sets", body)


def test_criterion_6_finite_oracle(capsys):
    def body(problems):
        total = 0
        for n in range(2, 13):
            report = oracle_agreement(n, 500, seed=SEED + n)
            total += report["agreements"]
            if report["disagreements"]:
                problems.append(f"n={n}: {report['disagreements']} disagreements")
        if total != 5500:
            problems.append(f"agreement total {total} != 5500")

    _run(capsys, 6, "finite-oracle", body)


def test_criterion_7_transform_consistency(capsys):
    def body(problems):
        rng = np.random.default_rng(SEED + 3)
        measures = [("discrete", helpers.paired_discrete_probability(rng))
                    for _ in range(42)]
        measures += [
            ("uniform", _measure("uniform", a=-1.0, b=3.0)),
            ("normal", _measure("normal")),
            ("laplace", _measure("laplace")),
            ("gamma", _measure("gamma")),
            ("exponential", _measure("exponential")),
            ("triangular", _measure("triangular", a=-1.0, b=3.0)),
            ("beta", _measure("beta")),
            ("arcsine", _measure("arcsine")),
        ]
        assert len(measures) == 50
        for tag, m in measures:
            eta = sym_anti_split(m).antisymmetric_part
            for x in default_dual_grid(m.domain, 64):
                fm, em, _ = eval_cf_with_error(m, x)
                fe, ee, _ = eval_cf_with_error(eta, x)
                gap = abs(fe - 1j * fm.imag)
                if gap > 1e-9 + em + ee:
                    problems.append(f"{tag} at x={x}: |anti transform - "
                                    f"i Im f| = {gap:.3e}")

    _run(capsys, 7, "transform-consistency", body)


def test_criterion_8_positive_definiteness(capsys):
    def body(problems):
        rng = np.random.default_rng(SEED + 4)
        entries = [e for e in catalog.catalog_list_obj()
                   if catalog.domain_of(catalog.spec(e["name"])).kind != "Rbox"]
        entries = entries[:20]
        if len(entries) != 20:
            problems.append(f"wanted 20 transform-capable entries, "
                            f"got {len(entries)}")
        for e in entries:
            sp = catalog.spec(e["name"])
            m = catalog.make_measure(sp)
            kind = catalog.domain_of(sp).kind
            if kind == "R":
                pts = sorted(float(x) for x in rng.uniform(-15.0, 15.0, 8))
            elif kind == "T":
                pts = sorted(int(k) for k in
                             rng.choice(np.arange(-10, 11), 8, replace=False))
            else:  # Z: dual points are angles
                pts = sorted(float(x) for x in rng.uniform(-3.0, 3.0, 8))
            rep = psd_check(m, pts)
            if rep.min_eigenvalue < -1e-8:
                problems.append(f"{e['name']}: Gram eigenvalue "
                                f"{rep.min_eigenvalue:.3e}")

        # i sin(x)/2 alone is no transform of a probability measure:
        # its Gram matrix on {0, 1} is visibly indefinite
        eta = from_atoms(REAL_LINE, [(1.0, 0.25), (-1.0, -0.25)])
        rep = psd_check(eta, (0.0, 1.0))
        if rep.is_psd or rep.min_eigenvalue >= -1e-3:
            problems.append(f"indefinite control passed psd_check: "
                            f"{rep.min_eigenvalue!r}")

    _run(capsys, 8, "positive-definiteness", body)
