"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (also collected into the pytest
terminal summary) and asserts every case of the criterion.
"""

import time

import pytest

from plurigreen import suites as S

SEED = 7
RESULTS: dict[int, str] = {}


def _report(number: int, title: str, records, extra: str = ""):
    passed = sum(r.passed for r in records)
    ok = passed == len(records)
    line = (f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}: "
            f"{passed}/{len(records)} cases{extra}")
    RESULTS[number] = line
    print(line)
    for r in records:
        if not r.passed:
            print(f"    failed {r.case}: expected {r.expected} observed {r.observed} "
                  f"tol {r.tolerance} {r.detail}")
    return ok


def _run(number, title, *calls, extra=""):
    records = []
    for fn in calls:
        records += fn()
    ok = _report(number, title, records, extra)
    assert ok, RESULTS[number]


@pytest.mark.slow
def test_criterion_01_ball_hyperplane():
    t0 = time.perf_counter()
    records = S.suite_ball_hyperplane(SEED, 25, S.config(SEED, degree=6, restarts=24))
    elapsed = time.perf_counter() - t0
    records.append(S.CaseRecord("ball-hyperplane", "runtime", 300.0, elapsed, 0.0,
                                elapsed <= 300.0))
    ok = _report(1, "ball hyperplane envelope within [0, 2e-2] of closed form", records,
                 f", {elapsed:.0f}s")
    assert ok, RESULTS[1]


@pytest.mark.slow
def test_criterion_02_ball_point():
    _run(2, "ball point pole within [0, 2e-2], witness harmonicity <= 2e-2",
         lambda: S.suite_ball_point(SEED))


@pytest.mark.slow
def test_criterion_03_polydisc():
    _run(3, "bidisc hyperplane within [0, 2e-2], stuck boundary limit",
         lambda: S.suite_polydisc(SEED))


@pytest.mark.slow
def test_criterion_04_product_property():
    _run(4, "product property and weighted counterexample gap",
         lambda: S.suite_product(SEED), lambda: S.suite_counterexample_weights(SEED))


def test_criterion_05_riesz_below_lelong():
    _run(5, "per-disc H_R <= H_L + 1e-6 on 1000 random discs",
         lambda: S.suite_riesz_vs_lelong(SEED))


@pytest.mark.slow
def test_criterion_06_lelong_numbers():
    _run(6, "Lelong numbers of computed G_A and nu_A values",
         lambda: S.suite_lelong_numbers(SEED))


@pytest.mark.slow
def test_criterion_07_quadric_counterexample():
    _run(7, "quadric curve: even intersection counts, gap >= 0.68, PSH violation",
         lambda: S.suite_geodesic_curve(SEED))


@pytest.mark.slow
def test_criterion_08_dirichlet():
    _run(8, "Perron-Bremermann solution vs Poisson integral",
         lambda: S.suite_dirichlet(SEED))


@pytest.mark.slow
def test_criterion_09_boundary_limits():
    _run(9, "boundary limits of G_A on the ball",
         lambda: S.suite_boundary(SEED))


@pytest.mark.slow
def test_criterion_10_divisor_quotient():
    _run(10, "G_A - log|z1| bounded near A",
         lambda: S.suite_quotient(SEED))


@pytest.mark.slow
def test_criterion_11_determinism_and_monotonicity():
    _run(11, "determinism, weight monotonicity, degree escalation",
         lambda: S.suite_determinism(SEED), lambda: S.suite_properties(SEED))
