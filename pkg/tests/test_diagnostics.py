import math

import numpy as np
import pytest

from plurigreen.diagnostics import (boundary_limit_scan, default_directions,
                                    divisor_quotient_bound, extremal_harmonicity,
                                    geodesic_intersection_count, lelong_estimate,
                                    maximality_defect, quadric_support, submean_defect)
from plurigreen.disc_model import AnalyticDisc
from plurigreen.envelope import EnvelopeResult
from plurigreen.errors import DegenerateError
from plurigreen.functionals import PoleData
from plurigreen.polynomial import Polynomial
from plurigreen.reference import (green_ball_hyperplane, green_polydisc_hyperplane,
                                  green_polydisc_point)


def logabs(z):
    return math.log(np.linalg.norm(z)) if np.any(z) else -math.inf


def test_lelong_estimates():
    assert lelong_estimate(logabs, [0]) == pytest.approx(1, abs=5e-2)
    u = lambda z: math.log(max(abs(z[0]), abs(z[1])))  # noqa: E731
    assert lelong_estimate(u, [0, 0]) == pytest.approx(1, abs=5e-2)
    v = lambda z: math.log(abs(z[0]) ** 2) if z[0] else -math.inf  # noqa: E731
    assert lelong_estimate(v, [0, 0]) == pytest.approx(2, abs=5e-2)
    assert lelong_estimate(lambda z: 0.0, [0.1, 0]) == 0


def test_lelong_estimate_degenerate():
    with pytest.raises(DegenerateError):
        lelong_estimate(lambda z: -math.inf, [0, 0])


def test_submean_defects():
    u = lambda z: math.log(abs(z[0])) if z[0] else -math.inf  # noqa: E731
    assert abs(submean_defect(u, [0.5, 0.2], [1, 0], 0.1)) < 1e-8
    assert submean_defect(lambda z: -np.linalg.norm(z) ** 2, [0.1, 0], [1, 1], 0.1) < 0
    assert submean_defect(u, [0, 0.3], [1, 0], 0.1) == math.inf


def test_maximality_defects():
    dirs = default_directions(2)
    assert maximality_defect(green_ball_hyperplane, [0.5, 0.6], dirs, 0.05) <= 1e-3
    assert maximality_defect(green_polydisc_hyperplane, [0.3, 0.2], dirs, 0.05) <= 1e-10
    sq = lambda z: np.linalg.norm(z) ** 2  # noqa: E731
    assert maximality_defect(sq, [0.1, 0.1], dirs, 0.1) >= 0.01 / 2


def test_extremal_harmonicity_on_exact_disc():
    # the diagonal disc zeta -> (zeta, zeta) for the bidisc origin pole
    f = AnalyticDisc.from_coordinates([0, 1], [0, 1])
    res = EnvelopeResult(-math.inf, f, PoleData(((0, 1),)))
    assert extremal_harmonicity(res, green_polydisc_point) <= 1e-12
    const = EnvelopeResult(0.0, AnalyticDisc.constant([0.1, 0.2], 6), PoleData())
    assert extremal_harmonicity(const) == 0


def test_quotient_bound_closed_forms():
    z1 = Polynomial.variable(0, 2)
    region = [(1e-4, 0.1), (0.0, 0.7)]
    assert divisor_quotient_bound(green_ball_hyperplane, z1, region, 6) == pytest.approx(
        -0.5 * math.log(0.51), abs=1e-9)
    assert divisor_quotient_bound(green_polydisc_hyperplane, z1, region, 6) == pytest.approx(0)


def test_boundary_limits():
    vals = boundary_limit_scan(green_ball_hyperplane, np.array([0.8, 0.6]), [0.1, 0.01, 1e-4])
    assert abs(vals[-1]) < 1e-3
    stuck = boundary_limit_scan(green_polydisc_hyperplane, np.array([0.3, 1.0]), [0.01, 1e-4])
    assert stuck[-1] == pytest.approx(math.log(0.3), abs=1e-3)


def test_geodesic_counts(rng):
    assert geodesic_intersection_count(0.25, [1, 0]) == 2
    assert geodesic_intersection_count(0.25, np.array([1, 1j]) / math.sqrt(2)) == 0
    v = np.array([1, 0.99j]) / np.linalg.norm([1, 0.99])
    assert geodesic_intersection_count(0.25, v) == 0
    for _ in range(1000):
        w = rng.normal(size=2) + 1j * rng.normal(size=2)
        assert geodesic_intersection_count(0.5 * np.exp(1j * np.pi / 3), w / np.linalg.norm(w)) in (0, 2)


def test_quadric_support_minimum():
    S = quadric_support(0.25, radial=100, angular=32)
    pts, _ = S.arrays
    assert np.min(np.linalg.norm(pts, axis=1)) == pytest.approx(0.5, abs=1e-9)
