import math

import numpy as np
import pytest

from plurigreen.complex_core import ball_automorphism
from plurigreen.errors import DomainError
from plurigreen.reference import (disc_mobius_log, green_ball_hyperplane, green_ball_point,
                                  green_polydisc_hyperplane, green_polydisc_point,
                                  green_product, kobayashi_ball, quadric_curve)


def test_ball_point_examples():
    x = np.array([0.3, 0.4j])
    assert green_ball_point([0, 0], x) == pytest.approx(math.log(0.5))
    assert green_ball_point(x, x) == -math.inf
    assert green_ball_point([0, 0.6], [0.5, 0.6]) == pytest.approx(math.log(0.625))


def test_ball_hyperplane_examples():
    assert green_ball_hyperplane([0.5, 0.6]) == pytest.approx(-0.4700036, abs=1e-6)
    assert green_ball_hyperplane([0, 0.3]) == -math.inf
    p = np.array([0.6, 0.8])
    assert green_ball_hyperplane((1 - 1e-9) * p) == pytest.approx(0, abs=1e-6)


def test_hyperplane_is_infimum_over_points(rng):
    for _ in range(25):
        x = rng.normal(size=2) + 1j * rng.normal(size=2)
        x *= 0.9 * rng.uniform() / np.linalg.norm(x)
        best = green_ball_point([0, x[1]], x)
        assert green_ball_hyperplane(x) == pytest.approx(best, abs=1e-6)
        for _ in range(5):
            a = np.array([0, x[1] + 0.1 * rng.normal()])
            if abs(a[1]) < 1:
                assert green_ball_point(a, x) >= best - 1e-9


def test_polydisc_and_product():
    assert green_polydisc_hyperplane([0.3, 0.9]) == pytest.approx(-1.2039728, abs=1e-6)
    assert green_polydisc_hyperplane([0, 0.2]) == -math.inf
    assert green_product([-1.386, -0.693]) == -0.693
    assert green_product([-math.inf, -0.2]) == -0.2
    assert green_polydisc_point([0.25, 0.5], (1, 2)) == pytest.approx(-1.3862944, abs=1e-6)
    with pytest.raises(DomainError):
        green_polydisc_hyperplane([0.1, 1.0])


def test_kobayashi_matches_green(rng):
    for _ in range(100):
        a, x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        a *= 0.95 * rng.uniform() / np.linalg.norm(a)
        x *= 0.95 * rng.uniform() / np.linalg.norm(x)
        assert kobayashi_ball(x, a) == pytest.approx(green_ball_point(a, x), abs=1e-12)
        assert kobayashi_ball(x, a) == pytest.approx(
            math.log(np.linalg.norm(ball_automorphism(a, x))), abs=1e-12)
    assert kobayashi_ball([0.2], [0.5]) == pytest.approx(disc_mobius_log(0.5, 0.2))


def test_quadric_curve_lies_on_quadric():
    u = np.array([0.5, 0.3 + 0.4j, 1.2j])
    pts = quadric_curve(0.25, u)
    assert np.allclose(pts[:, 0] ** 2 + pts[:, 1] ** 2, 0.25)


def test_closed_forms_nonpositive(rng):
    for _ in range(200):
        x = rng.normal(size=2) + 1j * rng.normal(size=2)
        x *= 0.99 * rng.uniform() / np.linalg.norm(x)
        assert green_ball_hyperplane(x) <= 0
        assert green_polydisc_hyperplane(x) <= 0
