import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from plurigreen.complex_core import (BlaschkeProduct, MobiusFactor, ball_automorphism,
                                     blaschke_eval, blaschke_rescale_check, disc_green,
                                     poincare_distance)
from plurigreen.errors import DomainError

radius = st.floats(0, 0.95)
angle = st.floats(0, 2 * math.pi)
disc_point = st.builds(lambda r, t: r * complex(math.cos(t), math.sin(t)), radius, angle)


def test_poincare_distance_known_value():
    assert poincare_distance(0, 0.5) == pytest.approx(math.atanh(0.5), abs=1e-15)


def test_poincare_distance_rejects_outside():
    with pytest.raises(DomainError):
        poincare_distance(0, 1.0)


@given(disc_point, disc_point, disc_point)
def test_triangle_inequality(z, w, u):
    assert poincare_distance(z, u) <= poincare_distance(z, w) + poincare_distance(w, u) + 1e-10


@given(disc_point, disc_point)
def test_green_is_log_tanh_of_distance(z, w):
    if abs(z - w) < 1e-6:
        return
    lhs = 2 * math.pi * disc_green(z, w)
    assert lhs == pytest.approx(math.log(math.tanh(poincare_distance(z, w))), abs=1e-10)


def test_disc_green_diagonal_is_minus_infinity():
    assert disc_green(0.3j, 0.3j) == -math.inf


def test_blaschke_zero_and_unimodular():
    B = BlaschkeProduct.from_zeros([(0.5, 2), 0.2j])
    assert abs(B(0.5)) < 1e-15
    t = np.exp(1j * np.linspace(0, 2 * np.pi, 50))
    assert np.allclose(np.abs(B(t)), 1, atol=1e-12)
    assert B.total_exponent == 3


def test_blaschke_rejects_outside_points():
    with pytest.raises(DomainError):
        blaschke_eval(BlaschkeProduct.from_zeros([0.1]), 1.5)
    with pytest.raises(DomainError):
        MobiusFactor(1.0)


def test_rescale_check_edges():
    B = BlaschkeProduct.from_zeros([0.5, 0.5])
    log_b = 2 * math.log(0.5)
    assert blaschke_rescale_check(B, log_b + 0.1)
    # equality on the strict side fails
    assert not blaschke_rescale_check(B, log_b)
    with pytest.raises(DomainError):
        blaschke_rescale_check(B, 0.0)


def test_ball_automorphism_pinned_values():
    a = np.array([0.3, 0.4j])
    assert np.allclose(ball_automorphism(a, a), 0, atol=1e-15)
    assert np.allclose(ball_automorphism(a, np.zeros(2)), a)
    z = np.array([0.5, 0.6])
    out = ball_automorphism(np.array([0, 0.6]), z)
    assert np.allclose(out, [-0.5 / 0.8, 0], atol=1e-14)


def test_ball_automorphism_at_origin_is_negation():
    z = np.array([0.1, -0.2j])
    assert np.array_equal(ball_automorphism(np.zeros(2), z), -z)


def test_ball_automorphism_stays_inside(rng):
    for _ in range(1000):
        a, z = (rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3)))
        a *= rng.uniform() ** 0.2 * 0.999 / np.linalg.norm(a)
        z *= rng.uniform() ** 0.2 * 0.999 / np.linalg.norm(z)
        assert np.linalg.norm(ball_automorphism(a, z)) < 1
