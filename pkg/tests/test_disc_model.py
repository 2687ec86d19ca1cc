import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from plurigreen.disc_model import (AnalyticDisc, disc_roots, multiplicity, point_preimages,
                                   preimages, surgery_constant_replace, surgery_shrink,
                                   surgery_zero_split)
from plurigreen.domains import Ball, disc_contained
from plurigreen.errors import DegenerateError, DomainError
from plurigreen.polynomial import Polynomial


def test_evaluation_and_center():
    f = AnalyticDisc.from_coordinates([0.1, 0.5], [0.2j, 0, 0.3])
    assert np.allclose(f(0), [0.1, 0.2j])
    assert np.allclose(f(0.5), [0.35, 0.2j + 0.075])
    assert f.degree == 2 and f.dimension == 2


def test_multiplicity_examples():
    f = AnalyticDisc.from_coordinates([0, 0, 1], [0, 0, 0, 1])
    assert multiplicity(f, 0) == 2
    g = AnalyticDisc.from_coordinates([0, 1])
    assert multiplicity(g, 0.3) == 1
    assert multiplicity(AnalyticDisc.constant([0.2, 0.1], 3), 0) == math.inf


def test_preimages_hyperplane():
    z1 = Polynomial.variable(0, 2)
    f = AnalyticDisc.from_coordinates([0, 0, 1], [0.1])
    assert preimages(f, z1) == [(0, 2)]


def test_preimages_of_mobius_like_disc():
    z = Polynomial.variable(0, 1)
    f = AnalyticDisc.from_coordinates([0.3, -1])
    (zeta, k), = preimages(f, z)
    assert zeta == pytest.approx(0.3) and k == 1


def test_double_root_from_square():
    z1 = Polynomial.variable(0, 2)
    f = AnalyticDisc.from_coordinates([0.25, -0.5], [0.3])
    (zeta, k), = preimages(f, z1 * z1)
    assert zeta == pytest.approx(0.5) and k == 2


def test_identically_vanishing_composition():
    z1 = Polynomial.variable(0, 2)
    f = AnalyticDisc.from_coordinates([0], [0.1, 0.4])
    with pytest.raises(DegenerateError):
        preimages(f, z1)


def test_point_preimages_common_zero():
    f = AnalyticDisc.from_coordinates([0.5, -1], [0.25, -0.5])
    (zeta, m), = point_preimages(f, [0, 0])
    assert zeta == pytest.approx(0.5) and m == 1
    with pytest.raises(DegenerateError):
        point_preimages(AnalyticDisc.constant([0.1, 0.2], 2), [0.1, 0.2])


@given(st.lists(st.complex_numbers(max_magnitude=0.9), min_size=1, max_size=5))
def test_roots_of_products_are_found(zs):
    zs = [z for z in zs if abs(z) > 0.02]
    if len(zs) < 1 or min((abs(a - b) for i, a in enumerate(zs) for b in zs[i + 1:]),
                          default=1) < 1e-2:
        return
    q = np.poly(zs)[::-1]
    found = disc_roots(q)
    assert sum(k for _, k in found) == len(zs)
    for z in zs:
        assert min(abs(z - r) for r, _ in found) < 1e-6


def test_surgeries():
    f = AnalyticDisc.from_coordinates([0.1, 0.3, 0.1], [0.2, -0.2j], overshoot=1.01)
    g = surgery_shrink(f, 1.005)
    assert np.allclose(g(0.5 * 1.005), f(0.5))
    h = surgery_zero_split(AnalyticDisc.from_coordinates([0.1, 0.3], overshoot=1.1), 0.05)
    assert np.allclose(h(0.05), h(0))
    k = surgery_constant_replace([0.2, 0.1], 0.5, 4.0, Ball(2))
    assert not k.is_constant()
    assert np.allclose(k(0.5), k(0))
    assert disc_contained(Ball(2), k, 0.0)
    with pytest.raises(DomainError):
        surgery_shrink(f, 2.0)
