import numpy as np
import pytest

from plurigreen.errors import DomainError
from plurigreen.polynomial import Polynomial


def test_arithmetic_and_evaluation():
    z, w = Polynomial.variables(2)
    p = (z + 2 * w) ** 2 - 1
    pt = np.array([0.3 + 0.1j, -0.2j])
    assert p(pt) == pytest.approx((pt[0] + 2 * pt[1]) ** 2 - 1)
    assert p.degree == 2


def test_triples_round_trip():
    z, w = Polynomial.variables(2)
    p = z * w - 0.25 + 1j * z
    assert Polynomial.from_triples(2, p.to_triples()) == p


def test_compose_matches_pointwise():
    z, w = Polynomial.variables(2)
    p = z * z + w * w - 0.25
    coeffs = np.array([[0.1, 0.5, 0.2j], [0.0, 0.3, -0.1]])
    q = p.compose(coeffs)
    zeta = 0.4 - 0.3j
    f = np.array([np.polyval(c[::-1], zeta) for c in coeffs])
    assert np.polyval(q[::-1], zeta) == pytest.approx(p(f))


def test_taylor_at_reexpands():
    z, w = Polynomial.variables(2)
    p = z**3 * w + w
    c = np.array([0.2, -0.5j])
    t = Polynomial(2, p.taylor_at(c))
    y = np.array([0.1j, 0.05])
    assert t(y) == pytest.approx(p(c + y))


def test_bad_dimensions():
    with pytest.raises(DomainError):
        Polynomial.variable(0, 2) + Polynomial.variable(0, 3)
    with pytest.raises(DomainError):
        Polynomial(2, {(1,): 1.0})
