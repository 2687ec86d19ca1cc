import math

import numpy as np
import pytest

from plurigreen.disc_model import AnalyticDisc
from plurigreen.domains import Ball
from plurigreen.errors import DomainError
from plurigreen.functionals import (PoleData, disc_potential, lelong, poisson, riesz_divisor,
                                    riesz_jensen)
from plurigreen.polynomial import Polynomial
from plurigreen.subspace import ComplexSubspace, FiniteWeights, SubspaceMultiplicity


def mobius_poly(x, degree=40):
    """Truncated Taylor series of the disc automorphism sending 0 to x."""
    k = np.arange(1, degree + 1)
    c = np.zeros(degree + 1, dtype=complex)
    c[0] = x
    c[1:] = -(1 - abs(x) ** 2) * np.conj(x) ** (k - 1)
    return c


def test_poisson_examples():
    f = AnalyticDisc.from_coordinates([0, 1])
    assert poisson(lambda z: np.full(z.shape[:-1], 2.5), f).value == pytest.approx(2.5)
    assert poisson(lambda z: np.abs(z[..., 0]) ** 2, f).value == pytest.approx(1.0)
    g = AnalyticDisc.from_coordinates([0.3, 0.2], [0])
    assert poisson(lambda z: np.real(z[..., 0]), g).value == pytest.approx(0.3, abs=1e-12)


def test_poisson_quadrature_converges():
    g = AnalyticDisc.from_coordinates([0.1, 0.4, 0.2j])
    phi = lambda z: np.exp(np.real(z[..., 0]))  # noqa: E731
    assert abs(poisson(phi, g, K=512).value - poisson(phi, g, K=1024).value) < 1e-6


def test_poisson_clips_minus_infinity():
    f = AnalyticDisc.from_coordinates([0, 0.5])
    with np.errstate(divide="ignore"):
        v = poisson(lambda z: np.log(np.abs(z[..., 0] - 0.5)), f)
    assert v.clipped


def test_poisson_domain_check():
    f = AnalyticDisc.from_coordinates([0, 2])
    with pytest.raises(DomainError):
        poisson(lambda z: z[..., 0].real, f, domain=Ball(1))


def test_lelong_one_variable_pole():
    f = AnalyticDisc(mobius_poly(0.3)[None, :])
    v, poles = lelong(FiniteWeights.point([0]), f)
    assert v.value == pytest.approx(math.log(0.3), abs=1e-6)
    assert disc_potential(poles, 0) == pytest.approx(v.value, abs=1e-10)


def test_lelong_bidisc_diagonal():
    c = mobius_poly(0.5)
    f = AnalyticDisc(np.vstack([c, c]))
    v, _ = lelong(FiniteWeights.point([0, 0]), f)
    assert v.value == pytest.approx(math.log(0.5), abs=1e-6)


def test_lelong_zero_weight_and_constant_in_pole_set():
    f = AnalyticDisc.from_coordinates([0.2, 0.1])
    assert lelong(FiniteWeights(()), f)[0].value == 0
    z1 = Polynomial.variable(0, 2)
    g = AnalyticDisc.from_coordinates([0], [0.3, 0.1])
    assert lelong(SubspaceMultiplicity(ComplexSubspace((z1,))), g)[0].value == -math.inf


def test_riesz_square_divisor():
    z1 = Polynomial.variable(0, 2)
    A = ComplexSubspace((z1 * z1,))
    f = AnalyticDisc(np.vstack([mobius_poly(0.5), np.r_[0.3, np.zeros(40)]]))
    hr, _ = riesz_divisor(A, f)
    hl, _ = lelong(SubspaceMultiplicity(A), f)
    assert hr.value == pytest.approx(2 * math.log(0.5), abs=1e-5)
    assert hl.value == pytest.approx(hr.value, abs=1e-6)
    assert riesz_jensen(A, f) == pytest.approx(hr.value, abs=1e-5)


def test_riesz_avoiding_disc_is_zero():
    z1 = Polynomial.variable(0, 2)
    f = AnalyticDisc.from_coordinates([0.5, 0.1], [0, 0.3])
    assert riesz_divisor(ComplexSubspace((z1,)), f)[0].value == 0


def test_disc_potential_examples():
    p = PoleData(((0.3, 1),))
    assert disc_potential(p, 0) == pytest.approx(math.log(0.3))
    assert disc_potential(p, 0.3) == -math.inf
    q = PoleData(((0.3, 1), (0.5, 2)))
    assert disc_potential(q, 0) == pytest.approx(math.log(0.3) + 2 * math.log(0.5))
    with pytest.raises(DomainError):
        PoleData(((0.1, 0),))
