import math

import numpy as np
import pytest

from plurigreen.errors import DomainError
from plurigreen.polynomial import Polynomial
from plurigreen.subspace import (ComplexSubspace, FiniteWeights, SubspaceIndicator,
                                 SubspaceMultiplicity, is_divisor, log_max_generators,
                                 multiplicity_nu, nearest_zero, vanishing_order)


def test_multiplicity_of_singular_ideal():
    z1, z2 = Polynomial.variables(2)
    A = ComplexSubspace((z1 * z1, z1 * z2))
    assert multiplicity_nu(A, [0, 0]) == 2
    assert multiplicity_nu(A, [0, 0.4]) == 1
    assert multiplicity_nu(A, [0.3, 0]) == 0


def test_vanishing_order():
    z1, z2 = Polynomial.variables(2)
    assert vanishing_order(z1**3 + z2**4, [0, 0]) == 3
    assert vanishing_order(z1 - 0.5, [0.5, 0.2]) == 1


def test_log_max_generators_is_minorant_value():
    z1 = Polynomial.variable(0, 2)
    A = ComplexSubspace((z1,))
    assert log_max_generators(A, [0.5, 0.6]) == pytest.approx(math.log(0.5))
    assert log_max_generators(A, [0, 0.6]) == -math.inf


def test_membership_and_nearest_zero():
    z, w = Polynomial.variables(2)
    A = ComplexSubspace((z * z + w * w - 0.25,))
    assert np.array([0.5, 0]) in A
    p = nearest_zero(A, np.zeros(2))
    assert p is not None and p in A
    assert np.linalg.norm(p) == pytest.approx(0.5, abs=1e-6)
    assert is_divisor(A)


def test_weights():
    a = FiniteWeights(((np.array([0.1, 0]), 2.0), ([0, 0.2], 1.0)))
    assert a([0.1, 0]) == 2.0 and a([0.3, 0]) == 0.0
    with pytest.raises(DomainError):
        FiniteWeights((([0, 0], -1.0),))
    z1 = Polynomial.variable(0, 2)
    A = ComplexSubspace((z1 * z1,))
    assert SubspaceMultiplicity(A)([0, 0.3]) == 2
    assert SubspaceIndicator(A)([0, 0.3]) == 1
