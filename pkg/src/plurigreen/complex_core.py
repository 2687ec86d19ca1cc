"""Hyperbolic geometry of the unit disc, finite Blaschke products and
automorphisms of the unit ball."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError

UNIMODULAR_TOL = 1e-12


def as_point(z, n: int | None = None) -> np.ndarray:
    """Coerce ``z`` to a 1-d complex array (a point of C^n)."""
    p = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
    if p.size == 0:
        raise DomainError("a point needs at least one coordinate")
    if n is not None and p.size != n:
        raise DomainError(f"expected a point of C^{n}, got {p.size} coordinates")
    if not np.all(np.isfinite(p)):
        raise DomainError("point has non-finite coordinates")
    return p


def _check_disc(*zs):
    for z in zs:
        if not abs(z) < 1:
            raise DomainError(f"{z!r} is not in the open unit disc")


def mobius_modulus(z: complex, w: complex) -> float:
    """|(z - w) / (1 - conj(w) z)| for z, w in the unit disc."""
    return abs((z - w) / (1 - np.conj(w) * z))


def poincare_distance(z: complex, w: complex) -> float:
    """Poincare distance artanh|(z - w)/(1 - conj(w) z)| on the unit disc."""
    _check_disc(z, w)
    m = mobius_modulus(z, w)
    if m >= 1.0:  # rounding for points extremely close to the circle
        return math.inf
    return math.atanh(m)


def disc_green(z: complex, w: complex) -> float:
    """Green function (1/2pi) log|(z - w)/(1 - conj(w) z)| of the unit disc."""
    _check_disc(z, w)
    m = mobius_modulus(z, w)
    if m == 0.0:
        return -math.inf
    return math.log(m) / (2 * math.pi)


@dataclass(frozen=True)
class MobiusFactor:
    zero: complex
    exponent: int = 1

    def __post_init__(self):
        if not abs(self.zero) < 1:
            raise DomainError("Blaschke zeros must lie in the open disc")
        if int(self.exponent) != self.exponent or self.exponent < 1:
            raise DomainError("exponent must be a positive integer")


@dataclass(frozen=True)
class BlaschkeProduct:
    """Finite product of factors ((a - z)/(1 - conj(a) z))**k."""

    factors: tuple[MobiusFactor, ...]

    @classmethod
    def from_zeros(cls, zeros: Sequence[tuple[complex, int]] | Sequence[complex]):
        fs = []
        for item in zeros:
            if isinstance(item, tuple):
                fs.append(MobiusFactor(complex(item[0]), int(item[1])))
            else:
                fs.append(MobiusFactor(complex(item), 1))
        return cls(tuple(fs))

    @property
    def total_exponent(self) -> int:
        return sum(f.exponent for f in self.factors)

    def __call__(self, z):
        return blaschke_eval(self, z)


def blaschke_eval(B: BlaschkeProduct, z):
    """Evaluate ``B`` at ``z`` (scalar or array) in the closed unit disc."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1 + UNIMODULAR_TOL):
        raise DomainError("Blaschke products are evaluated on the closed disc")
    out = np.ones_like(z)
    for f in B.factors:
        a = f.zero
        out = out * ((a - z) / (1 - np.conj(a) * z)) ** f.exponent
    return out[()] if out.ndim == 0 else out


def blaschke_rescale_check(B: BlaschkeProduct, beta: float) -> bool:
    """Check |c|**mu * e**beta <= |b| < e**beta.

    Here b = B(0), c is the zero of largest modulus and mu the total
    exponent. The comparison is made in log space so that the equality
    edge ``|b| == e**beta`` is decided exactly.
    """
    if not B.factors:
        raise DomainError("empty Blaschke product")
    if not beta < 0:
        raise DomainError("beta must be negative")
    mods = [abs(f.zero) for f in B.factors]
    if any(m == 0 for m in mods):
        return False
    log_b = sum(f.exponent * math.log(abs(f.zero)) for f in B.factors)
    log_c = math.log(max(mods))
    mu = B.total_exponent
    return mu * log_c + beta <= log_b and log_b < beta


def ball_automorphism(a, z) -> np.ndarray:
    """The involutive ball automorphism T_a with T_a(a) = 0, T_a(0) = a.

    T_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>), s_a = sqrt(1 - |a|^2),
    with P_a the orthogonal projection onto C a. For a = 0 we use z -> -z.
    """
    a = as_point(a)
    z = as_point(z, a.size)
    na2 = float(np.vdot(a, a).real)
    if na2 >= 1 or float(np.vdot(z, z).real) >= 1:
        raise DomainError("ball_automorphism needs points of the open unit ball")
    if na2 == 0.0:
        return -z
    za = np.vdot(a, z)  # <z, a> = sum z_i conj(a_i)
    pz = (za / na2) * a
    qz = z - pz
    s = math.sqrt(1 - na2)
    return (a - pz - s * qz) / (1 - za)
