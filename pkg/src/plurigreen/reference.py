"""Closed-form Green functions and invariant distances used as oracles.

Deliberately independent of the envelope machinery: nothing here calls
an optimizer or a root finder.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError


def _ball_point(x, name="point"):
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    if not np.linalg.norm(x) < 1:
        raise DomainError(f"{name} must lie in the open unit ball")
    return x


def _automorphism(a, z):
    """The involutive ball automorphism exchanging a and 0."""
    if not np.any(a):
        return -z
    aa = float(np.vdot(a, a).real)
    za = complex(np.vdot(a, z))
    proj = (za / aa) * a
    s = math.sqrt(1 - aa)
    return (a - proj - s * (z - proj)) / (1 - za)


def _safe_log(v: float) -> float:
    return -math.inf if v == 0 else math.log(v)


def green_ball_point(a, x) -> float:
    """Green function of the unit ball with a single pole at a, evaluated at x."""
    a = _ball_point(a, "pole")
    x = _ball_point(x)
    if a.size != x.size:
        raise DomainError("pole and point dimensions differ")
    if np.array_equal(a, x):
        return -math.inf
    return _safe_log(float(np.linalg.norm(_automorphism(a, x))))


def kobayashi_ball(x, a) -> float:
    """log tanh of the Kobayashi distance between x and a in the unit ball."""
    return green_ball_point(a, x)


def green_ball_hyperplane(x) -> float:
    """G_A for A = {z1 = 0} in the unit ball: log(|z1| / sqrt(1 - |z'|^2))."""
    x = _ball_point(x)
    rest = float(np.sum(np.abs(x[1:]) ** 2))
    return _safe_log(abs(x[0])) - 0.5 * math.log(1 - rest)


def green_polydisc_hyperplane(x) -> float:
    """G_A for A = {z1 = 0} in the unit polydisc: log|z1|."""
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    if not np.max(np.abs(x)) < 1:
        raise DomainError("point must lie in the open unit polydisc")
    return _safe_log(abs(x[0]))


def green_polydisc_point(x, weights=None) -> float:
    """max_i w_i log|x_i|: the product formula for a pole at the origin.

    With unequal weights this is the (incorrect) product guess, not the
    Green function of the weighted pole.
    """
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    w = np.ones(x.size) if weights is None else np.asarray(weights, dtype=float)
    return green_product([wi * _safe_log(abs(xi)) for wi, xi in zip(w, x)])


def green_product(values) -> float:
    """Product property: the Green function of a product pole is the factor max."""
    vals = [float(v) for v in values]
    if not vals:
        raise DomainError("need at least one factor value")
    return max(vals)


def disc_mobius_log(a: complex, x: complex) -> float:
    """log|(x - a) / (1 - conj(a) x)|, the one-variable Green function."""
    if not (abs(a) < 1 and abs(x) < 1):
        raise DomainError("points must lie in the unit disc")
    return _safe_log(abs((x - a) / (1 - np.conj(a) * x)))


def quadric_curve(c: complex, u):
    """Points (z, w) with z^2 + w^2 = c parameterized by u != 0."""
    u = np.asarray(u, dtype=complex)
    return np.stack([(u + c / u) / 2, (u - c / u) / 2j], axis=-1)
