"""Numerical checks of structural properties of computed Green functions.

Functions here take plain callables ``u(point) -> float`` so they work
equally with closed forms and with envelope-backed evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.stats import norm, qmc

from .envelope import EnvelopeResult
from .errors import DegenerateError, DomainError
from .functionals import disc_potential
from .polynomial import Polynomial
from .subspace import FiniteWeights

POLE_BAND = 0.05
HARMONICITY_RADIUS = 0.5


def sphere_directions(n: int, samples: int) -> np.ndarray:
    """Quasi-uniform unit vectors of C^n, shape (samples, n)."""
    if n == 1:
        return np.exp(2j * np.pi * np.arange(samples) / samples)[:, None]
    u = qmc.Halton(d=2 * n, scramble=False).random(samples + 1)[1:]
    g = norm.ppf(np.clip(u, 1e-12, 1 - 1e-12))
    w = g[:, :n] + 1j * g[:, n:]
    return w / np.linalg.norm(w, axis=1, keepdims=True)


def _values(u: Callable, points) -> np.ndarray:
    return np.array([float(u(p)) for p in points])


def lelong_estimate(u: Callable, p, radii: Sequence[float] = (1e-2, 1e-3, 1e-4),
                    samples: int = 256) -> float:
    """Slope of max over the sphere S(p, r) of u against log r, clipped at 0."""
    p = np.atleast_1d(np.asarray(p, dtype=complex))
    radii = np.asarray(radii, dtype=float)
    if radii.size < 2 or np.any(radii <= 0):
        raise DomainError("need at least two positive radii")
    if samples < 8:
        raise DomainError("too few sphere samples")
    dirs = sphere_directions(p.size, samples)
    tops = []
    for r in radii:
        vals = _values(u, p + r * dirs)
        if np.all(np.isneginf(vals)):
            raise DegenerateError(f"u is -inf on the whole sphere of radius {r}")
        tops.append(np.max(vals))
    slope = np.polyfit(np.log(radii), np.array(tops), 1)[0]
    return max(0.0, float(slope))


def _circle(p, v, r, samples):
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    theta = 2 * np.pi * np.arange(samples) / samples
    return np.asarray(p, dtype=complex) + r * np.exp(1j * theta)[:, None] * v


def submean_defect(u: Callable, p, v, r: float, samples: int = 64) -> float:
    """Circle average of u minus u(p) along the complex line p + C v.

    Nonnegative (up to quadrature error) for plurisubharmonic u; +inf when
    u(p) = -inf.
    """
    centre = float(u(np.asarray(p, dtype=complex)))
    if centre == -math.inf:
        return math.inf
    return float(np.mean(_values(u, _circle(p, v, r, samples)))) - centre


def maximality_defect(u: Callable, p, directions: Iterable, r: float,
                      samples: int = 64) -> float:
    """min over directions of |submean defect|: near 0 when u is harmonic
    along some complex line through p."""
    best = math.inf
    for v in directions:
        best = min(best, abs(submean_defect(u, p, v, r, samples)))
    return best


def default_directions(n: int, extra: int = 16) -> list[np.ndarray]:
    """Coordinate axes followed by quasi-uniform directions."""
    return list(np.eye(n, dtype=complex)) + list(sphere_directions(n, extra))


@dataclass(frozen=True)
class SubmeanViolation:
    defect: float
    point: np.ndarray
    direction: np.ndarray
    radius: float


def submean_scan(u: Callable, points, directions, radii, samples: int = 64) -> SubmeanViolation:
    """Most negative submean defect over a grid of (point, direction, radius)."""
    worst = None
    for p, v, r in product(points, directions, radii):
        d = submean_defect(u, p, v, r, samples)
        if worst is None or d < worst.defect:
            worst = SubmeanViolation(d, np.asarray(p), np.asarray(v), float(r))
    if worst is None:
        raise DomainError("empty scan")
    return worst


def extremal_harmonicity(result: EnvelopeResult, u: Callable | None = None, samples: int = 64,
                         radius: float = HARMONICITY_RADIUS, band: float = POLE_BAND) -> float:
    """max |u(f(zeta)) - v_f(zeta)| over sample points of |zeta| <= radius.

    ``u`` is the Green function to compare with (a closed form when one is
    known); points within ``band`` of a pole are skipped.
    """
    f = result.witness
    if f.is_constant():
        return 0.0 if result.upper == 0 else math.inf
    if u is None:
        raise DomainError("a Green function evaluator is required for nonconstant witnesses")
    rings = np.linspace(radius / 4, radius, 4)
    theta = 2 * np.pi * np.arange(samples) / samples
    zetas = np.concatenate([[0.0], (rings[:, None] * np.exp(1j * theta)).ravel()])
    locs = result.poles.locations
    worst = 0.0
    for z in zetas:
        if locs.size and np.min(np.abs(locs - z)) < band:
            continue
        g = float(u(f(z)))
        v = disc_potential(result.poles, complex(z))
        worst = max(worst, abs(g - v))
    return worst


def polar_grid(ranges: Sequence[tuple[float, float]], grid: int, angles: Sequence[float] = (0.0,)):
    """Points whose coordinate moduli run over ``ranges`` (grid steps each)."""
    axes = []
    for lo, hi in ranges:
        if lo > 0 and hi / lo > 100:
            mods = np.geomspace(lo, hi, grid)
        else:
            mods = np.linspace(lo, hi, grid)
        axes.append([m * np.exp(1j * t) for m in mods for t in angles])
    return [np.array(p, dtype=complex) for p in product(*axes)]


def divisor_quotient_bound(GA: Callable, h: Polynomial, region: Sequence[tuple[float, float]],
                           grid: int = 8, angles: Sequence[float] = (0.0,), points=None) -> float:
    """max of GA - log|h| over grid points off the divisor {h = 0}."""
    pts = points if points is not None else polar_grid(region, grid, angles)
    best = -math.inf
    for p in pts:
        hv = abs(h(p))
        if hv == 0:
            continue
        best = max(best, float(GA(p)) - math.log(hv))
    return best


def boundary_limit_scan(GA: Callable, p, distances: Sequence[float]) -> np.ndarray:
    """GA along the inward ray (1 - d) * p for boundary point p."""
    p = np.asarray(p, dtype=complex)
    return np.array([float(GA((1 - d) * p)) for d in distances])


def geodesic_intersection_count(c: complex, v) -> int:
    """Points where the line zeta -> zeta v, |zeta| < 1, meets z^2 + w^2 = c."""
    v = np.asarray(v, dtype=complex)
    if abs(np.linalg.norm(v) - 1) > 1e-9:
        raise DomainError("direction must be a unit vector")
    if not 0 < abs(c) < 1:
        raise DomainError("need 0 < |c| < 1")
    s = complex(v[0] ** 2 + v[1] ** 2)
    if abs(s) < 1e-14:
        return 0
    root = abs(np.sqrt(c / s))
    return 2 if root < 1 else 0


def quadric_support(c: complex, radial: int = 400, angular: int = 128) -> FiniteWeights:
    """Dense sample of {z^2 + w^2 = c} inside the unit ball, unit weights."""
    from .reference import quadric_curve

    if not 0 < abs(c) < 1:
        raise DomainError("need 0 < |c| < 1")
    # |a|^2 = (rho^2 + |c|^2 / rho^2) / 2 < 1 bounds rho on both sides
    s = math.sqrt(1 - abs(c) ** 2)
    lo, hi = math.sqrt(1 - s), math.sqrt(1 + s)
    rho = np.geomspace(lo * (1 + 1e-6), hi * (1 - 1e-6), radial)
    rho = np.union1d(rho, [math.sqrt(abs(c))])
    theta = 2 * np.pi * np.arange(angular) / angular
    u = (rho[:, None] * np.exp(1j * theta)).ravel()
    pts = quadric_curve(c, u)
    inside = np.linalg.norm(pts, axis=1) < 1 - 1e-9
    pts = np.unique(np.round(pts[inside], 14), axis=0)
    return FiniteWeights(tuple((p, 1.0) for p in pts))


def continuity_scan(u: Callable, points, step: float = 1e-3, directions=None) -> float:
    """Empirical modulus of continuity: max |u(p + step v) - u(p)|."""
    worst = 0.0
    for p in points:
        p = np.asarray(p, dtype=complex)
        dirs = directions if directions is not None else default_directions(p.size, 4)
        base = float(u(p))
        for v in dirs:
            val = float(u(p + step * np.asarray(v)))
            if math.isfinite(base) and math.isfinite(val):
                worst = max(worst, abs(val - base))
    return worst
