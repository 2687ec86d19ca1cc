"""Bounded convex model domains described by their Minkowski gauges.

Every supported domain is convex, so for a holomorphic disc f the
function gauge(f) is subharmonic and its maximum over the closed disc
is attained on the boundary circle. Sampling that circle therefore
certifies containment of the whole disc.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

DEFAULT_SAMPLES = 256
DEFAULT_MARGIN = 1e-3


class Domain:
    """Base class. Subclasses implement ``_gauge`` on centered coordinates."""

    dimension: int
    #: whether a strong plurisubharmonic barrier exists at every boundary point
    has_barrier: bool = False

    @property
    def center(self) -> np.ndarray:
        return np.zeros(self.dimension, dtype=complex)

    def gauge(self, z) -> np.ndarray | float:
        z = np.asarray(z, dtype=complex)
        if z.shape[-1] != self.dimension:
            raise DomainError(f"expected points of C^{self.dimension}, got shape {z.shape}")
        g = self._gauge(z - self.center)
        return float(g) if np.ndim(g) == 0 else g

    def _gauge(self, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def contains(self, z, margin: float = 0.0) -> bool:
        return contains(self, z, margin)

    def radial_projection(self, z) -> np.ndarray:
        """The boundary point on the ray from the center through z."""
        z = np.asarray(z, dtype=complex)
        c = self.center
        g = self.gauge(z)
        if np.any(np.asarray(g) == 0):
            raise DomainError("the center has no radial projection")
        return c + (z - c) / np.asarray(g)[..., None]

    def exit_radius(self, base, direction, samples: int = DEFAULT_SAMPLES) -> float:
        """Largest rho with base + lam * direction inside for all |lam| < rho."""
        base = np.asarray(base, dtype=complex)
        v = np.asarray(direction, dtype=complex)
        if self.gauge(base) >= 1:
            raise DomainError("base point is not interior")
        rot = np.exp(2j * np.pi * np.arange(samples) / samples)
        lo, hi = 0.0, 1.0
        while np.max(self.gauge(base + hi * rot[:, None] * v)) < 1:
            lo, hi = hi, 2 * hi
            if hi > 1e12:
                raise DomainError("domain is unbounded in this direction")
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if np.max(self.gauge(base + mid * rot[:, None] * v)) < 1:
                lo = mid
            else:
                hi = mid
        return lo


@dataclass(frozen=True)
class Ball(Domain):
    dimension: int
    has_barrier: bool = True

    def _gauge(self, z):
        return np.sqrt(np.sum(np.abs(z) ** 2, axis=-1))


@dataclass(frozen=True)
class Polydisc(Domain):
    dimension: int
    has_barrier: bool = False

    def _gauge(self, z):
        return np.max(np.abs(z), axis=-1)


@dataclass(frozen=True, eq=False)
class AffineBall(Domain):
    """The ball of the given radius around ``origin``."""

    origin: tuple
    radius: float
    has_barrier: bool = True

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError("radius must be positive")
        object.__setattr__(self, "origin", tuple(complex(c) for c in np.ravel(self.origin)))

    @property
    def dimension(self) -> int:
        return len(self.origin)

    @property
    def center(self):
        return np.array(self.origin, dtype=complex)

    def _gauge(self, z):
        return np.sqrt(np.sum(np.abs(z) ** 2, axis=-1)) / self.radius


@dataclass(frozen=True)
class Product(Domain):
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise DomainError("a product needs at least one factor")

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self.factors)

    @property
    def has_barrier(self) -> bool:
        return len(self.factors) == 1 and self.factors[0].has_barrier

    @property
    def center(self):
        return np.concatenate([f.center for f in self.factors])

    def _gauge(self, z):
        out = None
        start = 0
        for f in self.factors:
            g = f._gauge(z[..., start:start + f.dimension])
            out = g if out is None else np.maximum(out, g)
            start += f.dimension
        return out


def gauge(X: Domain, z):
    return X.gauge(z)


def contains(X: Domain, z, margin: float = 0.0) -> bool:
    if not 0 <= margin < 1:
        raise DomainError("margin must lie in [0, 1)")
    return bool(X.gauge(z) < 1 - margin)


def boundary_gauge_max(X: Domain, f, samples: int = DEFAULT_SAMPLES) -> float:
    """max over equispaced points of |zeta| = R of gauge(f(zeta))."""
    return float(np.max(X.gauge(f.boundary_values(samples))))


def disc_contained(X: Domain, f, margin: float = DEFAULT_MARGIN,
                   samples: int = DEFAULT_SAMPLES) -> bool:
    """Certify that f maps the closed disc of radius R into X at the margin.

    One refinement (doubled sample count) is made when the sampled maximum
    is within 10 * margin of the threshold.
    """
    if f.dimension != X.dimension:
        raise DomainError("disc and domain dimensions differ")
    threshold = 1 - margin
    top = boundary_gauge_max(X, f, samples)
    if abs(top - threshold) <= 10 * max(margin, 1e-12):
        top = max(top, boundary_gauge_max(X, f, 2 * samples))
    return top < threshold
