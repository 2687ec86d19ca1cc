"""Complex subspaces given by polynomial generators, and pole weights.

A weight function says how strongly a point must be a logarithmic pole:
either finitely many weighted points, the multiplicity nu_A of a
subspace, or the indicator of the subspace's zero set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import DegenerateError, DomainError
from .polynomial import Polynomial

TAYLOR_REL_TOL = 1e-9
ZERO_TOL = 1e-10


@dataclass(frozen=True)
class ComplexSubspace:
    """Common zero set of ``generators`` (with the ideal's multiplicity)."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise DomainError("a subspace needs at least one generator")
        if any(g.is_zero() for g in gens):
            raise DomainError("generators must not vanish identically")
        if len({g.n for g in gens}) != 1:
            raise DomainError("generators live in different dimensions")
        object.__setattr__(self, "generators", gens)

    @property
    def dimension(self) -> int:
        return self.generators[0].n

    def __contains__(self, p) -> bool:
        p = np.asarray(p, dtype=complex)
        return all(abs(g(p)) <= ZERO_TOL * max(1.0, g.coefficient_bound()) for g in self.generators)


def vanishing_order(g: Polynomial, p) -> int:
    """Order of the Taylor expansion of g at p, relative to its local scale."""
    if g.is_zero():
        raise DegenerateError("zero polynomial has no vanishing order")
    t = g.taylor_at(p)
    scale = max(abs(c) for c in t.values()) if t else 0.0
    if scale == 0:
        raise DegenerateError("zero polynomial has no vanishing order")
    orders = [sum(a) for a, c in t.items() if abs(c) > TAYLOR_REL_TOL * scale]
    return min(orders)


def multiplicity_nu(A: ComplexSubspace, p) -> int:
    """nu_A(p) = min over generators of the vanishing order at p."""
    return min(vanishing_order(g, p) for g in A.generators)


def log_max_generators(A: ComplexSubspace, p, bounds: Sequence[float] | None = None) -> float:
    """max_i log(|g_i(p)| / M_i), a nonpositive psh minorant of G_A.

    ``bounds`` default to the coefficient sums, which dominate |g_i| on
    the unit ball and the unit polydisc.
    """
    if bounds is None:
        bounds = [g.coefficient_bound() for g in A.generators]
    if len(bounds) != len(A.generators) or any(not m > 0 for m in bounds):
        raise DomainError("need one positive bound per generator")
    p = np.asarray(p, dtype=complex)
    best = -math.inf
    for g, m in zip(A.generators, bounds):
        v = abs(g(p))
        if v > 0:
            best = max(best, math.log(v / m))
    return best


def is_divisor(A: ComplexSubspace) -> bool:
    return len(A.generators) == 1


def nearest_zero(A: ComplexSubspace, x, domain=None, starts: int = 8,
                 iterations: int = 60) -> np.ndarray | None:
    """A point of the zero set of A close to ``x`` (Gauss-Newton projection).

    Several starting points around ``x`` are tried because the gradient can
    vanish at ``x`` itself. Returns None when nothing converges.
    """
    x = np.asarray(x, dtype=complex).ravel()
    n = x.size
    grads = [[g.derivative(i) for i in range(n)] for g in A.generators]
    offsets = [np.zeros(n, dtype=complex)]
    for k in range(starts):
        e = np.zeros(n, dtype=complex)
        e[k % n] = 0.1 * np.exp(1j * np.pi * (k // n) / 2)
        offsets.append(e)
    best, best_d = None, math.inf
    for off in offsets:
        z = x + off
        for _ in range(iterations):
            r = np.array([g(z) for g in A.generators])
            J = np.array([[d(z) for d in row] for row in grads])
            if np.linalg.norm(r) < 1e-14:
                break
            step = np.linalg.lstsq(J, r, rcond=None)[0]
            z = z - step
        if z in A and (domain is None or domain.contains(z)):
            d = float(np.linalg.norm(z - x))
            if d < best_d - 1e-12:
                best, best_d = z, d
    return best


# weights ---------------------------------------------------------------------

class WeightFunction:
    """alpha : X -> [0, inf)."""

    def __call__(self, p) -> float:
        raise NotImplementedError

    def is_zero(self) -> bool:
        return False


@dataclass(frozen=True)
class FiniteWeights(WeightFunction):
    """Finitely many points with positive weights."""

    support: tuple = field(default=())

    def __post_init__(self):
        items = []
        for point, w in self.support:
            p = np.atleast_1d(np.asarray(point, dtype=complex))
            if not w > 0:
                raise DomainError("weights must be positive")
            items.append((tuple(p), float(w)))
        pts = [p for p, _ in items]
        if len(set(pts)) != len(pts):
            raise DomainError("support points must be distinct")
        object.__setattr__(self, "support", tuple(items))

    @classmethod
    def point(cls, a, weight: float = 1.0) -> FiniteWeights:
        return cls(((a, weight),))

    def points(self) -> list[tuple[np.ndarray, float]]:
        return [(np.array(p, dtype=complex), w) for p, w in self.support]

    @cached_property
    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Support as a (k, n) point array and a (k,) weight array."""
        pts = np.array([p for p, _ in self.support], dtype=complex)
        return pts, np.array([w for _, w in self.support], dtype=float)

    def __call__(self, p) -> float:
        p = np.atleast_1d(np.asarray(p, dtype=complex))
        for q, w in self.support:
            if np.allclose(p, q, rtol=0, atol=1e-12):
                return w
        return 0.0

    def is_zero(self) -> bool:
        return not self.support


@dataclass(frozen=True)
class SubspaceMultiplicity(WeightFunction):
    """alpha = nu_A."""

    subspace: ComplexSubspace

    def __call__(self, p) -> float:
        return float(multiplicity_nu(self.subspace, p))


@dataclass(frozen=True)
class SubspaceIndicator(WeightFunction):
    """alpha = characteristic function of the zero set of A."""

    subspace: ComplexSubspace

    def __call__(self, p) -> float:
        return 1.0 if p in self.subspace else 0.0
