"""Polynomial analytic discs, multiplicities, preimages and disc surgeries."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateError, DomainError, NumericError
from .polynomial import Polynomial

BOUNDARY_BAND = 1e-12
CLUSTER_TOL = 1e-8
# cluster radii tried in turn when the derivative check disagrees with
# the cluster cardinality (perturbed multiple roots spread like eps**(1/m))
CLUSTER_ESCALATION = (CLUSTER_TOL, 1e-6, 1e-4)
ORDER_REL_TOL = 1e-6
MULTIPLICITY_REL_TOL = 1e-9

Preimages = list  # list[tuple[complex, int]]


@dataclass(frozen=True, eq=False)
class AnalyticDisc:
    """zeta -> sum_k coeffs[:, k] zeta**k, contained in its domain on |zeta| <= R.

    ``coeffs`` has shape (n, d + 1); column 0 is the center f(0).
    """

    coeffs: np.ndarray
    overshoot: float = 1.001

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex, ndmin=2)
        if c.ndim != 2 or c.shape[1] < 1:
            raise DomainError("disc coefficients must have shape (n, d + 1)")
        if not np.all(np.isfinite(c)):
            raise DomainError("disc coefficients must be finite")
        if not self.overshoot > 1:
            raise DomainError("overshoot R must exceed 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, x, degree: int = 0, overshoot: float = 1.001):
        x = np.atleast_1d(np.asarray(x, dtype=complex))
        c = np.zeros((x.size, degree + 1), dtype=complex)
        c[:, 0] = x
        return cls(c, overshoot)

    @classmethod
    def from_coordinates(cls, *coords, overshoot: float = 1.001):
        """Build from one ascending coefficient sequence per coordinate."""
        d = max(len(np.atleast_1d(c)) for c in coords)
        c = np.zeros((len(coords), d), dtype=complex)
        for i, ci in enumerate(coords):
            ci = np.atleast_1d(np.asarray(ci, dtype=complex))
            c[i, : ci.size] = ci
        return cls(c, overshoot)

    @property
    def dimension(self) -> int:
        return self.coeffs.shape[0]

    @property
    def degree(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def center(self) -> np.ndarray:
        return self.coeffs[:, 0].copy()

    def is_constant(self) -> bool:
        return not np.any(self.coeffs[:, 1:])

    def padded(self, degree: int) -> AnalyticDisc:
        """Same map viewed in a higher-degree coefficient space."""
        if degree < self.degree:
            raise DomainError("cannot pad to a lower degree")
        c = np.zeros((self.dimension, degree + 1), dtype=complex)
        c[:, : self.degree + 1] = self.coeffs
        return AnalyticDisc(c, self.overshoot)

    def __call__(self, zeta) -> np.ndarray:
        """Horner evaluation; returns shape ``zeta.shape + (n,)``."""
        z = np.asarray(zeta, dtype=complex)
        out = np.zeros(z.shape + (self.dimension,), dtype=complex)
        for k in range(self.degree, -1, -1):
            out = out * z[..., None] + self.coeffs[:, k]
        return out

    def boundary_values(self, samples: int, radius: float | None = None) -> np.ndarray:
        r = self.overshoot if radius is None else radius
        theta = 2 * np.pi * np.arange(samples) / samples
        return self(r * np.exp(1j * theta))


def evaluate(f: AnalyticDisc, zeta) -> np.ndarray:
    if np.any(np.abs(np.asarray(zeta)) > f.overshoot * (1 + 1e-12)):
        raise DomainError(f"|zeta| exceeds the overshoot radius {f.overshoot}")
    return f(zeta)


@lru_cache(maxsize=64)
def _pascal(m: int) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(m)
    binom = np.zeros((m, m))
    for j in range(m):
        for k in range(j, m):
            binom[j, k] = math.comb(k, j)
    expo = np.maximum(i[None, :] - i[:, None], 0)
    return binom, expo


def _shift(q: np.ndarray, c: complex) -> tuple[np.ndarray, np.ndarray]:
    """Taylor coefficients of q at c and a magnitude bound for each."""
    binom, expo = _pascal(q.size)
    t = (binom * complex(c) ** expo) @ q
    bound = (binom * abs(c) ** expo) @ np.abs(q)
    return t, bound


def _order_at(q: np.ndarray, c: complex, rel: float) -> int:
    t, bound = _shift(q, c)
    scale = bound.max()
    for j in range(q.size):
        if abs(t[j]) > rel * max(bound[j], 1e-300) and abs(t[j]) > 1e-15 * scale:
            return j
    return q.size


def multiplicity(f: AnalyticDisc, zeta0: complex) -> float:
    """m_zeta0(f): lowest order of f - f(zeta0) at zeta0; inf for constant f."""
    if not abs(zeta0) < 1:
        raise DomainError("multiplicity is taken at points of the open disc")
    best = math.inf
    for row in f.coeffs:
        t, bound = _shift(row, zeta0)
        for j in range(1, row.size):
            if abs(t[j]) > MULTIPLICITY_REL_TOL * max(bound[j], 1e-300):
                best = min(best, j)
                break
    return best


def _abs_compose(g: Polynomial, f: AnalyticDisc) -> np.ndarray:
    absg = Polynomial(g.n, {a: abs(c) for a, c in g.terms.items()})
    return np.abs(absg.compose(np.abs(f.coeffs)))


def _trimmed(q: np.ndarray, bound: np.ndarray) -> np.ndarray:
    """Drop high-order coefficients that are pure rounding noise."""
    noise = 1e-13 * bound.max()
    if np.all(np.abs(q) <= noise):
        raise DegenerateError("composition vanishes identically")
    last = np.nonzero(np.abs(q) > noise)[0][-1]
    return q[: last + 1]


def _cluster(roots: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Single-linkage clusters of ``roots``: (mean, cardinality)."""
    roots = list(roots)
    out = []
    while roots:
        group = [roots.pop()]
        grew = True
        while grew:
            grew = False
            for r in list(roots):
                if min(abs(r - g) for g in group) < tol:
                    group.append(r)
                    roots.remove(r)
                    grew = True
        out.append((complex(np.mean(group)), len(group)))
    return out


def disc_roots(q: np.ndarray) -> Preimages:
    """Roots of an ascending coefficient array in the open unit disc, with orders.

    Orders come from cluster cardinality and are cross-checked against the
    vanishing order of the Taylor expansion at each cluster center.
    """
    q = np.asarray(q, dtype=complex)
    if q.size <= 1:
        return []
    try:
        roots = np.roots(q[::-1])
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"companion eigenvalues failed: {exc}") from exc
    if not np.all(np.isfinite(roots)):
        raise NumericError("root finder returned non-finite roots")
    for tol in CLUSTER_ESCALATION:
        clusters = _cluster(roots, tol)
        inside = [(c, k) for c, k in clusters if abs(c) < 1 - BOUNDARY_BAND]
        if all(_order_at(q, c, ORDER_REL_TOL) == k for c, k in inside):
            return sorted(inside, key=lambda ck: (abs(ck[0]), np.angle(ck[0])))
    raise NumericError("root orders disagree with derivative checks")


def preimages(f: AnalyticDisc, g: Polynomial) -> Preimages:
    """Roots of g o f in the open unit disc as ``[(zeta, order), ...]``.

    Raises DegenerateError when g o f vanishes identically.
    """
    if g.n != f.dimension:
        raise DomainError("polynomial and disc dimensions differ")
    q = g.compose(f.coeffs)
    q = _trimmed(q, _abs_compose(g, f))
    return disc_roots(q)


def point_preimages(f: AnalyticDisc, a) -> Preimages:
    """Points zeta of the open disc with f(zeta) = a, with multiplicity m_zeta(f).

    Raises DegenerateError when f is constant equal to ``a``.
    """
    a = np.asarray(a, dtype=complex).ravel()
    q = f.coeffs.copy()
    q[:, 0] -= a
    scale = np.abs(f.coeffs).sum(axis=1) + np.abs(a)
    live = [i for i in range(f.dimension) if np.any(np.abs(q[i]) > 1e-13 * scale[i])]
    if not live:
        raise DegenerateError("disc is constant at the target point")
    for i in live:
        if not np.any(np.abs(q[i, 1:]) > 1e-13 * scale[i]):
            return []  # a coordinate never reaches its target value
    # roots of the lowest-degree live coordinate are the candidates
    pivot = min(live, key=lambda i: np.nonzero(np.abs(q[i]) > 1e-13 * scale[i])[0][-1])
    qi = _trimmed(q[pivot], scale[pivot] * np.ones(q.shape[1]))
    out = []
    for zeta, _ in disc_roots(qi):
        vals = f(zeta) - a
        if np.all(np.abs(vals) <= 1e-8 * scale):
            orders = [_order_at(q[i], zeta, ORDER_REL_TOL) for i in live]
            out.append((zeta, int(min(orders))))
    return out


# surgeries -----------------------------------------------------------------

def _compose_inner(f: AnalyticDisc, inner: np.ndarray) -> np.ndarray:
    """Coefficients of f(p(zeta)) for an ascending coefficient array p."""
    d = f.degree
    size = d * (inner.size - 1) + 1
    out = np.zeros((f.dimension, size), dtype=complex)
    for i in range(f.dimension):
        acc = np.array([f.coeffs[i, d]])
        for k in range(d - 1, -1, -1):
            acc = np.convolve(acc, inner)
            acc[0] += f.coeffs[i, k]
        out[i, : acc.size] = acc
    return out


def surgery_shrink(f: AnalyticDisc, r: float) -> AnalyticDisc:
    """zeta -> f(zeta / r); preimages move outward by the factor r."""
    if not 1 < r <= f.overshoot:
        raise DomainError("shrink factor must satisfy 1 < r <= R")
    k = np.arange(f.degree + 1)
    return AnalyticDisc(f.coeffs / r**k, f.overshoot * r)


def surgery_zero_split(f: AnalyticDisc, a: complex) -> AnalyticDisc:
    """zeta -> f(zeta (zeta - a)), which visits f(0) at both 0 and a."""
    if a == 0 or not abs(a) < 1:
        raise DomainError("split point must be a nonzero point of the disc")
    R = f.overshoot
    # largest R' with R' (R' + |a|) <= R
    r_new = (-abs(a) + math.sqrt(abs(a) ** 2 + 4 * R)) / 2
    if not r_new > 1:
        raise DomainError("zeta (zeta - a) leaves the disc where f is defined")
    inner = np.array([0, -a, 1], dtype=complex)
    return AnalyticDisc(_compose_inner(f, inner), r_new)


def surgery_constant_replace(x, a: complex, eps: float, domain, overshoot: float = 1.001,
                             margin: float = 0.0, max_halvings: int = 60) -> AnalyticDisc:
    """Nonconstant disc zeta -> x + eps zeta (zeta - a) e_1 with f(0) = f(a) = x.

    ``eps`` is halved until the disc is contained in ``domain``.
    """
    from .domains import disc_contained

    x = np.atleast_1d(np.asarray(x, dtype=complex))
    if a == 0 or not abs(a) < 1:
        raise DomainError("split point must be a nonzero point of the disc")
    if not domain.contains(x, margin):
        raise DomainError("base point is not interior to the domain")
    for _ in range(max_halvings):
        c = np.zeros((x.size, 3), dtype=complex)
        c[:, 0] = x
        c[0, 1] = -eps * a
        c[0, 2] = eps
        f = AnalyticDisc(c, overshoot)
        if disc_contained(domain, f, margin):
            return f
        eps /= 2
    raise DomainError("no admissible eps found")
