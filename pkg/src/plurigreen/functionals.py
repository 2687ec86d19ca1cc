"""Disc functionals: Poisson, Lelong and the divisor Riesz functional,
plus the disc potential built from pulled-back pole data."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .disc_model import AnalyticDisc, multiplicity, point_preimages, preimages
from .errors import DegenerateError, DomainError
from .subspace import (ComplexSubspace, FiniteWeights, SubspaceIndicator,
                       SubspaceMultiplicity, WeightFunction, is_divisor, multiplicity_nu)

POISSON_NODES = 512
NEG_INF_CLIP = -1e6


@dataclass(frozen=True)
class PoleData:
    """Weighted points of the unit disc, ``((zeta, weight), ...)``."""

    entries: tuple = ()

    def __post_init__(self):
        ents = tuple((complex(z), float(w)) for z, w in self.entries)
        if any(not w > 0 for _, w in ents):
            raise DomainError("pole weights must be positive")
        object.__setattr__(self, "entries", ents)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def locations(self) -> np.ndarray:
        return np.array([z for z, _ in self.entries], dtype=complex)

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.entries], dtype=float)

    def lelong_sum(self) -> float:
        """sum w log|zeta|; -inf when a pole sits at 0."""
        total = 0.0
        for z, w in self.entries:
            if z == 0:
                return -math.inf
            total += w * math.log(abs(z))
        return total


@dataclass(frozen=True)
class FunctionalValue:
    value: float
    convergent: bool = True
    clipped: bool = False

    def __float__(self):
        return float(self.value)


def poisson(phi: Callable, f: AnalyticDisc, K: int = POISSON_NODES, domain=None) -> FunctionalValue:
    """(1/2pi) int_T phi(f) d(lambda) by the K-point trapezoidal rule.

    ``phi`` maps an array of points (..., n) to values; -inf samples are
    clipped at -1e6 and flagged.
    """
    if K < 16:
        raise DomainError("use at least 16 quadrature nodes")
    if domain is not None:
        from .domains import disc_contained

        if not disc_contained(domain, f, margin=0.0):
            raise DomainError("disc is not contained in the domain")
    theta = 2 * np.pi * np.arange(K) / K
    vals = np.asarray(phi(f(np.exp(1j * theta))), dtype=float)
    clipped = bool(np.any(vals < NEG_INF_CLIP))
    vals = np.maximum(vals, NEG_INF_CLIP)
    return FunctionalValue(float(np.mean(vals)), True, clipped)


def _subspace_hits(A: ComplexSubspace, f: AnalyticDisc):
    """Common roots of the generators along f, with the root order of the first."""
    gens = A.generators
    for k, g in enumerate(gens):
        try:
            roots = preimages(f, g)
        except DegenerateError:
            continue
        others = gens[:k] + gens[k + 1:]
        hits = []
        for zeta, order in roots:
            p = f(zeta)
            if all(abs(h(p)) <= 1e-8 * max(1.0, h.coefficient_bound()) for h in others):
                hits.append((zeta, order, p))
        return hits
    raise DegenerateError("every generator vanishes identically along the disc")


def lelong(alpha: WeightFunction, f: AnalyticDisc) -> tuple[FunctionalValue, PoleData]:
    """sum over zeta of alpha(f(zeta)) m_zeta(f) log|zeta|.

    A disc that lies entirely in the pole set (constant or not) has
    value -inf.
    """
    if isinstance(alpha, FiniteWeights):
        entries = []
        for a, w in alpha.points():
            if a.size != f.dimension:
                raise DomainError("weight support and disc dimensions differ")
            try:
                hits = point_preimages(f, a)
            except DegenerateError:
                return FunctionalValue(-math.inf), PoleData()
            entries.extend((zeta, w * m) for zeta, m in hits)
    elif isinstance(alpha, (SubspaceMultiplicity, SubspaceIndicator)):
        A = alpha.subspace
        try:
            hits = _subspace_hits(A, f)
        except DegenerateError:
            return FunctionalValue(-math.inf), PoleData()
        entries = []
        for zeta, _, p in hits:
            m = multiplicity(f, zeta)
            if math.isinf(m):
                return FunctionalValue(-math.inf), PoleData()
            weight = multiplicity_nu(A, p) if isinstance(alpha, SubspaceMultiplicity) else 1
            if weight > 0:
                entries.append((zeta, weight * m))
    else:
        raise DomainError(f"unsupported weight function {type(alpha).__name__}")
    poles = PoleData(tuple(entries))
    return FunctionalValue(poles.lelong_sum()), poles


def riesz_divisor(A: ComplexSubspace, f: AnalyticDisc) -> tuple[FunctionalValue, PoleData]:
    """int_D log|.| f*[A] = sum over roots of h o f of order * log|zeta|.

    h o f identically zero gives f*[A] = 0 and the value 0.
    """
    if not is_divisor(A):
        raise DomainError("the Riesz functional needs a single generator")
    try:
        roots = preimages(f, A.generators[0])
    except DegenerateError:
        return FunctionalValue(0.0), PoleData()
    poles = PoleData(tuple((z, float(k)) for z, k in roots))
    return FunctionalValue(poles.lelong_sum()), poles


def riesz_jensen(A: ComplexSubspace, f: AnalyticDisc, K: int = POISSON_NODES) -> float:
    """The divisor Riesz value via Jensen's formula.

    log|h(f(0))| - mean over the unit circle of log|h(f)|; smooth in the
    disc coefficients while h o f has no zeros on the circle.
    """
    h = A.generators[0]
    theta = 2 * np.pi * np.arange(K) / K
    with np.errstate(divide="ignore"):
        edge = np.log(np.abs(h(f(np.exp(1j * theta)))))
        centre = math.log(abs(h(f.center))) if h(f.center) != 0 else -math.inf
    return centre - float(np.mean(edge))


def disc_potential(poles: PoleData, zeta: complex) -> float:
    """v(zeta) = sum w_k log|(zeta - z_k) / (1 - conj(z_k) zeta)|."""
    if not abs(zeta) < 1:
        raise DomainError("the disc potential lives on the open disc")
    total = 0.0
    for z, w in poles:
        m = abs((zeta - z) / (1 - np.conj(z) * zeta))
        if m == 0:
            return -math.inf
        total += w * math.log(m)
    return total

