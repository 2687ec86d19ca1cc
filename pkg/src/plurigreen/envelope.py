"""Upper brackets for disc-functional envelopes.

The envelope of a functional H at x is the infimum of H(f) over closed
discs f with f(0) = x that stay inside the domain. Every contained disc
therefore certifies an upper bound; this module searches polynomial
discs of bounded degree for small values.

Search, per restart: a simplex descent on a penalized objective, then
(for the best few restarts) a constrained refinement on a smooth
surrogate of the same functional. Only discs that pass
``disc_contained`` at the configured margin are eligible, and the
reported value is always the functional recomputed on the winning disc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .disc_model import AnalyticDisc, point_preimages
from .domains import AffineBall, Ball, Domain, Polydisc, Product, disc_contained
from .errors import DegenerateError, DomainError, InfeasibleError, NumericError
from .functionals import PoleData, lelong, poisson, riesz_divisor, riesz_jensen
from .subspace import (ComplexSubspace, FiniteWeights, SubspaceIndicator,
                       SubspaceMultiplicity, WeightFunction, is_divisor,
                       multiplicity_nu, nearest_zero)

KINDS = ("lelong", "poisson", "riesz")
_BIG = 1e6


@dataclass(frozen=True)
class OptimizerConfig:
    degree: int = 6
    restarts: int = 24
    iterations: int = 400
    seed: int = 0
    margin: float = 1e-3
    penalty: float = 1e3
    radius_cap: float = 2.0
    overshoot: float = 1.001
    samples: int = 256
    # best restarts handed to the constrained refinement (0 disables it)
    polish: int = 4
    polish_iterations: int = 300
    nodes: int = 256

    def __post_init__(self):
        for name in ("degree", "restarts", "iterations", "samples", "nodes"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive")
        if not (0 < self.margin < 1 and self.penalty > 0 and self.radius_cap > 0):
            raise DomainError("margin, penalty and radius cap must be positive")
        if not self.overshoot > 1:
            raise DomainError("overshoot must exceed 1")


@dataclass(frozen=True, eq=False)
class EnvelopeQuery:
    kind: str
    domain: Domain
    payload: object
    point: np.ndarray
    config: OptimizerConfig = field(default_factory=OptimizerConfig)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown functional kind {self.kind!r}")
        p = np.atleast_1d(np.asarray(self.point, dtype=complex))
        if p.size != self.domain.dimension:
            raise DomainError("point and domain dimensions differ")
        if not self.domain.contains(p):
            raise DomainError("base point must be interior to the domain")
        object.__setattr__(self, "point", p)
        if self.kind == "lelong" and isinstance(self.payload, ComplexSubspace):
            object.__setattr__(self, "payload", SubspaceMultiplicity(self.payload))
        if self.kind == "riesz" and not (isinstance(self.payload, ComplexSubspace)
                                         and is_divisor(self.payload)):
            raise DomainError("the Riesz envelope needs a single-generator subspace")


@dataclass(frozen=True, eq=False)
class EnvelopeResult:
    upper: float
    witness: AnalyticDisc
    poles: PoleData
    lower: float | None = None
    evaluations: int = 0
    converged: bool = True
    restart: int = -1
    restart_values: tuple = ()

    def with_lower(self, lower: float) -> EnvelopeResult:
        return replace(self, lower=float(lower))

    @property
    def width(self) -> float:
        if self.lower is None:
            return math.inf
        return self.upper - self.lower


# parameterizations ------------------------------------------------------------

class _Coefficients:
    """Free coefficients of degrees 1..d, center pinned to x."""

    def __init__(self, x, d, overshoot):
        self.x, self.d, self.R = x, d, overshoot
        self.n = x.size
        self.size = 2 * self.n * d

    def disc(self, p):
        nd = self.n * self.d
        c = np.empty((self.n, self.d + 1), dtype=complex)
        c[:, 0] = self.x
        c[:, 1:] = (p[:nd] + 1j * p[nd:]).reshape(self.n, self.d)
        return AnalyticDisc(c, self.R)

    def params(self, f):
        tail = f.coeffs[:, 1:].ravel()
        return np.concatenate([tail.real, tail.imag])


class _PinnedRoot:
    """Discs a + (zeta - zeta0) g(zeta) with f(0) = x; f(zeta0) = a by design.

    Parameters are zeta0 and the coefficients of g of degrees 1..d-1;
    g(0) = (a - x) / zeta0 keeps the center at x.
    """

    def __init__(self, x, a, d, overshoot):
        self.x, self.a, self.d, self.R = x, a, d, overshoot
        self.n = x.size
        self.size = 2 + 2 * self.n * (d - 1)

    def disc(self, p):
        z0 = complex(p[0], p[1])
        if abs(z0) < 1e-9:
            return None
        m = self.n * (self.d - 1)
        g = np.zeros((self.n, self.d + 1), dtype=complex)
        g[:, 0] = (self.a - self.x) / z0
        if m:
            g[:, 1:self.d] = (p[2:2 + m] + 1j * p[2 + m:]).reshape(self.n, self.d - 1)
        c = np.empty((self.n, self.d + 1), dtype=complex)
        c[:, 0] = self.x
        c[:, 1:] = g[:, :-1] - z0 * g[:, 1:]
        return AnalyticDisc(c, self.R)

    def params(self, f, z0):
        """Parameters of a disc already known to satisfy f(z0) = a."""
        m = self.n * (self.d - 1)
        g = np.zeros((self.n, self.d), dtype=complex)
        for i in range(self.n):
            num = f.coeffs[i].copy()
            num[0] -= self.a[i]
            quo, _ = np.polydiv(num[::-1], np.array([1.0, -z0]))
            quo = quo[::-1]
            g[i, : min(quo.size, self.d)] = quo[: self.d]
        tail = g[:, 1:].ravel() if m else np.zeros(0, dtype=complex)
        return np.concatenate([[z0.real, z0.imag], tail.real, tail.imag])


# problem set-up -----------------------------------------------------------------

class _Problem:
    """Functional, surrogate and parameterization for one query."""

    def __init__(self, q: EnvelopeQuery):
        self.q = q
        self.cfg = q.config
        self.x = q.point
        self.domain = q.domain
        self.targets: list[tuple[np.ndarray, float]] = []
        pay = q.payload
        if q.kind == "poisson":
            self.phi = pay
        elif q.kind == "lelong" and isinstance(pay, FiniteWeights):
            self.targets = sorted(pay.points(), key=lambda aw: np.linalg.norm(aw[0] - self.x))
        self.pinned = bool(self.targets)

    # values
    def value(self, f: AnalyticDisc) -> tuple[float, PoleData]:
        kind, pay = self.q.kind, self.q.payload
        if kind == "poisson":
            return poisson(self.phi, f, K=self.cfg.nodes).value, PoleData()
        if kind == "riesz":
            v, poles = riesz_divisor(pay, f)
            return v.value, poles
        v, poles = lelong(pay, f)
        return v.value, poles

    def final_value(self, f):
        if self.q.kind == "poisson":
            return poisson(self.phi, f).value, PoleData()
        return self.value(f)

    def surrogate(self, param, target_weight):
        kind, pay = self.q.kind, self.q.payload
        if kind == "poisson":
            return lambda p: poisson(self.phi, param.disc(p), K=self.cfg.nodes).value
        if isinstance(param, _PinnedRoot):
            return lambda p: target_weight * math.log(max(math.hypot(p[0], p[1]), 1e-300))
        sub = pay if kind == "riesz" else getattr(pay, "subspace", None)
        if sub is not None and is_divisor(sub):
            return lambda p: riesz_jensen(sub, param.disc(p), K=self.cfg.nodes)
        return None

    def parameterization(self, index: int):
        cfg = self.cfg
        if self.pinned:
            a, w = self.targets[index % len(self.targets)]
            return _PinnedRoot(self.x, a, cfg.degree, cfg.overshoot), a, w
        return _Coefficients(self.x, cfg.degree, cfg.overshoot), None, 1.0

    def nearest_pole(self):
        if self.pinned:
            return self.targets[0][0]
        if self.q.kind == "poisson":
            return None
        sub = self.q.payload if self.q.kind == "riesz" else self.q.payload.subspace
        return nearest_zero(sub, self.x, self.domain)


def _pole_at_base(q: EnvelopeQuery) -> bool:
    x, pay = q.point, q.payload
    if q.kind == "poisson":
        return False
    if isinstance(pay, FiniteWeights):
        return pay(x) > 0
    sub = pay if isinstance(pay, ComplexSubspace) else pay.subspace
    if isinstance(pay, SubspaceMultiplicity) or q.kind == "riesz":
        return multiplicity_nu(sub, x) > 0
    return x in sub


def _shrink_to_fit(domain, f: AnalyticDisc, margin: float) -> AnalyticDisc | None:
    """Scale f - f(0) down until the disc is contained; gauge is convex."""
    if disc_contained(domain, f, margin):
        return f
    x = f.center
    base = AnalyticDisc.constant(x, f.degree, f.overshoot)
    if not disc_contained(domain, base, margin):
        return None
    lo, hi = 0.0, 1.0
    scale = np.ones(f.degree + 1)
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        scale[1:] = mid
        if disc_contained(domain, AnalyticDisc(f.coeffs * scale, f.overshoot), margin):
            lo = mid
        else:
            hi = mid
    scale[1:] = lo
    return AnalyticDisc(f.coeffs * scale, f.overshoot)


def radial_disc(domain: Domain, x, a, degree: int, overshoot: float = 1.001,
                margin: float = 1e-3) -> AnalyticDisc:
    """Polynomial disc through x aimed at a, inside the complex line xa.

    The line meets the domain in a convex region; we take the disc of
    that region inscribed around the projection of the domain center,
    map the unit disc onto it by the Moebius map sending 0 to x, truncate
    its Taylor series at ``degree`` and scale it back into the domain.
    """
    x = np.asarray(x, dtype=complex)
    a = np.asarray(a, dtype=complex)
    dist = float(np.linalg.norm(x - a))
    if dist == 0:
        return AnalyticDisc.constant(x, degree, overshoot)
    u = (x - a) / dist
    lam_c = complex(np.vdot(u, domain.center - a))
    lam_x = dist
    foot = a + lam_c * u
    m0 = None
    if domain.contains(foot, margin):
        rho = domain.exit_radius(foot, u)
        m0 = (lam_x - lam_c) / rho
    if m0 is None or abs(m0) >= 1 - 1e-9:
        lam_c, rho, m0 = lam_x, domain.exit_radius(x, u), 0.0
    k = np.arange(1, degree + 1)
    lam = np.zeros(degree + 1, dtype=complex)
    lam[0] = lam_c + rho * m0
    lam[1:] = rho * (1 - abs(m0) ** 2) * (-np.conj(m0)) ** (k - 1)
    coeffs = np.outer(u, lam)
    coeffs[:, 0] = x
    f = _shrink_to_fit(domain, AnalyticDisc(coeffs, overshoot), margin)
    if f is None:
        raise DomainError("base point is too close to the boundary for the margin")
    return f


def _random_coefficients(rng, size, cap):
    v = rng.normal(size=size)
    v /= np.linalg.norm(v)
    return v * cap * rng.uniform() ** (1.0 / size)


def _initial(prob: _Problem, index: int, param, target):
    """Starting parameters for restart ``index`` (restart 0 is structured)."""
    cfg = prob.cfg
    domain, x = prob.domain, prob.x
    if index == 0:
        pole = prob.nearest_pole()
        if pole is None:
            f = AnalyticDisc.constant(x, cfg.degree, cfg.overshoot)
        else:
            f = radial_disc(domain, x, pole, cfg.degree, cfg.overshoot, cfg.margin)
        return _to_params(param, f, target)
    rng = np.random.default_rng(cfg.seed ^ index)
    if isinstance(param, _PinnedRoot):
        radial = radial_disc(domain, x, target, cfg.degree, cfg.overshoot, cfg.margin)
        base = _to_params(param, radial, target)
        jitter = _random_coefficients(rng, param.size, cfg.radius_cap) * 0.1
        return base + jitter
    coef = _Coefficients(x, cfg.degree, cfg.overshoot)
    f = coef.disc(_random_coefficients(rng, coef.size, cfg.radius_cap))
    f = _shrink_to_fit(domain, f, cfg.margin) or AnalyticDisc.constant(x, cfg.degree, cfg.overshoot)
    return coef.params(f)


def _to_params(param, f: AnalyticDisc, target):
    f = f.padded(param.d) if f.degree < param.d else f
    if isinstance(param, _Coefficients):
        return param.params(f)
    try:
        hits = point_preimages(f, target)
    except (DegenerateError, NumericError):
        hits = []
    if hits:
        z0 = hits[0][0]
    else:
        # aim at the closest approach of the disc to the target on [0, R)
        q = f.coeffs.copy()
        q[:, 0] -= target
        rts = np.roots(q[np.argmax(np.abs(q[:, 1:]).sum(axis=1))][::-1])
        z0 = complex(rts[np.argmin(np.abs(rts))]) if rts.size else 0.5
        f = _replace_hit(f, target, z0)
    return param.params(f, z0)


def _replace_hit(f, a, z0):
    """Add a linear correction so that f(z0) = a while f(0) is unchanged."""
    c = f.coeffs.copy()
    c[:, 1] += (a - f(z0)) / z0
    return AnalyticDisc(c, f.overshoot)


# search ---------------------------------------------------------------------------

class _Tracker:
    """Penalized objective that remembers the best certified disc."""

    def __init__(self, prob: _Problem, param):
        self.prob, self.param = prob, param
        self.best = (math.inf, None)
        self.evals = 0

    def consider(self, f, value):
        cfg = self.prob.cfg
        if value < self.best[0] and disc_contained(self.prob.domain, f, cfg.margin, cfg.samples):
            self.best = (value, f)

    def __call__(self, p):
        self.evals += 1
        cfg = self.prob.cfg
        f = self.param.disc(p)
        if f is None:
            return _BIG
        top = float(np.max(self.prob.domain.gauge(f.boundary_values(cfg.samples))))
        excess = max(0.0, top - (1 - cfg.margin))
        try:
            value, _ = self.prob.value(f)
        except (NumericError, DegenerateError):
            return _BIG
        value = max(value, -_BIG)
        if excess == 0.0:
            self.consider(f, value)
        return value + cfg.penalty * excess ** 2


def _simplex(tracker: _Tracker, x0, iterations):
    step = 0.05
    simplex = np.vstack([x0] + [x0 + step * e for e in np.eye(x0.size)])
    res = minimize(tracker, x0, method="Nelder-Mead",
                   options=dict(maxiter=iterations, initial_simplex=simplex,
                                xatol=1e-9, fatol=1e-12))
    return res


def _constraint_parts(domain: Domain):
    """Squared pieces whose max is gauge**2 (smooth except where pieces tie)."""
    if isinstance(domain, Ball):
        return lambda z: np.sum(np.abs(z) ** 2, axis=-1)[..., None]
    if isinstance(domain, Polydisc):
        return lambda z: np.abs(z) ** 2
    if isinstance(domain, AffineBall):
        c, r = domain.center, domain.radius
        return lambda z: (np.sum(np.abs(z - c) ** 2, axis=-1) / r**2)[..., None]
    if isinstance(domain, Product):
        subs = [_constraint_parts(fac) for fac in domain.factors]
        dims = [fac.dimension for fac in domain.factors]

        def parts(z):
            out, start = [], 0
            for s, dd in zip(subs, dims):
                out.append(s(z[..., start:start + dd]))
                start += dd
            return np.concatenate(out, axis=-1)
        return parts
    return lambda z: (domain.gauge(z) ** 2)[..., None]


def _polish(prob: _Problem, param, target_weight, p0, tracker: _Tracker):
    obj = prob.surrogate(param, target_weight)
    if obj is None:
        return None
    cfg = prob.cfg
    parts = _constraint_parts(prob.domain)
    bound = (1 - cfg.margin - 1e-6) ** 2

    def safe_obj(p):
        f = param.disc(p)
        if f is None:
            return _BIG
        v = obj(p)
        return v if np.isfinite(v) else _BIG

    def cons(p):
        f = param.disc(p)
        if f is None:
            return -np.ones(cfg.samples)
        return (bound - parts(f.boundary_values(cfg.samples))).ravel()

    with np.errstate(all="ignore"):
        res = minimize(safe_obj, p0, method="SLSQP",
                       constraints=[{"type": "ineq", "fun": cons}],
                       options=dict(maxiter=cfg.polish_iterations, ftol=1e-12))
    tracker.evals += int(res.nfev)
    f = param.disc(res.x)
    if f is None:
        return None
    f = _shrink_to_fit(prob.domain, f, cfg.margin)
    if f is None:
        return None
    try:
        value, _ = prob.value(f)
    except (NumericError, DegenerateError):
        return None
    tracker.consider(f, value)
    return res


def envelope_upper(q: EnvelopeQuery, inject=()) -> EnvelopeResult:
    """Certified upper bound for the envelope of the query's functional at x.

    ``inject`` holds extra starting discs (e.g. a lower-degree witness);
    they run as additional restarts after the seeded ones.
    """
    cfg = q.config
    x = q.point
    const = AnalyticDisc.constant(x, cfg.degree, cfg.overshoot)
    if q.kind == "lelong" and isinstance(q.payload, FiniteWeights) and q.payload.is_zero():
        return EnvelopeResult(0.0, const, PoleData(), evaluations=0, restart=0)
    if _pole_at_base(q):
        return EnvelopeResult(-math.inf, const, PoleData(), evaluations=0, restart=0)

    prob = _Problem(q)
    outcomes = []  # (value, index, disc, converged)
    evals = 0
    starts = []
    for i in range(cfg.restarts):
        param, target, w = prob.parameterization(i)
        starts.append((i, param, target, w, None))
    for j, f in enumerate(inject):
        param, target, w = prob.parameterization(0)
        starts.append((cfg.restarts + j, param, target, w, f))

    finals = {}
    for i, param, target, w, f_inj in starts:
        tracker = _Tracker(prob, param)
        if f_inj is not None:
            f_inj = f_inj.padded(cfg.degree) if f_inj.degree < cfg.degree else f_inj
            f_inj = AnalyticDisc(f_inj.coeffs, cfg.overshoot)
            try:
                v, _ = prob.value(f_inj)
                tracker.consider(f_inj, v)
            except (NumericError, DegenerateError):
                pass
            try:
                x0 = _to_params(param, f_inj, target)
            except (DomainError, ValueError, ZeroDivisionError):
                x0 = None
        else:
            x0 = _initial(prob, i, param, target)
        res = None
        if x0 is not None:
            res = _simplex(tracker, np.asarray(x0, dtype=float), cfg.iterations)
        finals[i] = (tracker, param, w, res)
        evals += tracker.evals
        outcomes.append((tracker.best[0], i))

    # constrained refinement of the most promising restarts
    if cfg.polish:
        ranked = sorted(outcomes, key=lambda vi: (vi[0], vi[1]))[: cfg.polish]
        for _, i in ranked:
            tracker, param, w, res = finals[i]
            if res is None:
                continue
            before = tracker.evals
            start = tracker.best[1]
            p0 = res.x
            if start is not None:
                try:
                    p0 = (param.params(start) if isinstance(param, _Coefficients)
                          else _to_params(param, start, param.a))
                except (DomainError, ValueError, ZeroDivisionError):
                    p0 = res.x
            _polish(prob, param, w, np.asarray(p0, dtype=float), tracker)
            evals += tracker.evals - before

    best = None
    values = []
    for i in sorted(finals):
        tracker, param, w, res = finals[i]
        v, f = tracker.best
        values.append(v)
        if f is not None and (best is None or v < best[0]):
            best = (v, i, f, res)
    if best is None:
        raise InfeasibleError("no restart produced a contained disc")
    _, i, f, res = best
    value, poles = prob.final_value(f)
    converged = bool(res is not None and (res.status == 0 or cfg.polish))
    return EnvelopeResult(float(value), f, poles, evaluations=evals, converged=converged,
                          restart=i, restart_values=tuple(values))


# Dirichlet problem ---------------------------------------------------------------

def _boundary_samples(domain: Domain, count: int = 512) -> np.ndarray:
    n = domain.dimension
    if n == 1:
        w = np.exp(2j * np.pi * np.arange(count) / count)[:, None]
    else:
        from scipy.stats import norm, qmc

        u = qmc.Halton(d=2 * n, scramble=False).random(count + 1)[1:]
        g = norm.ppf(np.clip(u, 1e-12, 1 - 1e-12))
        w = g[:, :n] + 1j * g[:, n:]
    return domain.radial_projection(domain.center + w)


def dirichlet_extension(domain: Domain, h: Callable, lift: float = 2.0) -> Callable:
    """Interior extension of boundary data h used as the Poisson weight.

    phi(z) = h(radial projection of z) + lift * osc(h) * (1 - gauge(z)).
    The lift keeps phi above the maximal solution inside the domain, so the
    Poisson envelope of phi reproduces the Perron-Bremermann solution; it
    vanishes for constant data.
    """
    vals = np.asarray(h(_boundary_samples(domain)), dtype=float)
    osc = float(vals.max() - vals.min())
    top = float(vals.max())
    c = domain.center

    def phi(z):
        z = np.asarray(z, dtype=complex)
        g = np.asarray(domain.gauge(z), dtype=float)
        safe = np.where(g > 0, g, 1.0)
        proj = c + (z - c) / safe[..., None]
        out = np.asarray(h(proj), dtype=float) + lift * osc * (1 - g)
        return np.where(g > 0, out, top + lift * osc)

    return phi


def poisson_dirichlet(X: Domain, h: Callable, x, cfg: OptimizerConfig | None = None,
                      lift: float = 2.0) -> EnvelopeResult:
    """Maximal psh function with boundary values h, evaluated at x from above."""
    cfg = cfg or OptimizerConfig()
    phi = dirichlet_extension(X, h, lift)
    q = EnvelopeQuery("poisson", X, phi, x, cfg)
    # slice discs through x reach the boundary all around; seed the search with them
    x = q.point
    dirs = list(np.eye(X.dimension, dtype=complex))
    off = x - X.center
    if np.linalg.norm(off) > 1e-12:
        dirs.insert(0, off / np.linalg.norm(off))
    inject = [radial_disc(X, x, x - v, cfg.degree, cfg.overshoot, cfg.margin) for v in dirs]
    return envelope_upper(q, inject=inject)


# bounds from the competing class -----------------------------------------------

def minorant_lower(u: Callable, x) -> float:
    """u(x) for a certified member u of the competing class."""
    return float(u(np.asarray(x, dtype=complex)))


def _log_tanh_many(X: Domain, x: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """k_X(x, a) for every row a of ``pts``."""
    if isinstance(X, (Ball, AffineBall)):
        c = X.center
        r = X.radius if isinstance(X, AffineBall) else 1.0
        xs, ps = (x - c) / r, (pts - c) / r
        # 1 - |T_a(x)|^2 = (1 - |a|^2)(1 - |x|^2) / |1 - <x, a>|^2
        num = (1 - np.sum(np.abs(ps) ** 2, axis=1)) * (1 - np.sum(np.abs(xs) ** 2))
        den = np.abs(1 - ps.conj() @ xs) ** 2
        m2 = np.clip(1 - num / den, 0.0, None)
    elif isinstance(X, Polydisc):
        m2 = np.max(np.abs((x - pts) / (1 - np.conj(pts) * x)) ** 2, axis=1)
    elif isinstance(X, Product):
        out, start = None, 0
        for fac in X.factors:
            sl = slice(start, start + fac.dimension)
            v = _log_tanh_many(fac, x[sl], pts[:, sl])
            out = v if out is None else np.maximum(out, v)
            start += fac.dimension
        return out
    else:
        raise DomainError(f"no closed-form Kobayashi distance on {type(X).__name__}")
    with np.errstate(divide="ignore"):
        return 0.5 * np.log(m2)


def log_tanh_kobayashi(X: Domain, x, a) -> float:
    """k_X(x, a) = log tanh of the Kobayashi distance, for model domains."""
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    if np.array_equal(x, a):
        return -math.inf
    return float(_log_tanh_many(X, x, a[None, :])[0])


def k_alpha_upper(alpha: FiniteWeights, x, X: Domain) -> float:
    """min over the support of alpha(a) * k_X(x, a); dominates G_alpha."""
    if alpha.is_zero():
        raise DomainError("empty support")
    x = np.atleast_1d(np.asarray(x, dtype=complex))
    a, w = alpha.arrays
    vals = _log_tanh_many(X, x, a)
    vals[np.all(a == x, axis=1)] = -math.inf
    return float(np.min(w * vals))
