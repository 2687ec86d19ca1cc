"""Sparse polynomials in n complex variables.

Only what the toolkit needs: arithmetic for building generators,
vectorized evaluation, Taylor re-expansion at a point, and composition
with a polynomial disc (which yields a one-variable coefficient array).
"""

from __future__ import annotations

from itertools import product
from math import comb

import numpy as np

from .errors import DomainError


class Polynomial:
    """Polynomial sum c_alpha z**alpha stored as ``{alpha: c_alpha}``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise DomainError("polynomials need at least one variable")
        self.n = int(n)
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(k) for k in alpha)
            if len(alpha) != n or min(alpha) < 0:
                raise DomainError(f"bad multi-index {alpha} for {n} variables")
            c = complex(c)
            if c != 0:
                clean[alpha] = clean.get(alpha, 0) + c
        self.terms = {a: c for a, c in clean.items() if c != 0}

    # construction ---------------------------------------------------------
    @classmethod
    def variable(cls, i: int, n: int) -> Polynomial:
        alpha = [0] * n
        alpha[i] = 1
        return cls(n, {tuple(alpha): 1.0})

    @classmethod
    def constant(cls, c, n: int) -> Polynomial:
        return cls(n, {(0,) * n: c})

    @classmethod
    def variables(cls, n: int) -> list[Polynomial]:
        return [cls.variable(i, n) for i in range(n)]

    @classmethod
    def from_triples(cls, n: int, triples) -> Polynomial:
        """Build from ``[(multi_index, re, im), ...]`` as used in config files."""
        terms = {}
        for item in triples:
            alpha, re, im = item
            alpha = tuple(alpha)
            terms[alpha] = terms.get(alpha, 0) + complex(re, im)
        return cls(n, terms)

    def to_triples(self) -> list:
        return [[list(a), c.real, c.imag] for a, c in sorted(self.terms.items())]

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise DomainError("polynomials in different numbers of variables")
            return other
        return Polynomial.constant(other, self.n)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        return Polynomial(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.n, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                terms[k] = terms.get(k, 0) + c * d
        return Polynomial(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(1.0, self.n)
        for _ in range(int(k)):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        parts = []
        for a, c in sorted(self.terms.items()):
            mono = "*".join(f"z{i + 1}^{k}" if k > 1 else f"z{i + 1}" for i, k in enumerate(a) if k)
            parts.append(f"({c:.6g})" + (f"*{mono}" if mono else ""))
        return "Polynomial(" + " + ".join(parts) + ")"

    # queries ----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(a) for a in self.terms), default=-1)

    def derivative(self, i: int) -> Polynomial:
        terms = {}
        for a, c in self.terms.items():
            if a[i]:
                b = list(a)
                b[i] -= 1
                terms[tuple(b)] = terms.get(tuple(b), 0) + c * a[i]
        return Polynomial(self.n, terms)

    def coefficient_bound(self) -> float:
        """sum |c_alpha|, an upper bound for |g| wherever all |z_i| <= 1."""
        return float(sum(abs(c) for c in self.terms.values()))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if z.shape[-1] != self.n:
            raise DomainError(f"expected points with {self.n} coordinates")
        out = np.zeros(z.shape[:-1], dtype=complex)
        for a, c in self.terms.items():
            term = np.full(z.shape[:-1], c, dtype=complex)
            for i, k in enumerate(a):
                if k:
                    term = term * z[..., i] ** k
            out = out + term
        return out[()] if out.ndim == 0 else out

    def taylor_at(self, p) -> dict[tuple, complex]:
        """Coefficients of y -> g(p + y)."""
        p = np.asarray(p, dtype=complex).ravel()
        out: dict[tuple, complex] = {}
        for a, c in self.terms.items():
            ranges = [range(k + 1) for k in a]
            for ks in product(*ranges):
                coef = c
                for i, (k_i, a_i) in enumerate(zip(ks, a)):
                    coef *= comb(a_i, k_i) * p[i] ** (a_i - k_i)
                out[ks] = out.get(ks, 0) + coef
        return out

    def compose(self, coeffs: np.ndarray) -> np.ndarray:
        """One-variable coefficients (ascending) of zeta -> g(f(zeta)).

        ``coeffs`` has shape (n, d + 1): ascending coefficients of each
        coordinate of the disc f.
        """
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape[0] != self.n:
            raise DomainError("disc dimension does not match polynomial")
        d = coeffs.shape[1] - 1
        maxpow = [max((a[i] for a in self.terms), default=0) for i in range(self.n)]
        powers = []
        for i in range(self.n):
            tbl = [np.ones(1, dtype=complex)]
            for _ in range(maxpow[i]):
                tbl.append(np.convolve(tbl[-1], coeffs[i]))
            powers.append(tbl)
        out = np.zeros(max(self.degree, 0) * d + 1, dtype=complex)
        for a, c in self.terms.items():
            term = np.array([c], dtype=complex)
            for i, k in enumerate(a):
                if k:
                    term = np.convolve(term, powers[i][k])
            out[: term.size] += term
        return out
