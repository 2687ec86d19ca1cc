"""The curve z^2 + w^2 = 1/4 in the unit ball.

Every complex line through the origin meets the curve in 0 or 2 points, so
the linear disc zeta -> (zeta, 0) hits it twice, at +-1/2. That makes
G_A(0) <= 2 log(1/2), while the best single-pole bound over points of the
curve is only log(1/2).
"""

import math

import numpy as np

from plurigreen import Ball, ComplexSubspace, EnvelopeQuery, OptimizerConfig, Polynomial
from plurigreen import envelope_upper, k_alpha_upper
from plurigreen.diagnostics import geodesic_intersection_count, quadric_support

c = 0.25
z, w = Polynomial.variables(2)
A = ComplexSubspace((z * z + w * w - c,))
rng = np.random.default_rng(0)
counts = set()
for _ in range(1000):
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    counts.add(geodesic_intersection_count(c, v / np.linalg.norm(v)))
print("intersection counts seen:", sorted(counts))

r = envelope_upper(EnvelopeQuery("lelong", Ball(2), A, np.zeros(2), OptimizerConfig(seed=7)))
k = k_alpha_upper(quadric_support(c), np.zeros(2), Ball(2))
print(f"G_A(0) <= {r.upper:.4f}   (log c = {math.log(c):.4f})")
print(f"inf over the curve of G_a(0) = {k:.4f}")
print(f"gap = {k - r.upper:.4f}")
