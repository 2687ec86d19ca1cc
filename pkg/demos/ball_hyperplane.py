"""Green function of the hyperplane {z1 = 0} in the unit ball of C^2.

The envelope of the Lelong functional over degree-d polynomial discs is an
upper bound for G_A. Near A it is essentially exact; close to the part of
the sphere away from A the polynomial degree limits how far a disc can
reach, and the gap grows. Raising the degree shrinks it.
"""

import numpy as np

from plurigreen import Ball, ComplexSubspace, EnvelopeQuery, OptimizerConfig, Polynomial
from plurigreen import envelope_upper
from plurigreen.reference import green_ball_hyperplane

A = ComplexSubspace((Polynomial.variable(0, 2),))

print(f"{'x':>18} {'closed form':>12} {'d=6':>9} {'d=10':>9}")
for x1 in (0.1, 0.3, 0.5, 0.7):
    x = np.array([x1, 0.3])
    row = []
    for d in (6, 10):
        cfg = OptimizerConfig(seed=7, degree=d, restarts=4)
        row.append(envelope_upper(EnvelopeQuery("lelong", Ball(2), A, x, cfg)).upper)
    exact = green_ball_hyperplane(x)
    print(f"{str(x.real):>18} {exact:12.4f} {row[0] - exact:9.4f} {row[1] - exact:9.4f}")
print("columns d=6 and d=10 show the upper bound minus the closed form")
