"""Dirichlet problem on the unit disc via the Poisson envelope.

Boundary data are extended inward and the Poisson functional is minimized
over discs through x; in one variable the result is the harmonic
extension, which we compare with the Poisson integral.
"""

import numpy as np

from plurigreen import Ball, OptimizerConfig, poisson_dirichlet
from plurigreen.suites import poisson_integral

cfg = OptimizerConfig(seed=7, degree=16, restarts=4)
h = lambda z: np.abs(np.real(z[..., 0]))  # noqa: E731
for x in (0.0, 0.3, 0.5j, -0.4 + 0.4j):
    r = poisson_dirichlet(Ball(1), h, [x], cfg)
    print(f"x = {x!s:>12}  envelope {r.upper:.4f}  Poisson integral {poisson_integral(h, x):.4f}")
