"""Product property on the bidisc and why it needs unit weights.

With a simple pole at the origin of D x D the Green function is
max(log|z1|, log|z2|). Pretending the weights were 1 and 2 on the factors
would suggest max(log|z1|, 2 log|z2|), which is far off.
"""

import numpy as np

from plurigreen import EnvelopeQuery, FiniteWeights, OptimizerConfig, Polydisc, envelope_upper
from plurigreen.reference import green_polydisc_point

x = np.array([0.25, 0.5])
cfg = OptimizerConfig(seed=7)
r = envelope_upper(EnvelopeQuery("lelong", Polydisc(2), FiniteWeights.point([0, 0]), x, cfg))
print("envelope upper bound     ", round(r.upper, 4))
print("max(log|z1|, log|z2|)    ", round(green_polydisc_point(x), 4))
print("max(log|z1|, 2 log|z2|)  ", round(green_polydisc_point(x, (1, 2)), 4))
print("witness poles            ", [(round(abs(z), 4), w) for z, w in r.poles])
