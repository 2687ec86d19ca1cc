"""Numerical pluricomplex Green functions on bounded convex domains.

Green functions with logarithmic poles (weighted points or the zero set
of polynomial generators) are bracketed from above by minimizing disc
functionals over polynomial analytic discs, and checked against closed
forms on the ball and the polydisc.
"""

from .complex_core import (BlaschkeProduct, MobiusFactor, ball_automorphism, blaschke_eval,
                           blaschke_rescale_check, disc_green, poincare_distance)
from .disc_model import (AnalyticDisc, multiplicity, point_preimages, preimages,
                         surgery_constant_replace, surgery_shrink, surgery_zero_split)
from .domains import AffineBall, Ball, Domain, Polydisc, Product, contains, disc_contained, gauge
from .envelope import (EnvelopeQuery, EnvelopeResult, OptimizerConfig, envelope_upper,
                       k_alpha_upper, minorant_lower, poisson_dirichlet)
from .errors import DegenerateError, DomainError, InfeasibleError, NumericError
from .functionals import PoleData, disc_potential, lelong, poisson, riesz_divisor
from .polynomial import Polynomial
from .subspace import (ComplexSubspace, FiniteWeights, SubspaceIndicator, SubspaceMultiplicity,
                       is_divisor, log_max_generators, multiplicity_nu)

__version__ = "0.1.0"
