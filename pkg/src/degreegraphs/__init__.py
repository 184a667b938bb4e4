"""Simple random graphs with prescribed asymptotic degree distributions.

Four generators (erased, truncated and repeated configuration models, the
generalized random graph, and directed graphs with removed directions), the
distribution algebra behind their limit laws, and a verification harness.
"""

from .config_model import (erased_configuration, pair_stubs, repeated_configuration,
                           sample_degree_sequence, truncated_erased_configuration)
from .dgrd import (compound_poisson_source, dgrd_generate, dgrd_target, mixed_poisson_source,
                   poisson_source)
from .distributions import (DegreeDistribution, MixingLaw, cap_truncate, compound_poisson,
                            conditional_truncate, convolve_poisson, from_pmf, geometric,
                            mixed_poisson, pmf_at, point_mass, poisson, power_law, sample)
from .errors import (DegreeGraphError, InvalidInputError, InvalidParameterError,
                     InvalidRangeError, NonConvergenceError, RecipeInfeasibleError,
                     TooManyAttemptsError)
from .graph import GenerationReport, Multigraph, SimpleGraph, degree_counts, erase, is_simple
from .grg import WeightSequence, gamma_constant, grg_exact, grg_fast, grg_limit_pmf, sample_weights
from .rng import stream
from .verify import (empirical_distribution, erasure_fraction, estimate_simple_probability,
                     tail_exponent, tv_distance)

__version__ = "0.1.0"
