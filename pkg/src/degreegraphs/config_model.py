"""Configuration model: i.i.d. degrees, uniform stub pairing, and the erased,
truncated-erased and repeated simple-graph variants."""

import math
import warnings

import numpy as np

from .distributions import conditional_truncate
from .errors import InvalidInputError, InvalidParameterError, NonConvergenceError, TooManyAttemptsError
from .graph import GenerationReport, Multigraph, SimpleGraph, erase, is_simple
from .rng import as_generator

PARITY_POLICIES = ("remove_stub", "regenerate")
MAX_REGENERATIONS = 1000
DEFAULT_MAX_ATTEMPTS = 10_000


def _draw_degrees(F, n, parity, rng):
    if parity not in PARITY_POLICIES:
        raise InvalidParameterError(f"unknown parity policy {parity!r}")
    n = int(n)
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    degrees = F.sample(rng, n)
    if degrees.sum() % 2 == 0:
        return degrees, False
    if parity == "regenerate":
        for _ in range(MAX_REGENERATIONS):
            degrees = F.sample(rng, n)
            if degrees.sum() % 2 == 0:
                return degrees, True
        raise NonConvergenceError(
            f"degree sum still odd after {MAX_REGENERATIONS} redraws "
            "(law concentrated on odd values with n odd?)")
    # drop one uniformly chosen stub
    stub = rng.integers(int(degrees.sum()))
    owner = np.searchsorted(np.cumsum(degrees), stub, side="right")
    degrees[owner] -= 1
    return degrees, True


def sample_degree_sequence(F, n, parity="remove_stub", rng=None):
    """n i.i.d. draws from F, fixed up so that the sum is even.

    ``remove_stub`` deletes one stub chosen uniformly among all stubs, so the
    decremented vertex is picked with probability proportional to its degree.
    ``regenerate`` redraws the whole sequence, giving up after 1000 redraws.
    """
    degrees, _ = _draw_degrees(F, n, parity, as_generator(rng))
    return degrees


def pair_stubs(degrees, rng=None):
    """Uniform perfect matching of all stubs, as a multigraph.

    Shuffling the stub list and pairing neighbours gives the same law as
    joining uniformly chosen stubs one pair at a time.
    """
    rng = as_generator(rng)
    degrees = np.asarray(degrees, dtype=np.int64)
    if np.any(degrees < 0):
        raise InvalidInputError("degrees must be non-negative")
    if degrees.sum() % 2:
        raise InvalidInputError("odd number of stubs cannot be paired")
    stubs = np.repeat(np.arange(degrees.size, dtype=np.int64), degrees)
    rng.shuffle(stubs)
    return Multigraph(degrees.size, stubs.reshape(-1, 2))


def erased_configuration(F, n, parity="remove_stub", rng=None):
    """Pair stubs once, then erase loops and merge multiple edges."""
    rng = as_generator(rng)
    if not F.mean_finite:
        warnings.warn("erased configuration model with an infinite-mean law; "
                      "use truncated_erased_configuration", RuntimeWarning, stacklevel=2)
    degrees, fixed = _draw_degrees(F, n, parity, rng)
    graph, report = erase(pair_stubs(degrees, rng))
    report.odd_sum_fixed = fixed
    return graph, report


def truncation_cutoff(n, a):
    """floor(n**a), guarded against round-off at exact integer powers."""
    return int(math.floor(n**a * (1 + 1e-12)))


def truncated_erased_configuration(F, n, a, parity="remove_stub", rng=None):
    """Erased configuration model with degrees conditioned on D <= floor(n**a)."""
    if not 0 < a < 1:
        raise InvalidParameterError("truncation exponent a must lie in (0, 1)")
    Fa = conditional_truncate(F, truncation_cutoff(n, a))
    return erased_configuration(Fa, n, parity, rng)


def repeated_configuration(F, n, parity="remove_stub", max_attempts=DEFAULT_MAX_ATTEMPTS,
                           rng=None, keep_degrees=False):
    """Redo the configuration model until the multigraph is simple.

    By default every attempt draws a fresh degree sequence; ``keep_degrees``
    reuses the first sequence and only re-pairs.

    Raises:
        TooManyAttemptsError: no simple outcome within ``max_attempts``.
    """
    rng = as_generator(rng)
    if not F.second_moment_finite:
        warnings.warn("repeated configuration model needs a finite second moment "
                      "for a bounded number of attempts", RuntimeWarning, stacklevel=2)
    degrees = fixed = None
    for attempt in range(1, int(max_attempts) + 1):
        if degrees is None or not keep_degrees:
            degrees, fixed = _draw_degrees(F, n, parity, rng)
        mg = pair_stubs(degrees, rng)
        if is_simple(mg):
            graph = SimpleGraph.from_edges(mg.n, mg.edges)
            report = GenerationReport(n=mg.n, erased_stub_counts=np.zeros(mg.n, dtype=np.int64),
                                      attempts=attempt, odd_sum_fixed=fixed)
            return graph, report
    raise TooManyAttemptsError(int(max_attempts))
