"""Directed graph with removed directions (DGRD) and its source recipes.

Each vertex fires Y_i ~ cap_truncate(G, n) out-edges at distinct targets
other than itself; directions are then dropped and parallel edges fused.
The degree law tends to G * Po(mean(G)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import distributions as dist
from .errors import InvalidParameterError, RecipeInfeasibleError
from .graph import SimpleGraph
from .rng import as_generator

DENSE_FRACTION = 16


@dataclass(frozen=True)
class DirectedEdges:
    """Instrumentation: the directed multigraph before fusing."""

    src: np.ndarray
    dst: np.ndarray
    out_degrees: np.ndarray


def _sparse_targets(src, n, rng):
    # Uniform over other vertices, then redraw repeats until each source's
    # targets are distinct. The result is label-exchangeable with fixed size,
    # hence a uniform subset.
    draw = rng.integers(0, n - 1, size=src.size)
    dst = draw + (draw >= src)
    pending = np.arange(src.size)
    while pending.size:
        keys = src * n + dst
        order = np.argsort(keys, kind="stable")
        ks = keys[order]
        repeat = np.zeros(ks.size, dtype=bool)
        repeat[1:] = ks[1:] == ks[:-1]
        pending = np.sort(order[repeat])
        if pending.size:
            draw = rng.integers(0, n - 1, size=pending.size)
            dst[pending] = draw + (draw >= src[pending])
    return dst


def dgrd_generate(G, n, rng=None, instrument=False):
    """Simple graph from the two-step DGRD construction.

    With ``instrument=True`` also returns the :class:`DirectedEdges`.
    """
    rng = as_generator(rng)
    n = int(n)
    if n < 2:
        raise InvalidParameterError("DGRD needs n >= 2")
    if not G.mean_finite:
        raise InvalidParameterError("DGRD needs a finite-mean out-degree law")
    Y = dist.cap_truncate(G, n).sample(rng, n)
    dense = Y * DENSE_FRACTION > n
    sparse_src = np.repeat(np.arange(n, dtype=np.int64), np.where(dense, 0, Y))
    src_parts = [sparse_src]
    dst_parts = [_sparse_targets(sparse_src, n, rng)]
    for i in np.flatnonzero(dense):
        # O(n) <= 16 * Y_i
        pick = rng.permutation(n - 1)[: Y[i]]
        src_parts.append(np.full(Y[i], i, dtype=np.int64))
        dst_parts.append(pick + (pick >= i))
    src = np.concatenate(src_parts)
    dst = np.concatenate(dst_parts)
    graph = SimpleGraph.from_edges(n, src, dst)
    if instrument:
        return graph, DirectedEdges(src, dst, Y)
    return graph


def in_out_decomposition(directed, n):
    """(Y, Z): out-degrees and in-neighbours that are not out-targets."""
    out_keys = directed.src * n + directed.dst
    back = directed.dst * n + directed.src
    not_reciprocated = ~np.isin(back, out_keys)
    Z = np.bincount(directed.dst[not_reciprocated], minlength=n)
    return directed.out_degrees, Z


def dgrd_target(G):
    """Limiting degree law G * Po(mean(G))."""
    if not G.mean_finite:
        raise InvalidParameterError("DGRD needs a finite-mean out-degree law")
    return dist.convolve_poisson(G, G.mean)


# -- recipes: out-degree law G for a desired limit F ---------------------------

def poisson_source(mu_F):
    """G = Po(mu_F / 2) gives F = Po(mu_F)."""
    mu_F = float(mu_F)
    if mu_F < 0:
        raise InvalidParameterError("Poisson mean must be >= 0")
    if mu_F == 0:
        return dist.point_mass(0)
    return dist.poisson(mu_F / 2.0)


def mixed_poisson_source(Q):
    """G mixed Poisson with Q shifted mean(Q)/2 to the left.

    Requires inf supp(Q) > mean(Q) / 2 (strict).
    """
    half = Q.mean / 2.0
    if not Q.support_infimum - half > 0:
        raise RecipeInfeasibleError(
            f"mixed Poisson recipe needs inf supp(Q) - mean(Q)/2 > 0; "
            f"got {Q.support_infimum:g} - {half:g}")
    return dist.mixed_poisson(Q.shift(half), 1.0)


def transferred_summand(R):
    """R' : move mass mean(R)/2 from the point 1 to the point 0."""
    if R.tail is not None or not R.mean_finite:
        raise InvalidParameterError("summand must be a materialized finite-mean law")
    half = R.mean / 2.0
    r1 = R.pmf(1)
    if not r1 > half:
        raise RecipeInfeasibleError(
            f"compound Poisson recipe needs r_1 > mean(R)/2; got {r1:g} <= {half:g}")
    head = R.head_upto(max(R.head.size, 2))
    head[0] += half
    head[1] -= half
    return dist.DegreeDistribution(head, name=f"{R.name}'" if R.name else None)


def compound_poisson_source(lam, R):
    """G compound Poisson(lam, R') gives F compound Poisson(lam, R)."""
    return dist.compound_poisson(lam, transferred_summand(R))
