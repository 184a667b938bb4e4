"""Finite-n checks of the limit theorems: empirical laws, TV distance,
erasure diagnostics, simple-graph probability and tail slopes."""

import math

import numpy as np

from . import distributions as dist
from .config_model import _draw_degrees, pair_stubs
from .errors import InvalidParameterError, InvalidRangeError
from .graph import is_simple
from .rng import as_generator

REPORT_KEYS = ("model", "n", "seed", "tv", "erasure_fraction", "attempts", "tail_slope")


def empirical_distribution(g):
    """Degree law N_j / n of a graph."""
    if g.n < 1:
        raise InvalidParameterError("empty vertex set")
    return dist.from_counts(np.bincount(g.degrees(), minlength=1))


def tv_distance(p, q):
    """Half the L1 distance between two pmfs.

    Heads are compared pointwise over the longer of the two; mass beyond is
    compared in aggregate, which is exact unless both laws carry lazy tails.
    """
    length = max(p.head.size, q.head.size)
    a = p.head_upto(length)
    b = q.head_upto(length)
    rest = abs(p.sf(length) - q.sf(length))
    return float(min(1.0, 0.5 * (np.abs(a - b).sum() + rest)))


def erasure_fraction(report):
    """Share of vertices that lost at least one stub."""
    return report.affected_vertices / report.n


def estimate_simple_probability(F, n, trials, rng=None, parity="remove_stub"):
    """Fraction of independent configuration-model pairings that are simple.

    Returns (estimate, binomial standard error).
    """
    rng = as_generator(rng)
    trials = int(trials)
    if trials < 1:
        raise InvalidParameterError("trials must be >= 1")
    hits = 0
    for _ in range(trials):
        degrees, _ = _draw_degrees(F, n, parity, rng)
        hits += is_simple(pair_stubs(degrees, rng))
    p = hits / trials
    return p, math.sqrt(p * (1.0 - p) / trials)


def ccdf(p, ks):
    """P(X >= k) for each k."""
    return p.sf(np.asarray(ks))


def tail_exponent(p, k_lo, k_hi):
    """Least-squares slope of log P(X >= k) against log k on [k_lo, k_hi]."""
    k_lo, k_hi = int(k_lo), int(k_hi)
    if not 1 <= k_lo < k_hi:
        raise InvalidRangeError("need 1 <= k_lo < k_hi")
    ks = np.arange(k_lo, k_hi + 1)
    tail = ccdf(p, ks)
    if np.any(tail <= 0):
        raise InvalidRangeError(f"ccdf vanishes inside [{k_lo}, {k_hi}]")
    slope, _ = np.polyfit(np.log(ks), np.log(tail), 1)
    return float(slope)


def _fmt(value):
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def format_report(**fields):
    """Flat ``key=value`` block in fixed key order; None values are omitted."""
    unknown = set(fields) - set(REPORT_KEYS)
    if unknown:
        raise InvalidParameterError(f"unknown report keys {sorted(unknown)}")
    lines = [f"{k}={_fmt(fields[k])}" for k in REPORT_KEYS if fields.get(k) is not None]
    return "\n".join(lines) + "\n"


def parse_report(text):
    out = {}
    for line in text.splitlines():
        if line.strip():
            key, _, value = line.partition("=")
            out[key] = value
    return out
