"""Generalized random graph with edge odds W_i W_j / n**beta.

``beta = 1`` is the finite-mean scaling; for weights with
P(W > w) ~ c w**-alpha, alpha in (0, 1), use ``beta = 1 / alpha``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .alias import AliasTable
from .distributions import mixed_poisson, poisson_mixture
from .errors import InvalidParameterError
from .graph import SimpleGraph
from .rng import as_generator, substreams

ROW_BLOCK = 512
MAX_FAST_SLOTS = 10**8


@dataclass(frozen=True)
class WeightSequence:
    weights: np.ndarray
    beta: float = 1.0

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or np.any(w < 0) or not np.isfinite(w).all():
            raise InvalidParameterError("weights must be finite and non-negative")
        if self.beta < 0:
            raise InvalidParameterError("beta must be >= 0")
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    @property
    def n(self):
        return self.weights.size

    @property
    def scale(self):
        return float(self.n) ** self.beta

    def edge_probability(self, i, j):
        r = self.weights[i] * self.weights[j] / self.scale
        return r / (1.0 + r)

    def dumps(self):
        return "".join(f"{x!r}\n" for x in self.weights.tolist())

    def dump(self, path):
        with open(path, "w", newline="\n") as fh:
            fh.write(self.dumps())

    @classmethod
    def load(cls, path, beta=1.0):
        with open(path) as fh:
            values = [float(line) for line in fh if line.strip()]
        return cls(np.array(values), beta)


def sample_weights(law, n, rng=None, beta=1.0):
    """n i.i.d. weights from a mixing law."""
    rng = as_generator(rng)
    return WeightSequence(np.asarray(law.sample(rng, int(n)), dtype=float), beta)


def _rows(w, scale, start, stop, rng):
    n = w.size
    buf_u = np.empty(n)
    buf_r = np.empty(n)
    src, dst = [], []
    for i in range(start, stop):
        wi = w[i]
        length = n - i - 1
        if wi == 0 or length == 0:
            continue
        u = buf_u[:length]
        r = buf_r[:length]
        rng.random(out=u)
        np.multiply(w[i + 1 :], wi / scale, out=r)
        # edge iff u < r / (1 + r)
        hit = np.flatnonzero(u * (1.0 + r) < r)
        if hit.size:
            src.append(np.full(hit.size, i, dtype=np.int64))
            dst.append(hit + (i + 1))
    if not src:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(src), np.concatenate(dst)


def grg_exact(w, rng=None, threads=1):
    """Independent edge for every pair i < j with probability r/(1+r).

    Theta(n^2) work. Rows are cut into blocks of ``ROW_BLOCK``; block b draws
    from its own substream, so the output does not depend on ``threads``.
    """
    rng = as_generator(rng)
    n = w.n
    if n < 1:
        raise InvalidParameterError("need at least one vertex")
    weights = w.weights
    starts = list(range(0, n, ROW_BLOCK))
    streams = substreams(rng, len(starts))
    jobs = [(s, min(n, s + ROW_BLOCK), g) for s, g in zip(starts, streams)]

    def run(job):
        return _rows(weights, w.scale, *job)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, jobs))
    else:
        parts = [run(job) for job in jobs]
    src = np.concatenate([p[0] for p in parts])
    dst = np.concatenate([p[1] for p in parts])
    return SimpleGraph._from_keys(n, src * n + dst)


def grg_fast(w, rng=None):
    """O(n + m) Poisson approximation of the generalized random graph.

    Draws m ~ Po((sum W)^2 / (2 n**beta)) edge slots with both endpoints
    picked proportionally to W, then drops loops and repeated pairs. Before
    dropping, vertex i has conditional mean degree W_i sum(W) / n**beta.
    """
    rng = as_generator(rng)
    n = w.n
    if n < 2:
        raise InvalidParameterError("grg_fast needs n >= 2")
    total = float(w.weights.sum())
    if total == 0:
        return SimpleGraph.empty(n)
    expected = total * total / (2.0 * w.scale)
    if expected > MAX_FAST_SLOTS:
        raise InvalidParameterError(
            f"grg_fast would draw ~{expected:.3g} edge slots; use grg_exact for this weight scale")
    m = int(rng.poisson(expected))
    table = AliasTable(w.weights)
    u = table.sample(rng, m)
    v = table.sample(rng, m)
    return SimpleGraph.from_edges(n, u, v)


def gamma_constant(alpha, c=1.0):
    """c * integral_0^inf (1+x)^-2 x^-alpha dx.

    Split at x = 1; the tail is mapped to [0, 1] by x -> 1/x. Both pieces are
    integrated with an algebraic endpoint weight (QUADPACK QAWS), which
    absorbs the x^-alpha and y^alpha factors exactly.
    """
    if not 0 < alpha < 1:
        raise InvalidParameterError("alpha must lie in (0, 1); the integral diverges otherwise")
    if not c > 0:
        raise InvalidParameterError("c must be positive")

    def smooth(x):
        return (1.0 + x) ** -2

    head, _ = integrate.quad(smooth, 0.0, 1.0, weight="alg", wvar=(-alpha, 0.0),
                             epsabs=1e-13, epsrel=1e-13)
    tail, _ = integrate.quad(smooth, 0.0, 1.0, weight="alg", wvar=(alpha, 0.0),
                             epsabs=1e-13, epsrel=1e-13)
    return c * (head + tail)


def grg_limit_pmf(law, regime="finite_mean", alpha=None, c=None):
    """Asymptotic degree law.

    ``finite_mean``: mixed Poisson with parameter X * mean(law).
    ``heavy_tail``: mixed Poisson with parameter gamma * X**alpha, where
    P(X > x) ~ c x**-alpha; this law has ccdf ~ gamma c / y, infinite mean.
    """
    if regime == "finite_mean":
        if not math.isfinite(law.mean):
            raise InvalidParameterError("finite_mean regime needs a finite-mean weight law")
        return mixed_poisson(law, law.mean)
    if regime == "heavy_tail":
        if alpha is None or c is None:
            raise InvalidParameterError("heavy_tail regime needs alpha and c")
        g = gamma_constant(alpha, c)
        x, wts = law.atoms()
        return poisson_mixture(g * x**alpha, wts, mean=math.inf, second_moment_finite=False,
                               name=f"grg-heavy:{law.name},{alpha:g}")
    raise InvalidParameterError(f"unknown regime {regime!r}")
