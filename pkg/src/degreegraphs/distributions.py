"""Degree distributions on the non-negative integers and their algebra.

A :class:`DegreeDistribution` stores a materialized head ``pmf[0..K-1]``.
Light-tailed laws are cut at the smallest ``K`` with ``CDF(K-1) >= 1 - 1e-12``
and renormalized. Heavy-tailed laws stop at :data:`MAX_HEAD` entries and keep
the remaining mass in a lazily evaluated tail object that can report point
probabilities, survival values and draw conditional samples.

Continuous mixing laws are discretized once, on a 2048-node composite
Gauss-Legendre rule over log-spaced panels between the ``1e-9`` and
``1 - 1e-9`` quantiles.
"""

from __future__ import annotations

import math
from collections.abc import Mapping

import numpy as np
from scipy import stats

from .errors import InvalidParameterError

MASS_EPS = 1e-12
MAX_HEAD = 1 << 20
QUAD_PANELS = 128
QUAD_ORDER = 16
QUANTILE_EPS = 1e-9

def _poisson_head(mu):
    if mu == 0:
        return np.ones(1)
    kmax = int(stats.poisson.isf(MASS_EPS, mu))
    return stats.poisson.pmf(np.arange(kmax + 1), mu)


def _zeta_tail(tau, k):
    """Sum of j**-tau over j >= k (k large) by Euler-Maclaurin."""
    k = np.asarray(k, dtype=float)
    return (
        k ** (1.0 - tau) / (tau - 1.0)
        + 0.5 * k**-tau
        + tau * k ** (-tau - 1.0) / 12.0
        - tau * (tau + 1.0) * (tau + 2.0) * k ** (-tau - 3.0) / 720.0
    )


class _PowerLawTail:
    """pmf(k) = k**-tau / norm for k >= start."""

    def __init__(self, tau, start, norm):
        self.tau = tau
        self.start = int(start)
        self.norm = norm
        self.mass = float(_zeta_tail(tau, self.start)) / norm

    def pmf(self, k):
        k = np.asarray(k, dtype=float)
        return k**-self.tau / self.norm

    def sf(self, k):
        return _zeta_tail(self.tau, k) / self.norm

    def sample(self, rng, size):
        # Floor of a continuous Pareto on [start, inf), thinned to the
        # discrete law; acceptance >= (start/(start+1))**tau.
        tau, start = self.tau, self.start
        bound = (1.0 + 1.0 / start) ** tau
        out = np.empty(size, dtype=np.int64)
        filled = 0
        while filled < size:
            m = size - filled
            y = start * rng.random(m) ** (-1.0 / (tau - 1.0))
            k = np.floor(np.minimum(y, 2.0**62))
            cell = -np.expm1((1.0 - tau) * np.log1p(1.0 / k)) * k
            ratio = (tau - 1.0) / cell / bound
            keep = k[rng.random(m) < ratio]
            out[filled : filled + keep.size] = keep.astype(np.int64)
            filled += keep.size
        return out


class _MixtureTail:
    """Tail of a finite Poisson mixture sum_j w_j Po(lam_j) from ``start``."""

    def __init__(self, lams, weights, start):
        self.lams = lams
        self.weights = weights
        self.start = int(start)
        self._atom_sf = stats.poisson.sf(self.start - 1, lams)
        self.mass = float(np.dot(weights, self._atom_sf))

    def pmf(self, k):
        k = np.atleast_1d(np.asarray(k, dtype=float))
        out = np.empty(k.shape)
        for s in range(0, k.size, 4096):
            chunk = k[s : s + 4096]
            out[s : s + 4096] = stats.poisson.pmf(chunk[:, None], self.lams) @ self.weights
        return out

    def sf(self, k):
        k = np.atleast_1d(np.asarray(k, dtype=float))
        return stats.poisson.sf(k[:, None] - 1, self.lams) @ self.weights

    def sample(self, rng, size):
        p = self.weights * self._atom_sf
        idx = rng.choice(p.size, size=size, p=p / p.sum())
        lam = self.lams[idx]
        q = rng.random(size) * self._atom_sf[idx]
        return stats.poisson.isf(q, lam).astype(np.int64)


class _ConvolvedTail:
    """Tail from ``start`` of base + Po(mu), where base has its own tail."""

    def __init__(self, base, pois, start):
        self.base = base
        self.pois = pois
        self.start = int(start)
        self.mu = float(np.dot(np.arange(pois.size), pois))
        # psf[i] = P(Po >= i) for i = 0..W-1
        self.psf = np.concatenate(([1.0], 1.0 - np.cumsum(pois)[:-1]))
        self.psf = np.clip(self.psf, 0.0, 1.0)
        self.mass = float(self.sf(self.start)[0])

    def pmf(self, k):
        k = np.atleast_1d(np.asarray(k, dtype=np.int64))
        idx = k[:, None] - np.arange(self.pois.size)[None, :]
        vals = self.base.pmf(np.maximum(idx, 0)) * (idx >= 0)
        return vals @ self.pois

    def sf(self, k):
        k = np.atleast_1d(np.asarray(k, dtype=np.int64))
        w = self.psf.size
        idx = k[:, None] - np.arange(1, w)[None, :]
        vals = self.base.pmf(np.maximum(idx, 0)) * (idx >= 0)
        return np.atleast_1d(self.base.sf(k)) + vals @ self.psf[1:]

    def sample(self, rng, size):
        start = self.start
        direct = float(self.base.sf(start))
        shifts = np.arange(1, self.psf.size)
        cross = self.psf[1:] * self.base.pmf(np.maximum(start - shifts, 0)) * (start - shifts >= 0)
        probs = np.concatenate(([direct], cross))
        pick = rng.choice(probs.size, size=size, p=probs / probs.sum())
        out = np.empty(size, dtype=np.int64)
        a = pick == 0
        na = int(a.sum())
        if na:
            out[a] = self.base.tail.sample(rng, na) + rng.poisson(self.mu, na)
        b = ~a
        if b.any():
            i = pick[b]
            q = rng.random(i.size) * self.psf[i]
            out[b] = (start - i) + stats.poisson.isf(q, self.mu).astype(np.int64)
        return out


class DegreeDistribution:
    """Immutable pmf on {0, 1, 2, ...}.

    Args:
        head: probabilities for k = 0..len(head)-1.
        tail: optional lazy tail holding the mass at k >= len(head).
        mean: declared mean; ``math.inf`` marks an infinite mean. Computed
            from the head when omitted and there is no tail.
        second_moment_finite: defaults to True for tail-free laws.
        support_upper: declared cap; pmf is zero above it.
        normalize: rescale a tail-free head to unit mass. Analytic laws pass
            False so stored values stay exact; the dropped mass is < 1e-12.
    """

    def __init__(self, head, *, tail=None, mean=None, second_moment_finite=None,
                 support_upper=None, normalize=True, name=None):
        head = np.array(head, dtype=float)
        if head.ndim != 1 or head.size == 0:
            raise InvalidParameterError("pmf head must be a non-empty 1-d array")
        if np.any(head < 0) or not np.all(np.isfinite(head)):
            raise InvalidParameterError("pmf values must be finite and non-negative")
        if tail is not None and tail.start != head.size:
            raise InvalidParameterError("tail must start right after the head")
        total = head.sum() + (tail.mass if tail is not None else 0.0)
        if abs(total - 1.0) > 1e-9:
            raise InvalidParameterError(f"pmf sums to {total!r}, not 1")
        if tail is None:
            nz = np.flatnonzero(head)
            head = head[: nz[-1] + 1] if nz.size else head[:1]
            if normalize:
                head = head / head.sum()
        if support_upper is not None and head.size - 1 > support_upper:
            if np.any(head[support_upper + 1 :] > 0):
                raise InvalidParameterError("mass above support_upper")
            head = head[: support_upper + 1]
        head.flags.writeable = False
        self._head = head
        self.tail = tail
        self.support_upper = support_upper
        self.name = name
        if mean is None:
            if tail is not None:
                raise InvalidParameterError("mean must be declared when a tail is present")
            mean = float(np.dot(np.arange(head.size), head))
        self.mean = float(mean)
        if second_moment_finite is None:
            second_moment_finite = tail is None
        self.second_moment_finite = bool(second_moment_finite)
        self._cdf = None
        self._suffix = None

    def __repr__(self):
        label = self.name or f"head={self._head.size}"
        return f"DegreeDistribution({label}, mean={self.mean:g})"

    @property
    def head(self):
        return self._head

    @property
    def mean_finite(self):
        return math.isfinite(self.mean)

    @property
    def tail_mass(self):
        return 0.0 if self.tail is None else self.tail.mass

    def pmf(self, k):
        """Vectorized point probabilities; 0 for negative k."""
        k = np.asarray(k)
        scalar = k.ndim == 0
        k = np.atleast_1d(k).astype(np.int64)
        out = np.zeros(k.shape)
        h = self._head.size
        inside = (k >= 0) & (k < h)
        out[inside] = self._head[k[inside]]
        if self.tail is not None:
            beyond = k >= h
            if beyond.any():
                out[beyond] = self.tail.pmf(k[beyond])
        return float(out[0]) if scalar else out

    def head_upto(self, length):
        """pmf over 0..length-1, evaluating the tail lazily if needed."""
        h = self._head.size
        if length <= h:
            return self._head[:length].copy()
        out = np.zeros(length)
        out[:h] = self._head
        if self.tail is not None:
            out[h:] = self.tail.pmf(np.arange(h, length))
        return out

    def sf(self, k):
        """P(X >= k), vectorized."""
        if self._suffix is None:
            suf = np.cumsum(self._head[::-1])[::-1] + self.tail_mass
            self._suffix = np.concatenate((suf, [self.tail_mass]))
        k = np.asarray(k)
        scalar = k.ndim == 0
        k = np.atleast_1d(k).astype(np.int64)
        h = self._head.size
        out = np.empty(k.shape)
        low = k <= h
        out[low] = self._suffix[np.maximum(k[low], 0)]
        if (~low).any():
            out[~low] = self.tail.sf(k[~low]) if self.tail is not None else 0.0
        return float(out[0]) if scalar else out

    def cdf(self, k):
        return 1.0 - self.sf(np.asarray(k) + 1)

    def sample(self, rng, size=None):
        """Inversion on the materialized CDF; tail draws delegated."""
        if self._cdf is None:
            self._cdf = np.cumsum(self._head)
        m = 1 if size is None else int(np.prod(size))
        u = rng.random(m)
        idx = np.searchsorted(self._cdf, u, side="right")
        over = idx >= self._head.size
        if over.any():
            if self.tail is not None:
                idx[over] = self.tail.sample(rng, int(over.sum()))
            else:
                # cumsum rounding just below 1
                idx[over] = self._head.size - 1
        idx = idx.astype(np.int64)
        if size is None:
            return int(idx[0])
        return idx.reshape(size)

    def quantile(self, q):
        if self._cdf is None:
            self._cdf = np.cumsum(self._head)
        i = int(np.searchsorted(self._cdf, q, side="left"))
        if i >= self._head.size:
            raise InvalidParameterError("quantile lies in the lazy tail")
        return i


# -- public operation wrappers ----------------------------------------------

def pmf_at(dist, k):
    return dist.pmf(int(k))


def sample(dist, rng, size=None):
    return dist.sample(rng, size)


# -- constructors ------------------------------------------------------------

def from_pmf(pmf, name=None):
    """Law from a mapping ``k -> p`` or a sequence indexed by k."""
    if isinstance(pmf, Mapping):
        if not pmf:
            raise InvalidParameterError("empty pmf")
        keys = [int(k) for k in pmf]
        if min(keys) < 0:
            raise InvalidParameterError("support must be non-negative")
        head = np.zeros(max(keys) + 1)
        for k, p in pmf.items():
            head[int(k)] += float(p)
    else:
        head = np.asarray(pmf, dtype=float)
    return DegreeDistribution(head, name=name)


def from_counts(counts, name=None):
    """Empirical law N_j / n from a count vector indexed by degree."""
    counts = np.asarray(counts, dtype=np.int64)
    n = int(counts.sum())
    if n <= 0:
        raise InvalidParameterError("no observations")
    return DegreeDistribution(counts / n, normalize=False, name=name)


def point_mass(k):
    k = int(k)
    if k < 0:
        raise InvalidParameterError("point mass must sit on a non-negative integer")
    head = np.zeros(k + 1)
    head[k] = 1.0
    return DegreeDistribution(head, name=f"pointmass:{k}")


def poisson(mu):
    mu = float(mu)
    if mu < 0 or not math.isfinite(mu):
        raise InvalidParameterError("Poisson mean must be finite and >= 0")
    return DegreeDistribution(_poisson_head(mu), mean=mu, normalize=False, name=f"poisson:{mu:g}")


def geometric(p):
    """pmf(k) = p (1-p)**k on k >= 0."""
    p = float(p)
    if not 0 < p <= 1:
        raise InvalidParameterError("geometric parameter must lie in (0, 1]")
    if p == 1:
        return point_mass(0)
    kmax = math.ceil(math.log(MASS_EPS) / math.log1p(-p))
    k = np.arange(kmax)
    return DegreeDistribution(p * (1 - p) ** k, mean=(1 - p) / p, normalize=False,
                              name=f"geometric:{p:g}")


def power_law(tau, k_min=1):
    """pmf(k) proportional to k**-tau for k >= k_min."""
    tau = float(tau)
    k_min = int(k_min)
    if not tau > 1:
        raise InvalidParameterError("power law needs tau > 1 to be normalizable")
    if k_min < 1:
        raise InvalidParameterError("k_min must be a positive integer")
    end = k_min + MAX_HEAD
    ks = np.arange(k_min, end, dtype=float)
    raw = ks**-tau
    rest = float(_zeta_tail(tau, end))
    norm = raw.sum() + rest
    # suffix[i] = mass at k >= k_min + i
    suffix = (np.cumsum(raw[::-1])[::-1] + rest) / norm
    name = f"powerlaw:{tau:g},{k_min}"
    if tau > 2:
        mean = (np.dot(ks, raw) + float(_zeta_tail(tau - 1, end))) / norm
    else:
        mean = math.inf
    second = tau > 3
    below = np.flatnonzero(suffix <= MASS_EPS)
    head = np.zeros(k_min)
    if below.size:
        cut = below[0]
        head = np.concatenate((head, raw[:cut] / norm))
        return DegreeDistribution(head, mean=mean, second_moment_finite=second,
                                  normalize=False, name=name)
    head = np.concatenate((head, raw / norm))
    tail = _PowerLawTail(tau, end, norm)
    return DegreeDistribution(head, tail=tail, mean=mean, second_moment_finite=second,
                              name=name)


# -- algebra -----------------------------------------------------------------

def conditional_truncate(dist, cutoff):
    """Condition on X <= cutoff: renormalize the mass at or below it."""
    cutoff = int(cutoff)
    if cutoff < 0:
        raise InvalidParameterError("cutoff must be non-negative")
    if cutoff + 1 > 64 * MAX_HEAD:
        raise InvalidParameterError("cutoff too large to materialize")
    head = dist.head_upto(cutoff + 1)
    mass = head.sum()
    if mass <= 0:
        raise InvalidParameterError(f"no mass at or below cutoff {cutoff}")
    return DegreeDistribution(head / mass, support_upper=cutoff,
                              name=f"{dist.name}|<= {cutoff}" if dist.name else None)


def cap_truncate(dist, n):
    """Keep g_k for k <= n-2 and lump all mass from n-1 upward at n-1."""
    n = int(n)
    if n < 2:
        raise InvalidParameterError("cap_truncate needs n >= 2")
    head = np.empty(n)
    head[: n - 1] = dist.head_upto(n - 1)
    # complement rather than sf, so the result has unit mass even when the
    # source head was cut at 1 - 1e-12
    head[n - 1] = max(0.0, 1.0 - math.fsum(head[: n - 1]))
    return DegreeDistribution(head, support_upper=n - 1, normalize=False,
                              name=f"{dist.name}|cap {n - 1}" if dist.name else None)


def convolve_poisson(dist, mu):
    """Law of X + P with X ~ dist and P ~ Po(mu) independent."""
    mu = float(mu)
    if mu < 0:
        raise InvalidParameterError("Poisson mean must be >= 0")
    if not dist.mean_finite:
        raise InvalidParameterError("convolve_poisson needs a finite-mean law")
    if mu == 0:
        return dist
    pois = _poisson_head(mu)
    name = f"{dist.name}*Po({mu:g})" if dist.name else None
    if dist.tail is None:
        head = np.convolve(dist.head, pois)
        return DegreeDistribution(head, mean=dist.mean + mu, normalize=False,
                                  second_moment_finite=dist.second_moment_finite, name=name)
    h = dist.head.size
    head = np.convolve(dist.head, pois)[:h]
    tail = _ConvolvedTail(dist, pois / pois.sum(), h)
    return DegreeDistribution(head, tail=tail, mean=dist.mean + mu,
                              second_moment_finite=dist.second_moment_finite, name=name)


def compound_poisson(lam, summand):
    """Sum of a Po(lam) number of i.i.d. summands, by Panjer recursion."""
    lam = float(lam)
    if not lam > 0:
        raise InvalidParameterError("compound Poisson rate must be positive")
    if summand.tail is not None or not summand.mean_finite:
        raise InvalidParameterError("summand must be a materialized finite-mean law")
    r = summand.head
    if lam * (1.0 - r[0]) > 700:
        raise InvalidParameterError("rate too large for direct recursion")
    jr = np.arange(r.size) * r
    p = np.zeros(1024)
    p[0] = math.exp(lam * (r[0] - 1.0))
    acc = p[0]
    k = 0
    while 1.0 - acc > MASS_EPS:
        k += 1
        if k >= p.size:
            if p.size >= MAX_HEAD:
                raise InvalidParameterError("compound law does not fit in the materialized head")
            p = np.concatenate((p, np.zeros(p.size)))
        j = min(k, r.size - 1)
        # p_k = lam/k * sum_{i=1..j} i r_i p_{k-i}
        p[k] = lam / k * np.dot(jr[1 : j + 1], p[k - 1 : k - j - 1 if k - j - 1 >= 0 else None : -1])
        acc += p[k]
        if p[k] == 0.0 and k > r.size + 10 * lam * summand.mean + 100:
            break
    return DegreeDistribution(p[: k + 1], mean=lam * summand.mean, normalize=False,
                              second_moment_finite=summand.second_moment_finite,
                              name=f"compound:{lam:g},{summand.name}" if summand.name else None)


# -- mixing laws -------------------------------------------------------------

def _gauss_legendre_atoms(pdf, lo, hi):
    if lo <= 0:
        lo = hi * 1e-12
    edges = np.geomspace(lo, hi, QUAD_PANELS + 1)
    nodes, weights = np.polynomial.legendre.leggauss(QUAD_ORDER)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    w = (half[:, None] * weights[None, :]).ravel() * pdf(x)
    return x, w / w.sum()


class MixingLaw:
    """Law of a non-negative parameter: either discrete atoms or a density.

    Continuous laws wrap a frozen ``scipy.stats`` distribution plus an
    offset, so that shifting a law is exact.
    """

    def __init__(self, *, values=None, probs=None, rv=None, offset=0.0, name=None):
        self.name = name
        self.rv = rv
        self.offset = float(offset)
        if rv is None:
            values = np.asarray(values, dtype=float)
            probs = np.asarray(probs, dtype=float)
            if values.shape != probs.shape or values.size == 0:
                raise InvalidParameterError("discrete mixing law needs matching values and probs")
            if np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-9:
                raise InvalidParameterError("mixing probabilities must be >= 0 and sum to 1")
            keep = probs > 0
            values, probs = values[keep], probs[keep] / probs[keep].sum()
            if np.any(values < 0):
                raise InvalidParameterError("mixing law must live on [0, inf)")
            order = np.argsort(values)
            self.values, self.probs = values[order], probs[order]
            self.mean = float(np.dot(self.values, self.probs))
            self.support_infimum = float(self.values[0])
            self.second_moment_finite = True
        else:
            self.values = self.probs = None
            lo = float(rv.support()[0]) + self.offset
            if lo < 0:
                raise InvalidParameterError("mixing law must live on [0, inf)")
            self.support_infimum = lo
            self.mean = float(rv.mean()) + self.offset
            var = float(rv.var())
            self.second_moment_finite = math.isfinite(var)
        self._atoms = None
        # P(X > x) ~ tail_constant * x**-tail_index, when known
        self.tail_index = None
        self.tail_constant = None

    def __repr__(self):
        return f"MixingLaw({self.name or ('discrete' if self.is_discrete else 'continuous')})"

    @property
    def is_discrete(self):
        return self.rv is None

    # constructors

    @classmethod
    def discrete(cls, mapping, name=None):
        items = sorted((float(v), float(p)) for v, p in mapping.items())
        return cls(values=[v for v, _ in items], probs=[p for _, p in items], name=name)

    @classmethod
    def point_mass(cls, w):
        return cls(values=[float(w)], probs=[1.0], name=f"pointmass:{w:g}")

    @classmethod
    def from_scipy(cls, rv, name=None):
        return cls(rv=rv, name=name)

    @classmethod
    def exponential(cls, mean=1.0):
        if not mean > 0:
            raise InvalidParameterError("exponential mean must be positive")
        return cls(rv=stats.expon(scale=mean), name=f"exponential:{mean:g}")

    @classmethod
    def uniform(cls, lo, hi):
        if not 0 <= lo < hi:
            raise InvalidParameterError("uniform law needs 0 <= lo < hi")
        return cls(rv=stats.uniform(loc=lo, scale=hi - lo), name=f"uniform:{lo:g},{hi:g}")

    @classmethod
    def pareto(cls, alpha, x_min=1.0):
        """P(W > w) = (w / x_min)**-alpha for w >= x_min."""
        if not alpha > 0 or not x_min > 0:
            raise InvalidParameterError("Pareto law needs alpha > 0 and x_min > 0")
        law = cls(rv=stats.pareto(b=alpha, scale=x_min), name=f"pareto:{alpha:g},{x_min:g}")
        law.tail_index = float(alpha)
        law.tail_constant = float(x_min) ** alpha
        return law

    @classmethod
    def gamma(cls, shape, scale=1.0):
        if not shape > 0 or not scale > 0:
            raise InvalidParameterError("gamma law needs positive shape and scale")
        return cls(rv=stats.gamma(a=shape, scale=scale), name=f"gamma:{shape:g},{scale:g}")

    # behaviour

    def atoms(self):
        """(values, weights): exact atoms, or the 2048-node quadrature rule."""
        if self.is_discrete:
            return self.values, self.probs
        if self._atoms is None:
            lo = float(self.rv.ppf(QUANTILE_EPS))
            hi = float(self.rv.isf(QUANTILE_EPS))
            x, w = _gauss_legendre_atoms(self.rv.pdf, lo, hi)
            self._atoms = (x + self.offset, w)
        return self._atoms

    def sample(self, rng, size):
        if self.is_discrete:
            cdf = np.cumsum(self.probs)
            idx = np.searchsorted(cdf, rng.random(size), side="right")
            return self.values[np.minimum(idx, self.values.size - 1)]
        return self.rv.isf(rng.random(size)) + self.offset

    def shift(self, delta):
        """Translate the law ``delta`` units to the left."""
        delta = float(delta)
        if self.support_infimum - delta < 0:
            raise InvalidParameterError("shift would move mass below zero")
        name = f"{self.name}-{delta:g}" if self.name else None
        if self.is_discrete:
            return MixingLaw(values=self.values - delta, probs=self.probs, name=name)
        return MixingLaw(rv=self.rv, offset=self.offset - delta, name=name)


def poisson_mixture(lams, weights, *, mean=None, second_moment_finite=True, name=None):
    """Materialize sum_j weights[j] * Po(lams[j])."""
    lams = np.asarray(lams, dtype=float)
    weights = np.asarray(weights, dtype=float)
    if mean is None:
        mean = float(np.dot(lams, weights))

    def mix_sf(k):
        return float(np.dot(stats.poisson.sf(k - 1, lams), weights))

    if mix_sf(MAX_HEAD) > MASS_EPS:
        size = MAX_HEAD
    else:
        lo, hi = 0, MAX_HEAD
        while lo < hi:
            mid = (lo + hi) // 2
            if mix_sf(mid) <= MASS_EPS:
                hi = mid
            else:
                lo = mid + 1
        size = max(lo, 1)
    head = np.zeros(size)
    spread = 12.0 * np.sqrt(lams)
    left = np.floor(np.maximum(lams - spread - 20.0, 0.0))
    right = np.ceil(lams + spread + 40.0)
    for lam, w, a, b in zip(lams, weights, left, right):
        a = int(max(a, 0))
        b = int(min(b, size - 1))
        if w == 0 or a > b:
            continue
        ks = np.arange(a, b + 1)
        head[a : b + 1] += w * stats.poisson.pmf(ks, lam)
    if size == MAX_HEAD and mix_sf(MAX_HEAD) > MASS_EPS:
        tail = _MixtureTail(lams, weights, size)
        head *= (1.0 - tail.mass) / head.sum()
        return DegreeDistribution(head, tail=tail, mean=mean,
                                  second_moment_finite=second_moment_finite, name=name)
    return DegreeDistribution(head, mean=mean, second_moment_finite=second_moment_finite,
                              normalize=False, name=name)


def mixed_poisson(mix, scale=1.0):
    """Poisson law whose parameter is ``scale * X`` with X ~ mix."""
    scale = float(scale)
    if scale < 0:
        raise InvalidParameterError("scale must be >= 0")
    x, w = mix.atoms()
    lams = scale * x
    if math.isfinite(mix.mean):
        mean = float(np.dot(lams, w))
    else:
        mean = math.inf if scale > 0 else 0.0
    name = f"mixedpoisson:{mix.name},{scale:g}" if mix.name else None
    return poisson_mixture(lams, w, mean=mean,
                           second_moment_finite=mix.second_moment_finite or scale == 0,
                           name=name)
