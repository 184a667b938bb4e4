"""Walker/Vose alias table for O(1) weighted index draws."""

import numpy as np

from .errors import InvalidParameterError


class AliasTable:
    """Draw index i with probability weights[i] / sum(weights)."""

    def __init__(self, weights):
        w = np.asarray(weights, dtype=float)
        if w.ndim != 1 or w.size == 0 or np.any(w < 0) or not np.isfinite(w).all():
            raise InvalidParameterError("alias weights must be a non-empty finite array >= 0")
        total = w.sum()
        if total <= 0:
            raise InvalidParameterError("alias weights sum to zero")
        n = w.size
        scaled = (w * (n / total)).tolist()
        prob = [1.0] * n
        alias = list(range(n))
        small = [i for i, x in enumerate(scaled) if x < 1.0]
        large = [i for i, x in enumerate(scaled) if x >= 1.0]
        while small and large:
            s = small.pop()
            g = large[-1]
            prob[s] = scaled[s]
            alias[s] = g
            scaled[g] = (scaled[g] + scaled[s]) - 1.0
            if scaled[g] < 1.0:
                large.pop()
                small.append(g)
        # leftovers are 1 up to round-off and keep prob 1
        self.prob = np.array(prob)
        self.alias = np.array(alias, dtype=np.int64)

    def __len__(self):
        return self.prob.size

    def sample(self, rng, size):
        col = rng.integers(0, self.prob.size, size=size)
        flip = rng.random(size) >= self.prob[col]
        return np.where(flip, self.alias[col], col)

    def probabilities(self):
        """Exact per-index probabilities implied by the table."""
        n = self.prob.size
        p = self.prob.copy()
        np.add.at(p, self.alias, 1.0 - self.prob)
        return p / n
