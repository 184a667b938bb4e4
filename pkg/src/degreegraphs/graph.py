"""Graph value types, erasure of loops and parallel edges, edge-list IO."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError


def _as_edge_array(edges):
    edges = np.asarray(edges, dtype=np.int64)
    if edges.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    if edges.ndim != 2 or edges.shape[1] != 2:
        raise InvalidInputError("edges must be an (m, 2) array of vertex pairs")
    return edges


def _pair_keys(u, v, n):
    lo = np.minimum(u, v)
    hi = np.maximum(u, v)
    return lo * n + hi


class Multigraph:
    """Undirected multigraph on vertices 0..n-1; loops and repeats allowed."""

    def __init__(self, n, edges):
        self.n = int(n)
        edges = _as_edge_array(edges)
        if edges.size and (edges.min() < 0 or edges.max() >= self.n):
            raise InvalidInputError("edge endpoint outside [0, n)")
        edges.flags.writeable = False
        self.edges = edges

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={len(self.edges)})"

    @property
    def loop_count(self):
        return int(np.count_nonzero(self.edges[:, 0] == self.edges[:, 1]))

    @property
    def parallel_excess(self):
        """Non-loop edges minus distinct non-loop pairs."""
        u, v = self.edges[:, 0], self.edges[:, 1]
        keep = u != v
        keys = _pair_keys(u[keep], v[keep], self.n)
        return int(keys.size - np.unique(keys).size)

    def degrees(self):
        """Stub counts per vertex; a loop counts twice."""
        return np.bincount(self.edges.ravel(), minlength=self.n)


class SimpleGraph:
    """Loop-free, duplicate-free undirected graph stored as CSR adjacency.

    ``neighbors(i)`` is strictly increasing and the adjacency is symmetric.
    Build instances with :meth:`from_edges`, which sorts and deduplicates.
    """

    def __init__(self, n, indptr, indices):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        indptr.flags.writeable = False
        indices.flags.writeable = False

    @classmethod
    def from_edges(cls, n, u, v=None):
        """Simple graph containing {u, v} for every non-loop input pair."""
        n = int(n)
        if v is None:
            e = _as_edge_array(u)
            u, v = e[:, 0], e[:, 1]
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        keep = u != v
        return cls._from_keys(n, np.unique(_pair_keys(u[keep], v[keep], n)))

    @classmethod
    def _from_keys(cls, n, keys):
        # keys: distinct lo * n + hi codes with lo < hi
        if n == 0:
            return cls.empty(0)
        lo, hi = np.divmod(keys, n)
        both = np.sort(np.concatenate((keys, hi * n + lo)))
        src, dst = np.divmod(both, n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst)

    @classmethod
    def empty(cls, n):
        return cls(n, np.zeros(int(n) + 1, dtype=np.int64), np.empty(0, dtype=np.int64))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    @property
    def edge_count(self):
        return int(self.indices.size // 2)

    def neighbors(self, i):
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def degrees(self):
        return np.diff(self.indptr)

    def edges(self):
        """(u, v) arrays with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        keep = src < self.indices
        return src[keep], self.indices[keep]

    def check(self):
        """Raise AssertionError unless every structural invariant holds."""
        deg = self.degrees()
        assert self.indptr[0] == 0 and np.all(deg >= 0)
        src = np.repeat(np.arange(self.n, dtype=np.int64), deg)
        assert np.all(self.indices >= 0) and np.all(self.indices < max(self.n, 1))
        assert not np.any(src == self.indices), "loop present"
        same_row = src[1:] == src[:-1]
        assert np.all(self.indices[1:][same_row] > self.indices[:-1][same_row]), "unsorted or duplicate"
        fwd = np.sort(src * self.n + self.indices)
        bwd = np.sort(self.indices * self.n + src)
        assert np.array_equal(fwd, bwd), "asymmetric adjacency"


@dataclass
class GenerationReport:
    """Telemetry of one generation run.

    ``erased_stub_counts[i]`` is the number of stubs of vertex i destroyed by
    erasure; ``affected_vertices`` counts the vertices with at least one.
    """

    n: int
    erased_stub_counts: np.ndarray = field(repr=False)
    attempts: int = 1
    odd_sum_fixed: bool = False
    seed: int | None = None

    @property
    def affected_vertices(self):
        return int(np.count_nonzero(self.erased_stub_counts))

    @property
    def erased_stubs(self):
        return int(self.erased_stub_counts.sum())


def erase(mg):
    """Drop loops and merge parallel edges.

    A loop charges 2 erased stubs to its vertex; each copy of {i, j} beyond
    the first charges 1 stub to i and 1 to j.
    """
    n = mg.n
    u, v = mg.edges[:, 0], mg.edges[:, 1]
    loops = u == v
    erased = 2 * np.bincount(u[loops], minlength=n)
    keys = _pair_keys(u[~loops], v[~loops], n)
    uniq, counts = np.unique(keys, return_counts=True)
    dup = counts > 1
    if dup.any():
        lo, hi = np.divmod(uniq[dup], n)
        extra = counts[dup] - 1
        erased += np.bincount(lo, weights=extra, minlength=n).astype(np.int64)
        erased += np.bincount(hi, weights=extra, minlength=n).astype(np.int64)
    graph = SimpleGraph._from_keys(n, uniq)
    return graph, GenerationReport(n=n, erased_stub_counts=erased.astype(np.int64))


def is_simple(mg):
    return mg.loop_count == 0 and mg.parallel_excess == 0


def degree_counts(g):
    """Mapping degree -> number of vertices with that degree."""
    counts = np.bincount(g.degrees(), minlength=1)
    return {int(k): int(c) for k, c in enumerate(counts) if c}


# -- edge-list text format ---------------------------------------------------

def format_edge_list(g):
    """``# n=<n>`` header, then ``u v`` per edge with u < v, sorted, LF-terminated."""
    u, v = g.edges()
    lines = [f"# n={g.n}"]
    lines.extend(f"{a} {b}" for a, b in zip(u.tolist(), v.tolist()))
    return "\n".join(lines) + "\n"


def write_edge_list(g, path):
    with open(path, "w", newline="\n") as fh:
        fh.write(format_edge_list(g))


def parse_edge_list(text):
    lines = text.split("\n")
    if not lines or not lines[0].startswith("# n="):
        raise InvalidInputError("edge list must start with '# n=<n>'")
    n = int(lines[0][4:])
    pairs = [tuple(map(int, ln.split())) for ln in lines[1:] if ln.strip()]
    return SimpleGraph.from_edges(n, np.array(pairs, dtype=np.int64).reshape(-1, 2))


def read_edge_list(path):
    with open(path) as fh:
        return parse_edge_list(fh.read())
