"""Seed handling.

Every random stream is numpy's ``PCG64`` bit generator wrapped in a
``numpy.random.Generator`` (stream layout fixed since numpy 1.17). A single
64-bit user seed is split into per-purpose streams by XOR with the constants
below before being handed to ``PCG64``.
"""

import numpy as np

MASK64 = (1 << 64) - 1

PURPOSE = {
    "degrees": 0x9E3779B97F4A7C15,
    "pairing": 0xBF58476D1CE4E5B9,
    "weights": 0x94D049BB133111EB,
    "edges": 0xD6E8FEB86659FD93,
    "targets": 0xA0761D6478BD642F,
    "trials": 0xE7037ED1A0B428DB,
}


def stream(seed, purpose=None):
    """Generator for ``seed`` (optionally split off for ``purpose``)."""
    seed = int(seed) & MASK64
    if purpose is not None:
        seed ^= PURPOSE[purpose]
    return np.random.Generator(np.random.PCG64(seed))


def substreams(rng, count):
    """``count`` independent generators derived from ``rng``'s next draw.

    Block ``i`` always receives the same stream for a given parent state, so
    work partitioned by block is reproducible regardless of thread count.
    """
    base = int(rng.integers(0, 1 << 63))
    return [np.random.Generator(np.random.PCG64(np.random.SeedSequence([base, i])))
            for i in range(count)]


def as_generator(rng):
    if isinstance(rng, np.random.Generator):
        return rng
    if rng is None or isinstance(rng, (int, np.integer)):
        return np.random.default_rng(rng)
    raise TypeError("rng must be a numpy Generator, an int seed or None")
