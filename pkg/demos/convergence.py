"""Empirical degree laws approaching their limits as n grows.

Prints TV distance to the limit for the erased configuration model and the
directed-graph construction, and the erased-stub fraction M/n.
"""

import numpy as np

from degreegraphs import (dgrd_generate, dgrd_target, empirical_distribution,
                          erased_configuration, erasure_fraction, geometric, poisson, stream,
                          tv_distance)

F = poisson(5.0)
G = geometric(0.5)
target = dgrd_target(G)

print(f"{'n':>8}  {'erased tv':>10}  {'M/n':>9}  {'dgrd tv':>9}")
for n in (10**3, 10**4, 10**5):
    tv_e, frac, tv_d = [], [], []
    for s in range(5):
        g, report = erased_configuration(F, n, rng=stream(s, "pairing"))
        tv_e.append(tv_distance(empirical_distribution(g), F))
        frac.append(erasure_fraction(report))
        tv_d.append(tv_distance(empirical_distribution(dgrd_generate(G, n, stream(s, "targets"))),
                                target))
    print(f"{n:>8}  {np.mean(tv_e):>10.4f}  {np.mean(frac):>9.5f}  {np.mean(tv_d):>9.4f}")
