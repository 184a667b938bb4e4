"""Generalized random graph with Pareto(1/2) weights and n**2 scaling.

Degrees inherit a tail P(D > k) ~ const * k**-1; the fitted log-log slope of
the empirical ccdf over [10, 100] should sit near -1.
"""

from degreegraphs import (MixingLaw, empirical_distribution, gamma_constant, grg_exact,
                          sample_weights, stream, tail_exponent)

n = 20_000
w = sample_weights(MixingLaw.pareto(0.5), n, stream(7, "weights"), beta=2.0)
g = grg_exact(w, stream(7, "edges"))
emp = empirical_distribution(g)
print(f"n={n} edges={g.edge_count}")
print(f"ccdf slope over [10, 100]: {tail_exponent(emp, 10, 100):.3f}")
print(f"gamma(1/2) = {gamma_constant(0.5, 1.0):.12f}")
