"""Choosing a source law G so the directed construction hits a target F."""

from degreegraphs import (MixingLaw, RecipeInfeasibleError, compound_poisson,
                          compound_poisson_source, dgrd_target, from_pmf, mixed_poisson,
                          mixed_poisson_source, poisson, poisson_source, tv_distance)

R = from_pmf({1: 0.8, 2: 0.2})
cases = [
    ("Poisson(4)", poisson_source(4.0), poisson(4.0)),
    ("mixed Poisson, U[2,3]", mixed_poisson_source(MixingLaw.uniform(2.0, 3.0)),
     mixed_poisson(MixingLaw.uniform(2.0, 3.0), 1.0)),
    ("compound Poisson(2, R)", compound_poisson_source(2.0, R), compound_poisson(2.0, R)),
]
for name, G, F in cases:
    print(f"{name:<24} tv(target, F) = {tv_distance(dgrd_target(G), F):.2e}")

try:
    mixed_poisson_source(MixingLaw.exponential(1.0))
except RecipeInfeasibleError as exc:
    print(f"exponential mixing rejected: {exc}")
