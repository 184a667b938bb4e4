import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from degreegraphs import distributions as d
from degreegraphs.errors import RecipeInfeasibleError
from degreegraphs.specs import SpecError, parse_dist, parse_mix, parse_recipe
from degreegraphs.verify import tv_distance


@pytest.mark.parametrize("spec, expected", [
    ("poisson:5", d.poisson(5.0)),
    ("powerlaw:2.5", d.power_law(2.5, 1)),
    ("powerlaw:2.5,3", d.power_law(2.5, 3)),
    ("pointmass:4", d.point_mass(4)),
    ("geometric:0.5", d.geometric(0.5)),
    ("pmf:0=0.25,2=0.75", d.from_pmf({0: 0.25, 2: 0.75})),
    ("compound:2,pmf:1=0.8,2=0.2", d.compound_poisson(2.0, d.from_pmf({1: 0.8, 2: 0.2}))),
    ("compound:1.5,pointmass:1", d.poisson(1.5)),
])
def test_parse_dist(spec, expected):
    assert tv_distance(parse_dist(spec), expected) < 1e-12


def test_parse_mixed_poisson_scale_is_last_token():
    p = parse_dist("mixedpoisson:uniform:2,3,2")
    q = d.mixed_poisson(d.MixingLaw.uniform(2.0, 3.0), 2.0)
    assert tv_distance(p, q) == 0.0
    p = parse_dist("mixedpoisson:discrete:1=0.5,3=0.5,1")
    assert p.pmf(0) == pytest.approx((math.exp(-1) + math.exp(-3)) / 2)


def test_parse_mix():
    assert parse_mix("pointmass:2").mean == 2.0
    assert parse_mix("exponential:3").mean == pytest.approx(3.0)
    assert parse_mix("uniform:1,2").support_infimum == 1.0
    law = parse_mix("pareto:0.5")
    assert math.isinf(law.mean) and law.tail_constant == 1.0
    assert parse_mix("pareto:0.5,2").tail_constant == pytest.approx(2**0.5)
    assert parse_mix("gamma:2,0.5").mean == pytest.approx(1.0)
    assert parse_mix("discrete:1=0.5,3=0.5").mean == 2.0


@pytest.mark.parametrize("spec, token", [
    ("poison:5", "poison"),
    ("poisson", "poisson"),
    ("poisson:x", "x"),
    ("poisson:1,2", "poisson:1,2"),
    ("powerlaw:2.5,1.5", "2.5,1.5"),
    ("powerlaw:0.5", "powerlaw:0.5"),
    ("pmf:0=0.5,1", "1"),
    ("mixedpoisson:uniform:2,3", "uniform:2"),
    ("compound:2", "compound:2"),
])
def test_bad_specs_name_token(spec, token):
    with pytest.raises(SpecError) as exc:
        parse_dist(spec)
    assert exc.value.code == "usage"
    assert token in str(exc.value)


def test_bad_mix():
    for spec in ("normal:1", "uniform:3", "exponential:-1", "discrete:1=0.2"):
        with pytest.raises(SpecError):
            parse_mix(spec)


def test_recipes():
    G, F = parse_recipe("poisson:4")
    assert tv_distance(G, d.poisson(2.0)) == 0.0 and tv_distance(F, d.poisson(4.0)) == 0.0
    G, F = parse_recipe("mixedpoisson:uniform:2,3")
    assert tv_distance(d.convolve_poisson(G, G.mean), F) < 1e-6
    G, F = parse_recipe("compoundpoisson:2,pmf:1=0.8,2=0.2")
    assert tv_distance(d.convolve_poisson(G, G.mean), F) < 1e-10
    with pytest.raises(RecipeInfeasibleError):
        parse_recipe("mixedpoisson:exponential:1")
    with pytest.raises(RecipeInfeasibleError):
        parse_recipe("compoundpoisson:1,pointmass:2")
    with pytest.raises(SpecError):
        parse_recipe("powerlaw:2.5")


@given(st.text(max_size=30))
def test_parser_never_crashes(text):
    # any input either parses or raises a usage-coded error
    for parse in (parse_dist, parse_mix):
        try:
            out = parse(text)
        except SpecError as exc:
            assert exc.code == "usage"
        except RecipeInfeasibleError:
            raise
        else:
            assert out is not None


@given(st.floats(0.01, 50.0))
def test_poisson_spec_round_trip(mu):
    p = parse_dist(f"poisson:{mu!r}")
    assert np.array_equal(p.head, d.poisson(mu).head)
