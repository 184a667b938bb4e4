import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from degreegraphs import distributions as d
from degreegraphs.distributions import MixingLaw
from degreegraphs.errors import InvalidParameterError


def total_mass(p):
    return float(p.head.sum() + p.tail_mass)


# -- pmf_at / sample --------------------------------------------------------

def test_pmf_at_examples():
    assert d.pmf_at(d.poisson(1.0), 0) == pytest.approx(math.exp(-1), abs=1e-15)
    assert d.pmf_at(d.point_mass(3), 3) == 1.0
    assert d.pmf_at(d.point_mass(3), 2) == 0.0
    assert d.pmf_at(d.point_mass(3), 10**9) == 0.0


def test_sample_degenerate():
    rng = np.random.default_rng(0)
    assert np.all(d.sample(d.point_mass(5), rng, 1000) == 5)
    assert np.all(d.sample(d.from_pmf({0: 1.0}), rng, 1000) == 0)
    assert isinstance(d.sample(d.point_mass(5), rng), int)


def test_poisson_sample_mean():
    x = d.sample(d.poisson(4.0), np.random.default_rng(11), 10**6)
    # 5 standard errors: 5 * sqrt(4 / 1e6) = 0.01
    assert abs(x.mean() - 4.0) < 0.01


def test_sampling_matches_pmf_chi_square():
    p = d.geometric(0.3)
    x = d.sample(p, np.random.default_rng(2), 200_000)
    k = 15
    obs = np.bincount(np.minimum(x, k), minlength=k + 1)
    exp = np.append(p.head_upto(k), p.sf(k)) * x.size
    assert stats.chisquare(obs, exp).pvalue > 0.01


# -- power law --------------------------------------------------------------

def test_power_law_ratio_and_flags():
    p = d.power_law(3.0, 1)
    assert p.pmf(1) / p.pmf(2) == pytest.approx(8.0, rel=1e-12)
    assert math.isinf(d.power_law(1.5, 1).mean)
    assert math.isfinite(d.power_law(2.5, 1).mean)
    assert not d.power_law(2.5, 1).second_moment_finite
    assert d.power_law(3.5, 1).second_moment_finite


def test_power_law_normalizer_against_partial_sums():
    # zeta(2.5) by 10^6 direct terms plus integral bounds on the remainder
    N = 10**6
    k = np.arange(1, N + 1, dtype=float)
    partial = float(np.sum(k[::-1] ** -2.5))
    lower = partial + (N + 1) ** -1.5 / 1.5
    upper = partial + N ** -1.5 / 1.5
    z = 1.0 / d.power_law(2.5, 1).pmf(1)
    assert lower - 1e-12 <= z <= upper + 1e-12
    assert z == pytest.approx(1.341487, abs=1e-6)


def test_power_law_k_min():
    p = d.power_law(2.5, 3)
    assert p.pmf(2) == 0.0 and p.pmf(3) > 0
    assert p.pmf(3) / p.pmf(6) == pytest.approx(2**2.5)
    assert total_mass(p) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("tau", [1.0, 0.5, -2.0])
def test_power_law_rejects_tau(tau):
    with pytest.raises(InvalidParameterError):
        d.power_law(tau, 1)


def test_power_law_heavy_tail_sampling():
    p = d.power_law(1.5, 1)
    x = p.sample(np.random.default_rng(5), 200_000)
    assert x.min() >= 1
    # P(X >= k) ~ k^-0.5: roughly 1/sqrt(10) of draws beyond 10
    emp = np.mean(x >= 10)
    assert emp == pytest.approx(float(p.sf(10)), abs=0.005)
    emp_far = np.mean(x >= 10**7)
    assert emp_far == pytest.approx(float(p.sf(10**7)), abs=0.001)


# -- truncations ------------------------------------------------------------

def test_conditional_truncate_examples():
    assert np.allclose(d.conditional_truncate(d.point_mass(2), 5).head_upto(6),
                       d.point_mass(2).head_upto(6))
    u = d.from_pmf({1: 0.25, 2: 0.25, 3: 0.25, 4: 0.25})
    t = d.conditional_truncate(u, 2)
    assert t.pmf(1) == pytest.approx(0.5) and t.pmf(2) == pytest.approx(0.5)
    assert t.pmf(3) == 0.0
    t = d.conditional_truncate(d.poisson(1.0), 1)
    assert t.pmf(0) == pytest.approx(0.5) and t.pmf(1) == pytest.approx(0.5)
    assert t.support_upper == 1


def test_conditional_truncate_zero_mass():
    with pytest.raises(InvalidParameterError):
        d.conditional_truncate(d.point_mass(5), 3)


def test_conditional_truncate_recovers_original():
    for p in (d.poisson(3.0), d.geometric(0.2), d.power_law(3.5, 1)):
        cutoff = 10 * int(p.quantile(0.9999))
        t = d.conditional_truncate(p, cutoff)
        ks = np.arange(cutoff + 1)
        assert np.max(np.abs(t.pmf(ks) - p.pmf(ks))) < 1e-6


def test_cap_truncate_examples():
    c = d.cap_truncate(d.poisson(2.0), 3)
    e2 = math.exp(-2)
    assert c.head_upto(3) == pytest.approx([e2, 2 * e2, 1 - 3 * e2], abs=1e-15)
    assert c.pmf(3) == 0.0
    assert d.cap_truncate(d.point_mass(0), 7).pmf(0) == 1.0
    assert d.cap_truncate(d.point_mass(10), 3).pmf(2) == 1.0


def test_cap_truncate_preserves_mass():
    for p in (d.power_law(1.5, 1), d.poisson(30.0), d.geometric(0.01)):
        for n in (2, 10, 1000):
            assert total_mass(d.cap_truncate(p, n)) == pytest.approx(1.0, abs=1e-12)


# -- convolution, mixtures, compounds --------------------------------------

def test_convolve_poisson_examples():
    assert d.convolve_poisson(d.poisson(1.0), 1.0).pmf(0) == pytest.approx(math.exp(-2))
    g = d.geometric(0.4)
    same = d.convolve_poisson(g, 0.0)
    assert np.allclose(same.head_upto(50), g.head_upto(50), atol=1e-15)
    assert d.convolve_poisson(d.point_mass(2), 1.0).pmf(3) == pytest.approx(math.exp(-1))


@pytest.mark.parametrize("mu", [0.5, 2.0, 7.5])
def test_convolve_poisson_mean(mu):
    for p in (d.geometric(0.5), d.poisson(3.0), d.from_pmf({0: 0.2, 5: 0.8})):
        c = d.convolve_poisson(p, mu)
        ks = np.arange(c.head.size)
        assert float(ks @ c.head) == pytest.approx(p.mean + mu, abs=1e-6)
        assert c.mean == pytest.approx(p.mean + mu, abs=1e-9)


def test_convolve_poisson_with_power_law_tail():
    p = d.power_law(2.5, 1)
    c = d.convolve_poisson(p, p.mean)
    assert total_mass(c) == pytest.approx(1.0, abs=1e-9)
    # brute force at k = 40
    k = 40
    j = np.arange(k + 1)
    brute = float(np.sum(p.pmf(j) * stats.poisson.pmf(k - j, p.mean)))
    assert c.pmf(k) == pytest.approx(brute, rel=1e-10)


def test_mixed_poisson_examples():
    pm = d.mixed_poisson(MixingLaw.point_mass(2.0), 1.5)
    ks = np.arange(40)
    assert np.max(np.abs(pm.pmf(ks) - stats.poisson.pmf(ks, 3.0))) < 1e-10
    two = d.mixed_poisson(MixingLaw.discrete({1: 0.5, 3: 0.5}), 1.0)
    assert two.pmf(0) == pytest.approx((math.exp(-1) + math.exp(-3)) / 2, abs=1e-15)


def test_mixed_poisson_exponential_is_geometric():
    # closed form: int e^-x x^k / k! e^-x dx = 2^-(k+1)
    m = d.mixed_poisson(MixingLaw.exponential(1.0), 1.0)
    ks = np.arange(60)
    assert np.max(np.abs(m.pmf(ks) - 0.5 ** (ks + 1))) < 1e-8
    assert total_mass(m) == pytest.approx(1.0, abs=1e-9)


def test_mixed_poisson_uniform_closed_form():
    # int_2^3 Po(k; x) dx = P(N_2 <= k) - P(N_3 <= k)
    m = d.mixed_poisson(MixingLaw.uniform(2.0, 3.0), 1.0)
    ks = np.arange(30)
    exact = stats.poisson.cdf(ks, 2.0) - stats.poisson.cdf(ks, 3.0)
    assert np.max(np.abs(m.pmf(ks) - exact)) < 1e-8


def test_compound_poisson_examples():
    c = d.compound_poisson(1.0, d.point_mass(1))
    assert c.pmf(0) == pytest.approx(math.exp(-1)) and c.pmf(1) == pytest.approx(math.exp(-1))
    c = d.compound_poisson(2.0, d.point_mass(2))
    assert c.pmf(1) == 0.0 and c.pmf(2) == pytest.approx(2 * math.exp(-2))
    c = d.compound_poisson(1.0, d.from_pmf({1: 0.5, 2: 0.5}))
    assert c.pmf(1) == pytest.approx(0.5 * math.exp(-1))


def _brute_compound(lam, r, kmax, terms=40):
    # sum over N ~ Po(lam) of the N-fold convolution of r
    out = np.zeros(kmax + 1)
    conv = np.zeros(kmax + 1)
    conv[0] = 1.0
    for n in range(terms):
        out += stats.poisson.pmf(n, lam) * conv
        conv = np.convolve(conv, r)[: kmax + 1]
    return out


@pytest.mark.parametrize("lam", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("r", [{1: 1.0}, {0: 0.3, 1: 0.5, 3: 0.2}, {1: 0.8, 2: 0.2}])
def test_compound_poisson_recursion_vs_brute_force(lam, r):
    c = d.compound_poisson(lam, d.from_pmf(r))
    rv = d.from_pmf(r).head_upto(16)
    brute = _brute_compound(lam, rv, 15)
    assert np.max(np.abs(c.head_upto(16) - brute)) < 1e-8


def test_compound_poisson_errors():
    with pytest.raises(InvalidParameterError):
        d.compound_poisson(0.0, d.point_mass(1))
    with pytest.raises(InvalidParameterError):
        d.compound_poisson(-1.0, d.point_mass(1))


def test_geometric_and_errors():
    g = d.geometric(0.25)
    assert g.pmf(0) == pytest.approx(0.25) and g.pmf(2) == pytest.approx(0.25 * 0.75**2)
    assert g.mean == pytest.approx(3.0)
    for bad in (0.0, 1.5, -0.1):
        with pytest.raises(InvalidParameterError):
            d.geometric(bad)
    with pytest.raises(InvalidParameterError):
        d.poisson(-1.0)
    with pytest.raises(InvalidParameterError):
        d.point_mass(-1)


def test_from_pmf_validation():
    with pytest.raises(InvalidParameterError):
        d.from_pmf({0: 0.5, 1: 0.2})
    with pytest.raises(InvalidParameterError):
        d.from_pmf({-1: 1.0})
    p = d.from_pmf([0.5, 0.5])
    assert p.mean == pytest.approx(0.5)


def test_mixing_law_shift_and_errors():
    u = MixingLaw.uniform(2.0, 3.0).shift(1.25)
    assert u.support_infimum == pytest.approx(0.75)
    assert u.mean == pytest.approx(1.25)
    x, w = u.atoms()
    assert x.min() >= 0.75 - 1e-12 and x.max() <= 1.75 + 1e-12
    assert w.sum() == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(InvalidParameterError):
        MixingLaw.discrete({1.0: 0.4})


def test_mixing_law_pareto_tail():
    law = MixingLaw.pareto(0.5, 1.0)
    assert math.isinf(law.mean)
    assert law.tail_index == 0.5 and law.tail_constant == pytest.approx(1.0)
    x = law.sample(np.random.default_rng(3), 100_000)
    assert x.min() >= 1.0
    assert np.mean(x > 100.0) == pytest.approx(0.1, abs=0.005)


# -- properties -------------------------------------------------------------

laws = st.one_of(
    st.floats(0.0, 60.0).map(d.poisson),
    st.floats(0.02, 1.0).map(d.geometric),
    st.integers(0, 50).map(d.point_mass),
    st.tuples(st.floats(1.1, 4.0), st.integers(1, 20)).map(lambda t: d.power_law(*t)),
)


@settings(max_examples=60, deadline=None)
@given(laws)
def test_total_mass_invariant(p):
    assert 1 - 1e-9 <= total_mass(p) <= 1 + 1e-12
    assert np.all(p.head >= 0) and np.all(p.head <= 1)


@settings(max_examples=40, deadline=None)
@given(laws, st.integers(1, 300))
def test_truncation_properties(p, cutoff):
    if p.head_upto(cutoff + 1).sum() > 0:
        t = d.conditional_truncate(p, cutoff)
        assert t.pmf(cutoff + 1) == 0.0
        assert total_mass(t) == pytest.approx(1.0, abs=1e-9)
    c = d.cap_truncate(p, cutoff + 1)
    assert c.pmf(cutoff + 1) == 0.0
    assert total_mass(c) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.0, 20.0), st.floats(0.0, 20.0))
def test_poisson_convolution_identity(a, b):
    c = d.convolve_poisson(d.poisson(a), b)
    ks = np.arange(80)
    assert np.max(np.abs(c.pmf(ks) - stats.poisson.pmf(ks, a + b))) < 1e-10


def test_declared_mean_matches_head():
    for p in (d.poisson(7.0), d.geometric(0.1), d.power_law(3.5, 2),
              d.compound_poisson(2.0, d.from_pmf({1: 0.8, 2: 0.2})),
              d.mixed_poisson(MixingLaw.gamma(2.0, 1.5), 1.0)):
        ks = np.arange(p.head.size)
        tail_bound = 0.0 if p.tail is None else 1e-3
        assert float(ks @ p.head) == pytest.approx(p.mean, abs=1e-6 + tail_bound * p.mean)
