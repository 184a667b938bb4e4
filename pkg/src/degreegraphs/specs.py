"""Text grammar for distributions, mixing laws and DGRD recipes.

Degree laws::

    poisson:MU  powerlaw:TAU[,KMIN]  pointmass:K  geometric:P
    pmf:K=P,K=P,...  compound:LAMBDA,<degree-spec>  mixedpoisson:<mix-spec>,SCALE

Mixing laws::

    pointmass:W  exponential:MEAN  uniform:LO,HI  pareto:ALPHA[,XMIN]
    gamma:SHAPE[,SCALE]  discrete:V=P,V=P,...

Recipes::

    poisson:MU  mixedpoisson:<mix-spec>  compoundpoisson:LAMBDA,<degree-spec>
"""

from . import distributions as dist
from . import dgrd
from .distributions import MixingLaw
from .errors import DegreeGraphError


class SpecError(DegreeGraphError, ValueError):
    code = "usage"

    def __init__(self, token, reason="cannot parse"):
        self.token = token
        super().__init__(f"{reason}: {token!r}")


def _split(spec):
    kind, sep, rest = spec.partition(":")
    if not sep or not kind:
        raise SpecError(spec, "expected KIND:ARGS")
    return kind.strip().lower(), rest


def _number(token, cast=float):
    try:
        return cast(token)
    except ValueError:
        raise SpecError(token, "not a number") from None


def _numbers(rest, count_min, count_max, spec, cast=float):
    parts = [p for p in rest.split(",")] if rest else []
    if not count_min <= len(parts) <= count_max:
        raise SpecError(spec, "wrong number of arguments")
    return [_number(p.strip(), cast) for p in parts]


def _pairs(rest, spec, key_cast):
    out = {}
    for item in rest.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise SpecError(item or spec, "expected KEY=PROB")
        k = _number(key.strip(), key_cast)
        out[k] = out.get(k, 0.0) + _number(value.strip())
    return out


def _head_tail(rest, spec):
    head, sep, tail = rest.partition(",")
    if not sep or not tail:
        raise SpecError(spec, "expected NUMBER,<spec>")
    return _number(head.strip()), tail


def _last(rest, spec):
    body, sep, last = rest.rpartition(",")
    if not sep or not body:
        raise SpecError(spec, "expected <spec>,NUMBER")
    return body, _number(last.strip())


def parse_mix(spec):
    kind, rest = _split(spec)
    try:
        if kind == "pointmass":
            (w,) = _numbers(rest, 1, 1, spec)
            return MixingLaw.point_mass(w)
        if kind == "exponential":
            (mean,) = _numbers(rest, 1, 1, spec)
            return MixingLaw.exponential(mean)
        if kind == "uniform":
            lo, hi = _numbers(rest, 2, 2, spec)
            return MixingLaw.uniform(lo, hi)
        if kind == "pareto":
            return MixingLaw.pareto(*_numbers(rest, 1, 2, spec))
        if kind == "gamma":
            return MixingLaw.gamma(*_numbers(rest, 1, 2, spec))
        if kind == "discrete":
            return MixingLaw.discrete(_pairs(rest, spec, float), name=spec)
    except SpecError:
        raise
    except DegreeGraphError as exc:
        raise SpecError(spec, str(exc)) from None
    raise SpecError(kind, "unknown mixing law")


def parse_dist(spec):
    kind, rest = _split(spec)
    try:
        if kind == "poisson":
            (mu,) = _numbers(rest, 1, 1, spec)
            return dist.poisson(mu)
        if kind == "powerlaw":
            args = _numbers(rest, 1, 2, spec)
            kmin = int(args[1]) if len(args) > 1 else 1
            if len(args) > 1 and args[1] != kmin:
                raise SpecError(rest, "KMIN must be an integer")
            return dist.power_law(args[0], kmin)
        if kind == "pointmass":
            (k,) = _numbers(rest, 1, 1, spec, int)
            return dist.point_mass(k)
        if kind == "geometric":
            (p,) = _numbers(rest, 1, 1, spec)
            return dist.geometric(p)
        if kind == "pmf":
            return dist.from_pmf(_pairs(rest, spec, int), name=spec)
        if kind == "compound":
            lam, summand = _head_tail(rest, spec)
            return dist.compound_poisson(lam, parse_dist(summand))
        if kind == "mixedpoisson":
            body, scale = _last(rest, spec)
            return dist.mixed_poisson(parse_mix(body), scale)
    except SpecError:
        raise
    except DegreeGraphError as exc:
        if exc.code == "invalid-parameter":
            raise SpecError(spec, str(exc)) from None
        raise
    raise SpecError(kind, "unknown distribution")


def parse_recipe(spec):
    """(G, F): out-degree law for DGRD and the limit it is meant to produce.

    Infeasible recipes raise RecipeInfeasibleError unchanged.
    """
    kind, rest = _split(spec)
    if kind == "poisson":
        (mu,) = _numbers(rest, 1, 1, spec)
        return dgrd.poisson_source(mu), dist.poisson(mu)
    if kind == "mixedpoisson":
        Q = parse_mix(rest)
        return dgrd.mixed_poisson_source(Q), dist.mixed_poisson(Q, 1.0)
    if kind == "compoundpoisson":
        lam, summand = _head_tail(rest, spec)
        R = parse_dist(summand)
        return dgrd.compound_poisson_source(lam, R), dist.compound_poisson(lam, R)
    raise SpecError(kind, "unknown recipe")
