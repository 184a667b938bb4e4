"""Command-line front end: ``generate``, ``verify`` and ``bench``.

Every error path prints one line ``error=<code> <message>`` to stderr and
exits with 2 (usage), 3 (recipe-infeasible), 4 (too-many-attempts) or
5 (non-convergence).
"""

import argparse
import math
import sys
import warnings

from . import bench
from .config_model import (DEFAULT_MAX_ATTEMPTS, erased_configuration, repeated_configuration,
                           truncated_erased_configuration)
from .dgrd import dgrd_generate, dgrd_target
from .errors import DegreeGraphError
from .graph import format_edge_list
from .grg import grg_exact, grg_fast, grg_limit_pmf, sample_weights
from .rng import stream
from .specs import SpecError, parse_dist, parse_mix, parse_recipe
from .verify import empirical_distribution, erasure_fraction, format_report, tail_exponent, tv_distance

MODELS = ("erased-config", "repeated-config", "truncated-config", "grg", "grg-fast", "dgrd")
ALIASES = {"grg-exact": "grg"}

EXIT_CODES = {
    "usage": 2,
    "invalid-parameter": 2,
    "invalid-input": 2,
    "invalid-range": 2,
    "recipe-infeasible": 3,
    "too-many-attempts": 4,
    "non-convergence": 5,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise SpecError(message, "bad arguments")


def _model_name(value):
    value = ALIASES.get(value, value)
    if value not in MODELS:
        raise argparse.ArgumentTypeError(f"unknown model {value!r}; choose from {', '.join(MODELS)}")
    return value


def _common(p):
    p.add_argument("--model", required=True, type=_model_name)
    p.add_argument("--dist")
    p.add_argument("--weights")
    p.add_argument("--recipe")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, default=0.5, help="truncation exponent")
    p.add_argument("--beta", type=float)
    p.add_argument("--alpha", type=float, help="heavy-tail index; implies beta = 1/alpha")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--parity", choices=("remove_stub", "regenerate"), default="remove_stub")
    p.add_argument("--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS)
    p.add_argument("--out", default="-")
    p.add_argument("--report")


def build_parser():
    parser = _Parser(prog="degreegraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    gen = sub.add_parser("generate", help="write an edge list and a report")
    _common(gen)
    ver = sub.add_parser("verify", help="compare the degree law with its analytic limit")
    _common(ver)
    ver.add_argument("--tail-range", help="K_LO,K_HI for the ccdf slope")
    b = sub.add_parser("bench", help="timing table over a doubling grid")
    b.add_argument("--models", default="erased-config,repeated-config,dgrd,grg-fast,grg")
    b.add_argument("--grid", help="comma-separated n values for every model")
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", default="-")
    return parser


def _beta(args):
    if args.beta is not None:
        return args.beta
    if args.alpha is not None:
        return 1.0 / args.alpha
    return 1.0


def _require(value, flag, model):
    if value is None:
        raise SpecError(flag, f"model {model} needs {flag}")
    return value


def run_model(model, n, seed, *, dist=None, weights=None, recipe=None, a=0.5, beta=1.0,
              parity="remove_stub", max_attempts=DEFAULT_MAX_ATTEMPTS, threads=1):
    """Generate one graph. Returns (graph, report or None, target law)."""
    if model in ("erased-config", "repeated-config", "truncated-config"):
        F = parse_dist(_require(dist, "--dist", model))
        rng = stream(seed, "pairing")
        if model == "erased-config":
            graph, report = erased_configuration(F, n, parity, rng)
        elif model == "truncated-config":
            graph, report = truncated_erased_configuration(F, n, a, parity, rng)
        else:
            graph, report = repeated_configuration(F, n, parity, max_attempts, rng)
        report.seed = seed
        return graph, report, F
    if model in ("grg", "grg-fast"):
        law = parse_mix(_require(weights, "--weights", model))
        w = sample_weights(law, n, stream(seed, "weights"), beta)
        rng = stream(seed, "edges")
        graph = grg_exact(w, rng, threads) if model == "grg" else grg_fast(w, rng)
        return graph, None, law
    if recipe is not None:
        G, F = parse_recipe(recipe)
    else:
        G = parse_dist(_require(dist, "--dist or --recipe", model))
        F = None
    graph = dgrd_generate(G, n, stream(seed, "targets"))
    return graph, None, F if F is not None else dgrd_target(G)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _run(args):
    return run_model(args.model, args.n, args.seed, dist=args.dist, weights=args.weights,
                     recipe=args.recipe, a=args.a, beta=_beta(args), parity=args.parity,
                     max_attempts=args.max_attempts, threads=args.threads)


def _report_fields(args, report):
    fields = {"model": args.model, "n": args.n, "seed": args.seed}
    if report is not None:
        if args.model != "repeated-config":
            fields["erasure_fraction"] = erasure_fraction(report)
        else:
            fields["attempts"] = report.attempts
    return fields


def cmd_generate(args):
    graph, report, _ = _run(args)
    _write(args.out, format_edge_list(graph))
    text = format_report(**_report_fields(args, report))
    if args.report:
        _write(args.report, text)
    else:
        sys.stderr.write(text)
    return 0


def _target(args, target):
    if args.model not in ("grg", "grg-fast"):
        return target
    law = target
    if args.alpha is not None:
        if law.tail_constant is None:
            raise SpecError(args.weights, "heavy-tail target needs a pareto weight law")
        return grg_limit_pmf(law, "heavy_tail", alpha=args.alpha, c=law.tail_constant)
    if _beta(args) != 1.0:
        raise SpecError(f"--beta {args.beta}", "finite-mean target needs beta = 1 (or pass --alpha)")
    return grg_limit_pmf(law, "finite_mean")


def cmd_verify(args):
    graph, report, target = _run(args)
    target = _target(args, target)
    emp = empirical_distribution(graph)
    fields = _report_fields(args, report)
    fields["tv"] = tv_distance(emp, target)
    k_range = None
    if args.tail_range:
        k_range = tuple(int(x) for x in args.tail_range.split(","))
    elif not math.isfinite(target.mean):
        k_range = (10, 100)
    if k_range is not None:
        try:
            fields["tail_slope"] = tail_exponent(emp, *k_range)
        except DegreeGraphError:
            pass
    text = format_report(**fields)
    _write(args.report or args.out, text)
    return 0


def cmd_bench(args):
    try:
        models = [_model_name(m.strip()) for m in args.models.split(",") if m.strip()]
    except argparse.ArgumentTypeError as exc:
        raise SpecError(args.models, str(exc)) from None
    rows = []
    for model in models:
        grid = ([int(x) for x in args.grid.split(",")] if args.grid
                else bench.default_grid(model))
        spec = bench.DEFAULT_SPECS[model]
        for n in grid:
            seconds = 0.0
            attempts = 0
            for seed in range(args.seed, args.seed + bench.SEEDS_PER_POINT.get(model, 1)):
                t, (graph, report, _) = bench.time_call(
                    lambda n=n, seed=seed: run_model(model, n, seed, **spec), args.repeat)
                seconds += t
                attempts += report.attempts if report is not None else 1
            rows.append({"model": model, "n": n, "seconds": seconds,
                         "edges": graph.edge_count, "attempts": attempts})
    _write(args.out, bench.format_table(rows))
    return 0


COMMANDS = {"generate": cmd_generate, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            return COMMANDS[args.command](args)
    except DegreeGraphError as exc:
        message = " ".join(str(exc).split())
        sys.stderr.write(f"error={exc.code} {message}\n")
        return EXIT_CODES.get(exc.code, 1)
    except OSError as exc:
        sys.stderr.write(f"error=io {' '.join(str(exc).split())}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
