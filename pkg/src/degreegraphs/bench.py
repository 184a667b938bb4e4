"""Wall-clock scaling of the generators over a doubling grid of n."""

import time

LINEAR_GRID = (125_000, 250_000, 500_000, 1_000_000)
QUADRATIC_GRID = (2_500, 5_000, 10_000, 20_000)

DEFAULT_SPECS = {
    "erased-config": {"dist": "poisson:5"},
    "truncated-config": {"dist": "powerlaw:2.5,1"},
    # keeps P(simple) near exp(-3/4), i.e. few attempts
    "repeated-config": {"dist": "poisson:1"},
    "grg": {"weights": "exponential:1"},
    "grg-fast": {"weights": "exponential:1"},
    "dgrd": {"dist": "poisson:2.5"},
}

# seeds pooled per grid point; attempt counts vary by seed, so the retrying
# model is averaged over several runs before dividing by attempts
SEEDS_PER_POINT = {"repeated-config": 20}


def default_grid(model):
    return QUADRATIC_GRID if model == "grg" else LINEAR_GRID


def time_call(fn, repeat=3):
    """Best wall time over ``repeat`` calls, and the last result."""
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def doubling_ratios(rows, model):
    """t(n_k) / t(n_{k-1}) along the grid, per attempt for retrying models."""
    pts = sorted((r["n"], r["seconds"] / r["attempts"]) for r in rows if r["model"] == model)
    return [b[1] / a[1] for a, b in zip(pts, pts[1:])]


def format_table(rows):
    header = f"{'model':<18}{'n':>10}{'seconds':>12}{'edges':>12}{'attempts':>10}"
    lines = [header]
    for r in rows:
        lines.append(f"{r['model']:<18}{r['n']:>10}{r['seconds']:>12.4f}{r['edges']:>12}"
                     f"{r['attempts']:>10}")
    return "\n".join(lines) + "\n"
