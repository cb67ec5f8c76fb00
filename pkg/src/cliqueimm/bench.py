"""Seeded benchmark harness.

Each instance is drawn from a small family of models whose independence
number is controllable, the extractor runs on it, and the certificate is
re-verified from scratch. Rows are sorted before reporting so that the table
is byte-stable for a fixed seed regardless of worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .beta import glw_bound, guarantee
from .certificate import verify
from .extractor import InvariantViolation, extract
from .generators import disjoint_cliques, gnp, noisy_cliques
from .graph import Graph, independence_number

MAX_BENCH_N = 200
MAX_BENCH_ALPHA = 8


@dataclass(frozen=True)
class InstanceSpec:
    index: int
    model: str
    params: tuple
    seed: int

    def build(self) -> Graph:
        if self.model == "disjoint-cliques":
            return disjoint_cliques(*self.params)
        if self.model == "noisy-cliques":
            return noisy_cliques(*self.params, seed=self.seed)
        if self.model == "gnp":
            return gnp(*self.params, seed=self.seed)
        raise ValueError(f"unknown model {self.model!r}")


@dataclass(frozen=True)
class BenchRow:
    index: int
    model: str
    n: int
    alpha: int
    guarantee: int
    glw: int
    order: int
    verified: bool
    shortfall: bool
    invariant_error: str
    seconds: float

    @property
    def meets_guarantee(self) -> bool:
        return self.order >= self.guarantee


def draw_instances(trials: int, n_max: int, alpha_max: int, seed: int,
                   alpha_min: int = 3, exact_alpha: bool = False) -> list[InstanceSpec]:
    """Instance parameters for ``trials`` runs. The target independence number
    is drawn from ``alpha_min..alpha_max``. With ``exact_alpha`` a draw whose
    realised independence number falls outside that range is redrawn."""
    if not 1 <= n_max <= MAX_BENCH_N:
        raise ValueError(f"n-max must be in 1..{MAX_BENCH_N}")
    if not 1 <= alpha_min <= alpha_max <= MAX_BENCH_ALPHA:
        raise ValueError(f"alpha range must lie in 1..{MAX_BENCH_ALPHA}")
    rng = np.random.default_rng(seed)
    specs: list[InstanceSpec] = []
    while len(specs) < trials:
        t = len(specs)
        k = int(rng.integers(alpha_min, alpha_max + 1))
        k = min(k, n_max)
        kind = rng.random()
        sub_seed = int(rng.integers(2**31))
        if kind < 0.15:
            s = int(rng.integers(1, max(1, n_max // k) + 1))
            spec = InstanceSpec(t, "disjoint-cliques", (k, s), sub_seed)
        elif kind < 0.85:
            n = int(rng.integers(k, n_max + 1))
            p = float(np.round(rng.uniform(0.0, 0.5), 3))
            spec = InstanceSpec(t, "noisy-cliques", (k, n, p), sub_seed)
        else:
            n = int(rng.integers(k, n_max + 1))
            p = float(np.round(rng.uniform(0.6, 0.95), 3))
            spec = InstanceSpec(t, "gnp", (n, p), sub_seed)
        if exact_alpha and not alpha_min <= independence_number(spec.build()) <= alpha_max:
            continue
        specs.append(spec)
    return specs


def run_instance(spec: InstanceSpec, debug: bool = False) -> BenchRow:
    g = spec.build()
    alpha = independence_number(g)
    t0 = time.perf_counter()
    try:
        cert, trace = extract(g, debug=debug)
    except InvariantViolation as exc:
        return BenchRow(spec.index, spec.model, g.n, alpha, guarantee(g.n, alpha),
                        glw_bound(g.n, alpha), 0, False, False, str(exc),
                        time.perf_counter() - t0)
    elapsed = time.perf_counter() - t0
    rep = verify(g, cert, strong=True, odd=True, max_len=max(1, 2 * alpha - 1))
    return BenchRow(spec.index, spec.model, g.n, alpha, guarantee(g.n, alpha),
                    glw_bound(g.n, alpha), cert.clique_order(), rep.passed,
                    trace.shortfall, "", elapsed)


@dataclass
class BenchSummary:
    rows: list[BenchRow]

    @property
    def verification_failures(self) -> int:
        return sum(not r.verified for r in self.rows)

    @property
    def invariant_errors(self) -> int:
        return sum(bool(r.invariant_error) for r in self.rows)

    @property
    def shortfalls(self) -> int:
        return sum(r.shortfall for r in self.rows)

    @property
    def guarantee_misses(self) -> int:
        """Instances without a shortfall flag that still fall below the bound."""
        return sum(r.verified and not r.shortfall and not r.meets_guarantee
                   for r in self.rows)

    @property
    def pass_rate(self) -> float:
        if not self.rows:
            return 1.0
        good = sum(r.verified and (r.shortfall or r.meets_guarantee) for r in self.rows)
        return good / len(self.rows)

    def table(self, timings: bool = False) -> str:
        head = f"{'#':>4} {'model':<17} {'n':>4} {'a':>2} {'bound':>5} {'glw':>4} " \
               f"{'order':>5} {'verified':>8} {'shortfall':>9}"
        if timings:
            head += f" {'sec':>7}"
        lines = [head]
        for r in self.rows:
            line = (f"{r.index:>4} {r.model:<17} {r.n:>4} {r.alpha:>2} {r.guarantee:>5} "
                    f"{r.glw:>4} {r.order:>5} {str(r.verified):>8} {str(r.shortfall):>9}")
            if timings:
                line += f" {r.seconds:>7.3f}"
            lines.append(line)
        lines.append(
            f"instances={len(self.rows)} verification_failures={self.verification_failures} "
            f"invariant_errors={self.invariant_errors} shortfalls={self.shortfalls} "
            f"below_guarantee={self.guarantee_misses} pass_rate={self.pass_rate:.4f}")
        return "\n".join(lines)

    def as_dicts(self) -> list[dict]:
        return [asdict(r) for r in self.rows]


def run_bench(trials: int, n_max: int, alpha_max: int, seed: int, workers: int = 1,
              alpha_min: int = 3, exact_alpha: bool = False,
              debug: bool = False) -> BenchSummary:
    specs = draw_instances(trials, n_max, alpha_max, seed, alpha_min, exact_alpha)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run_instance, specs, [debug] * len(specs)))
    else:
        rows = [run_instance(s, debug) for s in specs]
    rows.sort(key=lambda r: r.index)
    return BenchSummary(rows)
