"""Benchmark harness comparing determinant strategies on random integer matrices."""

import statistics
from dataclasses import dataclass

from .arith import render_rational
from .condense import LAPLACE_MAX_N, Strategy, det
from .matrix import Matrix
from .rng import SplitMix64

__all__ = ["ConfigError", "BenchConfig", "BenchRow", "BenchReport", "generate_instances", "run_bench"]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class BenchConfig:
    """``repetitions`` random instances are drawn per size; every strategy runs on each.

    All instances come from one SplitMix64 stream seeded with ``seed``,
    drawn size by size in the order given, instance by instance.
    """

    sizes: tuple = (20, 40, 80)
    entry_range: tuple = (-9, 9)
    seed: int = 0
    strategies: tuple = (Strategy.CONDENSATION_FALLBACK, Strategy.BAREISS)
    repetitions: int = 3
    threads: int = 1

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "entry_range", tuple(self.entry_range))
        try:
            object.__setattr__(self, "strategies", tuple(Strategy(s) for s in self.strategies))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not self.sizes or any(not isinstance(s, int) or s < 0 for s in self.sizes):
            raise ConfigError(f"sizes must be a nonempty list of nonnegative integers, got {self.sizes}")
        if len(self.entry_range) != 2 or self.entry_range[0] > self.entry_range[1]:
            raise ConfigError(f"entry_range must be (lo, hi) with lo <= hi, got {self.entry_range}")
        if not self.strategies:
            raise ConfigError("at least one strategy is required")
        if not isinstance(self.repetitions, int) or self.repetitions < 1:
            raise ConfigError(f"repetitions must be >= 1, got {self.repetitions}")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f"seed must be a nonnegative integer, got {self.seed}")
        if Strategy.LAPLACE in self.strategies and max(self.sizes) > LAPLACE_MAX_N:
            raise ConfigError(f"laplace is limited to sizes <= {LAPLACE_MAX_N}")

    def to_dict(self):
        return {
            "sizes": list(self.sizes),
            "entry_range": list(self.entry_range),
            "seed": self.seed,
            "strategies": [s.value for s in self.strategies],
            "repetitions": self.repetitions,
            "threads": self.threads,
        }


@dataclass(frozen=True)
class BenchRow:
    size: int
    strategy: Strategy
    median_seconds: float
    fallback_count: int
    values: tuple

    def to_dict(self):
        return {
            "size": self.size,
            "strategy": self.strategy.value,
            "median_seconds": self.median_seconds,
            "fallback_count": self.fallback_count,
            "values": list(self.values),
        }


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    rows: tuple
    disagreements: tuple

    @property
    def agree(self):
        return not self.disagreements

    def to_dict(self):
        return {
            "config": self.config.to_dict(),
            "rows": [r.to_dict() for r in self.rows],
            "agree": self.agree,
            "disagreements": list(self.disagreements),
        }


def generate_instances(config):
    rng = SplitMix64(config.seed)
    lo, hi = config.entry_range
    return {
        size: [Matrix(rng.int_matrix(size, lo, hi)) for _ in range(config.repetitions)]
        for size in config.sizes
    }


def run_bench(config):
    instances = generate_instances(config)
    rows = []
    disagreements = []
    for size in config.sizes:
        per_strategy = {}
        for strategy in config.strategies:
            results = [det(M, strategy, config.threads) for M in instances[size]]
            per_strategy[strategy] = results
            rows.append(BenchRow(
                size,
                strategy,
                statistics.median(r.elapsed for r in results),
                sum(len(r.fallback_events) for r in results),
                tuple(render_rational(r.value) for r in results),
            ))
        for i in range(config.repetitions):
            values = {s.value: render_rational(res[i].value) for s, res in per_strategy.items()}
            if len(set(values.values())) > 1:
                disagreements.append({"size": size, "instance": i, "values": values})
    return BenchReport(config, tuple(rows), tuple(disagreements))
