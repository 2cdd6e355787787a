"""Seeded randomized probes of the packing theorems backing the toolkit.

Each probe draws reproducible random graphs, keeps those satisfying a
theorem's hypothesis, and checks its conclusion exactly. The theorems are
true, so any violation indicates an artifact bug; the probe reports it
with the offending graph6 string.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .graphs import (
    Graph,
    PreconditionError,
    average_degree,
    complete_graph,
    min_ore_degree_sum,
    to_graph6,
)
from .packing import DEFAULT_BUDGET, Verdict, has_perfect_packing

PROBE_FAMILIES = ("hajnal-szemeredi", "kierstead-kostochka", "average-degree")
PACKING_PROBE_MAX_N = 24
DEFAULT_P_SWEEP = (0.5, 0.7, 0.9)


@dataclass(frozen=True)
class ProbeConfig:
    family: str
    n: int
    samples: int
    seed: int
    r: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    p_sweep: tuple[float, ...] = DEFAULT_P_SWEEP

    def validate(self) -> None:
        if self.family not in PROBE_FAMILIES:
            raise PreconditionError(f"unknown probe family {self.family!r}")
        if self.samples < 1:
            raise PreconditionError("need at least one sample")
        if self.n < 1:
            raise PreconditionError("need n >= 1")
        if self.family in ("hajnal-szemeredi", "kierstead-kostochka"):
            if self.r is None or self.r < 2:
                raise PreconditionError("packing probes need a clique order r >= 2")
            if self.n % self.r != 0:
                raise PreconditionError(
                    f"packing probes need r | n, got n={self.n}, r={self.r}"
                )
            if self.n > PACKING_PROBE_MAX_N:
                raise PreconditionError(
                    f"packing probes are limited to n <= {PACKING_PROBE_MAX_N}"
                )


@dataclass
class ProbeSummary:
    samples: int
    condition_hits: int = 0
    violations: int = 0
    unknowns: int = 0
    violation_graphs: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "samples": self.samples,
            "condition_hits": self.condition_hits,
            "violations": self.violations,
            "unknowns": self.unknowns,
            "violation_graphs": list(self.violation_graphs),
        }


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _sample_rng(seed: int, index: int) -> random.Random:
    # independent per-sample streams so ordering and parallelism are moot
    return random.Random((seed << 32) + index)


def run_probe(config: ProbeConfig) -> ProbeSummary:
    config.validate()
    summary = ProbeSummary(samples=config.samples)
    for i in range(config.samples):
        rng = _sample_rng(config.seed, i)
        p = config.p_sweep[i % len(config.p_sweep)]
        g = random_graph(config.n, p, rng)
        if config.family == "hajnal-szemeredi":
            _probe_clique_factor(
                g, config, summary, hypothesis=_min_degree_hypothesis
            )
        elif config.family == "kierstead-kostochka":
            _probe_clique_factor(
                g, config, summary, hypothesis=_ore_sum_hypothesis
            )
        else:
            _probe_average_degree(g, summary)
    return summary


def _min_degree_hypothesis(g: Graph, r: int) -> bool:
    # delta(G) >= (1 - 1/r) n, compared exactly in integers
    if g.n == 0:
        return False
    return min(g.degrees()) * r >= (r - 1) * g.n


def _ore_sum_hypothesis(g: Graph, r: int) -> bool:
    # d(x)+d(y) >= 2(1 - 1/r) n - 1 for all non-adjacent pairs
    s = min_ore_degree_sum(g)
    if s == float("inf"):
        return True
    return s * r >= 2 * (r - 1) * g.n - r


def _probe_clique_factor(g, config, summary, hypothesis) -> None:
    r = config.r
    if not hypothesis(g, r):
        return
    summary.condition_hits += 1
    result = has_perfect_packing(g, complete_graph(r), config.budget)
    if result.verdict is Verdict.UNKNOWN:
        summary.unknowns += 1
    elif result.verdict is Verdict.NO:
        summary.violations += 1
        summary.violation_graphs.append(to_graph6(g))


def _probe_average_degree(g: Graph, summary: ProbeSummary) -> None:
    # for every k <= n-1 whose degree-sum hypothesis holds, the average
    # degree must be at least k (complete graphs satisfy all of them)
    s = min_ore_degree_sum(g)
    avg = average_degree(g)
    k_max = g.n - 1 if s == float("inf") else min(g.n - 1, int(s) // 2)
    for k in range(k_max + 1):
        summary.condition_hits += 1
        if avg < k:
            summary.violations += 1
            summary.violation_graphs.append(to_graph6(g))
            break
