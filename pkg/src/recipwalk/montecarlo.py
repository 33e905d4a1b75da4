"""Monte Carlo estimate of trapping times.

Every walker draws from its own SplitMix64 stream keyed by
``(seed, start node, walker index)``, so results do not depend on how walkers
are scheduled across threads.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numba
import numpy as np

from .network import WeightedDigraph
from .walk import MONTE_CARLO, MfptReport

# the bundled TBB is too old for numba; OpenMP avoids the warning
if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER = "omp"

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SimConfig:
    walkers_per_node: int = 10_000
    seed: int = 0
    max_steps: int = 10**9

    def __post_init__(self):
        if self.walkers_per_node < 1:
            raise ValueError("walkers_per_node must be positive")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class SimReport:
    g: int
    theta: float
    config: SimConfig
    mean: dict[int, float] = field(default_factory=dict)
    stderr: dict[int, float] = field(default_factory=dict)
    average: float = math.nan
    average_stderr: float = math.nan
    truncated_walks: int = 0

    @property
    def valid(self) -> bool:
        return self.truncated_walks == 0

    def to_mfpt_report(self) -> MfptReport:
        return MfptReport(MONTE_CARLO, self.g, self.theta, self.average, dict(self.mean))

    def to_json_dict(self) -> dict:
        return {
            "method": MONTE_CARLO,
            "g": self.g,
            "theta": self.theta,
            "walkers_per_node": self.config.walkers_per_node,
            "seed": self.config.seed,
            "average": self.average,
            "average_stderr": self.average_stderr,
            "truncated_walks": self.truncated_walks,
            "per_node": [[label, self.mean[label], self.stderr[label]] for label in sorted(self.mean)],
        }


@numba.njit(inline="always")
def _mix(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@numba.njit(parallel=True, cache=True)
def _walk_block(indptr, targets, cumw, start_pos, trap_pos, n_walkers, seed, max_steps, steps_out):
    start_key = _mix(seed ^ _mix(np.uint64(start_pos) + _GOLDEN))
    for k in numba.prange(n_walkers):
        state = _mix(start_key ^ _mix(np.uint64(k) * _GOLDEN + np.uint64(1)))
        pos = start_pos
        n = 0
        while pos != trap_pos and n < max_steps:
            state += _GOLDEN
            u = np.float64(_mix(state) >> np.uint64(11)) * (1.0 / 9007199254740992.0)
            lo = indptr[pos]
            hi = indptr[pos + 1] - 1
            x = u * cumw[hi]
            # first slot with cumulative weight > x
            while lo < hi:
                mid = (lo + hi) // 2
                if cumw[mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            pos = targets[lo]
            n += 1
        steps_out[k] = n if pos == trap_pos else -1


def _tables(net: WeightedDigraph):
    """CSR neighbour lists with per-node cumulative out-weights."""
    n = net.n_nodes
    rows: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for src, dst, w in net.arcs:
        rows[net.position(src)].append((net.position(dst), w))
    indptr = np.zeros(n + 1, dtype=np.int64)
    targets, cumw = [], []
    for i, row in enumerate(rows):
        row.sort()
        acc = 0.0
        for dst, w in row:
            acc += w
            targets.append(dst)
            cumw.append(acc)
        indptr[i + 1] = len(targets)
    return indptr, np.asarray(targets, dtype=np.int64), np.asarray(cumw, dtype=np.float64)


def simulate(net: WeightedDigraph, cfg: SimConfig) -> SimReport:
    """Run ``cfg.walkers_per_node`` walks from every non-trap node until absorption at node 1."""
    if net.g < 1:
        raise ValueError("the trap (node 1) only exists for g >= 1")
    indptr, targets, cumw = _tables(net)
    trap = net.position(1)
    steps = np.empty(cfg.walkers_per_node, dtype=np.int64)
    mean: dict[int, float] = {}
    stderr: dict[int, float] = {}
    variances = []
    truncated = 0
    for rec in net.nodes:
        if rec.label == 1:
            continue
        _walk_block(
            indptr, targets, cumw, net.position(rec.label), trap,
            cfg.walkers_per_node, np.uint64(cfg.seed), cfg.max_steps, steps,
        )
        done = steps[steps >= 0]
        truncated += int(steps.size - done.size)
        m = float(done.mean()) if done.size else math.nan
        var = float(done.var(ddof=1)) if done.size > 1 else math.nan
        mean[rec.label] = m
        stderr[rec.label] = math.sqrt(var / done.size) if done.size > 1 else math.nan
        variances.append(stderr[rec.label] ** 2)
    n = len(mean)
    average = math.fsum(mean[label] for label in sorted(mean)) / n
    average_se = math.sqrt(math.fsum(variances)) / n
    return SimReport(net.g, net.theta, cfg, mean, stderr, average, average_se, truncated)
