"""Scaling-law fits and the cross-method verification suite."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import closed_form, spectral
from .montecarlo import SimConfig, simulate
from .network import (
    NetworkConfig,
    WeightedDigraph,
    build_weighted,
    closed_form_out_strength,
    perturb_weight,
)
from .walk import assemble, fundamental_entry_sum, solve_trapping_times

CLOSED = "closed"
SOLVE = "solve"
SOLVE_G_MAX = 6


@dataclass(frozen=True)
class ScalingPoint:
    g: int
    n_minus_1: int
    mfpt: float
    log_slope: float | None


@dataclass(frozen=True)
class ScalingFit:
    theta: float
    method: str
    points: tuple[ScalingPoint, ...]
    fitted_exponent: float
    successive_slope: float
    predicted_exponent: float

    def to_json_dict(self) -> dict:
        return asdict(self)


def mfpt_value(g: int, theta: float, method: str) -> float:
    if method == CLOSED:
        return closed_form.mfpt_closed(g, theta)
    if method == SOLVE:
        if g > SOLVE_G_MAX:
            raise ValueError(f"solve method is capped at g={SOLVE_G_MAX}")
        return solve_trapping_times(assemble(build_weighted(NetworkConfig(g, theta)))).average
    raise ValueError(f"unknown method {method!r}")


def default_g_min(g_max: int) -> int:
    return max(3, g_max - 6)


def run_scaling_fit(theta: float, g_min: int | None, g_max: int, method: str = CLOSED) -> ScalingFit:
    """Fit ``log <T>`` against ``log(N_g - 1)`` over ``g_min..g_max``.

    ``fitted_exponent`` is the least-squares slope over all points;
    ``successive_slope`` uses only the last two, where the subleading terms
    have decayed the most.
    """
    if g_min is None:
        g_min = default_g_min(g_max)
    if g_min < 1 or g_max - g_min < 2:
        raise ValueError("need g_min >= 1 and at least three generations")
    gs = list(range(g_min, g_max + 1))
    values = [mfpt_value(g, theta, method) for g in gs]
    log_n = np.array([g * math.log(4.0) for g in gs])
    log_t = np.log(values)
    points = []
    for k, (g, t) in enumerate(zip(gs, values)):
        slope = None if k == 0 else float((log_t[k] - log_t[k - 1]) / (log_n[k] - log_n[k - 1]))
        points.append(ScalingPoint(g, 4**g, t, slope))
    fitted = float(np.polyfit(log_n, log_t, 1)[0])
    return ScalingFit(
        theta=float(theta),
        method=method,
        points=tuple(points),
        fitted_exponent=fitted,
        successive_slope=points[-1].log_slope,
        predicted_exponent=closed_form.scaling_exponent(theta),
    )


@dataclass
class CheckResult:
    name: str
    g: int
    theta: float
    deviation: float
    tolerance: float
    passed: bool
    detail: str = ""

    def __post_init__(self):
        self.deviation = float(self.deviation)
        self.passed = bool(self.passed)


@dataclass
class VerifySummary:
    g_cap: int
    theta_grid: tuple[float, ...]
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "g_cap": self.g_cap,
            "theta_grid": list(self.theta_grid),
            "checks": [
                {**asdict(c), "deviation": c.deviation if math.isfinite(c.deviation) else None}
                for c in self.checks
            ],
        }

    def table(self) -> str:
        lines = [f"{'check':<26}{'g':>3}{'theta':>8}{'deviation':>14}{'tol':>10}  status"]
        for c in self.checks:
            lines.append(
                f"{c.name:<26}{c.g:>3}{c.theta:>8g}{c.deviation:>14.3e}{c.tolerance:>10.0e}  "
                + ("PASS" if c.passed else "FAIL")
            )
        return "\n".join(lines)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


def run_verify_suite(
    g_cap: int = 4,
    theta_grid: Sequence[float] = (0.5, 1.0, 2.0),
    *,
    tol: float = 1e-10,
    walkers: int = 2000,
    seed: int = 0,
    mc_g_cap: int = 3,
    inject_fault: bool = False,
    log: Callable[[str], None] | None = None,
) -> VerifySummary:
    """Cross-check every method on the (g, theta) grid.

    With ``inject_fault`` one arc weight of every network is scaled by
    ``1 + 1e-3`` before the checks run; the suite must then fail.
    """
    if not 1 <= g_cap <= SOLVE_G_MAX:
        raise ValueError(f"g_cap must lie in 1..{SOLVE_G_MAX}")
    summary = VerifySummary(g_cap, tuple(float(t) for t in theta_grid))
    add = summary.checks.append

    def net_for(g: int, theta: float) -> WeightedDigraph:
        net = build_weighted(NetworkConfig(g, theta))
        return perturb_weight(net) if inject_fault else net

    for theta in summary.theta_grid:
        nets = {g: net_for(g, theta) for g in range(1, g_cap + 1)}
        for g, net in nets.items():
            if log:
                log(f"verify: g={g} theta={theta:g}")
            # structure and out-strengths
            count_ok = net.n_nodes == 4**g + 1 and len(net.undirected_edges) == 4**g
            s = net.out_strengths()
            dev = max(
                _rel(s[net.position(r.label)], closed_form_out_strength(net, r.label))
                for r in net.nodes
            )
            add(CheckResult("out_strength", g, theta, dev, 1e-12, count_ok and dev <= 1e-12))

            # MFPT: solve vs entry sum vs closed form
            sys_ = assemble(net)
            solved = solve_trapping_times(sys_)
            summed = fundamental_entry_sum(sys_)
            dev = max(_rel(summed.per_node[k], v) for k, v in solved.per_node.items())
            add(CheckResult("mfpt_solve_vs_entry_sum", g, theta, dev, tol, dev <= tol))
            exact = closed_form.mfpt_closed(g, theta)
            dev = _rel(solved.average, exact)
            add(CheckResult("mfpt_solve_vs_closed", g, theta, dev, tol, dev <= tol))

            if g <= mc_g_cap:
                sim = simulate(net, SimConfig(walkers, seed))
                z = abs(sim.average - exact) / sim.average_stderr
                add(
                    CheckResult(
                        "mfpt_mc_zscore", g, theta, z, 4.0, z <= 4.0 and sim.truncated_walks == 0,
                        f"truncated={sim.truncated_walks}",
                    )
                )

            if g <= 4:
                dev = spectral.spectrum_deviation(g, theta, net)
                spec = spectral.spectrum(g, theta)
                want_ones = 0 if g == 1 else 2 * 4 ** (g - 1)
                counts_ok = spec.total_multiplicity == 4**g and spec.multiplicity_of(1.0) == want_ones
                add(
                    CheckResult(
                        "spectrum_oracle", g, theta, dev, 1e-8, counts_ok and dev <= 1e-8,
                        f"count={spec.total_multiplicity} ones={spec.multiplicity_of(1.0)}",
                    )
                )

            if g + 1 in nets:
                try:
                    dev = spectral.verify_block_identity(g, theta, net, nets[g + 1])
                    detail = ""
                except ArithmeticError as exc:
                    dev, detail = math.inf, str(exc)
                add(CheckResult("block_identity", g, theta, dev, 1e-12, dev <= 1e-12, detail))
    return summary
