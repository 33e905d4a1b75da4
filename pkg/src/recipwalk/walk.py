"""Transition matrices and exact trapping times for a walker absorbed at node 1."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .network import WeightedDigraph

FUNDAMENTAL_SOLVE = "fundamental_solve"
CLOSED_FORM = "closed_form"
MONTE_CARLO = "monte_carlo"

# dense order 4**6
MAX_DENSE_ORDER = 4096


@dataclass(frozen=True)
class TrapSystem:
    """Row-stochastic ``transition`` over all nodes and the trap-deleted blocks.

    Row ``k`` of ``reduced`` and ``p_matrix`` belongs to node label ``k + 2``.
    """

    net: WeightedDigraph
    transition: np.ndarray
    reduced: np.ndarray
    p_matrix: np.ndarray

    @property
    def labels(self) -> np.ndarray:
        return np.arange(2, self.net.n_nodes + 1)


@dataclass(frozen=True)
class MfptReport:
    method: str
    g: int
    theta: float
    average: float
    per_node: dict[int, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "method": self.method,
            "g": self.g,
            "theta": self.theta,
            "average": self.average,
            "per_node": [[label, t] for label, t in sorted(self.per_node.items())],
        }


def assemble(net: WeightedDigraph) -> TrapSystem:
    """Build ``R = S^-1 W``, drop the trap's row and column, and form ``I - R̄``."""
    if net.g < 1:
        raise ValueError("the trap (node 1) only exists for g >= 1")
    if net.n_nodes - 1 > MAX_DENSE_ORDER:
        raise ValueError(
            f"order {net.n_nodes - 1} exceeds the dense cap {MAX_DENSE_ORDER} (g <= 6)"
        )
    w = net.weight_matrix()
    transition = w / w.sum(axis=1, keepdims=True)
    reduced = transition[1:, 1:].copy()
    p_matrix = np.eye(reduced.shape[0]) - reduced
    for arr in (transition, reduced, p_matrix):
        arr.setflags(write=False)
    return TrapSystem(net, transition, reduced, p_matrix)


def _report(sys: TrapSystem, times: np.ndarray, method: str) -> MfptReport:
    per_node = {int(label): float(t) for label, t in zip(sys.labels, times)}
    average = float(sum(per_node.values()) / len(per_node))
    return MfptReport(method, sys.net.g, sys.net.theta, average, per_node)


def solve_trapping_times(sys: TrapSystem) -> MfptReport:
    """Solve ``(I - R̄) T = e`` with an LU factorization."""
    n = sys.p_matrix.shape[0]
    try:
        lu, piv = scipy.linalg.lu_factor(sys.p_matrix, check_finite=True)
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover
        raise RuntimeError("I - R̄ is singular; the trap is unreachable") from exc
    if np.any(np.diag(lu) == 0):  # pragma: no cover
        raise RuntimeError("I - R̄ is singular; the trap is unreachable")
    times = scipy.linalg.lu_solve((lu, piv), np.ones(n))
    return _report(sys, times, FUNDAMENTAL_SOLVE)


def fundamental_matrix(sys: TrapSystem) -> np.ndarray:
    """Explicit ``K = (I - R̄)^-1``; entry (i, j) counts expected visits to j from i."""
    if sys.p_matrix.shape[0] > MAX_DENSE_ORDER:
        raise ValueError("matrix too large for an explicit inverse; use solve_trapping_times")
    return np.linalg.inv(sys.p_matrix)


def fundamental_entry_sum(sys: TrapSystem) -> MfptReport:
    """Trapping times as row sums of the explicit fundamental matrix.

    Independent of :func:`solve_trapping_times`: it inverts rather than solves,
    and the average is the normalized grand sum of ``K``.
    """
    k = fundamental_matrix(sys)
    return _report(sys, k.sum(axis=1), FUNDAMENTAL_SOLVE)


def one_step_residual(sys: TrapSystem, report: MfptReport) -> float:
    """Max |T_i - 1 - sum_j r_ij T_j| over non-trap nodes (trap term is zero)."""
    t = np.array([report.per_node[int(label)] for label in sys.labels])
    return float(np.max(np.abs(t - 1.0 - sys.reduced @ t)))
