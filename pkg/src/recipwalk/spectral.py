"""Eigenvalues of ``P_g = I - R̄_g`` (inverse of the fundamental matrix) by decimation.

Each eigenvalue ``lam`` of ``P_g`` yields two eigenvalues of ``P_{g+1}``::

    1 - sqrt(1 - lam / (2 theta + 2))   (minus branch, in (0, 1))
    1 + sqrt(1 - lam / (2 theta + 2))   (plus branch, in (1, 2))

with the parent's multiplicity, and ``P_{g+1}`` gains ``2 * 4**g`` fresh
copies of the eigenvalue 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closed_form import mfpt_closed
from .network import NetworkConfig, build_weighted
from .walk import assemble

MINUS = "minus"
PLUS = "plus"
FRESH_ONE = "fresh_one"


@dataclass(frozen=True)
class SpectrumEntry:
    value: float
    multiplicity: int
    lineage: tuple[str, ...]


@dataclass(frozen=True)
class SpectrumMultiset:
    g: int
    theta: float
    entries: tuple[SpectrumEntry, ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def multiplicity_of(self, value: float) -> int:
        return sum(e.multiplicity for e in self.entries if e.value == value)

    def expanded(self) -> np.ndarray:
        """All eigenvalues repeated by multiplicity, ascending."""
        vals = np.repeat([e.value for e in self.entries], [e.multiplicity for e in self.entries])
        return np.sort(vals)


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta) or theta <= 0:
        raise ValueError(f"theta must be a positive real, got {theta!r}")
    return theta


def _radical(lam: float, theta: float) -> float:
    radicand = 1.0 - lam / (2.0 * theta + 2.0)
    if radicand < 0:
        raise ArithmeticError(f"negative radicand for eigenvalue {lam!r}, theta={theta!r}")
    return math.sqrt(radicand)


def minus_child(lam: float, theta: float) -> float:
    # 1 - sqrt(1 - x) written as x / (1 + sqrt(1 - x)): no cancellation for small x
    return (lam / (2.0 * theta + 2.0)) / (1.0 + _radical(lam, theta))


def plus_child(lam: float, theta: float) -> float:
    return 1.0 + _radical(lam, theta)


def _base_min(theta: float) -> float:
    x = 1.0 / (theta + 1.0)
    return x / (1.0 + math.sqrt(1.0 - x))


def _base_max(theta: float) -> float:
    return 1.0 + math.sqrt(1.0 - 1.0 / (theta + 1.0))


def base_spectrum(theta: float) -> SpectrumMultiset:
    """Spectrum of ``P_1``: ``1 -/+ sqrt(1 - 1/(theta+1))``, each twice."""
    theta = _check_theta(theta)
    return SpectrumMultiset(
        1,
        theta,
        (SpectrumEntry(_base_min(theta), 2, (MINUS,)), SpectrumEntry(_base_max(theta), 2, (PLUS,))),
    )


def decimate(spec: SpectrumMultiset) -> SpectrumMultiset:
    """Spectrum of ``P_{g+1}`` from that of ``P_g``."""
    theta = spec.theta
    entries = []
    for e in spec.entries:
        entries.append(SpectrumEntry(minus_child(e.value, theta), e.multiplicity, e.lineage + (MINUS,)))
        entries.append(SpectrumEntry(plus_child(e.value, theta), e.multiplicity, e.lineage + (PLUS,)))
    entries.append(SpectrumEntry(1.0, 2 * 4**spec.g, (FRESH_ONE,)))
    entries.sort(key=lambda e: e.value)
    out = SpectrumMultiset(spec.g + 1, theta, tuple(entries))
    if out.total_multiplicity != 4 ** (spec.g + 1):  # pragma: no cover
        raise ArithmeticError("multiplicities do not sum to 4**g")
    return out


def spectrum(g: int, theta: float) -> SpectrumMultiset:
    """Full eigenvalue multiset of ``P_g``, sorted ascending.

    >>> s = spectrum(3, 1.0)
    >>> s.total_multiplicity, s.multiplicity_of(1.0)
    (64, 32)
    """
    if isinstance(g, bool) or int(g) != g or g < 1:
        raise ValueError(f"g must be an integer >= 1, got {g!r}")
    spec = base_spectrum(theta)
    for _ in range(int(g) - 1):
        spec = decimate(spec)
    return spec


def numerical_eigenvalues(p_matrix: np.ndarray, imag_tol: float = 1e-10) -> np.ndarray:
    """Sorted real eigenvalues from a general (nonsymmetric) dense eigensolver."""
    vals = np.linalg.eigvals(p_matrix)
    worst = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    if worst > imag_tol:
        raise ArithmeticError(f"eigenvalue imaginary part {worst:.3g} exceeds {imag_tol:g}")
    return np.sort(vals.real)


def spectrum_deviation(g: int, theta: float, net=None) -> float:
    """Max positional |decimation - dense eigensolve| after sorting both."""
    if g > 4:
        raise ValueError("numerical spectrum oracle is limited to g <= 4")
    if net is None:
        net = build_weighted(NetworkConfig(g, theta))
    numeric = numerical_eigenvalues(assemble(net).p_matrix)
    return float(np.max(np.abs(spectrum(g, theta).expanded() - numeric)))


@dataclass(frozen=True)
class BlockPartition:
    alpha: np.ndarray
    beta: np.ndarray
    p_ab: np.ndarray
    p_ba: np.ndarray
    p_aa: np.ndarray
    p_bb: np.ndarray


def block_partition(g: int, theta: float, net_next=None) -> BlockPartition:
    """Split ``P_{g+1}`` into old non-trap nodes (alpha) and nodes born at g+1 (beta)."""
    if net_next is None:
        net_next = build_weighted(NetworkConfig(g + 1, theta))
    p = assemble(net_next).p_matrix
    n_old = 4**g + 1
    # row k of P belongs to label k + 2
    alpha = np.arange(2, n_old + 1)
    beta = np.arange(n_old + 1, net_next.n_nodes + 1)
    ia, ib = alpha - 2, beta - 2
    return BlockPartition(
        alpha=alpha,
        beta=beta,
        p_ab=p[np.ix_(ia, ib)],
        p_ba=p[np.ix_(ib, ia)],
        p_aa=p[np.ix_(ia, ia)],
        p_bb=p[np.ix_(ib, ib)],
    )


def block_product(g: int, theta: float, net_next=None) -> np.ndarray:
    part = block_partition(g, theta, net_next)
    return part.p_ab @ part.p_ba


def verify_block_identity(g: int, theta: float, net=None, net_next=None) -> float:
    """Max entrywise |P_ab P_ba - (I - P_g / (2 theta + 2))|.

    Raises if the diagonal blocks of ``P_{g+1}`` are not identities.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    if g > 5:
        raise ValueError("block identity check is limited to g <= 5 (order 4096)")
    theta = _check_theta(theta)
    part = block_partition(g, theta, net_next)
    for name, block in (("alpha", part.p_aa), ("beta", part.p_bb)):
        if not np.array_equal(block, np.eye(block.shape[0])):
            raise ArithmeticError(f"P_{name},{name} is not an identity block")
    if net is None:
        net = build_weighted(NetworkConfig(g, theta))
    p_g = assemble(net).p_matrix
    target = np.eye(p_g.shape[0]) - p_g / (2.0 * theta + 2.0)
    return float(np.max(np.abs(part.p_ab @ part.p_ba - target)))


EXACT_RECURSION = "exact_recursion"
TAYLOR_APPROX = "taylor_approx"


def lambda_min(g: int, theta: float, mode: str = EXACT_RECURSION) -> float:
    """Smallest eigenvalue of ``P_g``.

    ``exact_recursion`` follows the minus branch from the smallest base
    eigenvalue, using the same arithmetic as :func:`decimate`;
    ``taylor_approx`` divides by ``4 theta + 4`` per generation instead.
    """
    if isinstance(g, bool) or int(g) != g or g < 1:
        raise ValueError(f"g must be an integer >= 1, got {g!r}")
    theta = _check_theta(theta)
    base = _base_min(theta)
    if mode == TAYLOR_APPROX:
        return base * (4.0 * theta + 4.0) ** (1 - int(g))
    if mode != EXACT_RECURSION:
        raise ValueError(f"unknown mode {mode!r}")
    lam = base
    for _ in range(int(g) - 1):
        lam = minus_child(lam, theta)
    return lam


@dataclass(frozen=True)
class ScalingRow:
    g: int
    sigma_max: float
    mfpt: float
    ratio: float
    sigma_growth: float | None
    mfpt_growth: float | None


def largest_k_eigenvalue_scaling(g_max: int, theta: float) -> list[ScalingRow]:
    """Tabulate ``1/lambda_min`` against the closed-form MFPT for g = 1..g_max.

    ``ratio`` is ``<T> * lambda_min``; the growth columns are successive
    quotients of each series and should both approach ``4(theta + 1)``.
    """
    if g_max < 2:
        raise ValueError("g_max must be >= 2")
    rows: list[ScalingRow] = []
    for g in range(1, g_max + 1):
        sigma = 1.0 / lambda_min(g, theta)
        t = mfpt_closed(g, theta)
        prev = rows[-1] if rows else None
        rows.append(
            ScalingRow(
                g=g,
                sigma_max=sigma,
                mfpt=t,
                ratio=t / sigma,
                sigma_growth=sigma / prev.sigma_max if prev else None,
                mfpt_growth=t / prev.mfpt if prev else None,
            )
        )
    return rows
