"""Deterministic construction of the fractal tree and its weighted directed version.

Labels follow the growth order.  The two seed nodes are 2 and 3; generation 1
adds the internal node 1 (the trap) and the externals 4 and 5.  Nodes born at
a later generation ``n`` take labels ``N_{n-1}+1 .. N_n``, emitted per replaced
edge in the order (internal, external at u, external at v).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator

import numpy as np

ORIGINAL = "original"
INTERNAL = "internal"
EXTERNAL = "external"


@dataclass(frozen=True)
class NetworkConfig:
    """Generation index ``g`` and weight parameter ``theta``."""

    g: int
    theta: float = 1.0

    def __post_init__(self):
        if isinstance(self.g, bool) or int(self.g) != self.g or self.g < 0:
            raise ValueError(f"generation must be a non-negative integer, got {self.g!r}")
        theta = float(self.theta)
        if not math.isfinite(theta) or theta <= 0:
            raise ValueError(f"theta must be a positive real, got {self.theta!r}")
        object.__setattr__(self, "g", int(self.g))
        object.__setattr__(self, "theta", theta)


@dataclass(frozen=True)
class NodeRecord:
    label: int
    birth_generation: int
    role: str


@dataclass(frozen=True)
class WeightedDigraph:
    """Immutable node roster plus directed weighted arcs.

    ``arcs`` holds ``(src, dst, weight)`` triples, two per undirected edge.
    ``undirected_edges`` is kept in creation order, which fixes the labeling
    of the next generation.
    """

    config: NetworkConfig
    nodes: tuple[NodeRecord, ...]
    arcs: tuple[tuple[int, int, float], ...]
    undirected_edges: tuple[tuple[int, int], ...]

    @property
    def g(self) -> int:
        return self.config.g

    @property
    def theta(self) -> float:
        return self.config.theta

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    def position(self, label: int) -> int:
        """Row index of ``label`` in dense arrays (``label - 1`` for g >= 1)."""
        offset = 2 if self.g == 0 else 1
        pos = label - offset
        if isinstance(label, bool) or not 0 <= pos < len(self.nodes):
            raise KeyError(f"unknown node label {label!r}")
        return pos

    def node(self, label: int) -> NodeRecord:
        return self.nodes[self.position(label)]

    def weight_matrix(self) -> np.ndarray:
        """Dense weight matrix indexed by :meth:`position`."""
        n = self.n_nodes
        w = np.zeros((n, n))
        for src, dst, weight in self.arcs:
            w[self.position(src), self.position(dst)] = weight
        return w

    def out_strengths(self) -> np.ndarray:
        s = np.zeros(self.n_nodes)
        for src, _, weight in self.arcs:
            s[self.position(src)] += weight
        return s

    def in_strengths(self) -> np.ndarray:
        s = np.zeros(self.n_nodes)
        for _, dst, weight in self.arcs:
            s[self.position(dst)] += weight
        return s

    def degrees(self) -> np.ndarray:
        k = np.zeros(self.n_nodes, dtype=np.int64)
        for u, v in self.undirected_edges:
            k[self.position(u)] += 1
            k[self.position(v)] += 1
        return k

    def labels_born(self, generation: int, role: str | None = None) -> list[int]:
        return [
            rec.label
            for rec in self.nodes
            if rec.birth_generation == generation and (role is None or rec.role == role)
        ]


def node_count(g: int) -> int:
    return 4**g + 1


def _grow(config: NetworkConfig, theta: float) -> WeightedDigraph:
    # seed nodes a, b keep labels 2, 3 at every generation; label 1 is
    # reserved for the trap born at generation 1
    if config.g == 0:
        nodes = (NodeRecord(2, 0, ORIGINAL), NodeRecord(3, 0, ORIGINAL))
        return WeightedDigraph(config, nodes, ((2, 3, 1.0), (3, 2, 1.0)), ((2, 3),))

    nodes: list[NodeRecord] = [
        NodeRecord(1, 1, INTERNAL),
        NodeRecord(2, 0, ORIGINAL),
        NodeRecord(3, 0, ORIGINAL),
    ]
    # edge -> (W_uv, W_vu), insertion order is creation order
    edges: dict[tuple[int, int], tuple[float, float]] = {(2, 3): (1.0, 1.0)}
    for gen in range(1, config.g + 1):
        new_edges: dict[tuple[int, int], tuple[float, float]] = {}
        for (u, v), (w_uv, w_vu) in edges.items():
            if gen == 1:
                w, x, y = 1, 4, 5
                nodes.append(NodeRecord(4, 1, EXTERNAL))
                nodes.append(NodeRecord(5, 1, EXTERNAL))
            else:
                w = len(nodes) + 1
                x, y = w + 1, w + 2
                nodes.append(NodeRecord(w, gen, INTERNAL))
                nodes.append(NodeRecord(x, gen, EXTERNAL))
                nodes.append(NodeRecord(y, gen, EXTERNAL))
            new_edges[(u, w)] = (w_uv, 1.0)
            new_edges[(w, v)] = (1.0, w_vu)
            new_edges[(u, x)] = (theta * w_uv, 1.0)
            new_edges[(v, y)] = (theta * w_vu, 1.0)
        edges = new_edges

    arcs = []
    for (u, v), (w_uv, w_vu) in edges.items():
        arcs.append((u, v, w_uv))
        arcs.append((v, u, w_vu))
    return WeightedDigraph(config, tuple(nodes), tuple(arcs), tuple(edges))


def build_binary(config: NetworkConfig) -> WeightedDigraph:
    """Build the unweighted tree ``F_g``; every arc carries weight 1.

    ``config.theta`` is recorded but does not affect the weights.
    """
    return _grow(config, 1.0)


def build_weighted(config: NetworkConfig) -> WeightedDigraph:
    """Build the weighted directed network for ``config``.

    Each replaced edge ``(u, v)`` with weights ``(W_uv, W_vu)`` gives
    ``W_uw = W_uv``, ``W_vw = W_vu``, ``W_wu = W_wv = 1``, ``W_xu = W_yv = 1``,
    ``W_ux = theta * W_uv`` and ``W_vy = theta * W_vu``.

    Examples
    --------
    >>> net = build_weighted(NetworkConfig(1, 2.0))
    >>> sorted(net.arcs)[:4]
    [(1, 2, 1.0), (1, 3, 1.0), (2, 1, 1.0), (2, 4, 2.0)]
    """
    return _grow(config, config.theta)


def out_strength(net: WeightedDigraph, i: int) -> float:
    net.node(i)
    return float(sum(w for src, _, w in net.arcs if src == i))


def closed_form_out_strength(net: WeightedDigraph, i: int) -> float:
    """Out-strength predicted from the node's role and birth generation."""
    rec = net.node(i)
    base = (net.theta + 1.0) ** (net.g - rec.birth_generation)
    return 2.0 * base if rec.role == INTERNAL else base


def perturb_weight(net: WeightedDigraph, index: int = 0, delta: float = 1e-3) -> WeightedDigraph:
    """Copy of ``net`` with arc ``index`` scaled by ``1 + delta`` (fault injection)."""
    arcs = list(net.arcs)
    src, dst, w = arcs[index]
    arcs[index] = (src, dst, w * (1.0 + delta))
    return replace(net, arcs=tuple(arcs))


def iter_arc_rows(net: WeightedDigraph) -> Iterator[tuple[int, int, float]]:
    """Arcs sorted by (src, dst); the order used by exporters."""
    return iter(sorted(net.arcs))
