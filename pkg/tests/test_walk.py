import numpy as np
import pytest
import sympy as sp

from recipwalk.network import EXTERNAL, INTERNAL, NetworkConfig, build_binary, build_weighted
from recipwalk.walk import (
    FUNDAMENTAL_SOLVE,
    assemble,
    fundamental_entry_sum,
    fundamental_matrix,
    one_step_residual,
    solve_trapping_times,
)

GRID = (0.25, 0.5, 1.0, 2.0, 5.0)


def exact_trapping_times(g, theta):
    """Solve T_i = 1 + sum_j r_ij T_j over the rationals, straight from the arc list."""
    net = build_weighted(NetworkConfig(g, float(theta)))
    theta = sp.Rational(theta)
    # rebuild weights symbolically: every weight is theta**k for integer k
    out = {}
    for s, d, w in net.arcs:
        k = round(np.log(w) / np.log(float(theta))) if float(theta) != 1 else 0
        out.setdefault(s, []).append((d, theta**k))
    syms = {i: sp.Symbol(f"T{i}") for i in range(2, net.n_nodes + 1)}
    eqs = []
    for i, t in syms.items():
        total = sum(w for _, w in out[i])
        eqs.append(sp.Eq(t, 1 + sum(w / total * syms.get(d, 0) for d, w in out[i])))
    sol = sp.solve(eqs, list(syms.values()), rational=True)
    return {i: sol[t] for i, t in syms.items()}


def test_exact_oracle_g1():
    t = exact_trapping_times(1, 1)
    assert t == {2: 3, 3: 3, 4: 4, 5: 4}
    t = exact_trapping_times(1, 2)
    assert (t[2], t[4]) == (5, 6)


def test_assemble_requires_trap():
    with pytest.raises(ValueError):
        assemble(build_weighted(NetworkConfig(0)))


def test_assemble_refuses_beyond_dense_cap():
    with pytest.raises(ValueError, match="dense cap"):
        assemble(build_weighted(NetworkConfig(7, 1.0)))


def test_transition_rows_g1():
    sys_ = assemble(build_weighted(NetworkConfig(1, 1.0)))
    np.testing.assert_array_equal(sys_.transition[1], [0.5, 0, 0, 0.5, 0])
    for theta in (0.2, 3.0):
        s = assemble(build_weighted(NetworkConfig(1, theta)))
        np.testing.assert_array_equal(s.transition[3], [0, 1, 0, 0, 0])


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("theta", GRID)
def test_matrix_invariants(g, theta):
    sys_ = assemble(build_weighted(NetworkConfig(g, theta)))
    np.testing.assert_allclose(sys_.transition.sum(axis=1), 1.0, atol=1e-12)
    rows = sys_.reduced.sum(axis=1)
    assert np.all(rows <= 1.0 + 1e-12)
    adjacent = sys_.transition[1:, 0] > 0
    assert np.all(rows[adjacent] < 1.0)
    np.testing.assert_allclose(rows[~adjacent], 1.0, atol=1e-12)
    assert list(sys_.labels) == list(range(2, 4**g + 2))
    np.testing.assert_array_equal(sys_.p_matrix, np.eye(4**g) - sys_.reduced)


def test_g2_theta2_reduced_rows():
    sys_ = assemble(build_weighted(NetworkConfig(2, 2.0)))
    assert sys_.reduced.shape == (16, 16)
    rows = sys_.reduced.sum(axis=1)
    assert np.all(rows <= 1.0)
    assert np.all(rows[sys_.transition[1:, 0] > 0] < 1.0)


@pytest.mark.parametrize("g, theta", [(1, 1), (1, 2), (2, 1), (2, 2), (2, sp.Rational(1, 2)), (3, 3)])
def test_solve_matches_exact_rationals(g, theta):
    exact = exact_trapping_times(g, theta)
    report = solve_trapping_times(assemble(build_weighted(NetworkConfig(g, float(theta)))))
    assert report.method == FUNDAMENTAL_SOLVE
    for label, value in exact.items():
        assert report.per_node[label] == pytest.approx(float(value), rel=1e-12)
    assert report.average == pytest.approx(float(sum(exact.values()) / len(exact)), rel=1e-12)


def test_solve_examples():
    r = solve_trapping_times(assemble(build_weighted(NetworkConfig(1, 1.0))))
    assert r.per_node == pytest.approx({2: 3, 3: 3, 4: 4, 5: 4}, rel=1e-14)
    assert r.average == pytest.approx(3.5, rel=1e-14)
    r = solve_trapping_times(assemble(build_weighted(NetworkConfig(1, 2.0))))
    assert (r.per_node[2], r.per_node[4], r.average) == pytest.approx((5, 6, 5.5), rel=1e-14)
    r = solve_trapping_times(assemble(build_weighted(NetworkConfig(2, 1.0))))
    assert r.average == pytest.approx(22.75, rel=1e-12)


def test_entry_sum_examples():
    sys_ = assemble(build_weighted(NetworkConfig(1, 1.0)))
    k = fundamental_matrix(sys_)
    assert k.sum() == pytest.approx(14.0, rel=1e-14)
    assert k[sys_.net.position(4) - 1].sum() == pytest.approx(4.0, rel=1e-14)
    assert fundamental_entry_sum(sys_).average == pytest.approx(3.5, rel=1e-14)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_fundamental_diagonal_at_least_one(g, theta):
    k = fundamental_matrix(assemble(build_weighted(NetworkConfig(g, theta))))
    assert np.all(np.diag(k) >= 1.0 - 1e-12)


@pytest.mark.parametrize("g", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("theta", GRID)
def test_solve_and_entry_sum_agree(g, theta):
    sys_ = assemble(build_weighted(NetworkConfig(g, theta)))
    a, b = solve_trapping_times(sys_), fundamental_entry_sum(sys_)
    for label in a.per_node:
        assert b.per_node[label] == pytest.approx(a.per_node[label], rel=1e-10)
    assert one_step_residual(sys_, a) <= 1e-10 * max(a.per_node.values())
    assert min(a.per_node.values()) >= 1.0


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("theta", [0.5, 1.0, 2.0])
def test_generation_scaling_per_node(g, theta):
    a = solve_trapping_times(assemble(build_weighted(NetworkConfig(g, theta))))
    b = solve_trapping_times(assemble(build_weighted(NetworkConfig(g + 1, theta))))
    for label, t in a.per_node.items():
        assert b.per_node[label] / t == pytest.approx(4 * (theta + 1), rel=1e-8)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_external_sum_is_twice_internal_sum(g, theta):
    net = build_weighted(NetworkConfig(g, theta))
    t = solve_trapping_times(assemble(net)).per_node
    # generation 1 is excluded: its internal node is the trap itself
    for n in range(2, g + 1):
        ext = sum(t[i] for i in net.labels_born(n, EXTERNAL))
        inn = sum(t[i] for i in net.labels_born(n, INTERNAL))
        assert ext == pytest.approx(2 * inn, rel=1e-10)


def test_report_json_shape():
    r = solve_trapping_times(assemble(build_binary(NetworkConfig(1))))
    doc = r.to_json_dict()
    assert doc["method"] == "fundamental_solve"
    assert doc["per_node"][0] == [2, pytest.approx(3.0)]
    assert r.average == sum(r.per_node.values()) / len(r.per_node)
