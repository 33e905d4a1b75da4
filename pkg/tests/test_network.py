import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recipwalk.network import (
    EXTERNAL,
    INTERNAL,
    ORIGINAL,
    NetworkConfig,
    build_binary,
    build_weighted,
    closed_form_out_strength,
    out_strength,
)


@pytest.mark.parametrize("g, theta", [(0, 0.0), (0, -1.0), (-1, 1.0), (1.5, 1.0), (1, float("nan"))])
def test_config_rejects_bad_input(g, theta):
    with pytest.raises(ValueError):
        NetworkConfig(g, theta)


def test_g0_is_single_edge():
    net = build_binary(NetworkConfig(0))
    assert net.n_nodes == 2
    assert net.undirected_edges == ((2, 3),)
    assert all(r.role == ORIGINAL for r in net.nodes)


def test_g1_edges_and_roles():
    net = build_binary(NetworkConfig(1))
    assert net.n_nodes == 5
    assert {frozenset(e) for e in net.undirected_edges} == {
        frozenset(p) for p in [(2, 1), (3, 1), (2, 4), (3, 5)]
    }
    roles = {r.label: (r.birth_generation, r.role) for r in net.nodes}
    assert roles == {
        1: (1, INTERNAL), 2: (0, ORIGINAL), 3: (0, ORIGINAL), 4: (1, EXTERNAL), 5: (1, EXTERNAL),
    }


def test_g3_size_and_hub_degree():
    net = build_binary(NetworkConfig(3))
    assert net.n_nodes == 65
    assert len(net.undirected_edges) == 64
    assert net.degrees()[net.position(1)] == 8


@pytest.mark.parametrize("g", range(0, 7))
def test_labels_contiguous_and_birth_counts(g):
    net = build_binary(NetworkConfig(g))
    labels = [r.label for r in net.nodes]
    if g == 0:
        assert labels == [2, 3]
        return
    assert labels == list(range(1, 4**g + 2))
    for n in range(1, g + 1):
        assert len(net.labels_born(n)) == 3 * 4 ** (n - 1)
        assert len(net.labels_born(n, INTERNAL)) == 4 ** (n - 1)
        assert len(net.labels_born(n, EXTERNAL)) == 2 * 4 ** (n - 1)
        if n > 1:
            # new nodes occupy N_{n-1}+1 .. N_n
            assert sorted(net.labels_born(n)) == list(range(4 ** (n - 1) + 2, 4**n + 2))


def test_weighted_g1_theta2_arcs():
    net = build_weighted(NetworkConfig(1, 2.0))
    assert sorted(net.arcs) == sorted(
        [(1, 2, 1.0), (2, 1, 1.0), (1, 3, 1.0), (3, 1, 1.0), (4, 2, 1.0), (2, 4, 2.0), (5, 3, 1.0), (3, 5, 2.0)]
    )


@pytest.mark.parametrize("g", range(0, 6))
def test_theta_one_reduces_to_binary(g):
    net = build_weighted(NetworkConfig(g, 1.0))
    assert all(w == 1.0 for _, _, w in net.arcs)
    assert net.arcs == build_binary(NetworkConfig(g, 1.0)).arcs


def test_out_strength_examples():
    assert out_strength(build_weighted(NetworkConfig(1, 3.0)), 2) == 4.0
    for theta in (0.3, 1.0, 7.0):
        assert out_strength(build_weighted(NetworkConfig(1, theta)), 4) == 1.0
    net = build_weighted(NetworkConfig(2, 1.0))
    assert out_strength(net, 2) == 4.0
    assert out_strength(net, 1) == 4.0
    with pytest.raises(KeyError):
        out_strength(net, 18)


@pytest.mark.parametrize("g", range(0, 9))
def test_sizes_and_arc_pairs(g, theta):
    net = build_weighted(NetworkConfig(g, theta))
    assert net.n_nodes == 4**g + 1
    assert len(net.undirected_edges) == 4**g
    arcs = {(s, d): w for s, d, w in net.arcs}
    assert len(arcs) == 2 * len(net.undirected_edges)
    for u, v in net.undirected_edges:
        assert arcs[(u, v)] > 0 and arcs[(v, u)] > 0


@pytest.mark.parametrize("g", range(0, 7))
def test_measured_out_strength_matches_closed_form(g, theta):
    net = build_weighted(NetworkConfig(g, theta))
    s = net.out_strengths()
    for rec in net.nodes:
        want = closed_form_out_strength(net, rec.label)
        assert s[net.position(rec.label)] == pytest.approx(want, rel=1e-12)


@settings(max_examples=25, deadline=None)
@given(g=st.integers(0, 5), theta=st.floats(0.05, 20.0))
def test_out_strength_grows_by_theta_plus_one(g, theta):
    a = build_weighted(NetworkConfig(g, theta))
    b = build_weighted(NetworkConfig(g + 1, theta))
    sa, sb = a.out_strengths(), b.out_strengths()
    for rec in a.nodes:
        ratio = sb[b.position(rec.label)] / sa[a.position(rec.label)]
        assert ratio == pytest.approx(theta + 1.0, rel=1e-12)


def test_in_strength_is_numeric_only():
    net = build_weighted(NetworkConfig(2, 2.0))
    assert net.in_strengths().sum() == pytest.approx(net.out_strengths().sum())


def test_construction_is_deterministic():
    a = build_weighted(NetworkConfig(4, 0.7))
    b = build_weighted(NetworkConfig(4, 0.7))
    assert repr(a.arcs) == repr(b.arcs)
    assert a == b
