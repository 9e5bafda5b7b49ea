"""Canonical forms, exhaustive generation, scan drivers."""

from __future__ import annotations

import random

import pytest

from qng.enumeration import (
    CanonicalForm,
    canonical_form,
    canonical_labeling,
    canonicalize,
    enumerate_graphs,
    isomorphism_witness,
    resolve_filter,
    scan,
)
from qng.graph import (
    CapacityError,
    complete,
    cycle,
    empty_graph,
    from_edges,
    path,
    relabel,
    star,
    to_graph6,
)
from qng.theorems import check_thm12


def random_graph(rng, n, p=0.5):
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_canonical_form_isomorphic_paths():
    a = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    b = from_edges(4, [(1, 3), (3, 0), (0, 2)])  # P_4 relabeled 2-4-1-3
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(cycle(5)) != canonical_form(path(5))


def test_canonical_form_invariance(rng=random.Random(77)):
    g = random_graph(rng, 7)
    reference = canonical_form(g)
    for _ in range(100):
        perm = list(range(7))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == reference


def test_canonical_constant_on_orbits(graphs_by_order, rng=random.Random(123)):
    for n in range(2, 7):
        for g in graphs_by_order[n]:
            reference = canonical_form(g)
            for _ in range(20):
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(relabel(g, perm)) == reference


def test_canonicalize_is_isomorphic_fixed_point():
    for g in (cycle(6), star(7), complete(4)):
        c = canonicalize(g)
        assert c.degree_sequence() == g.degree_sequence()
        assert canonicalize(c) == c
        assert canonical_labeling(empty_graph(1)) == (0,)


def test_canonical_capacity():
    with pytest.raises(CapacityError):
        canonical_form(empty_graph(11))


def test_isomorphism_witness():
    g = relabel(cycle(6), [3, 1, 5, 0, 4, 2])
    w = isomorphism_witness(g, cycle(6))
    assert w is not None
    for u, v in g.edges():
        assert cycle(6).has_edge(w[u], w[v])
    assert isomorphism_witness(cycle(6), path(6)) is None
    # same degree sequence, different graphs: C_3 u C_3 vs C_6
    a = from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert isomorphism_witness(a, cycle(6)) is None


def test_enumeration_counts(graphs_by_order):
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    for n, want in expected.items():
        assert len(graphs_by_order[n]) == want


def test_enumeration_matches_reference_atlas_class_for_class(graphs_by_order):
    """Bijection of canonical forms against an independent reference stream."""
    import networkx as nx

    atlas: dict[int, set[str]] = {n: set() for n in range(1, 8)}
    for ag in nx.graph_atlas_g():
        n = ag.number_of_nodes()
        if 1 <= n <= 7:
            relabeled = {u: i for i, u in enumerate(ag.nodes())}
            g = from_edges(n, [(relabeled[u], relabeled[v]) for u, v in ag.edges()])
            atlas[n].add(to_graph6(canonicalize(g)))
    for n in range(1, 8):
        mine = {to_graph6(g) for g in graphs_by_order[n]}
        assert mine == atlas[n]


def test_enumeration_count_n8(enum8):
    graphs, _ = enum8
    assert len(graphs) == 12346


def test_connected_count():
    assert len(enumerate_graphs(6, connected_only=True)) == 112
    assert len(enumerate_graphs(4, connected_only=True)) == 6


def test_enumeration_stream_is_canonical_and_unique(graphs_by_order):
    for n in range(1, 8):
        forms = [to_graph6(g) for g in graphs_by_order[n]]
        assert len(set(forms)) == len(forms)
        assert forms == sorted(forms)
        for g in graphs_by_order[n][:20]:
            assert to_graph6(canonicalize(g)) == to_graph6(g)


def test_enumeration_capacity():
    with pytest.raises(CapacityError):
        enumerate_graphs(9)


def test_filters():
    name, accept = resolve_filter("connected,bipartite")
    assert name == "connected,bipartite"
    assert accept(path(4)) and not accept(complete(3))
    with pytest.raises(ValueError):
        resolve_filter("nonsense")
    assert resolve_filter("cobar-disconnected")[1](star(5))
    assert not resolve_filter("cobar-disconnected")[1](path(5))


def test_scan_deterministic_and_parallel_agreement():
    first = scan(5, "connected", check_thm12)
    second = scan(5, "connected", check_thm12)
    assert first == second
    parallel = scan(5, "connected", check_thm12, jobs=2)
    assert parallel == first
    assert first.counts["equality-certified"] >= 1
    assert first.violations == []


def test_scan_external_source():
    graphs = enumerate_graphs(4)
    result = scan(4, "all", check_thm12, source=graphs)
    assert result.total == 11
    with pytest.raises(ValueError):
        scan(5, "all", check_thm12, source=graphs)


def test_scan_result_serialization():
    result = scan(4, "all", check_thm12)
    d = result.to_dict()
    assert d["n"] == 4 and d["total"] == 11
    assert sorted(d["counts"]) == sorted(result.counts)
    assert isinstance(CanonicalForm("C~").graph6, str)


def test_scan_external_stream_order_9():
    from qng.theorems import check_problem12

    petersen_minus = from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                                    (0, 5), (1, 6), (2, 7), (3, 8),
                                    (5, 7), (7, 6), (6, 8), (8, 5)])
    stream = [complete(9), cycle(9), star(9), petersen_minus]
    result = scan(9, "connected", check_problem12, source=stream)
    assert result.total == 4
    assert result.violations == []
    assert result.counts.get("violated", 0) == 0
