"""Graph construction, operators, structure predicates and the graph6 codec."""

from __future__ import annotations

import random

import networkx as nx
import pytest

from qng.graph import (
    CapacityError,
    Graph,
    Graph6Error,
    bipartition,
    complement,
    complete,
    complete_bipartite,
    components,
    count_bipartite_components,
    cycle,
    cartesian_product,
    disjoint_union,
    empty_graph,
    family,
    from_edges,
    from_graph6,
    h_graph,
    h_graph_blocks,
    has_balanced_bipartite_component,
    is_bipartite,
    is_connected,
    is_regular,
    is_semiregular_bipartite,
    join,
    path,
    relabel,
    star,
    to_graph6,
)
from qng.enumeration import canonical_form


def canon(g):
    return canonical_form(g).graph6


def random_graph(rng, n, p=0.5):
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (2, 1, 0))  # wrong row count
    with pytest.raises(ValueError):
        Graph(1, (1,))  # self loop
    with pytest.raises(CapacityError):
        empty_graph(33)


def test_graph_is_immutable_and_hashable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.n = 5
    assert len({g, path(3), cycle(3)}) == 2


def test_complement_examples():
    assert complement(complete(4)) == empty_graph(4)
    assert canon(complement(path(4))) == canon(path(4))  # self-complementary
    assert canon(complement(star(6))) == canon(disjoint_union(complete(5), empty_graph(1)))


def test_join_and_union_examples():
    g = join(empty_graph(2), complete(4))
    assert g.degree_sequence() == (5, 5, 5, 5, 4, 4)
    assert g.m == complete(4).m + 2 * 4
    u = disjoint_union(complete(2), empty_graph(4))
    assert (u.n, u.m) == (6, 1)


def test_cartesian_product_prism():
    prism = cartesian_product(complete(3), complete(2))
    assert prism.n == 6 and is_regular(prism) and prism.degree(0) == 3
    # hand-checked adjacency: (a,x)~(b,x) for a~b, and (a,x)~(a,y)
    expected = from_edges(6, [(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5),
                              (0, 1), (2, 3), (4, 5)])
    assert canon(prism) == canon(expected)
    # its complement is the 6-cycle
    assert canon(complement(prism)) == canon(cycle(6))


def test_family_constructors():
    assert canon(cycle(4)) == canon(complete_bipartite(2, 2))
    assert family("C", 4) == cycle(4)
    assert family("Kst", 3, 3) == complete_bipartite(3, 3)
    with pytest.raises(ValueError):
        family("Z", 3)


def test_h_graph_structure():
    g = h_graph(1, 1, 1)
    # order S0={0}, S1={1}, S2={2}, u=3, v=4
    assert g.n == 5 and g.m == 4
    assert g.neighbors(3) == (0, 1) and g.neighbors(4) == (0, 2)
    assert not g.has_edge(3, 4)
    assert is_bipartite(g) and is_connected(g)

    g = h_graph(2, 1, 1)
    assert g.n == 6 and g.m == 2 * 2 + 1 + 1

    g = h_graph(3, 0, 1)  # d(u) = n-3, d(v) = n-2 at n = 6
    assert g.degree(4) == 3 and g.degree(5) == 4
    assert h_graph_blocks(3, 0, 1) == ((0, 1, 2), (3,), (4,), (5,))


def test_graph6_hand_encodings():
    assert from_graph6("C~") == complete(4)
    assert to_graph6(cycle(5)) == "Dhc"
    assert from_graph6(">>graph6<<Dhc") == cycle(5)


def test_graph6_roundtrip_against_reference(rng=random.Random(7)):
    for _ in range(200):
        n = rng.randint(1, 16)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        enc = to_graph6(g)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges())
        assert enc == nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert from_graph6(enc) == g


def test_graph6_errors():
    with pytest.raises(Graph6Error):
        from_graph6("")
    with pytest.raises(Graph6Error):
        from_graph6("C")  # truncated payload
    with pytest.raises(Graph6Error):
        from_graph6("C~~")  # trailing garbage
    with pytest.raises(Graph6Error):
        from_graph6("C\x1f")  # character below range
    with pytest.raises(CapacityError):
        from_graph6(chr(40 + 63) + "?" * 130)  # n = 40 beyond the 32 cap


def test_components_and_bipartite_examples():
    g = disjoint_union(complete(2), empty_graph(4))
    comps = components(g)
    assert len(comps) == 5
    assert count_bipartite_components(g) == 5
    assert has_balanced_bipartite_component(g)  # the K_2

    a, b = bipartition(complete_bipartite(3, 3))
    assert (len(a), len(b)) == (3, 3)

    g = disjoint_union(complete(5), empty_graph(1))
    assert count_bipartite_components(g) == 1  # just the isolated vertex
    assert not has_balanced_bipartite_component(g)

    assert bipartition(complete(3)) is None


def test_bipartition_is_proper_coloring(graphs_by_order):
    for n in range(1, 7):
        for g in graphs_by_order[n]:
            parts = bipartition(g)
            if parts is None:
                continue
            for side in parts:
                for i, u in enumerate(side):
                    for v in side[i + 1:]:
                        assert not g.has_edge(u, v)


def test_semiregular_bipartite():
    assert is_semiregular_bipartite(complete_bipartite(2, 5))
    assert is_semiregular_bipartite(cycle(4))
    assert not is_semiregular_bipartite(path(4))
    assert not is_semiregular_bipartite(complete(3))


def test_complement_involution_and_edge_conservation(graphs_by_order, enum8):
    graphs8, _ = enum8
    for n, graphs in list(graphs_by_order.items()) + [(8, graphs8)]:
        for g in graphs:
            assert complement(complement(g)) == g
            assert g.m + complement(g).m == n * (n - 1) // 2


def test_degree_duality(graphs_by_order):
    for n in range(2, 8):
        for g in graphs_by_order[n]:
            ds = g.degree_sequence()
            dc = complement(g).degree_sequence()
            assert all(ds[i] == n - 1 - dc[n - 1 - i] for i in range(n))


def test_relabel_roundtrip(rng=random.Random(3)):
    for _ in range(50):
        n = rng.randint(2, 10)
        g = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert h.degree_sequence() == g.degree_sequence()
        inverse = [0] * n
        for i, v in enumerate(perm):
            inverse[v] = i
        assert relabel(h, inverse) == g


def test_join_size_identity(rng=random.Random(11)):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 6))
        h = random_graph(rng, rng.randint(1, 6))
        j = join(g, h)
        assert j.m == g.m + h.m + g.n * h.n
