"""Minor models, linkages, Menger machinery, Steiner skeletons, weaving."""
import random

import pytest

from minor_toolkit import generators, oracles
from minor_toolkit.graph import build_graph, induced_subgraph, is_bipartite, is_connected_subset
from minor_toolkit.linkage import (CoredModel, Linkage, MinorModel,
                                   menger, redundant_menger_paths, steiner_skeleton,
                                   verify_core_tangent, verify_linkage, verify_minor_model,
                                   weave)
from minor_toolkit.graph import GraphError


def test_verify_minor_model_valid():
    # K3 model in C6 by pairing opposite arcs
    g = generators.cycle(6)
    model = MinorModel(g, (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})))
    v = verify_minor_model(model)
    assert v.valid and not v.violations


def test_verify_minor_model_collects_violations():
    g = generators.path(4)
    model = MinorModel(g, (frozenset({0, 2}), frozenset({1}), frozenset({3})))
    v = verify_minor_model(model)
    assert not v.valid
    # disconnected part and at least one missing adjacency
    assert any("connect" in msg for msg in v.violations)


def test_verify_minor_model_rooted():
    g = generators.complete(5)
    model = MinorModel(g, (frozenset({0, 3}), frozenset({1}), frozenset({2})),
                       roots=frozenset({0, 1, 2}))
    assert verify_minor_model(model).valid
    # a root-free part violates the rooted clause
    model = MinorModel(g, (frozenset({3}), frozenset({1}), frozenset({2})),
                       roots=frozenset({0, 1, 2}))
    assert not verify_minor_model(model).valid


def test_verify_linkage():
    g = generators.cycle(8)
    good = Linkage(g, ((0, 3), (4, 7)), ((0, 1, 2, 3), (4, 5, 6, 7)))
    assert verify_linkage(good).valid
    crossing = Linkage(g, ((0, 3), (4, 7)), ((0, 1, 2, 3), (4, 3, 2, 7)))
    assert not verify_linkage(crossing).valid


def test_core_tangent():
    g = generators.complete(6)
    model = MinorModel(g, (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})))
    cm = CoredModel(model, core=frozenset({0, 2, 4}), tangent=frozenset({1, 3, 5}))
    verdict, witnesses = verify_core_tangent(cm)
    assert verdict.valid
    assert set(witnesses) == {(0, 1), (0, 2), (1, 2)}
    # shrink the core: pair (0,1) loses its witness
    bad = CoredModel(model, core=frozenset({0, 4}), tangent=frozenset({1, 3, 5}))
    verdict, _ = verify_core_tangent(bad)
    assert not verdict.valid


def test_menger_duality_petersen():
    g = generators.petersen()
    paths, sep = menger(g, {0, 1, 2}, {6, 8, 9})
    assert len(paths) == len(sep) == 3


def test_menger_bottleneck():
    g = generators.shared_vertex_cliques([4, 4])
    paths, sep = menger(g, set(range(3)), {4, 5, 6})
    assert len(paths) == 1


def test_redundant_menger_paths():
    # K9 with A1 = {0}, A2 = {1}, B = {5,...,8}: doubled systems exist
    g = generators.complete(9)
    p1 = [(0, 5), (0, 6)]
    p2 = [(1, 7), (1, 8)]
    link = redundant_menger_paths(g, {0}, {1}, {5, 6, 7, 8}, p1, p2)
    assert len(link.paths) == 2
    assert verify_linkage(link).valid


def test_redundant_menger_hypothesis_check():
    g = generators.complete(9)
    with pytest.raises(GraphError):
        # only one path per A1 vertex
        redundant_menger_paths(g, {0}, {1}, {5, 6, 7, 8}, [(0, 5)], [(1, 7), (1, 8)])
    with pytest.raises(GraphError):
        # P1 touches the other side
        redundant_menger_paths(g, {0}, {1}, {5, 6, 7, 8},
                               [(0, 1, 5), (0, 6)], [(1, 7), (1, 8)])


def test_steiner_skeleton_clauses():
    g = generators.grid(4, 5)
    terminals = [0, 7, 19]
    h, s_prime = steiner_skeleton(g, terminals)
    assert set(terminals) <= s_prime <= h
    assert len(s_prime) <= 3 * len(terminals)
    assert is_connected_subset(g, h)
    assert is_bipartite(g, h - s_prime)


def test_steiner_skeleton_random():
    from minor_toolkit.graph import connected_components
    rng = random.Random(0)
    for _ in range(25):
        raw = generators.gnp(rng.randrange(5, 40), 0.15, rng.randrange(10**6))
        comp = max(connected_components(raw), key=len)
        g, _ = induced_subgraph(raw, sorted(comp))
        terms = sorted(rng.sample(range(g.n), min(4, g.n)))
        h, s_prime = steiner_skeleton(g, terms)
        assert set(terms) <= s_prime <= h
        assert len(s_prime) <= 3 * len(terms)
        assert is_connected_subset(g, h)
        assert is_bipartite(g, h - s_prime)


def test_weave_reroutes_through_host():
    rng = random.Random(7)
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6)]
    n = 14
    for u in range(n):
        for v in range(max(u + 1, 6), n):
            if rng.random() < 0.45:
                edges.append((u, v))
    g = build_graph(n, sorted(set(edges)))
    h = frozenset(range(6))
    pairs = [(6, 13), (7, 12)]
    raw = oracles.find_linkage(g, pairs)
    assert raw is not None
    link = Linkage(g, tuple(pairs), tuple(tuple(p) for p in raw))
    new_link, model = weave(g, h, (0, 1), link)
    assert verify_linkage(new_link).valid
    assert verify_minor_model(model).valid
    # containment clauses
    pv = new_link.vertices()
    assert pv <= h | link.vertices()
    assert (pv & model.vertices()) <= (set({0, 1}) & link.vertices())


def test_weave_rejects_unwoven_host():
    g = generators.path(6)
    link = Linkage(g, ((0, 5),), ((0, 1, 2, 3, 4, 5),))
    with pytest.raises(GraphError):
        weave(g, frozenset({1, 2, 3}), (1, 2), link)


def test_weave_rejects_bad_roots():
    g = generators.complete(6)
    link = Linkage(g, ((0, 5),), ((0, 5),))
    with pytest.raises(GraphError):
        weave(g, frozenset({0, 1, 2}), (0, 4), link)
