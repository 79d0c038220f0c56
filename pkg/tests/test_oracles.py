"""Brute-force oracles: exact values on graphs small enough to check by hand."""
from fractions import Fraction

import pytest

from minor_toolkit import generators, oracles
from minor_toolkit.graph import is_proper_coloring


def test_independence_number():
    assert oracles.independence_number(generators.complete(6))[0] == 1
    assert oracles.independence_number(generators.cycle(5))[0] == 2
    a, wit = oracles.independence_number(generators.petersen())
    assert a == 4
    assert len(wit) == 4
    sub = generators.petersen()
    assert all(u not in sub.adj[v] for u in wit for v in wit if u != v)


def test_clique_number():
    assert oracles.clique_number(generators.complete(7))[0] == 7
    assert oracles.clique_number(generators.petersen())[0] == 2


def test_chromatic_number():
    for g, chi in [(generators.complete(6), 6), (generators.cycle(7), 3),
                   (generators.cycle(8), 2), (generators.petersen(), 3),
                   (generators.grid(3, 4), 2)]:
        val, col = oracles.chromatic_number(g)
        assert val == chi
        assert is_proper_coloring(g, col)
        assert len(set(col.colors)) == chi


def test_chromatic_size_gate():
    with pytest.raises(oracles.OracleSizeError):
        oracles.chromatic_number(generators.cycle(25))


def test_hall_ratio():
    assert oracles.hall_ratio(generators.complete(5))[0] == 5
    assert oracles.hall_ratio(generators.cycle(5))[0] == Fraction(5, 2)
    rho, wit = oracles.hall_ratio(generators.petersen())
    assert rho == Fraction(5, 2)
    # witness subgraph attains the ratio
    from minor_toolkit.graph import induced_subgraph
    sub, _ = induced_subgraph(generators.petersen(), sorted(wit))
    assert Fraction(sub.n, oracles.independence_number(sub)[0]) == rho


def test_hadwiger_number():
    assert oracles.hadwiger_number(generators.complete(6))[0] == 6
    assert oracles.hadwiger_number(generators.cycle(9))[0] == 3
    h, parts = oracles.hadwiger_number(generators.petersen())
    assert h == 5
    assert len(parts) == 5
    # planar K4: h = 4
    assert oracles.hadwiger_number(generators.grid(3, 4))[0] == 4


def test_vertex_connectivity():
    assert oracles.vertex_connectivity(generators.complete(5))[0] == 4
    assert oracles.vertex_connectivity(generators.cycle(8))[0] == 2
    k, sep = oracles.vertex_connectivity(generators.petersen())
    assert k == 3
    assert len(sep) == 3
    g = generators.disjoint_union([generators.complete(3)] * 2)
    assert oracles.vertex_connectivity(g)[0] == 0
    assert oracles.vertex_connectivity(generators.path(2))[0] == 1


def test_connectivity_matches_exhaustive():
    import random
    rng = random.Random(5)
    for _ in range(30):
        g = generators.gnp(rng.randrange(3, 9), rng.uniform(0.2, 0.9),
                           rng.randrange(10**6))
        assert oracles.vertex_connectivity(g)[0] == oracles.vertex_connectivity_exhaustive(g)


def test_find_linkage():
    g = generators.cycle(8)
    # opposite pairs on an 8-cycle are linked
    paths = oracles.find_linkage(g, [(0, 4), (2, 6)])
    assert paths is None  # the two chords must cross, no disjoint routing
    paths = oracles.find_linkage(g, [(0, 3), (4, 7)])
    assert paths is not None
    seen = set()
    for (s, t), p in zip([(0, 3), (4, 7)], paths):
        assert p[0] == s and p[-1] == t
        assert not (set(p) & seen)
        seen |= set(p)


def test_find_linkage_petersen():
    # Petersen is 3-connected, any 1 pair links; some 2-pair instances fail
    g = generators.petersen()
    assert oracles.find_linkage(g, [(0, 7)]) is not None
    paths = oracles.find_linkage(g, [(0, 1), (2, 3)])
    assert paths is not None


def test_rooted_clique_model():
    g = generators.complete(5)
    parts = oracles.find_rooted_clique_model(g, [0, 1, 2], set(range(5)))
    assert parts is not None
    assert all(r in p for r, p in zip([0, 1, 2], parts))


def test_is_woven_exhaustive():
    v = oracles.is_woven(generators.complete(5), 2, 1)
    assert v.woven and v.exhaustive
    v = oracles.is_woven(generators.cycle(5), 1, 1)
    assert v.woven
    # a path is not 2-woven: no K2 model plus disjoint path in general position
    v = oracles.is_woven(generators.path(4), 2, 1)
    assert not v.woven
    assert v.counterexample is not None


def test_chromatic_separability():
    g = generators.disjoint_union([generators.complete(4)] * 2)
    res = oracles.chromatic_separability(g, 0)
    assert res.separable
    # K5 cannot hold two disjoint chi>=4 subgraphs
    res = oracles.chromatic_separability(generators.complete(5), 1)
    assert not res.separable


def test_contract_edge():
    g = generators.cycle(4)
    h = oracles.contract_edge(g, 0, 1)
    assert h.n == 3 and h.e == 3
