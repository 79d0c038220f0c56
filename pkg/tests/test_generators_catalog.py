"""Generators and the isomorph-reduced small-graph catalog."""
import pytest

from minor_toolkit import catalog, generators
from minor_toolkit.graph import connected_components


def test_complete_cycle_path():
    assert generators.complete(5).e == 10
    assert generators.cycle(6).e == 6
    assert generators.path(6).e == 5


def test_petersen_shape():
    g = generators.petersen()
    assert g.n == 10 and g.e == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_grid():
    g = generators.grid(3, 4)
    assert g.n == 12
    assert g.e == 3 * 3 + 2 * 4  # horizontal + vertical


def test_gnp_reproducible():
    a = generators.gnp(30, 0.4, seed=7)
    b = generators.gnp(30, 0.4, seed=7)
    c = generators.gnp(30, 0.4, seed=8)
    assert a.adj == b.adj
    assert a.adj != c.adj


def test_planted_dense_pocket():
    g = generators.planted_dense(60, 12, 1.0, 0.0, seed=1)
    # pocket is a clique on the first 12 vertices, rest isolated-ish
    for u in range(12):
        for v in range(u + 1, 12):
            assert v in g.adj[u]
    assert g.e == 66


def test_shared_vertex_cliques():
    g = generators.shared_vertex_cliques([4, 4, 4])
    assert len(connected_components(g)) == 1
    assert g.n == 3 * 3 + 1


def test_generate_spec_parser():
    assert generators.generate("petersen", 0).n == 10
    assert generators.generate("gnp(20,0.5)", 3).adj == generators.gnp(20, 0.5, 3).adj
    assert generators.generate("complete(6)", 0).e == 15
    with pytest.raises(Exception):
        generators.generate("nosuch(3)", 0)


# known counts of unlabeled simple graphs on n vertices
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@pytest.mark.parametrize("n,count", sorted(GRAPH_COUNTS.items()))
def test_catalog_counts(n, count):
    assert len(catalog.nonisomorphic_graphs(n)) == count


def test_catalog_no_isomorphs_by_invariants():
    # cheap sanity: degree-sequence multiset collisions are allowed, but
    # every graph must be distinct as an edge set
    gs = catalog.nonisomorphic_graphs(5)
    assert len({g.adj for g in gs}) == len(gs)


def test_graphs_up_to_connected():
    gs = catalog.graphs_up_to(5, connected_only=True)
    assert all(len(connected_components(g)) <= 1 for g in gs)
    # 1+1+2+6+21 connected graphs on 1..5 vertices
    assert len(gs) == 31


def test_test_corpus_deterministic():
    a = catalog.test_corpus(10)
    b = catalog.test_corpus(10)
    assert [g.adj for g in a] == [g.adj for g in b]
    assert all(g.n <= 10 for g in a)
    # includes the full exhaustive range
    assert sum(1 for g in a if g.n <= 7) >= sum(GRAPH_COUNTS.values())
