"""Unit-capacity flow machinery: disjoint paths and minimum separators."""
from minor_toolkit import generators
from minor_toolkit.flow import disjoint_set_paths, internally_disjoint_st_paths, separates
from minor_toolkit.graph import build_graph


def test_disjoint_set_paths_cycle():
    # paths are fully disjoint including endpoints, so two on each side
    g = generators.cycle(8)
    paths, sep = disjoint_set_paths(g, {0, 1}, {4, 5})
    assert len(paths) == 2
    assert len(sep) == 2  # duality
    assert separates(g, sep, {0, 1}, {4, 5})


def test_disjoint_set_paths_overlapping_sides():
    # shared vertices count as zero-length paths
    g = generators.complete(4)
    paths, sep = disjoint_set_paths(g, {0, 1}, {1, 2})
    assert any(p == (1,) for p in paths)
    assert len(paths) == 2


def test_disjoint_set_paths_disconnected():
    g = generators.disjoint_union([generators.complete(3)] * 2)
    paths, sep = disjoint_set_paths(g, {0}, {4})
    assert paths == []
    assert sep == frozenset()


def test_paths_are_vertex_disjoint():
    g = generators.complete_bipartite(4, 4)
    paths, sep = disjoint_set_paths(g, {0, 1, 2, 3}, {4, 5, 6, 7})
    assert len(paths) == 4
    seen = set()
    for p in paths:
        assert not (set(p) & seen)
        seen |= set(p)


def test_internally_disjoint_st():
    g = generators.petersen()
    k, sep = internally_disjoint_st_paths(g, 0, 7)
    assert k == 3
    assert len(sep) == 3
    assert 0 not in sep and 7 not in sep
    assert separates(g, sep, {0}, {7})


def test_separator_bottleneck():
    # two K4 blocks joined through a single cut vertex 3
    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    edges += [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    g = build_graph(7, edges)
    paths, sep = disjoint_set_paths(g, {0, 1, 2}, {4, 5, 6})
    assert len(paths) == 1
    assert sep == frozenset({3})


def test_separates_rejects_non_separator():
    g = generators.cycle(6)
    assert not separates(g, {1}, {0}, {3})
    assert separates(g, {1, 5}, {0}, {3})
