"""Small-graph catalogs: exhaustive isomorph-reduced lists plus a mixed test corpus.

The exhaustive generator extends each (n-1)-vertex graph by one new vertex with
every possible neighborhood and keeps one representative per isomorphism class,
canonicalizing by the minimum edge bitmask over all vertex permutations
(vectorized with numpy).  Feasible up to 7 vertices; the broader corpus fills
sizes above that with named families and seeded random graphs.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from . import generators
from .graph import Graph, GraphError, build_graph, connected_components

MAX_EXHAUSTIVE = 7

# number of graphs on n unlabeled vertices, used as a self-check (OEIS A000088)
_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


@lru_cache(maxsize=None)
def _perm_bit_maps(n: int) -> np.ndarray:
    """perm_maps[p, j] = source bit of target pair j under permutation p."""
    idx = _pair_index(n)
    pairs = list(combinations(range(n), 2))
    maps = []
    for perm in permutations(range(n)):
        row = [idx[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        maps.append(row)
    return np.array(maps, dtype=np.int64)


def _canonical_mask(bits: np.ndarray, n: int) -> int:
    """Minimum edge bitmask over all relabelings; bits is a 0/1 vector of pairs."""
    maps = _perm_bit_maps(n)
    m = bits.shape[0]
    # m <= 21 for n <= 7, so the packed mask fits comfortably in int64
    weights = (1 << np.arange(m - 1, -1, -1)).astype(np.int64)
    permuted = bits[maps]  # (n!, m)
    vals = permuted.astype(np.int64) @ weights
    return int(vals.min())


def _mask_to_graph(mask: int, n: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    edges = [pairs[j] for j in range(m) if mask >> (m - 1 - j) & 1]
    return build_graph(n, edges)


def _graph_to_bits(g: Graph) -> np.ndarray:
    pairs = list(combinations(range(g.n), 2))
    return np.array([1 if g.has_edge(u, v) else 0 for u, v in pairs], dtype=np.int8)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if not 1 <= n <= MAX_EXHAUSTIVE:
        raise GraphError(f"exhaustive catalog limited to 1..{MAX_EXHAUSTIVE} vertices, got {n}")
    if n == 1:
        return (build_graph(1, []),)
    parents = nonisomorphic_graphs(n - 1)
    seen: set[int] = set()
    out: list[Graph] = []
    for parent in parents:
        base_edges = parent.edges()
        for nbhd in range(1 << (n - 1)):
            edges = base_edges + [(v, n - 1) for v in range(n - 1) if nbhd >> v & 1]
            g = build_graph(n, edges)
            canon = _canonical_mask(_graph_to_bits(g), n)
            if canon not in seen:
                seen.add(canon)
                out.append(_mask_to_graph(canon, n))
    expected = _GRAPH_COUNTS.get(n)
    if expected is not None and len(out) != expected:
        raise AssertionError(f"catalog generator produced {len(out)} graphs on {n} vertices, expected {expected}")
    return tuple(out)


def graphs_up_to(n: int, connected_only: bool = False) -> list[Graph]:
    """All non-isomorphic graphs on 1..n vertices (n <= 7)."""
    out: list[Graph] = []
    for k in range(1, n + 1):
        for g in nonisomorphic_graphs(k):
            if connected_only and len(connected_components(g)) != 1:
                continue
            out.append(g)
    return out


def test_corpus(max_n: int, per_size: int = 8, seed: int = 20260825) -> list[Graph]:
    """The package's mixed catalog: exhaustive up to 7 vertices, then named
    families plus seeded G(n,p) samples for sizes 8..max_n."""
    out = graphs_up_to(min(max_n, MAX_EXHAUSTIVE))
    if max_n >= 10:
        out.append(generators.petersen())
    for n in range(MAX_EXHAUSTIVE + 1, max_n + 1):
        out.append(generators.complete(n))
        out.append(generators.cycle(n))
        out.append(generators.path(n))
        if n >= 4:
            out.append(generators.complete_bipartite(n // 2, n - n // 2))
        for i, p in enumerate((0.2, 0.35, 0.5, 0.65, 0.8) * 2):
            if i >= per_size:
                break
            out.append(generators.gnp(n, p, seed + 1000 * n + i))
    return out
