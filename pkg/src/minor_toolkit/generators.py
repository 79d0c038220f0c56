"""Deterministic graph generators for the property suites and the CLI."""
from __future__ import annotations

import random
import re
from itertools import combinations

from .graph import Graph, GraphError, build_graph


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    # outer C5 on 0..4, inner pentagram on 5..9, spokes i -- i+5
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid(rows: int, cols: int) -> Graph:
    def idx(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return build_graph(rows * cols, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n,p): each pair kept independently with probability p.

    Pairs are visited in lexicographic order with random.Random(seed), so the
    edge set is a pure function of (n, p, seed).
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must be in [0,1], got {p}")
    if n < 1:
        raise GraphError("gnp needs n >= 1")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def disjoint_union(graphs: list[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return build_graph(offset, edges)


def shared_vertex_cliques(sizes: list[int]) -> Graph:
    """Cliques of the given sizes all sharing vertex 0."""
    if any(s < 2 for s in sizes):
        raise GraphError("each clique needs size >= 2")
    edges = []
    offset = 1
    for s in sizes:
        block = [0] + list(range(offset, offset + s - 1))
        edges += list(combinations(block, 2))
        offset += s - 1
    return build_graph(offset, edges)


def planted_dense(n: int, pocket_size: int, pocket_p: float, ambient_p: float, seed: int) -> Graph:
    """Sparse ambient G(n, ambient_p) with a dense pocket G(pocket_size, pocket_p) on 0..pocket_size-1."""
    if pocket_size > n:
        raise GraphError("pocket larger than graph")
    for p in (pocket_p, ambient_p):
        if not 0.0 <= p <= 1.0:
            raise GraphError(f"probability {p} outside [0,1]")
    rng = random.Random(seed)
    edges = []
    for u, v in combinations(range(n), 2):
        p = pocket_p if v < pocket_size else ambient_p
        if rng.random() < p:
            edges.append((u, v))
    return build_graph(n, edges)


_SPEC_RE = re.compile(r"^\s*([a-z_0-9]+)\s*(?:\(\s*([^)]*)\s*\))?\s*$")


def generate(spec: str, seed: int = 0) -> Graph:
    """Build a graph from a family spec string, e.g. 'gnp(40,0.5)' or 'petersen'."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise GraphError(f"cannot parse generator spec {spec!r}")
    name, argstr = m.group(1), m.group(2) or ""
    args = [a.strip() for a in argstr.split(",") if a.strip()]

    def ints(k: int) -> list[int]:
        if len(args) != k:
            raise GraphError(f"{name} expects {k} argument(s), got {len(args)}")
        return [int(a) for a in args]

    if name == "complete":
        return complete(*ints(1))
    if name == "cycle":
        return cycle(*ints(1))
    if name == "path":
        return path(*ints(1))
    if name == "petersen":
        return petersen()
    if name == "complete_bipartite":
        return complete_bipartite(*ints(2))
    if name == "grid":
        return grid(*ints(2))
    if name == "gnp":
        if len(args) != 2:
            raise GraphError("gnp expects (n, p)")
        return gnp(int(args[0]), float(args[1]), seed)
    if name == "disjoint_union":
        # args are nested specs separated by '+', e.g. disjoint_union(complete:5+cycle:4)
        parts = [a.strip() for a in argstr.split("+") if a.strip()]
        subs = []
        for p in parts:
            if ":" in p:
                fam, _, sub_args = p.partition(":")
                p = f"{fam}({sub_args})"
            subs.append(generate(p, seed))
        return disjoint_union(subs)
    if name == "shared_vertex_cliques":
        if not args:
            raise GraphError("shared_vertex_cliques expects clique sizes")
        return shared_vertex_cliques([int(a) for a in args])
    if name == "planted_dense":
        if len(args) != 4:
            raise GraphError("planted_dense expects (n, pocket_size, pocket_p, ambient_p)")
        return planted_dense(int(args[0]), int(args[1]), float(args[2]), float(args[3]), seed)
    raise GraphError(f"unknown family {name!r}")
