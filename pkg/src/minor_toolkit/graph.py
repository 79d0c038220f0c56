"""Immutable simple undirected graphs on vertices 0..n-1, plus elementary quantities."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adjacency is a tuple of frozensets, one per vertex.

    Instances are immutable and hashable, so they are safe to share between
    workers.  Construct through :func:`build_graph` (which validates) or the
    generators; the constructor itself does not validate.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def e(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def density(self) -> Fraction:
        """e(G)/v(G) as an exact rational."""
        if self.n == 0:
            raise GraphError("density undefined for the empty graph")
        return Fraction(self.e, self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"Graph(n={self.n}, e={self.e})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, deduplicating and validating endpoints."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge #{i} = ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge #{i} = ({u},{v}) is a self-loop")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


@dataclass(frozen=True)
class GraphQuantities:
    density: Fraction
    min_degree: int
    max_degree: int
    degree_sequence: tuple[int, ...]


def quantities(g: Graph) -> GraphQuantities:
    """Density, min/max degree and the (non-increasing) degree sequence."""
    if g.n == 0:
        raise GraphError("quantities undefined for the empty graph")
    degs = tuple(sorted((g.degree(v) for v in g.vertices()), reverse=True))
    return GraphQuantities(g.density(), degs[-1], degs[0], degs)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `vs`, relabeled to 0..k-1.

    Returns (subgraph, back_map) where back_map[i] is the host vertex of
    subgraph vertex i.  Vertices are relabeled in sorted host order.
    """
    back = tuple(sorted(set(vs)))
    for v in back:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside host")
    pos = {v: i for i, v in enumerate(back)}
    adj = tuple(frozenset(pos[w] for w in g.adj[v] if w in pos) for v in back)
    return Graph(len(back), adj), back


def bipartite_subgraph(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """The bipartite subgraph keeping only edges between `a` and `b`.

    Vertex set is a ∪ b relabeled in sorted host order; edges inside a or
    inside b are dropped.  a and b must be disjoint.
    """
    sa, sb = set(a), set(b)
    if sa & sb:
        raise GraphError(f"bipartition sides overlap: {sorted(sa & sb)}")
    back = tuple(sorted(sa | sb))
    pos = {v: i for i, v in enumerate(back)}
    adj: list[set[int]] = [set() for _ in back]
    for u in sa:
        for w in g.adj[u]:
            if w in sb:
                adj[pos[u]].add(pos[w])
                adj[pos[w]].add(pos[u])
    return Graph(len(back), tuple(frozenset(x) for x in adj)), back


def cross_edge_count(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one end in a and the other in b (a, b disjoint)."""
    sb = set(b)
    return sum(1 for u in set(a) for w in g.adj[u] if w in sb)


def induced_edge_count(g: Graph, vs: Iterable[int]) -> int:
    s = set(vs)
    return sum(1 for u in s for w in g.adj[u] if w in s and u < w)


def is_connected_subset(g: Graph, vs: Iterable[int]) -> bool:
    """Whether the induced subgraph on `vs` is connected (empty set counts as not)."""
    s = set(vs)
    if not s:
        return False
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in s and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == s


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    s = set(g.vertices()) if within is None else set(within)
    comps = []
    while s:
        start = min(s)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in s and w not in comp:
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
        s -= comp
    return comps


def is_bipartite(g: Graph, vs: Iterable[int] | None = None) -> bool:
    """Odd-cycle-freeness of the induced subgraph on vs (default: all of g)."""
    s = set(g.vertices()) if vs is None else set(vs)
    color: dict[int, int] = {}
    for start in sorted(s):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w not in s:
                    continue
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class ContractionMap:
    """Result of contracting disjoint connected parts of a host graph.

    Quotient vertices 0..len(parts)-1 are the parts in input order; the
    remaining quotient vertices are the uncontracted host vertices in sorted
    order.  `back` maps each quotient vertex to the frozenset of host vertices
    it represents.
    """

    host: Graph
    parts: tuple[frozenset[int], ...]
    quotient: Graph
    back: tuple[frozenset[int], ...]

    @property
    def edge_loss(self) -> int:
        return self.host.e - self.quotient.e


def contract(g: Graph, parts: Iterable[Iterable[int]]) -> ContractionMap:
    """Contract each part to a single vertex; parts must be disjoint and connected."""
    plist = [frozenset(p) for p in parts]
    seen: set[int] = set()
    for i, p in enumerate(plist):
        if not p:
            raise GraphError(f"part #{i} is empty")
        if p & seen:
            raise GraphError(f"part #{i} overlaps an earlier part")
        if any(not 0 <= v < g.n for v in p):
            raise GraphError(f"part #{i} contains a vertex outside the host")
        if not is_connected_subset(g, p):
            raise GraphError(f"part #{i} = {sorted(p)} does not induce a connected subgraph")
        seen |= p
    rest = sorted(set(g.vertices()) - seen)
    back = tuple(plist) + tuple(frozenset({v}) for v in rest)
    cls: dict[int, int] = {}
    for q, vs in enumerate(back):
        for v in vs:
            cls[v] = q
    m = len(back)
    adj: list[set[int]] = [set() for _ in range(m)]
    for u, v in g.edges():
        cu, cv = cls[u], cls[v]
        if cu != cv:
            adj[cu].add(cv)
            adj[cv].add(cu)
    quotient = Graph(m, tuple(frozenset(a) for a in adj))
    return ContractionMap(g, tuple(plist), quotient, back)


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color mapping; colors are 0..num_colors-1."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, set()).add(v)
        return [frozenset(out[c]) for c in sorted(out)]


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    return all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges())


@dataclass(frozen=True)
class DegeneracyResult:
    order: tuple[int, ...]
    degeneracy: int
    coloring: Coloring


def degeneracy_coloring(g: Graph) -> DegeneracyResult:
    """Min-degree-last order, degeneracy, and the greedy coloring along the order.

    Ties in the peeling are broken by smallest vertex index, so the result is
    reproducible.  The coloring uses at most degeneracy+1 colors.
    """
    remaining = set(g.vertices())
    deg = {v: g.degree(v) for v in remaining}
    removal: list[int] = []
    degeneracy = 0
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[v])
        removal.append(v)
        remaining.discard(v)
        for w in g.adj[v]:
            if w in remaining:
                deg[w] -= 1
    order = tuple(reversed(removal))
    colors = [-1] * g.n
    for v in order:
        used = {colors[w] for w in g.adj[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return DegeneracyResult(order, degeneracy, Coloring(tuple(colors)))


def complement(g: Graph) -> Graph:
    adj = tuple(
        frozenset(w for w in range(g.n) if w != v and w not in g.adj[v]) for v in range(g.n)
    )
    return Graph(g.n, adj)


def adjacency_masks(g: Graph) -> list[int]:
    """Neighborhoods as bitmasks; handy for the subset DPs in the oracles."""
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def iter_vertex_subsets(vs: Iterable[int]) -> Iterator[frozenset[int]]:
    vlist = sorted(vs)
    for mask in range(1 << len(vlist)):
        yield frozenset(vlist[i] for i in range(len(vlist)) if mask >> i & 1)
