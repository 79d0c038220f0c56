"""Unit-capacity max flow with vertex splitting, for Menger-style path/separator pairs."""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Graph


class _FlowNet:
    """Adjacency-list residual network with unit-ish integer capacities."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.to: list[list[int]] = [[] for _ in range(num_nodes)]
        self.cap: list[list[int]] = [[] for _ in range(num_nodes)]
        self.rev: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.to[u].append(v)
        self.cap[u].append(cap)
        self.rev[u].append(len(self.to[v]))
        self.to[v].append(u)
        self.cap[v].append(0)
        self.rev[v].append(len(self.to[u]) - 1)

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        flow = 0
        while limit is None or flow < limit:
            parent: list[tuple[int, int] | None] = [None] * self.num_nodes
            parent[s] = (-1, -1)
            queue = deque([s])
            while queue and parent[t] is None:
                u = queue.popleft()
                for i, v in enumerate(self.to[u]):
                    if self.cap[u][i] > 0 and parent[v] is None:
                        parent[v] = (u, i)
                        queue.append(v)
            if parent[t] is None:
                break
            v = t
            while v != s:
                u, i = parent[v]
                self.cap[u][i] -= 1
                self.cap[self.to[u][i]][self.rev[u][i]] += 1
                v = u
            flow += 1
        return flow

    def residual_reachable(self, s: int) -> list[bool]:
        seen = [False] * self.num_nodes
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for i, v in enumerate(self.to[u]):
                if self.cap[u][i] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def _vin(v: int) -> int:
    return 2 * v


def _vout(v: int) -> int:
    return 2 * v + 1


def _trace_paths(net: _FlowNet, g: Graph, starts: list[int], stops: set[int],
                 caps_used: list[list[int]]) -> list[tuple[int, ...]]:
    """Walk saturated forward edges from each start vertex to recover paths."""
    # flow on edge (u,i) = original capacity minus residual capacity
    used_edge = [[False] * len(net.to[u]) for u in range(net.num_nodes)]
    paths = []
    for a in starts:
        path = [a]
        while path[-1] not in stops:
            node = _vout(path[-1])
            advanced = False
            for i, w in enumerate(net.to[node]):
                if used_edge[node][i] or w % 2 == 1:
                    continue  # only follow u_out -> v_in edges
                if caps_used[node][i] - net.cap[node][i] > 0:
                    used_edge[node][i] = True
                    path.append(w // 2)
                    advanced = True
                    break
            if not advanced:
                break
        paths.append(tuple(path))
    return paths


def disjoint_set_paths(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[list[tuple[int, ...]], frozenset[int]]:
    """Maximum collection of fully vertex-disjoint A-B paths plus a minimum separator.

    An A-B path meets A only in its first vertex and B only in its last; a
    vertex in A ∩ B is a one-vertex path.  The returned separator has size
    equal to the number of paths and meets every A-B path.
    """
    sa, sb = set(a), set(b)
    common = sorted(sa & sb)
    work_a = sa - set(common)
    work_b = sb - set(common)
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    net = _FlowNet(2 * n + 2)
    removed = set(common)
    for v in range(n):
        if v not in removed:
            net.add_edge(_vin(v), _vout(v), 1)
    for u, v in g.edges():
        if u in removed or v in removed:
            continue
        net.add_edge(_vout(u), _vin(v), 1)
        net.add_edge(_vout(v), _vin(u), 1)
    for v in work_a:
        net.add_edge(src, _vin(v), 1)
    for v in work_b:
        net.add_edge(_vout(v), snk, 1)
    caps0 = [list(c) for c in net.cap]
    flow = net.max_flow(src, snk)
    # paths: follow flow from each source edge actually used
    starts = []
    for i, v in enumerate(net.to[src]):
        if caps0[src][i] - net.cap[src][i] > 0:
            starts.append(v // 2)
    paths = _trace_paths(net, g, starts, work_b, caps0)
    paths = [tuple([v]) for v in common] + paths
    # separator from residual reachability; swap source/sink cut edges for split edges
    seen = net.residual_reachable(src)
    sep: set[int] = set(common)
    for u in range(net.num_nodes):
        for i, v in enumerate(net.to[u]):
            if caps0[u][i] > 0 and seen[u] and not seen[v]:
                # every crossing edge of the reachability cut maps to a distinct
                # vertex: head of an edge into some v_in, or a split edge
                if v == snk:
                    sep.add(u // 2)
                elif v < 2 * n and v % 2 == 0:
                    sep.add(v // 2)
                elif v == u + 1 and u % 2 == 0:
                    sep.add(u // 2)
    return paths, frozenset(sep)


def internally_disjoint_st_paths(g: Graph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Max number of internally vertex-disjoint s-t paths and a matching separator.

    Requires s and t non-adjacent (otherwise no finite vertex separator exists).
    """
    if t in g.adj[s]:
        raise ValueError("s and t must be non-adjacent")
    n = g.n
    net = _FlowNet(2 * n)
    for v in range(n):
        if v not in (s, t):
            net.add_edge(_vin(v), _vout(v), 1)
    # source is s_out, sink is t_in; s_in and t_out stay unused
    for u, v in g.edges():
        net.add_edge(_vout(u), _vin(v), 1)
        net.add_edge(_vout(v), _vin(u), 1)
    caps0 = [list(c) for c in net.cap]
    flow = net.max_flow(_vout(s), _vin(t))
    seen = net.residual_reachable(_vout(s))
    sep: set[int] = set()
    for u in range(net.num_nodes):
        for i, v in enumerate(net.to[u]):
            if caps0[u][i] > 0 and seen[u] and not seen[v]:
                if u % 2 == 0 and v == u + 1:
                    sep.add(u // 2)
                elif v % 2 == 0:
                    sep.add(u // 2 if v // 2 == t else v // 2)
    return flow, frozenset(sep)


def separates(g: Graph, sep: Iterable[int], a: Iterable[int], b: Iterable[int]) -> bool:
    """True if removing `sep` leaves no A-B path (A, B taken minus the separator)."""
    sset = set(sep)
    avail = set(g.vertices()) - sset
    starts = set(a) & avail
    goals = set(b) & avail
    if starts & goals:
        return False
    seen = set(starts)
    stack = list(starts)
    while stack:
        v = stack.pop()
        if v in goals:
            return False
        for w in g.adj[v]:
            if w in avail and w not in seen:
                seen.add(w)
                stack.append(w)
    return not (seen & goals)
