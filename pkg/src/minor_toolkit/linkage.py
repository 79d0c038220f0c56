"""Minor models, linkages, Menger certificates, Steiner skeletons, and weaving.

Every operation here either verifies a certificate literally, clause by
clause, or constructs an object and re-verifies it before returning.  A
construction that would falsify one of the underlying combinatorial
guarantees raises CounterexampleError instead of returning bad data.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import flow, oracles
from .graph import Graph, GraphError, induced_subgraph, is_bipartite, is_connected_subset


class CounterexampleError(RuntimeError):
    """A construction step failed in a way that would falsify a proven lemma."""


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class MinorModel:
    """Branch sets of a complete-pattern minor; optionally rooted."""

    host: Graph
    parts: tuple[frozenset[int], ...]
    roots: frozenset[int] | None = None

    @property
    def h(self) -> int:
        return len(self.parts)

    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for p in self.parts:
            out |= p
        return frozenset(out)


def verify_minor_model(model: MinorModel) -> Verdict:
    """Check disjointness, connectivity, pairwise adjacency, root multiplicity.

    Never raises; collects every violated clause.
    """
    g = model.host
    bad: list[str] = []
    seen: set[int] = set()
    for i, p in enumerate(model.parts):
        if not p:
            bad.append(f"part {i} is empty")
            continue
        outside = [v for v in p if not 0 <= v < g.n]
        if outside:
            bad.append(f"part {i} contains non-host vertices {sorted(outside)}")
            continue
        if p & seen:
            bad.append(f"part {i} overlaps an earlier part at {sorted(p & seen)}")
        seen |= p
        if not is_connected_subset(g, p):
            bad.append(f"part {i} = {sorted(p)} is not connected")
    for i in range(len(model.parts)):
        for j in range(i + 1, len(model.parts)):
            pi, pj = model.parts[i], model.parts[j]
            if not any(w in pj for v in pi for w in g.adj[v]):
                bad.append(f"no edge between parts {i} and {j}")
    if model.roots is not None:
        for i, p in enumerate(model.parts):
            hit = p & model.roots
            if len(hit) != 1:
                bad.append(f"part {i} meets the roots in {len(hit)} vertices, expected 1")
        stray = model.roots - model.vertices()
        if stray:
            bad.append(f"roots {sorted(stray)} lie in no part")
    return Verdict(not bad, tuple(bad))


@dataclass(frozen=True)
class Linkage:
    """Vertex-disjoint paths, one per terminal pair, stored s_i -> t_i."""

    host: Graph
    pairs: tuple[tuple[int, int], ...]
    paths: tuple[tuple[int, ...], ...]

    def vertices(self) -> frozenset[int]:
        return frozenset(v for path in self.paths for v in path)


def verify_linkage(linkage: Linkage) -> Verdict:
    g = linkage.host
    bad: list[str] = []
    if len(linkage.paths) != len(linkage.pairs):
        bad.append(f"{len(linkage.paths)} paths for {len(linkage.pairs)} pairs")
        return Verdict(False, tuple(bad))
    used: set[int] = set()
    for i, ((s, t), path) in enumerate(zip(linkage.pairs, linkage.paths)):
        if not path:
            bad.append(f"path {i} is empty")
            continue
        if path[0] != s or path[-1] != t:
            bad.append(f"path {i} joins {path[0]}..{path[-1]}, expected {s}..{t}")
        if len(set(path)) != len(path):
            bad.append(f"path {i} repeats a vertex")
        for u, v in zip(path, path[1:]):
            if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
                bad.append(f"path {i} uses non-edge {u}-{v}")
                break
        overlap = set(path) & used
        if overlap:
            bad.append(f"path {i} shares {sorted(overlap)} with an earlier path")
        used |= set(path)
    return Verdict(not bad, tuple(bad))


@dataclass(frozen=True)
class CoredModel:
    """A minor model plus a core vertex set and a tangent subgraph's vertex set."""

    model: MinorModel
    core: frozenset[int]
    tangent: frozenset[int]


def verify_core_tangent(cm: CoredModel) -> tuple[Verdict, dict[tuple[int, int], tuple[int, int]]]:
    """Check the core and tangent clauses; also return per-pair witness edges.

    core: every pair of parts has a witnessing edge with both ends inside the
    core.  tangent: the tangent vertex set meets every part exactly once.
    """
    base = verify_minor_model(cm.model)
    bad = list(base.violations)
    g = cm.model.host
    witnesses: dict[tuple[int, int], tuple[int, int]] = {}
    parts = cm.model.parts
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            ci = parts[i] & cm.core
            cj = parts[j] & cm.core
            edge = next(((u, w) for u in sorted(ci) for w in sorted(g.adj[u] & cj)), None)
            if edge is None:
                bad.append(f"no core edge between parts {i} and {j}")
            else:
                witnesses[(i, j)] = edge
    for i, p in enumerate(parts):
        hit = p & cm.tangent
        if len(hit) != 1:
            bad.append(f"tangent meets part {i} in {len(hit)} vertices, expected 1")
    return Verdict(not bad, tuple(bad)), witnesses


# ---------------------------------------------------------------------------
# Menger machinery

def menger(g: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[list[tuple[int, ...]], frozenset[int]]:
    """Maximum vertex-disjoint A-B paths and a minimum separator of equal size.

    Both certificates are re-verified; strong duality is asserted.
    """
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise GraphError("A and B must be non-empty")
    for v in sa | sb:
        if not 0 <= v < g.n:
            raise GraphError(f"terminal {v} outside the host")
    paths, sep = flow.disjoint_set_paths(g, sa, sb)
    if len(paths) != len(sep):
        raise CounterexampleError(f"path count {len(paths)} != separator size {len(sep)}")
    used: set[int] = set()
    for path in paths:
        assert path[0] in sa and path[-1] in sb
        assert not (set(path) & used)
        used |= set(path)
        assert all(g.has_edge(u, v) for u, v in zip(path, path[1:]))
    assert flow.separates(g, sep, sa, sb)
    return paths, sep


def redundant_menger_paths(g: Graph, a1: Iterable[int], a2: Iterable[int], b: Iterable[int],
                           p1: Sequence[Sequence[int]], p2: Sequence[Sequence[int]]) -> Linkage:
    """|A1|+|A2| disjoint (A1 ∪ A2)-B paths, given doubled path systems.

    Hypotheses, checked literally: P_i is a set of 2|A_i| A_i-B paths avoiding
    the other A side, pairwise disjoint outside A_i, with every A_i vertex on
    exactly two paths.  The output is recomputed by max flow; the hypotheses
    guarantee feasibility, so a short flow would falsify the guarantee.
    """
    sa1, sa2, sb = set(a1), set(a2), set(b)
    if sa1 & sa2:
        raise GraphError("A1 and A2 must be disjoint")
    _check_doubled_system(g, "P1", p1, sa1, sa2, sb)
    _check_doubled_system(g, "P2", p2, sa2, sa1, sb)
    paths, _sep = flow.disjoint_set_paths(g, sa1 | sa2, sb)
    if len(paths) != len(sa1) + len(sa2):
        raise CounterexampleError(
            f"flow found {len(paths)} disjoint paths, hypotheses promise {len(sa1) + len(sa2)}")
    pairs = tuple((path[0], path[-1]) for path in paths)
    out = Linkage(g, pairs, tuple(tuple(p) for p in paths))
    verdict = verify_linkage(out)
    assert verdict.valid, verdict.violations
    return out


def _check_doubled_system(g: Graph, name: str, system: Sequence[Sequence[int]],
                          own: set[int], other: set[int], b: set[int]) -> None:
    if len(system) != 2 * len(own):
        raise GraphError(f"{name} has {len(system)} paths, expected {2 * len(own)}")
    count = {v: 0 for v in own}
    seen_outside: set[int] = set()
    for idx, path in enumerate(system):
        path = tuple(path)
        if not path or path[0] not in own or path[-1] not in b:
            raise GraphError(f"{name}[{idx}] is not an A-B path")
        if len(set(path)) != len(path):
            raise GraphError(f"{name}[{idx}] repeats a vertex")
        if set(path) & other:
            raise GraphError(f"{name}[{idx}] touches the other A side")
        for u, v in zip(path, path[1:]):
            if not g.has_edge(u, v):
                raise GraphError(f"{name}[{idx}] uses non-edge {u}-{v}")
        for v in path:
            if v in own:
                count[v] += 1
            elif v in seen_outside:
                raise GraphError(f"{name} paths share vertex {v} outside A")
            else:
                seen_outside.add(v)
    bad = [v for v, c in count.items() if c != 2]
    if bad:
        raise GraphError(f"{name}: vertices {sorted(bad)} not on exactly two paths")


# ---------------------------------------------------------------------------
# Steiner skeleton

def steiner_skeleton(g: Graph, terminals: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Induced connected skeleton H over the terminals with a small special set.

    Returns (V(H), S') with terminals ⊆ S' ⊆ V(H), |S'| ≤ 3·|terminals|, and
    H∖S' bipartite.  Terminals are attached in input order, each by a
    lexicographically least shortest path to the skeleton built so far; the
    path endpoint in the skeleton, the terminal, and the terminal-side
    neighbor of the endpoint join S'.
    """
    terms = list(dict.fromkeys(terminals))
    if not terms:
        raise GraphError("need at least one terminal")
    for v in terms:
        if not 0 <= v < g.n:
            raise GraphError(f"terminal {v} outside the host")
    if not is_connected_subset(g, g.vertices()):
        raise GraphError("host must be connected")
    h: set[int] = {terms[0]}
    special: set[int] = {terms[0]}
    for v in terms[1:]:
        if v in h:
            special.add(v)
            continue
        path = _lex_shortest_path_to_set(g, v, h)
        u = path[-1]       # endpoint inside the skeleton
        w = path[-2]       # its neighbor on the path (may be the terminal)
        special.update({v, u, w})
        h.update(path)
    assert special <= h and len(special) <= 3 * len(terms)
    assert is_connected_subset(g, h)
    assert is_bipartite(g, h - special)
    return frozenset(h), frozenset(special)


def _lex_shortest_path_to_set(g: Graph, v: int, target: set[int]) -> list[int]:
    """Shortest v -> target path, ties broken by smallest vertex at each step."""
    dist = {u: 0 for u in target}
    queue = deque(sorted(target))
    while queue:
        u = queue.popleft()
        for w in sorted(g.adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    if v not in dist:
        raise GraphError(f"terminal {v} disconnected from the skeleton")
    path = [v]
    while path[-1] not in target:
        cur = path[-1]
        nxt = min(w for w in g.adj[cur] if dist.get(w, -1) == dist[cur] - 1)
        path.append(nxt)
    return path


# ---------------------------------------------------------------------------
# weaving a rooted model through a linkage

def weave(g: Graph, h_vertices: Iterable[int], roots: Sequence[int], linkage: Linkage,
          certified: bool = False, budget: int = 5_000_000) -> tuple[Linkage, MinorModel]:
    """Reroute a linkage through a woven subgraph while planting a rooted model.

    Given an (a,b)-woven subgraph on h_vertices (pass certified=True to skip
    the exhaustive wovenness check) and roots inside it, returns a linkage P'
    joining the original pairs and a complete model M rooted at the roots with
    V(P') ∩ V(M) ⊆ roots ∩ V(P) and V(P') ⊆ h_vertices ∪ V(P).
    """
    hset = set(h_vertices)
    a = len(roots)
    b = len(linkage.pairs)
    if len(set(roots)) != a or not set(roots) <= hset:
        raise GraphError("roots must be distinct vertices of the woven subgraph")
    verdict = verify_linkage(linkage)
    if not verdict.valid:
        raise GraphError(f"input linkage invalid: {verdict.violations}")
    sub, back = induced_subgraph(g, sorted(hset))
    fwd = {hv: i for i, hv in enumerate(back)}
    if not certified:
        wv = oracles.is_woven(sub, a, b, budget=budget)
        if not wv.woven:
            raise GraphError("subgraph is not woven; refusing to weave without a certificate")

    # first/last skeleton hits along each path, oriented s_i -> t_i
    inner_pairs: list[tuple[int, int]] = []
    crossing: list[int] = []
    for i, path in enumerate(linkage.paths):
        hits = [v for v in path if v in hset]
        if hits:
            crossing.append(i)
            inner_pairs.append((fwd[hits[0]], fwd[hits[-1]]))
    budget_box = [budget]
    found = oracles.woven_instance(sub, [fwd[r] for r in roots], inner_pairs, budget_box)
    if found is None:
        raise CounterexampleError("woven certificate refuted: no inner model+linkage")
    model_parts, inner_paths = found
    model = MinorModel(g, tuple(frozenset(back[v] for v in p) for p in model_parts),
                       frozenset(roots))

    new_paths = list(linkage.paths)
    for idx, inner in zip(crossing, inner_paths):
        path = linkage.paths[idx]
        inner_host = [back[v] for v in inner]
        first = path.index(inner_host[0])
        last = len(path) - 1 - path[::-1].index(inner_host[-1])
        new_paths[idx] = path[:first] + tuple(inner_host) + path[last + 1:]
    woven_linkage = Linkage(g, linkage.pairs, tuple(new_paths))

    verdict = verify_linkage(woven_linkage)
    if not verdict.valid:
        raise CounterexampleError(f"rerouted linkage invalid: {verdict.violations}")
    mverdict = verify_minor_model(model)
    if not mverdict.valid:
        raise CounterexampleError(f"woven model invalid: {mverdict.violations}")
    pv = woven_linkage.vertices()
    mv = model.vertices()
    if not (pv & mv) <= (set(roots) & linkage.vertices()):
        raise CounterexampleError("overlap clause violated: V(P') ∩ V(M) ⊄ R ∩ V(P)")
    if not pv <= (hset | linkage.vertices()):
        raise CounterexampleError("containment clause violated: V(P') ⊄ V(H) ∪ V(P)")
    return woven_linkage, model
