"""Brute-force, certificate-producing oracles.

Every oracle refuses (OracleSizeError) above its exact-mode size threshold
instead of silently approximating; approximate entry points are separate.
Search budgets that run out raise BudgetExceeded carrying the best bounds, so
"unknown" is never conflated with a definite answer.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .flow import internally_disjoint_st_paths, separates
from .graph import (
    Coloring,
    Graph,
    adjacency_masks,
    complement,
    connected_components,
    degeneracy_coloring,
    induced_subgraph,
    is_connected_subset,
)


class OracleSizeError(ValueError):
    """Input exceeds the exact-mode size gate of an oracle."""


class BudgetExceeded(RuntimeError):
    """Search budget ran out; carries the best bounds known so far."""

    def __init__(self, message: str, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


# ---------------------------------------------------------------------------
# independence number

MAX_INDEPENDENCE_N = 40


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact independence number with a witness set (branch and bound)."""
    if g.n > MAX_INDEPENDENCE_N:
        raise OracleSizeError(f"independence oracle limited to {MAX_INDEPENDENCE_N} vertices, got {g.n}")
    if g.n == 0:
        return 0, frozenset()
    masks = adjacency_masks(g)
    closed = [masks[v] | 1 << v for v in range(g.n)]
    best = 0
    best_set = 0

    def rec(avail: int, cur: int, size: int) -> None:
        nonlocal best, best_set
        if size + bin(avail).count("1") <= best:
            return
        if avail == 0:
            if size > best:
                best, best_set = size, cur
            return
        # greedy reduction: a vertex with at most one available neighbor is always safe to take
        a = avail
        while a:
            v = (a & -a).bit_length() - 1
            a &= a - 1
            if bin(masks[v] & avail).count("1") <= 1:
                rec(avail & ~closed[v], cur | 1 << v, size + 1)
                return
        # branch on a max-degree vertex: either take it or drop it
        v = max(_bits(avail), key=lambda x: bin(masks[x] & avail).count("1"))
        rec(avail & ~closed[v], cur | 1 << v, size + 1)
        rec(avail & ~(1 << v), cur, size)

    rec((1 << g.n) - 1, 0, 0)
    return best, frozenset(_bits(best_set))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact clique number via the complement's independence number."""
    return independence_number(complement(g))


# ---------------------------------------------------------------------------
# chromatic number

MAX_CHROMATIC_N = 20


def _greedy_clique(g: Graph) -> list[int]:
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        for v in sorted(range(g.n), key=lambda x: -g.degree(x)):
            if v != start and all(v in g.adj[u] for u in clique):
                clique.append(v)
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur(g: Graph) -> Coloring:
    colors = [-1] * g.n
    for _ in range(g.n):
        # highest saturation, then highest degree, then smallest index
        v = max(
            (v for v in range(g.n) if colors[v] < 0),
            key=lambda v: (len({colors[w] for w in g.adj[v] if colors[w] >= 0}), g.degree(v), -v),
        )
        used = {colors[w] for w in g.adj[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def chromatic_number(g: Graph, budget: int = 2_000_000) -> tuple[int, Coloring]:
    """Exact chromatic number (branch and bound seeded by clique bound and DSATUR)."""
    if g.n > MAX_CHROMATIC_N:
        raise OracleSizeError(f"chromatic oracle limited to {MAX_CHROMATIC_N} vertices, got {g.n}")
    if g.n == 0:
        return 0, Coloring(())
    clique = _greedy_clique(g)
    lb = len(clique)
    ub_coloring = _dsatur(g)
    ub = ub_coloring.num_colors
    nodes = 0

    order = clique + sorted((v for v in range(g.n) if v not in clique), key=lambda v: -g.degree(v))

    def try_k(k: int) -> list[int] | None:
        nonlocal nodes
        colors = [-1] * g.n

        def rec(i: int, maxc: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"chromatic search budget {budget} exhausted", lower=lb, upper=ub)
            if i == g.n:
                return True
            v = order[i]
            used = {colors[w] for w in g.adj[v] if colors[w] >= 0}
            for c in range(min(k, maxc + 1)):
                if c not in used:
                    colors[v] = c
                    if rec(i + 1, max(maxc, c + 1)):
                        return True
                    colors[v] = -1
            return False

        return colors if rec(0, 0) else None

    for k in range(lb, ub):
        colors = try_k(k)
        if colors is not None:
            return k, Coloring(tuple(colors))
    return ub, ub_coloring


# ---------------------------------------------------------------------------
# Hall ratio

MAX_HALL_RATIO_N = 16


def alpha_all_subsets(g: Graph) -> list[int]:
    """Independence number of every induced-subgraph vertex mask (DP over subsets)."""
    masks = adjacency_masks(g)
    closed = [masks[v] | 1 << v for v in range(g.n)]
    alpha = [0] * (1 << g.n)
    for m in range(1, 1 << g.n):
        v = (m & -m).bit_length() - 1
        alpha[m] = max(alpha[m & ~(1 << v)], 1 + alpha[m & ~closed[v]])
    return alpha


def hall_ratio(g: Graph) -> tuple[Fraction, frozenset[int]]:
    """Exact Hall ratio max v(H)/alpha(H) with an induced witness subgraph.

    Induced subgraphs suffice: deleting edges cannot decrease the independence
    number, so the maximizer may be taken induced.
    """
    if g.n > MAX_HALL_RATIO_N:
        raise OracleSizeError(f"hall ratio oracle limited to {MAX_HALL_RATIO_N} vertices, got {g.n}")
    if g.n == 0:
        raise OracleSizeError("hall ratio undefined for the empty graph")
    alpha = alpha_all_subsets(g)
    best = Fraction(0)
    best_mask = 0
    for m in range(1, 1 << g.n):
        val = Fraction(bin(m).count("1"), alpha[m])
        if val > best:
            best, best_mask = val, m
    return best, frozenset(_bits(best_mask))


def hall_ratio_lower_bound(g: Graph) -> Fraction:
    """Certified lower bound for graphs above the exact threshold."""
    a, _ = independence_number(g)
    w, _ = clique_number(g)
    return max(Fraction(g.n, a), Fraction(w))


# ---------------------------------------------------------------------------
# Hadwiger number (largest clique minor)

MAX_HADWIGER_N = 12


def _find_clique_minor(g: Graph, h: int) -> list[frozenset[int]] | None:
    """A model of K_h as h disjoint connected pairwise-adjacent branch sets, or None."""
    if h <= 0:
        return []
    if h == 1:
        return [frozenset({0})] if g.n >= 1 else None
    if g.e < h * (h - 1) // 2 or g.n < h:
        return None
    adj = g.adj

    def part_adjacent(part: set[int], other: set[int]) -> bool:
        return any(w in other for v in part for w in adj[v])

    def grow(parts: list[set[int]], seeds: list[int], used: set[int]) -> list[set[int]] | None:
        cur = parts[-1]
        missing = [j for j in range(len(parts) - 1) if not part_adjacent(cur, parts[j])]
        if not missing:
            if len(parts) == h:
                return parts
            res = place_next(parts, seeds, used)
            if res is not None:
                return res
            # the current part may still need to be larger to serve later parts
        if len(used) + (h - len(parts)) > g.n:
            return None
        avail = set(range(g.n)) - used
        for j in missing:
            if not _reachable(adj, cur, parts[j], avail):
                return None
        # each part is grown from its minimum vertex: only add vertices above the seed
        boundary = sorted({w for v in cur for w in adj[v] if w not in used and w > seeds[-1]})
        for w in boundary:
            parts[-1] = cur | {w}
            res = grow(parts, seeds, used | {w})
            if res is not None:
                return res
            parts[-1] = cur
        return None

    def place_next(parts: list[set[int]], seeds: list[int], used: set[int]) -> list[set[int]] | None:
        # seeds strictly increase: parts are ordered by their minimum vertex
        for seed in range((seeds[-1] + 1) if seeds else 0, g.n):
            if seed in used:
                continue
            parts.append({seed})
            seeds.append(seed)
            res = grow(parts, seeds, used | {seed})
            if res is not None:
                return res
            parts.pop()
            seeds.pop()
        return None

    res = place_next([], [], set())
    return [frozenset(p) for p in res] if res is not None else None


def _reachable(adj, src: set[int], dst: set[int], avail: set[int]) -> bool:
    seen = set(src)
    stack = list(src)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in dst:
                return True
            if w in avail and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def hadwiger_number(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """Exact Hadwiger number with a verified clique-minor model (v <= 12)."""
    if g.n > MAX_HADWIGER_N:
        raise OracleSizeError(f"hadwiger oracle limited to {MAX_HADWIGER_N} vertices, got {g.n}")
    if g.n == 0:
        return 0, []
    w, wit = clique_number(g)
    best = w
    model: list[frozenset[int]] = [frozenset({v}) for v in sorted(wit)]
    while best < g.n:
        nxt = _find_clique_minor(g, best + 1)
        if nxt is None:
            break
        best += 1
        model = nxt
    return best, model


def hadwiger_bounds(g: Graph) -> tuple[int, int]:
    """Bracketing (lower, upper) bounds for graphs above the exact threshold.

    Lower: greedy contraction into a clique.  Upper: any K_h minor needs
    h(h-1)/2 edges, plus the trivial n bound.
    """
    h = g
    while h.n > 1:
        # contract the lowest-index edge whose endpoints have the most common neighbors
        best_edge = None
        best_score = -1
        for u, v in h.edges():
            score = len(h.adj[u] & h.adj[v])
            if score > best_score:
                best_edge, best_score = (u, v), score
        if best_edge is None:
            break
        merged = contract_edge(h, *best_edge)
        if merged.e == merged.n * (merged.n - 1) // 2:
            h = merged
            break
        h = merged
    lower = 1
    cur = h
    if cur.e == cur.n * (cur.n - 1) // 2:
        lower = cur.n
    upper = g.n
    while upper * (upper - 1) // 2 > g.e:
        upper -= 1
    return max(lower, 1), max(upper, 1)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    keep = [x for x in range(g.n) if x != v]
    pos = {x: i for i, x in enumerate(keep)}
    adj: list[set[int]] = [set() for _ in keep]
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            adj[pos[a2]].add(pos[b2])
            adj[pos[b2]].add(pos[a2])
    return Graph(len(keep), tuple(frozenset(s) for s in adj))


# ---------------------------------------------------------------------------
# vertex connectivity

def vertex_connectivity(g: Graph) -> tuple[int, frozenset[int] | None]:
    """Exact vertex connectivity; returns a verified separator unless the graph is complete.

    Max-flow with vertex splitting over the standard pair schedule: a minimum
    degree vertex against its non-neighbors, plus non-adjacent neighbor pairs.
    """
    n = g.n
    if n <= 1:
        return 0, None
    if g.e == n * (n - 1) // 2:
        return n - 1, None
    comps = connected_components(g)
    if len(comps) > 1:
        return 0, frozenset()
    v0 = min(range(n), key=lambda v: (g.degree(v), v))
    best = g.degree(v0)
    # N(v0) separates v0 from the rest (nonempty since G is not complete)
    best_sep = frozenset(g.adj[v0])
    for u in range(n):
        if u != v0 and u not in g.adj[v0]:
            val, sep = internally_disjoint_st_paths(g, v0, u)
            if val < best:
                best, best_sep = val, sep
    for x, y in combinations(sorted(g.adj[v0]), 2):
        if y in g.adj[x]:
            continue
        val, sep = internally_disjoint_st_paths(g, x, y)
        if val < best:
            best, best_sep = val, sep
    return best, best_sep


def is_k_connected(g: Graph, k: int) -> bool:
    """kappa(G) >= k, by definition (K_n counts as (n-1)-connected)."""
    if k <= 0:
        return g.n > 0
    kappa, _ = vertex_connectivity(g)
    return kappa >= k and g.n > k


# ---------------------------------------------------------------------------
# disjoint paths / linkages

MAX_LINKAGE_N = 40
MAX_LINKAGE_PAIRS = 6


def check_terminal_pairs(pairs: list[tuple[int, int]]) -> None:
    ss = [s for s, _ in pairs]
    ts = [t for _, t in pairs]
    if len(set(ss)) != len(ss) or len(set(ts)) != len(ts):
        raise ValueError("terminal pairs must have distinct sources and distinct targets")
    for i, s in enumerate(ss):
        for j, t in enumerate(ts):
            if s == t and i != j:
                raise ValueError(f"terminal {s} is source of pair {i} and target of pair {j}")


def _shortest_path_info(g: Graph, avail: set[int], s: int, t: int) -> tuple[int, int]:
    """(distance, number of shortest paths) within avail, or (-1, 0) if disconnected."""
    if s == t:
        return 0, 1
    dist = {s: 0}
    count = {s: 1}
    frontier = [s]
    d = 0
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in avail and w != t:
                    continue
                if w not in dist:
                    dist[w] = d + 1
                    count[w] = count[v]
                    nxt.append(w)
                elif dist[w] == d + 1:
                    count[w] += count[v]
        if t in dist:
            return dist[t], count[t]
        frontier = nxt
        d += 1
    return -1, 0


def find_linkage(g: Graph, pairs: list[tuple[int, int]], budget: int = 500_000) -> list[tuple[int, ...]] | None:
    """Vertex-disjoint paths joining the terminal pairs, or None if provably infeasible.

    Backtracking: the pair with the fewest remaining shortest paths is expanded
    first, and paths are enumerated shortest-first.  Raises BudgetExceeded when
    the node budget runs out (distinct from infeasible).
    """
    check_terminal_pairs(pairs)
    if g.n > MAX_LINKAGE_N or len(pairs) > MAX_LINKAGE_PAIRS:
        raise OracleSizeError("linkage solver limited to 40 vertices and 6 pairs")
    nodes = 0

    def rec(remaining: list[tuple[int, int]], avail: set[int], acc: list[tuple[int, ...]]) -> list[tuple[int, ...]] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"linkage budget {budget} exhausted")
        if not remaining:
            return acc
        infos = []
        for idx, (s, t) in enumerate(remaining):
            if s not in avail or t not in avail:
                return None
            d, cnt = _shortest_path_info(g, avail, s, t)
            if d < 0:
                return None
            infos.append((cnt, d, idx))
        infos.sort()
        _, _, idx = infos[0]
        s, t = remaining[idx]
        rest = remaining[:idx] + remaining[idx + 1:]
        for path in _iter_paths(g, avail, s, t):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"linkage budget {budget} exhausted")
            res = rec(rest, avail - set(path), acc + [path])
            if res is not None:
                return res
        return None

    found = rec(list(pairs), set(g.vertices()), [])
    if found is None:
        return None
    # expansion order permutes the paths; restore input pair order
    by_start = {p[0]: p for p in found}
    return [by_start[s] for s, _t in pairs]


def _iter_paths(g: Graph, avail: set[int], s: int, t: int):
    """All simple s-t paths inside avail, in nondecreasing length order."""
    if s == t:
        yield (s,)
        return
    for length in range(1, len(avail)):
        yield from _paths_of_length(g, avail, s, t, length)


def _paths_of_length(g: Graph, avail: set[int], s: int, t: int, length: int):
    path = [s]
    on_path = {s}

    def rec(v: int, left: int):
        if left == 0:
            if v == t:
                yield tuple(path)
            return
        for w in sorted(g.adj[v]):
            if w in avail and w not in on_path and (w != t or left == 1):
                path.append(w)
                on_path.add(w)
                yield from rec(w, left - 1)
                path.pop()
                on_path.discard(w)

    yield from rec(s, length)


def iter_linkages(g: Graph, pairs: list[tuple[int, int]], budget_box: list[int]):
    """Generator over all linkages for the given pairs (used by the woven search)."""
    check_terminal_pairs(pairs)

    def rec(remaining, avail, acc):
        if budget_box[0] <= 0:
            raise BudgetExceeded("linkage enumeration budget exhausted")
        budget_box[0] -= 1
        if not remaining:
            yield list(acc)
            return
        (s, t), rest = remaining[0], remaining[1:]
        if s not in avail or t not in avail:
            return
        for path in _iter_paths(g, avail, s, t):
            yield from rec(rest, avail - set(path), acc + [path])

    yield from rec(list(pairs), set(g.vertices()), [])


# ---------------------------------------------------------------------------
# rooted clique-minor models and wovenness

def find_rooted_clique_model(g: Graph, roots: list[int], allowed: set[int]) -> list[frozenset[int]] | None:
    """A K_|roots| model rooted at `roots`, with branch sets inside `allowed`.

    Each branch set contains exactly one root.  Returns None when no model
    exists (exhaustive).
    """
    a = len(roots)
    if any(r not in allowed for r in roots):
        return None
    if a == 0:
        return []
    adj = g.adj
    root_set = set(roots)
    usable = set(allowed) - root_set

    def part_adjacent(p: set[int], q: set[int]) -> bool:
        return any(w in q for v in p for w in adj[v])

    def rec(parts: list[set[int]], used: set[int]) -> list[set[int]] | None:
        missing = [(i, j) for i in range(a) for j in range(i + 1, a) if not part_adjacent(parts[i], parts[j])]
        if not missing:
            return parts
        i, j = missing[0]
        for side in (i, j):
            boundary = sorted({w for v in parts[side] for w in adj[v] if w in usable and w not in used})
            for w in boundary:
                parts[side].add(w)
                res = rec(parts, used | {w})
                if res is not None:
                    return res
                parts[side].discard(w)
        return None

    res = rec([{r} for r in roots], set(root_set))
    return [frozenset(p) for p in res] if res is not None else None


@dataclass(frozen=True)
class WovenVerdict:
    woven: bool
    exhaustive: bool
    counterexample: tuple[tuple[int, ...], tuple[tuple[int, int], ...]] | None = None


def woven_instance(g: Graph, roots: list[int], pairs: list[tuple[int, int]],
                   budget_box: list[int]) -> tuple[list[frozenset[int]], list[tuple[int, ...]]] | None:
    """A rooted clique model and linkage overlapping exactly in roots ∩ terminals, or None."""
    terminals = {v for p in pairs for v in p}
    allowed_overlap = set(roots) & terminals
    if not pairs:
        model = find_rooted_clique_model(g, roots, set(g.vertices()))
        return (model, []) if model is not None else None
    for linkage in iter_linkages(g, pairs, budget_box):
        pv = {v for path in linkage for v in path}
        allowed = (set(g.vertices()) - pv) | allowed_overlap
        if any(r not in allowed for r in roots):
            continue
        model = find_rooted_clique_model(g, roots, allowed)
        if model is not None:
            return model, linkage
    return None


def _iter_terminal_groups(n: int, b: int):
    """Disjoint families of b terminal pairs; a pair may be degenerate (s == t)."""
    units = [(x, y) for x in range(n) for y in range(x, n)]

    def rec(start: int, used: set[int], acc: list[tuple[int, int]]):
        if len(acc) == b:
            yield list(acc)
            return
        for k in range(start, len(units)):
            x, y = units[k]
            if x in used or y in used:
                continue
            yield from rec(k + 1, used | {x, y}, acc + [(x, y)])

    yield from rec(0, set(), [])


MAX_WOVEN_N = 10
MAX_WOVEN_A = 3
MAX_WOVEN_B = 2


def is_woven(g: Graph, a: int, b: int, budget: int = 5_000_000,
             sample: int | None = None, seed: int = 0) -> WovenVerdict:
    """Exhaustive (or sampled) check of the (a,b)-woven property.

    YES carries no witness (the property is universally quantified); NO carries
    a concrete (roots, pairs) instance with certified non-existence.
    """
    if sample is None and (g.n > MAX_WOVEN_N or a > MAX_WOVEN_A or b > MAX_WOVEN_B):
        raise OracleSizeError("exhaustive woven check limited to v<=10, a<=3, b<=2")
    if a > g.n:
        return WovenVerdict(False, sample is None, ((), ()))
    budget_box = [budget]
    instances = []
    for roots in combinations(range(g.n), a):
        for pairs in _iter_terminal_groups(g.n, b):
            instances.append((list(roots), pairs))
    if sample is not None:
        rng = random.Random(seed)
        instances = rng.sample(instances, min(sample, len(instances)))
    for roots, pairs in instances:
        if woven_instance(g, roots, pairs, budget_box) is None:
            return WovenVerdict(False, sample is None, (tuple(roots), tuple(tuple(p) for p in pairs)))
    return WovenVerdict(True, sample is None)


# ---------------------------------------------------------------------------
# chromatic separability

MAX_SEPARABILITY_N = 12


def chi_all_subsets(g: Graph) -> list[int]:
    """Chromatic number of every induced-subgraph vertex mask.

    DP: color the lowest vertex's class with a maximal independent set and
    recurse on the rest.
    """
    masks = adjacency_masks(g)
    chi = [0] * (1 << g.n)
    for m in range(1, 1 << g.n):
        v = (m & -m).bit_length() - 1
        best = 1 + chi[m & ~(1 << v)]  # singleton class fallback bound
        for ind in _maximal_independent_supersets(masks, m, v):
            cand = 1 + chi[m & ~ind]
            if cand < best:
                best = cand
        chi[m] = best
    return chi


def _maximal_independent_supersets(masks: list[int], within: int, v: int):
    """Maximal independent sets of the induced graph on `within` that contain v."""
    out = []

    def bk(r: int, p: int):
        if p == 0:
            out.append(r)
            return
        while p:
            w = (p & -p).bit_length() - 1
            p &= p - 1
            bk(r | 1 << w, p & ~masks[w])

    bk(1 << v, within & ~masks[v] & ~(1 << v))
    # filter to maximal ones: no vertex of `within` outside r is addable
    res = []
    for r in out:
        addable = within & ~r
        ok = True
        for w in _bits(addable):
            if masks[w] & r == 0:
                ok = False
                break
        if ok:
            res.append(r)
    return res


@dataclass(frozen=True)
class SeparabilityResult:
    separable: bool
    chi: int
    threshold: int
    witness: tuple[frozenset[int], frozenset[int], int, int] | None
    exhaustive: bool = True


def chromatic_separability(g: Graph, s: int) -> SeparabilityResult:
    """Decide s-chromatic-separability exactly (v <= 12), with witness or exhaustion record."""
    if g.n > MAX_SEPARABILITY_N:
        raise OracleSizeError(f"separability oracle limited to {MAX_SEPARABILITY_N} vertices, got {g.n}")
    chi = chi_all_subsets(g)
    full = (1 << g.n) - 1
    chi_g = chi[full]
    target = chi_g - s
    if target <= 0:
        # two empty subgraphs suffice when the threshold is nonpositive
        return SeparabilityResult(True, chi_g, target, (frozenset(), frozenset(), 0, 0))
    # maxchi_sub[m] = max chi over subsets of m
    maxchi = list(chi)
    for b in range(g.n):
        bit = 1 << b
        for m in range(1 << g.n):
            if m & bit:
                other = maxchi[m ^ bit]
                if other > maxchi[m]:
                    maxchi[m] = other
    for m1 in range(1, full + 1):
        if chi[m1] >= target and maxchi[full ^ m1] >= target:
            m2 = _subset_attaining(chi, maxchi, full ^ m1, target)
            return SeparabilityResult(
                True, chi_g, target,
                (frozenset(_bits(m1)), frozenset(_bits(m2)), chi[m1], chi[m2]),
            )
    return SeparabilityResult(False, chi_g, target, None)


def _subset_attaining(chi: list[int], maxchi: list[int], mask: int, target: int) -> int:
    while chi[mask] < target:
        for w in _bits(mask):
            if maxchi[mask ^ (1 << w)] >= target:
                mask ^= 1 << w
                break
        else:
            raise AssertionError("subset recovery failed")
    return mask


# ---------------------------------------------------------------------------
# exhaustive separator check (test oracle for the flow-based connectivity)

def vertex_connectivity_exhaustive(g: Graph) -> int:
    """kappa by enumerating candidate separators; only for tiny graphs."""
    n = g.n
    if n <= 1:
        return 0
    if g.e == n * (n - 1) // 2:
        return n - 1
    if len(connected_components(g)) > 1:
        return 0
    for k in range(1, n - 1):
        for sep in combinations(range(n), k):
            rest = set(range(n)) - set(sep)
            if rest and len(connected_components(g, rest)) > 1:
                return k
    return n - 1
