"""Batch property suites: each sweeps instances against one proven inequality.

Suites return (rows, summary): one row per instance with a pass flag, and an
aggregate summary.  A failing row carries the falsifying instance in graph6
form so it can be replayed.  The CLI and the acceptance tests both run these.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Any, Callable

from . import bounds, catalog, extraction, generators, linkage as linkage_mod, oracles
from .graph import Graph, build_graph, is_bipartite, is_connected_subset
from .graph6 import encode_graph6


def _connected_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """G(n,p) plus a random spanning path, so the result is connected."""
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    order = list(range(n))
    rng.shuffle(order)
    for u, v in zip(order, order[1:]):
        edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


# ---------------------------------------------------------------------------

def run_duchet_meyniel(max_n: int = 7) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    """rho(G) <= 2*h over the exhaustive connected catalog (the bound with t=h+1)."""
    rows = []
    worst = Fraction(0)
    for g in catalog.graphs_up_to(max_n, connected_only=True):
        rho, _ = oracles.hall_ratio(g)
        h, _ = oracles.hadwiger_number(g)
        bound = Fraction(2 * h)
        ok = rho <= bound
        ratio = rho / bound
        worst = max(worst, ratio)
        rows.append({"graph6": encode_graph6(g), "n": g.n, "rho": str(rho), "h": h,
                     "bound": str(bound), "pass": ok})
    summary = {"suite": "duchet_meyniel", "instances": len(rows),
               "failures": sum(not r["pass"] for r in rows), "max_rho_over_bound": str(worst)}
    return rows, summary


def run_lem_small(max_catalog_n: int = 7, random_count: int = 300, max_random_n: int = 14,
                  seed: int = 0) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    """hall_ratio_coloring is proper and within ceil((2+ln(v/rho))rho) colors."""
    graphs = catalog.graphs_up_to(max_catalog_n)
    rng = random.Random(seed)
    ps = (0.2, 0.5, 0.8)
    for i in range(random_count):
        n = rng.randint(2, max_random_n)
        graphs.append(generators.gnp(n, ps[i % 3], rng.randrange(1 << 30)))
    rows = []
    for g in graphs:
        coloring, rho, budget = bounds.hall_ratio_coloring(g)
        used = coloring.num_colors
        ok = used <= budget
        rows.append({"graph6": encode_graph6(g), "n": g.n, "rho": str(rho),
                     "colors": used, "budget": budget, "pass": ok})
    summary = {"suite": "lem_small", "instances": len(rows),
               "failures": sum(not r["pass"] for r in rows)}
    return rows, summary


# ---------------------------------------------------------------------------

def random_special_subset_instance(rng: random.Random, max_n: int = 100
                                   ) -> tuple[Graph, frozenset[int], Fraction, Fraction]:
    """A (G, S, r, delta) with the peeling hypothesis inequality satisfied."""
    while True:
        n = rng.randint(8, max_n)
        p = rng.uniform(0.15, 0.6)
        g = generators.gnp(n, p, rng.randrange(1 << 30))
        size = rng.randint(max(4, n // 3), n)
        s = frozenset(rng.sample(range(n), size))
        r = Fraction(rng.randint(21, 60), 10)  # r in (2, 6]
        e_in = sum(1 for u, v in g.edges() if u in s and v in s)
        cross = sum(1 for u, v in g.edges() if (u in s) != (v in s))
        delta_max = ((r - 2) * e_in - cross) / ((r - 1) * len(s))
        if delta_max <= 0:
            continue
        delta = delta_max * Fraction(rng.randint(1, 9), 10)
        if delta <= 0:
            continue
        return g, s, r, delta


def run_special_subset(count: int = 1000, seed: int = 0) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        g, s, r, delta = random_special_subset_instance(rng)
        sp = extraction.special_subset(g, s, r, delta)
        ok = bool(sp) and sp <= s
        for v in sp:
            inside = len(g.adj[v] & sp)
            if inside < delta or inside * r < g.degree(v):
                ok = False
        rows.append({"graph6": encode_graph6(g), "n": g.n, "S": len(s), "r": str(r),
                     "delta": str(delta), "S_prime": len(sp), "pass": ok})
    summary = {"suite": "special_subset", "instances": len(rows),
               "failures": sum(not r["pass"] for r in rows)}
    return rows, summary


# ---------------------------------------------------------------------------

def random_menger_variant_instance(rng: random.Random, max_n: int = 60):
    """A hypothesis-satisfying (G, A1, A2, B, P1, P2) built path-first.

    Interior vertices are drawn from a shared pool, so the two doubled path
    systems typically overlap; each system is disjoint outside its own A side.
    """
    a1_size = rng.randint(1, 3)
    a2_size = rng.randint(1, 3)
    b_size = 2 * max(a1_size, a2_size) + rng.randint(0, 3)
    pool_size = rng.randint(6, max(6, max_n - a1_size - a2_size - b_size))
    n = a1_size + a2_size + b_size + pool_size
    a1 = list(range(a1_size))
    a2 = list(range(a1_size, a1_size + a2_size))
    b = list(range(a1_size + a2_size, a1_size + a2_size + b_size))
    pool = list(range(a1_size + a2_size + b_size, n))
    edges: set[tuple[int, int]] = set()

    def make_system(own: list[int], forbidden: set[int]) -> list[tuple[int, ...]]:
        system = []
        used_outside: set[int] = set()
        free_b = [v for v in b]
        rng.shuffle(free_b)
        for v in own:
            for _ in range(2):
                end = free_b.pop()
                interior_len = rng.randint(0, 3)
                avail = [u for u in pool if u not in used_outside and u not in forbidden]
                interior = rng.sample(avail, min(interior_len, len(avail)))
                path = (v, *interior, end)
                used_outside.update(interior)
                used_outside.add(end)
                for x, y in zip(path, path[1:]):
                    edges.add((min(x, y), max(x, y)))
                system.append(path)
        return system

    p1 = make_system(a1, set(a2))
    p2 = make_system(a2, set(a1))
    # noise edges that keep the hypotheses intact: avoid touching A vertices
    non_a = b + pool
    for _ in range(rng.randint(0, 2 * n)):
        x, y = rng.sample(non_a, 2)
        edges.add((min(x, y), max(x, y)))
    g = build_graph(n, sorted(edges))
    return g, a1, a2, b, p1, p2


def run_menger_variant(count: int = 500, seed: int = 0) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        g, a1, a2, b, p1, p2 = random_menger_variant_instance(rng)
        ok = True
        detail = ""
        try:
            out = linkage_mod.redundant_menger_paths(g, a1, a2, b, p1, p2)
            verdict = linkage_mod.verify_linkage(out)
            ok = verdict.valid and len(out.paths) == len(a1) + len(a2)
        except Exception as exc:  # recorded per-row, never aborts the sweep
            ok = False
            detail = str(exc)
        rows.append({"graph6": encode_graph6(g), "n": g.n, "A1": len(a1), "A2": len(a2),
                     "B": len(b), "pass": ok, "detail": detail})
    summary = {"suite": "menger_variant", "instances": len(rows),
               "failures": sum(not r["pass"] for r in rows)}
    return rows, summary


# ---------------------------------------------------------------------------

def run_steiner(count: int = 1000, seed: int = 0, max_n: int = 200
                ) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        n = rng.randint(5, max_n)
        g = _connected_gnp(n, rng.uniform(0.5, 4.0) / n, rng)
        terms = rng.sample(range(n), rng.randint(1, min(10, n)))
        hset, sp = linkage_mod.steiner_skeleton(g, terms)
        ok = (set(terms) <= sp <= hset
              and len(sp) <= 3 * len(terms)
              and is_connected_subset(g, hset)
              and is_bipartite(g, hset - sp))
        rows.append({"graph6": encode_graph6(g), "n": n, "terminals": len(terms),
                     "H": len(hset), "S_prime": len(sp), "pass": ok})
    summary = {"suite": "steiner", "instances": len(rows),
               "failures": sum(not r["pass"] for r in rows)}
    return rows, summary


# ---------------------------------------------------------------------------

def run_menger_duality(count: int = 500, seed: int = 0, max_n: int = 40
                       ) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    """Disjoint A-B path count equals minimum separator size, re-verified."""
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        n = rng.randint(4, max_n)
        g = generators.gnp(n, rng.uniform(0.1, 0.7), rng.randrange(1 << 30))
        a = set(rng.sample(range(n), rng.randint(1, max(1, n // 3))))
        bset = set(rng.sample(range(n), rng.randint(1, max(1, n // 3))))
        paths, sep = linkage_mod.menger(g, a, bset)
        ok = len(paths) == len(sep)
        rows.append({"graph6": encode_graph6(g), "n": n, "A": len(a), "B": len(bset),
                     "value": len(paths), "pass": ok})
    summary = {"suite": "menger_duality", "instances": len(rows),
               "failures": sum(not r["pass"] for r in rows)}
    return rows, summary


SUITES: dict[str, Callable[..., tuple[list[dict[str, Any]], dict[str, Any]]]] = {
    "duchet_meyniel": run_duchet_meyniel,
    "lem_small": run_lem_small,
    "special_subset": run_special_subset,
    "menger_variant": run_menger_variant,
    "steiner": run_steiner,
    "menger_duality": run_menger_duality,
}
