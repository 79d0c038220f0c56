"""Dense-subgraph extraction: peeling, Mader descent, and the contraction process.

The asymptotic constants of the source results make every statement vacuous at
desk scale, so all gates are driven by a ConstantsProfile whose presets shrink
the constants independently.  Every report names its profile: results are
claims about the algorithms, not about the original constants.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Iterable

from . import linkage as linkage_mod
from . import oracles
from .graph import (Graph, GraphError, connected_components, contract,
                    cross_edge_count, induced_edge_count, induced_subgraph)


class SymbolicConstantError(RuntimeError):
    """A gate needs a numeric constant that this profile keeps symbolic."""


class PreconditionError(ValueError):
    """An operation's stated hypothesis fails on the given input."""


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class ConstantsProfile:
    """Every named constant of the extraction pipeline, scaled per preset.

    global_C is the overall scale of the density gate d >= C*k; the "paper"
    preset keeps it symbolic (None) and refuses numeric gates.
    """

    name: str
    density_factor: Fraction = Fraction(30)
    duchet_factor: int = 2
    largechi_need: int = 7
    largechi_loss: int = 6
    edge_loss_frac: Fraction = Fraction(1, 10)
    y_frac: Fraction = Fraction(1, 20)
    z_degree_factor: Fraction = Fraction(20)
    component_size_factor: Fraction = Fraction(10)
    peel_r: Fraction = Fraction(3)
    peel_delta_frac: Fraction = Fraction(2, 5)
    global_C: Fraction | None = None
    # prose-only diagnostic coefficient; drives no gate
    kostochka_coeff: float = 0.064

    def __post_init__(self) -> None:
        for label in ("edge_loss_frac", "y_frac", "peel_delta_frac"):
            val = getattr(self, label)
            if not 0 < val < 1:
                raise ValueError(f"{label} must lie in (0,1), got {val}")
        for label in ("density_factor", "z_degree_factor", "component_size_factor", "peel_r"):
            if getattr(self, label) <= 0:
                raise ValueError(f"{label} must be positive")
        if self.peel_r <= 2:
            raise ValueError("peel_r must exceed 2")
        if self.global_C is not None and self.global_C <= 0:
            raise ValueError("global_C must be positive")

    def density_gate(self, k: int) -> Fraction:
        if self.global_C is None:
            raise SymbolicConstantError(
                f"profile {self.name!r} keeps its overall constant symbolic; "
                "pick a desk preset or set global_C for numeric gates")
        return self.global_C * k

    def component_cap(self, t: int, k: int) -> int:
        lt = math.log(max(t, 2))
        return max(1, math.ceil(float(self.component_size_factor) * lt * lt * (t / k) ** 2 - 1e-12))

    def harvest_size_cap(self, t: int, d: Fraction) -> int:
        lt = max(math.log(max(t, 2)), 1.0)
        cap = self.component_cap(t, t)
        return cap * math.ceil(float(self.z_degree_factor * d) * lt) + cap

    def with_overrides(self, **kwargs: Any) -> "ConstantsProfile":
        return replace(self, **kwargs)


PROFILES = {
    "paper": ConstantsProfile("paper"),
    "desk-small": ConstantsProfile(
        "desk-small",
        density_factor=Fraction(3),
        y_frac=Fraction(1, 2),
        component_size_factor=Fraction(2),
        global_C=Fraction(1, 2),
    ),
    "desk-medium": ConstantsProfile(
        "desk-medium",
        density_factor=Fraction(5),
        y_frac=Fraction(1, 4),
        component_size_factor=Fraction(4),
        global_C=Fraction(1),
    ),
}


def get_profile(name: str) -> ConstantsProfile:
    try:
        return PROFILES[name]
    except KeyError:
        raise KeyError(f"unknown profile {name!r}; known: {sorted(PROFILES)}") from None


# ---------------------------------------------------------------------------
# peeling

def special_subset(g: Graph, s: Iterable[int], r: Fraction, delta: Fraction) -> frozenset[int]:
    """Peel S down to a subset with high internal degree everywhere.

    Requires (r-2)*e(G[S]) > (r-1)*delta*|S| + e(G(S, rest)); then returns a
    non-empty S' <= S with (i) min degree of G[S'] >= delta and (ii)
    |N(v) ∩ S'| >= deg(v)/r for all v in S'.  Peeling deletes any violating
    vertex; the hypothesis inequality is preserved along the way (asserted).
    """
    r = Fraction(r)
    delta = Fraction(delta)
    if r <= 2 or delta <= 0:
        raise PreconditionError(f"need r > 2 and delta > 0, got r={r}, delta={delta}")
    cur = set(s)
    for v in cur:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside the host")

    def sides(vs: set[int]) -> tuple[Fraction, Fraction]:
        e_in = induced_edge_count(g, vs)
        cross = cross_edge_count(g, vs, set(g.vertices()) - vs)
        return (r - 2) * e_in, (r - 1) * delta * len(vs) + cross

    lhs, rhs = sides(cur)
    if lhs <= rhs:
        raise PreconditionError(
            f"hypothesis inequality fails: (r-2)e(G[S]) = {lhs} <= {rhs} = (r-1)delta|S| + e(S, rest)")
    potential = lhs - rhs
    while True:
        victim = None
        for v in sorted(cur):
            inside = len(g.adj[v] & cur)
            if inside < delta or inside * r < g.degree(v):
                victim = v
                break
        if victim is None:
            break
        cur.discard(victim)
        lhs, rhs = sides(cur)
        # the exchange argument keeps the inequality strict and the
        # potential non-decreasing at every accepted deletion
        assert lhs - rhs >= potential, "peeling potential decreased"
        potential = lhs - rhs
    assert cur, "peeling emptied S despite a valid hypothesis"
    return frozenset(cur)


# ---------------------------------------------------------------------------
# k-connected subgraph engine

def k_core(g: Graph, vs: Iterable[int], k: int) -> set[int]:
    """Largest subset of vs whose induced subgraph has min degree >= k."""
    cur = set(vs)
    changed = True
    while changed:
        changed = False
        for v in sorted(cur):
            if len(g.adj[v] & cur) < k:
                cur.discard(v)
                changed = True
    return cur


def k_connected_subgraph(g: Graph, k: int, within: Iterable[int] | None = None,
                         max_rounds: int = 10_000) -> frozenset[int] | None:
    """An induced subgraph with connectivity >= k, or None.

    Descent: prune to the k-core, check connectivity, and on failure branch on
    the sides of a minimum separator (separator kept on both sides).  Falls
    back to exhaustive subset search when the ground set has <= 12 vertices.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    ground = set(g.vertices()) if within is None else set(within)
    if k == 0:
        return frozenset([min(ground)]) if ground else None
    stack = [frozenset(ground)]
    seen: set[frozenset[int]] = set(stack)
    rounds = 0
    while stack and rounds < max_rounds:
        rounds += 1
        cand = stack.pop()
        core = k_core(g, cand, k)
        if len(core) <= k:
            continue
        for comp in connected_components(g, core):
            if len(comp) <= k:
                continue
            sub, back = induced_subgraph(g, sorted(comp))
            kappa, sep = oracles.vertex_connectivity(sub)
            if kappa >= k:
                return frozenset(comp)
            assert sep is not None
            host_sep = {back[v] for v in sep}
            for piece in connected_components(g, comp - host_sep):
                nxt = frozenset(piece | host_sep)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    if len(ground) <= 12:
        for size in range(len(ground), k, -1):
            from itertools import combinations
            for combo in combinations(sorted(ground), size):
                sub, _ = induced_subgraph(g, combo)
                if oracles.is_k_connected(sub, k):
                    return frozenset(combo)
    return None


@dataclass(frozen=True)
class MaderResult:
    vertices: frozenset[int] | None
    kappa: int | None
    target: int
    verified: bool


def mader_connected_subgraph(g: Graph) -> MaderResult:
    """A subgraph with connectivity at least ceil(d(G)/2), flow-verified.

    Descent can stall above the exhaustive threshold; then the result is an
    unverified candidate (never a false certificate).
    """
    if g.n == 0:
        raise GraphError("empty graph")
    target = _ceil(g.density() / 2)
    if target == 0:
        return MaderResult(frozenset([0]), 0, 0, True)
    found = k_connected_subgraph(g, target)
    if found is None:
        return MaderResult(None, None, target, False)
    sub, _ = induced_subgraph(g, sorted(found))
    kappa, _ = oracles.vertex_connectivity(sub)
    assert kappa >= target
    return MaderResult(found, kappa, target, True)


# ---------------------------------------------------------------------------
# the contraction process

@dataclass(frozen=True)
class ExtractionReport:
    outcome: str  # minor_found | dense_subgraph | exhausted
    profile: str
    trace: tuple[dict[str, Any], ...]
    vertices: frozenset[int] | None = None
    kappa: int | None = None
    model_parts: tuple[frozenset[int], ...] | None = None

    def to_record(self) -> dict[str, Any]:
        rec: dict[str, Any] = {
            "outcome": self.outcome,
            "profile": self.profile,
            "trace": list(self.trace),
        }
        if self.vertices is not None:
            rec["vertices"] = sorted(self.vertices)
            rec["kappa"] = self.kappa
        if self.model_parts is not None:
            rec["model_parts"] = [sorted(p) for p in self.model_parts]
        return rec


def _absorb_cost(q: Graph, part: set[int], w: int) -> int:
    """Edge loss added when the contraction of `part` also swallows w.

    One multi-edge collapses onto the contracted vertex, plus one unit per
    common neighbor of w and the part (their parallel edges merge too).
    """
    return 1 + sum(1 for u in q.adj[w] if u not in part and u != w and q.adj[u] & part)


def _grow_in_quotient(q: Graph, cap: int, budget, pool: set[int],
                      seeds: list[int]) -> tuple[set[int], int]:
    """Greedy connected growth inside pool: absorb the cheapest boundary vertex.

    Returns the largest part reached (possibly a singleton) and its edge loss.
    """
    best_part: set[int] = set()
    best_loss = 0
    for seed in seeds:
        part = {seed}
        loss = 0
        while len(part) < cap:
            boundary = {w for v in part for w in q.adj[v] if w in pool and w not in part}
            best = None
            for w in sorted(boundary):
                cost = _absorb_cost(q, part, w)
                if best is None or cost < best[0]:
                    best = (cost, w)
            if best is None or loss + best[0] > budget(len(part) + 1):
                break
            loss += best[0]
            part.add(best[1])
        if len(part) > len(best_part):
            best_part, best_loss = part, loss
        if len(part) == cap:
            break
    return best_part, best_loss


def _find_t_clique(adj: list[frozenset[int]], vertices: list[int], t: int) -> list[int] | None:
    """A clique of exactly t vertices within `vertices`, by plain backtracking."""
    if t == 0:
        return []

    def rec(start: int, acc: list[int]) -> list[int] | None:
        if len(acc) == t:
            return list(acc)
        for i in range(start, len(vertices)):
            v = vertices[i]
            if all(v in adj[u] for u in acc):
                res = rec(i + 1, acc + [v])
                if res is not None:
                    return res
        return None

    return rec(0, [])


def _minor_from_parts(g: Graph, cm, q: Graph, m: int, t: int, trace: list,
                      profile: ConstantsProfile) -> ExtractionReport | None:
    """Minor evidence from the contraction map: t pairwise adjacent committed
    parts form a verified complete-minor model."""
    clique = _find_t_clique(q.adj, list(range(m)), t)
    if clique is None:
        return None
    parts = tuple(cm.back[v] for v in clique)
    model = linkage_mod.MinorModel(g, parts)
    verdict = linkage_mod.verify_minor_model(model)
    assert verdict.valid, verdict.violations
    trace.append({"step": "minor", "parts": [sorted(p) for p in parts]})
    return ExtractionReport("minor_found", profile.name, tuple(trace), model_parts=parts)


def _whole_graph_harvest(g: Graph, t: int, k: int, d: Fraction, trace: list,
                         profile: ConstantsProfile) -> ExtractionReport | None:
    """Last resort before giving up: run the harvest engine over the whole host.

    Only accepted when the result fits the profile's harvest size cap, so the
    outcome contract is identical to the normal harvest path.
    """
    found = k_connected_subgraph(g, k)
    size_cap = profile.harvest_size_cap(t, d)
    if found is None or len(found) > size_cap:
        return None
    sub, _ = induced_subgraph(g, sorted(found))
    kappa, _ = oracles.vertex_connectivity(sub)
    assert kappa >= k
    trace.append({"step": "fallback_harvest", "kappa": kappa, "size": len(found),
                  "size_cap": size_cap})
    return ExtractionReport("dense_subgraph", profile.name, tuple(trace),
                            vertices=found, kappa=kappa)


def small_dense_subgraph(g: Graph, t: int, k: int, profile: ConstantsProfile) -> ExtractionReport:
    """The contraction process: contract cheap components, classify, peel, harvest.

    Either stumbles on a complete minor among the contracted parts
    (minor_found), harvests a small subgraph of connectivity >= k
    (dense_subgraph), or gives up with a full trace (exhausted).
    """
    if not 1 <= t <= k:
        raise PreconditionError(f"need k >= t >= 1, got t={t}, k={k}")
    if g.n == 0:
        raise PreconditionError("empty graph")
    d = g.density()
    gate = profile.density_gate(k)
    if d < gate:
        raise PreconditionError(f"density {d} below the gate {gate} (= C*k with C={profile.global_C})")
    cap = profile.component_cap(t, k)

    def budget(size: int) -> int:
        # the per-part loss allowance edge_loss_frac*d*(size-1) is rarely
        # integral once scaled; round outward to keep harvest reasoning sound
        return _ceil(profile.edge_loss_frac * d * (size - 1))

    total_loss = 0
    total_shrink = 0

    def phase_budget(size: int) -> int:
        # the contraction phase obeys the global ledger:
        # total loss <= ceil(edge_loss_frac * d * total shrink)
        return _ceil(profile.edge_loss_frac * d * (total_shrink + size - 1)) - total_loss

    trace: list[dict[str, Any]] = [{
        "step": "setup", "d": str(d), "gate": str(gate), "t": t, "k": k, "cap": cap,
    }]
    committed: list[frozenset[int]] = []

    def quotient() -> "ContractionMap":
        return contract(g, committed)

    def commit(q_part: set[int], cm, loss: int, via: str) -> None:
        nonlocal total_loss, total_shrink
        host = frozenset().union(*(cm.back[v] for v in q_part))
        committed.append(host)
        total_loss += loss
        total_shrink += len(host) - 1
        entry = {"step": "contract", "part": sorted(host), "edge_loss": loss,
                 "total_loss": total_loss,
                 "ledger_cap": _ceil(profile.edge_loss_frac * d * total_shrink)}
        if via:
            entry["via"] = via
        trace.append(entry)

    blob_host: frozenset[int] | None = None
    while True:
        cm = quotient()
        q = cm.quotient
        m = len(committed)
        pool = set(range(m, q.n))
        if cap >= 2:
            seeds = sorted(pool, key=lambda v: (q.degree(v), v))
            part, loss = _grow_in_quotient(q, cap, phase_budget, pool, seeds)
        else:
            part, loss = (({min(pool)}, 0) if pool else (set(), 0))
        if len(part) == cap and part:
            commit(part, cm, loss, "")
            continue

        # stall: classify the quotient and peel
        x = set(range(m))
        yt = profile.y_frac * d
        zt = float(profile.z_degree_factor * d) * math.log(max(t, 2))
        y = {v for v in pool if len(q.adj[v] & x) >= yt}
        z = {v for v in pool - y if q.degree(v) >= zt}
        s = pool - y - z
        trace.append({"step": "classify", "X": len(x), "Y": len(y), "Z": len(z), "S": len(s)})
        delta = profile.peel_delta_frac * d
        try:
            s_prime = special_subset(q, s, profile.peel_r, delta)
        except PreconditionError as exc:
            trace.append({"step": "peel_failed", "detail": str(exc)})
            fallback = (_minor_from_parts(g, cm, q, m, t, trace, profile)
                        or _whole_graph_harvest(g, t, k, d, trace, profile))
            if fallback is not None:
                return fallback
            return ExtractionReport("exhausted", profile.name, tuple(trace))
        trace.append({"step": "peel", "S_prime": len(s_prime)})

        # next component grown inside S', densest neighborhood first
        seeds = sorted(s_prime, key=lambda v: (-len(q.adj[v] & s_prime), v))
        blob, blob_loss = _grow_in_quotient(q, cap, budget, set(s_prime), seeds[:1])
        if len(blob) == cap and cap >= 2 and blob_loss <= phase_budget(len(blob)):
            commit(blob, cm, blob_loss, "peeled")
            continue
        # stalled below full size: harvest the blob plus its neighborhood
        blob_host = frozenset().union(*(cm.back[v] for v in blob))
        r_q = {w for v in blob for w in q.adj[v] if w not in x and w not in blob}
        candidate = set(blob_host) | set().union(*(cm.back[v] for v in r_q)) if r_q else set(blob_host)
        trace.append({"step": "blob", "part": sorted(blob_host), "edge_loss": blob_loss})
        break

    trace.append({"step": "harvest", "candidate": sorted(candidate)})
    found = k_connected_subgraph(g, k, within=candidate)
    if found is None:
        trace.append({"step": "harvest_failed", "detail": f"no {k}-connected subgraph in the candidate"})
        fallback = (_minor_from_parts(g, cm, q, m, t, trace, profile)
                    or _whole_graph_harvest(g, t, k, d, trace, profile))
        if fallback is not None:
            return fallback
        return ExtractionReport("exhausted", profile.name, tuple(trace))
    sub, _ = induced_subgraph(g, sorted(found))
    kappa, _ = oracles.vertex_connectivity(sub)
    assert kappa >= k
    size_cap = profile.harvest_size_cap(t, d)
    assert len(found) <= size_cap, f"harvest size {len(found)} above cap {size_cap}"
    trace.append({"step": "verified", "kappa": kappa, "size": len(found), "size_cap": size_cap})
    return ExtractionReport("dense_subgraph", profile.name, tuple(trace),
                            vertices=found, kappa=kappa)


# ---------------------------------------------------------------------------
# repeated disjoint extraction

@dataclass(frozen=True)
class DisjointExtraction:
    subgraphs: tuple[frozenset[int], ...]
    kappas: tuple[int, ...]
    residual_vertices: frozenset[int]
    residual_density: Fraction


def extract_disjoint_connected_subgraphs(g: Graph, k: int, r: int, size_cap: int,
                                         profile: ConstantsProfile) -> DisjointExtraction:
    """Up to r disjoint subgraphs of connectivity >= k, greedily, plus residual.

    Each round searches the residual graph; rounds stop when the residual
    density falls below the profile gate or no subgraph within size_cap
    exists.  Fewer than r found is a valid outcome.
    """
    if k < 1 or r < 1:
        raise PreconditionError("k and r must be positive")
    gate = profile.density_gate(k)
    remaining = set(g.vertices())
    out: list[frozenset[int]] = []
    kappas: list[int] = []
    while len(out) < r and remaining:
        sub, back = induced_subgraph(g, sorted(remaining))
        if sub.e == 0 or sub.density() < gate and len(out) > 0:
            break
        found = k_connected_subgraph(sub, k)
        if found is None:
            break
        host = frozenset(back[v] for v in found)
        if len(host) > size_cap:
            shrunk = _shrink_k_connected(sub, found, k, size_cap)
            if shrunk is None:
                break
            host = frozenset(back[v] for v in shrunk)
        hsub, _ = induced_subgraph(g, sorted(host))
        kappa, _ = oracles.vertex_connectivity(hsub)
        assert kappa >= k
        out.append(host)
        kappas.append(kappa)
        remaining -= host
    if remaining:
        rsub, _ = induced_subgraph(g, sorted(remaining))
        rd = rsub.density()
    else:
        rd = Fraction(0)
    return DisjointExtraction(tuple(out), tuple(kappas), frozenset(remaining), rd)


def _shrink_k_connected(g: Graph, vs: frozenset[int], k: int, size_cap: int) -> frozenset[int] | None:
    """Look for a k-connected induced subgraph within size_cap inside vs."""
    if len(vs) <= 12:
        from itertools import combinations
        for size in range(min(size_cap, len(vs)), k, -1):
            for combo in combinations(sorted(vs), size):
                sub, _ = induced_subgraph(g, combo)
                if oracles.is_k_connected(sub, k):
                    return frozenset(combo)
        return None
    # greedy peel: drop the vertex of least degree while connectivity survives
    cur = set(vs)
    while len(cur) > size_cap:
        dropped = False
        for v in sorted(cur, key=lambda v: (len(g.adj[v] & cur), v)):
            cand = cur - {v}
            core = k_core(g, cand, k)
            if len(core) > k:
                sub, back = induced_subgraph(g, sorted(core))
                if oracles.is_k_connected(sub, k):
                    cur = set(core)
                    dropped = True
                    break
        if not dropped:
            return None
    return frozenset(cur)


# ---------------------------------------------------------------------------
# high-chromatic k-connected subgraph

@dataclass(frozen=True)
class HighChromaticResult:
    vertices: frozenset[int]
    kappa: int
    chi_subgraph: int
    chi_host: int
    satisfied: bool


def high_chromatic_connected_subgraph(g: Graph, k: int,
                                      profile: ConstantsProfile = PROFILES["desk-small"],
                                      chi_lower_bound: int | None = None) -> HighChromaticResult:
    """A k-connected subgraph keeping most of the chromatic number.

    Requires chi(G) >= 7k (scaled constants untouched here: the thresholds 7k
    and 6k are exact integers).  The search splits along minimum separators,
    keeping the piece of largest chromatic number.
    """
    if chi_lower_bound is None:
        chi_g, _ = oracles.chromatic_number(g)
    else:
        chi_g = chi_lower_bound
    need = profile.largechi_need * k
    if chi_g < need:
        raise PreconditionError(f"chromatic number {chi_g} below the required {need} (= {profile.largechi_need}k)")
    target = chi_g - profile.largechi_loss * k
    best: tuple[int, frozenset[int], int] | None = None
    stack = [frozenset(g.vertices())]
    seen = set(stack)
    while stack:
        cand = stack.pop()
        core = k_core(g, cand, k)
        for comp in connected_components(g, core):
            if len(comp) <= k:
                continue
            sub, back = induced_subgraph(g, sorted(comp))
            kappa, sep = oracles.vertex_connectivity(sub)
            if kappa >= k:
                chi_h, _ = oracles.chromatic_number(sub)
                if best is None or chi_h > best[0]:
                    best = (chi_h, frozenset(comp), kappa)
                continue
            assert sep is not None
            host_sep = {back[v] for v in sep}
            for piece in connected_components(g, comp - host_sep):
                nxt = frozenset(piece | host_sep)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    if best is None:
        raise linkage_mod.CounterexampleError(
            f"no {k}-connected subgraph found despite chi(G) = {chi_g} >= {need}")
    chi_h, vertices, kappa = best
    return HighChromaticResult(vertices, kappa, chi_h, chi_g, chi_h >= target)
