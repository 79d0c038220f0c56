"""End-to-end acceptance suite.

Each test pins one headline property of the toolkit at desk scale: the
Hall-ratio bounds, the peeling and contraction pipeline, the Menger and
Steiner machinery, weaving, and the CLI/serialization infrastructure.
"""
import json
import math
import random
from fractions import Fraction

from minor_toolkit import bounds, catalog, extraction, generators, oracles, suites
from minor_toolkit.cli import main as cli_main
from minor_toolkit.graph import (build_graph, induced_subgraph, is_connected_subset,
                                 is_proper_coloring)
from minor_toolkit.graph6 import decode_graph6, encode_graph6
from minor_toolkit.linkage import Linkage, MinorModel, verify_linkage, verify_minor_model, weave
from minor_toolkit.certificates import host_hash

DESK = extraction.PROFILES["desk-small"]


def corpus(max_n):
    gs = catalog.graphs_up_to(catalog.MAX_EXHAUSTIVE)
    gs += [g for g in catalog.test_corpus(max_n) if g.n > catalog.MAX_EXHAUSTIVE]
    return [g for g in gs if g.n <= max_n]


# 1. Hall ratio vs. Hadwiger number over the exhaustive connected catalog
def test_acceptance_1_duchet_meyniel_sweep():
    rows, summary = suites.run_duchet_meyniel(max_n=7)
    assert summary["instances"] > 900
    assert summary["failures"] == 0
    assert Fraction(summary["max_rho_over_bound"]) <= 1


# 2. Iterated-independent-set coloring stays within ceil((2+ln(v/rho))rho)
def test_acceptance_2_hall_ratio_coloring_bound():
    graphs = corpus(14)
    rng = random.Random(2026)
    ps = (0.2, 0.5, 0.8)
    for i in range(300):
        graphs.append(generators.gnp(rng.randint(2, 14), ps[i % 3], rng.randrange(1 << 30)))
    for g in graphs:
        coloring, rho, budget = bounds.hall_ratio_coloring(g)
        assert is_proper_coloring(g, coloring)
        assert coloring.num_colors <= budget


# 3. Special-subset peeling satisfies both clauses whenever the hypothesis holds
def test_acceptance_3_special_subset_fuzz():
    rows, summary = suites.run_special_subset(count=1000)
    assert summary["instances"] == 1000
    assert summary["failures"] == 0


# 4. A flow-verified subgraph of connectivity >= ceil(d/2) on every small graph
def test_acceptance_4_mader_sweep():
    checked = 0
    for g in corpus(12):
        if g.e == 0:
            continue
        res = extraction.mader_connected_subgraph(g)
        assert res.verified, f"unverified on {encode_graph6(g)}"
        sub, _ = induced_subgraph(g, sorted(res.vertices))
        kappa, _ = oracles.vertex_connectivity(sub)
        assert kappa >= math.ceil(g.e / g.n / 2 - 1e-12)
        checked += 1
    assert checked > 900


# 5. The contraction process on planted-dense instances: verified outcomes,
#    size caps, and an exactly-respected edge-loss ledger
def test_acceptance_5_contraction_process():
    rng = random.Random(55)
    t, k = 3, 4
    for i in range(100):
        n = rng.randint(60, 120)
        pocket = rng.randint(16, 24)
        g = generators.planted_dense(n, pocket, rng.uniform(0.85, 0.95),
                                     rng.uniform(0.03, 0.08), seed=rng.randrange(1 << 30))
        try:
            rep = extraction.small_dense_subgraph(g, t, k, DESK)
        except extraction.PreconditionError:
            # density below the gate is a legitimate rejection, not a failure
            continue
        assert rep.outcome in ("minor_found", "dense_subgraph"), rep.outcome
        d = g.density()
        if rep.outcome == "dense_subgraph":
            sub, _ = induced_subgraph(g, sorted(rep.vertices))
            kappa, _ = oracles.vertex_connectivity(sub)
            assert kappa >= k
            assert len(rep.vertices) <= DESK.harvest_size_cap(t, d)
        else:
            model = MinorModel(g, rep.model_parts)
            assert verify_minor_model(model).valid
        # the trace ledger must be exact
        loss = shrink = 0
        for step in rep.trace:
            if step["step"] == "contract":
                shrink += len(step["part"]) - 1
                loss += step["edge_loss"]
                assert step["total_loss"] == loss
                cap = extraction._ceil(DESK.edge_loss_frac * d * shrink)
                assert step["ledger_cap"] == cap
                assert loss <= cap


# 6. Doubled path systems always yield the full |A1|+|A2| disjoint linkage
def test_acceptance_6_menger_variant_fuzz():
    rows, summary = suites.run_menger_variant(count=500)
    assert summary["instances"] == 500
    assert summary["failures"] == 0


# 7. Steiner skeletons: connected, small terminal hull, bipartite remainder
def test_acceptance_7_steiner_fuzz():
    rows, summary = suites.run_steiner(count=1000)
    assert summary["instances"] == 1000
    assert summary["failures"] == 0


# 8. Weaving through certified woven hosts under random overlays
def test_acceptance_8_weave_overlays():
    wheel5 = build_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)])
    hosts = [generators.complete(4), generators.complete(5), generators.complete(6),
             generators.complete(7), generators.cycle(5), wheel5,
             generators.complete_bipartite(3, 3), generators.petersen()]
    certified = []
    for h in hosts:
        for a in (1, 2, 3):
            for b in (1, 2):
                if a + 2 * b > h.n:
                    continue
                v = oracles.is_woven(h, a, b)
                assert v.exhaustive
                if v.woven:
                    certified.append((h, a, b))
    assert len(certified) >= 15

    rng = random.Random(88)
    done = 0
    attempts = 0
    while done < 200:
        attempts += 1
        assert attempts < 4000, "overlay generation stalled"
        host, a, b = certified[done % len(certified)]
        extra = rng.randint(2 * b + 1, 8)
        n = host.n + extra
        edges = list(host.edges())
        for u in range(n):
            for v in range(max(u + 1, host.n), n):
                if rng.random() < 0.5:
                    edges.append((u, v))
        g = build_graph(n, sorted(set(edges)))
        terminals = rng.sample(range(host.n, n), 2 * b)
        pairs = [(terminals[2 * i], terminals[2 * i + 1]) for i in range(b)]
        raw = oracles.find_linkage(g, pairs)
        if raw is None:
            continue
        link = Linkage(g, tuple(pairs), tuple(tuple(p) for p in raw))
        roots = tuple(rng.sample(range(host.n), a))
        new_link, model = weave(g, frozenset(range(host.n)), roots, link, certified=True)
        # weave asserts the clauses internally; re-verify independently
        assert verify_linkage(new_link).valid
        assert verify_minor_model(model).valid
        pv = new_link.vertices()
        assert pv <= frozenset(range(host.n)) | link.vertices()
        assert (pv & model.vertices()) <= (set(roots) & link.vertices())
        done += 1


# 9. Highly connected graphs with a large clique minor are woven
def test_acceptance_9_minor_implies_woven():
    checked = 0
    for g in corpus(9):
        if not is_connected_subset(g, g.vertices()) or g.n == 0:
            continue
        kappa, _ = oracles.vertex_connectivity(g)
        h, _ = oracles.hadwiger_number(g)
        for a in (1, 2, 3):
            if kappa >= a and h >= 2 * a and g.n >= a:
                verdict = oracles.is_woven(g, a, 0)
                assert verdict.woven, f"{encode_graph6(g)} a={a}"
                checked += 1
    assert checked > 500


# 10. Strong Menger duality on random instances
def test_acceptance_10_menger_duality():
    rows, summary = suites.run_menger_duality(count=500)
    assert summary["instances"] == 500
    assert summary["failures"] == 0


# 11. Infrastructure: codec round trips, reproducible reports, exit codes
def test_acceptance_11a_graph6_round_trip():
    rng = random.Random(606)
    for _ in range(10_000):
        n = rng.randint(1, 62)
        g = generators.gnp(n, rng.random(), rng.randrange(1 << 30))
        text = encode_graph6(g)
        assert encode_graph6(decode_graph6(text)) == text
        assert decode_graph6(text).adj == g.adj


def test_acceptance_11b_byte_identical_reruns(tmp_path):
    out1, out2 = str(tmp_path / "a.jsonl"), str(tmp_path / "b.jsonl")
    argv = ["analyze", "--generate", "gnp(18,0.5)", "--seed", "9", "--count", "5"]
    assert cli_main(argv + ["--out", out1]) == 0
    assert cli_main(argv + ["--out", out2]) == 0
    assert open(out1, "rb").read() == open(out2, "rb").read()
    ex1, ex2 = str(tmp_path / "e1.jsonl"), str(tmp_path / "e2.jsonl")
    argv = ["extract", "--generate", "planted_dense(70,18,0.9,0.05)", "--seed", "4",
            "--t", "3", "--k", "4", "--profile", "desk-small"]
    assert cli_main(argv + ["--out", ex1]) == 0
    assert cli_main(argv + ["--out", ex2]) == 0
    assert open(ex1, "rb").read() == open(ex2, "rb").read()


def test_acceptance_11c_exit_code_matrix(tmp_path, capsys):
    good = tmp_path / "good.g6"
    good.write_text(encode_graph6(generators.complete(5)) + "\n")
    bad = tmp_path / "bad.g6"
    bad.write_text("D~\n")
    tampered = tmp_path / "tampered.jsonl"
    tampered.write_text(json.dumps(
        {"kind": "connectivity",
         "host_graph6": encode_graph6(generators.complete(5)),
         "host_sha256": host_hash(generators.complete(5)),
         "vertices": [0, 1, 2], "k": 4}) + "\n")
    garbage = tmp_path / "garbage.jsonl"
    garbage.write_text("{not json\n")

    def code(argv):
        try:
            return cli_main(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else 1

    matrix = [
        (["analyze", "--input", str(good)], 0),
        (["analyze", "--input", str(bad)], 2),
        (["analyze", "--input", str(good), "--gates", "bogus=1"], 2),
        (["extract", "--input", str(good), "--profile", "nosuch"], 2),
        (["experiment", "--suite", "nosuch"], 2),
        (["experiment", "--suite", "menger_duality", "--count", "5"], 0),
        (["verify", str(tampered)], 1),
        (["verify", str(garbage)], 2),
        (["verify", str(tmp_path / "absent.jsonl")], 2),
    ]
    for argv, expected in matrix:
        assert code(argv) == expected, argv
        capsys.readouterr()
