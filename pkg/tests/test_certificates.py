"""Certificate serialization and independent re-verification."""
from minor_toolkit import certificates as certs
from minor_toolkit import generators, oracles
from minor_toolkit.graph import Coloring
from minor_toolkit.linkage import CoredModel, Linkage, MinorModel


def test_coloring_certificate_round_trip():
    g = generators.petersen()
    _, coloring = oracles.chromatic_number(g)
    c = certs.coloring_certificate(g, coloring)
    assert certs.verify_certificate(c).valid


def test_coloring_certificate_invalid_names_edge():
    g = generators.cycle(5)
    c = certs.coloring_certificate(g, Coloring((0, 1, 0, 1, 0)))
    res = certs.verify_certificate(c)
    assert res.status == "invalid"
    assert "4-0" in res.detail or "0-4" in res.detail


def test_model_certificate():
    g = generators.cycle(6)
    c = certs.model_certificate(g, [{0, 1}, {2, 3}, {4, 5}])
    assert certs.verify_certificate(c).valid
    c["parts"][0] = [0]  # breaks the 0-{4,5} adjacency? no: 0-5 edge remains
    c["parts"] = [[0], [2, 3], [4]]  # parts 0 and 1 are no longer adjacent
    assert certs.verify_certificate(c).status == "invalid"


def test_connectivity_certificate():
    g = generators.complete(6)
    c = certs.connectivity_certificate(g, range(5), 4)
    assert certs.verify_certificate(c).valid
    c["k"] = 5
    assert certs.verify_certificate(c).status == "invalid"


def test_separator_certificate():
    g = generators.cycle(6)
    c = certs.separator_certificate(g, {0}, {3}, {1, 5})
    assert certs.verify_certificate(c).valid
    c["separator"] = [1]
    assert certs.verify_certificate(c).status == "invalid"


def test_linkage_certificate():
    g = generators.cycle(8)
    link = Linkage(g, ((0, 3), (4, 7)), ((0, 1, 2, 3), (4, 5, 6, 7)))
    c = certs.linkage_certificate(link)
    assert certs.verify_certificate(c).valid
    c["paths"][1] = [4, 3, 2, 7]
    assert certs.verify_certificate(c).status == "invalid"


def test_core_tangent_certificate():
    g = generators.complete(6)
    model = MinorModel(g, (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})))
    cm = CoredModel(model, frozenset({0, 2, 4}), frozenset({1, 3, 5}))
    c = certs.core_tangent_certificate(cm)
    assert certs.verify_certificate(c).valid


def test_wrong_host_detected():
    g = generators.complete(5)
    c = certs.coloring_certificate(g, Coloring((0, 1, 2, 3, 4)))
    c["host_graph6"] = "Dhc"  # swap in C5 without updating the hash
    res = certs.verify_certificate(c)
    assert res.status == "wrong-host"


def test_malformed_certificates():
    assert certs.verify_certificate({}).status == "malformed"
    assert certs.verify_certificate({"kind": "coloring"}).status == "malformed"
    g = generators.complete(3)
    bad = {**certs.coloring_certificate(g, Coloring((0, 1, 2))), "kind": "banana"}
    assert certs.verify_certificate(bad).status == "malformed"
    nohost = certs.coloring_certificate(g, Coloring((0, 1, 2)))
    nohost["host_graph6"] = "D~"
    assert certs.verify_certificate(nohost).status == "wrong-host"


def test_dump_load_round_trip(tmp_path):
    g = generators.petersen()
    _, coloring = oracles.chromatic_number(g)
    items = [certs.coloring_certificate(g, coloring),
             certs.connectivity_certificate(g, range(10), 3)]
    path = str(tmp_path / "certs.jsonl")
    certs.dump_certificates(path, items)
    back = certs.load_certificates(path)
    assert back == items
    assert all(certs.verify_certificate(c).valid for c in back)
