"""Serialized witnesses (colorings, models, separators, linkages, connectivity).

Every certificate embeds the host graph in graph6 form plus a sha256 of that
encoding, so verification can never silently check the wrong graph.  All
verifiers are independent of the searches that produce the certificates.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from . import flow, linkage as linkage_mod, oracles
from .graph import Coloring, Graph, induced_subgraph
from .graph6 import Graph6Error, decode_graph6, encode_graph6


def host_hash(g: Graph) -> str:
    return hashlib.sha256(encode_graph6(g).encode("ascii")).hexdigest()


def _base(kind: str, g: Graph) -> dict[str, Any]:
    return {"kind": kind, "host_graph6": encode_graph6(g), "host_sha256": host_hash(g)}


def coloring_certificate(g: Graph, coloring: Coloring) -> dict[str, Any]:
    return {**_base("coloring", g), "colors": list(coloring.colors),
            "num_colors": coloring.num_colors}


def model_certificate(g: Graph, parts: Sequence[Iterable[int]],
                      roots: Iterable[int] | None = None) -> dict[str, Any]:
    cert = {**_base("minor_model", g), "parts": [sorted(p) for p in parts]}
    if roots is not None:
        cert["roots"] = sorted(roots)
    return cert


def connectivity_certificate(g: Graph, vertices: Iterable[int], k: int) -> dict[str, Any]:
    return {**_base("connectivity", g), "vertices": sorted(vertices), "k": k}


def separator_certificate(g: Graph, a: Iterable[int], b: Iterable[int],
                          separator: Iterable[int]) -> dict[str, Any]:
    return {**_base("separator", g), "A": sorted(a), "B": sorted(b),
            "separator": sorted(separator)}


def linkage_certificate(linkage: linkage_mod.Linkage) -> dict[str, Any]:
    return {**_base("linkage", linkage.host), "pairs": [list(p) for p in linkage.pairs],
            "paths": [list(p) for p in linkage.paths]}


def core_tangent_certificate(cm: linkage_mod.CoredModel) -> dict[str, Any]:
    return {**_base("core_tangent", cm.model.host),
            "parts": [sorted(p) for p in cm.model.parts],
            "core": sorted(cm.core), "tangent": sorted(cm.tangent)}


@dataclass(frozen=True)
class VerifyResult:
    status: str  # valid | invalid | wrong-host | malformed
    detail: str = ""

    @property
    def valid(self) -> bool:
        return self.status == "valid"


def verify_certificate(cert: dict[str, Any]) -> VerifyResult:
    """Re-check a certificate against its embedded host; never raises."""
    try:
        kind = cert["kind"]
        text = cert["host_graph6"]
    except (KeyError, TypeError):
        return VerifyResult("malformed", "missing kind or host_graph6")
    try:
        g = decode_graph6(text)
    except Graph6Error as exc:
        return VerifyResult("wrong-host", f"host graph undecodable: {exc}")
    if cert.get("host_sha256") != host_hash(g):
        return VerifyResult("wrong-host", "host hash does not match the embedded graph")
    try:
        return _dispatch(kind, cert, g)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        return VerifyResult("malformed", f"bad payload: {exc}")


def _dispatch(kind: str, cert: dict[str, Any], g: Graph) -> VerifyResult:
    if kind == "coloring":
        coloring = Coloring(tuple(int(c) for c in cert["colors"]))
        if len(coloring.colors) != g.n:
            return VerifyResult("invalid", f"{len(coloring.colors)} colors for {g.n} vertices")
        for u, v in g.edges():
            if coloring.colors[u] == coloring.colors[v]:
                return VerifyResult("invalid", f"edge {u}-{v} joins two vertices of color {coloring.colors[u]}")
        if coloring.num_colors != cert["num_colors"]:
            return VerifyResult("invalid", "claimed color count differs from the assignment")
        return VerifyResult("valid")
    if kind == "minor_model":
        model = linkage_mod.MinorModel(
            g, tuple(frozenset(p) for p in cert["parts"]),
            frozenset(cert["roots"]) if "roots" in cert else None)
        verdict = linkage_mod.verify_minor_model(model)
        return VerifyResult("valid" if verdict.valid else "invalid", "; ".join(verdict.violations))
    if kind == "connectivity":
        vs = sorted(set(cert["vertices"]))
        k = int(cert["k"])
        if any(not 0 <= v < g.n for v in vs):
            return VerifyResult("invalid", "subgraph vertices outside the host")
        sub, _ = induced_subgraph(g, vs)
        if not oracles.is_k_connected(sub, k):
            return VerifyResult("invalid", f"subgraph is not {k}-connected")
        return VerifyResult("valid")
    if kind == "separator":
        a, b, sep = set(cert["A"]), set(cert["B"]), set(cert["separator"])
        if not flow.separates(g, sep, a, b):
            return VerifyResult("invalid", "set does not separate A from B")
        return VerifyResult("valid")
    if kind == "linkage":
        linkage = linkage_mod.Linkage(
            g, tuple((int(s), int(t)) for s, t in cert["pairs"]),
            tuple(tuple(int(v) for v in p) for p in cert["paths"]))
        verdict = linkage_mod.verify_linkage(linkage)
        return VerifyResult("valid" if verdict.valid else "invalid", "; ".join(verdict.violations))
    if kind == "core_tangent":
        cm = linkage_mod.CoredModel(
            linkage_mod.MinorModel(g, tuple(frozenset(p) for p in cert["parts"])),
            frozenset(cert["core"]), frozenset(cert["tangent"]))
        verdict, _witnesses = linkage_mod.verify_core_tangent(cm)
        return VerifyResult("valid" if verdict.valid else "invalid", "; ".join(verdict.violations))
    return VerifyResult("malformed", f"unknown certificate kind {kind!r}")


def dump_certificates(path: str, certs: Iterable[dict[str, Any]]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for cert in certs:
            fh.write(json.dumps(cert, sort_keys=True) + "\n")


def load_certificates(path: str) -> list[dict[str, Any]]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out
