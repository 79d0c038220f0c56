"""Command-line harness: analyze | extract | experiment | verify.

Exit codes: 0 everything passed, 1 a property or certificate was falsified,
2 usage or input error.  Reports are JSON lines (one record per graph) with
deterministic content; wall-clock timings go to stderr only, so identical
(config, seed) runs produce byte-identical outputs.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from fractions import Fraction
from typing import Any, Iterable

from . import bounds, certificates, extraction, generators, oracles, suites
from .graph import Graph, GraphError, degeneracy_coloring
from .graph6 import Graph6Error, encode_graph6, read_dimacs_col, read_graph6_file

PROFILE_DIR_ENV = "MINOR_TOOLKIT_PROFILE_DIR"

DEFAULT_GATES = {
    "chi": oracles.MAX_CHROMATIC_N,
    "alpha": oracles.MAX_INDEPENDENCE_N,
    "rho": oracles.MAX_HALL_RATIO_N,
    # the oracle accepts up to MAX_HADWIGER_N, but dense 11-12 vertex graphs
    # take tens of seconds each; keep the interactive default lower
    "hadwiger": 10,
}


def _usage_error(msg: str) -> SystemExit:
    # argparse uses exit code 2 for usage errors; keep our own consistent
    print(msg, file=sys.stderr)
    return SystemExit(2)


def _parse_kv(items: Iterable[str], what: str) -> dict[str, str]:
    out = {}
    for item in items:
        if "=" not in item:
            raise _usage_error(f"error: {what} expects key=value, got {item!r}")
        key, _, val = item.partition("=")
        out[key.strip()] = val.strip()
    return out


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def resolve_profile(name: str, overrides: dict[str, str]) -> extraction.ConstantsProfile:
    """Built-in preset, or <profile-dir>/<name>.json from the environment."""
    if name in extraction.PROFILES:
        profile = extraction.PROFILES[name]
    else:
        pdir = os.environ.get(PROFILE_DIR_ENV)
        path = os.path.join(pdir, f"{name}.json") if pdir else None
        if path is None or not os.path.exists(path):
            raise _usage_error(f"error: unknown profile {name!r} "
                               f"(presets: {sorted(extraction.PROFILES)}; set ${PROFILE_DIR_ENV} for custom ones)")
        with open(path, "r", encoding="ascii") as fh:
            raw = json.load(fh)
        fields = {k: Fraction(v) if isinstance(v, str) else v for k, v in raw.items()}
        profile = extraction.ConstantsProfile(name=name, **fields)
    if overrides:
        typed: dict[str, Any] = {}
        for key, val in overrides.items():
            if key in ("duchet_factor", "largechi_need", "largechi_loss"):
                typed[key] = int(val)
            elif key == "kostochka_coeff":
                typed[key] = float(val)
            else:
                typed[key] = _parse_fraction(val)
        profile = profile.with_overrides(**typed)
    return profile


def load_inputs(args: argparse.Namespace) -> tuple[list[tuple[str, Graph]], list[dict[str, Any]]]:
    """Graphs from files and/or generator specs; per-file error records."""
    graphs: list[tuple[str, Graph]] = []
    errors: list[dict[str, Any]] = []
    for path in args.input or []:
        try:
            if path.endswith(".col"):
                with open(path, "r", encoding="ascii") as fh:
                    graphs.append((path, read_dimacs_col(fh.read())))
            else:
                for i, g in enumerate(read_graph6_file(path)):
                    graphs.append((f"{path}:{i + 1}", g))
        except (OSError, Graph6Error, GraphError) as exc:
            errors.append({"input": path, "error": str(exc)})
    if args.generate:
        for i in range(args.count):
            seed = args.seed + i
            try:
                graphs.append((f"{args.generate}#seed={seed}", generators.generate(args.generate, seed)))
            except GraphError as exc:
                errors.append({"input": args.generate, "error": str(exc)})
                break
    return graphs, errors


def _emit(records: list[dict[str, Any]], out: str | None) -> None:
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------

def _analyze_one(name: str, g: Graph, gates: dict[str, int]) -> dict[str, Any]:
    d = g.density()
    rec: dict[str, Any] = {
        "input": name,
        "graph6": encode_graph6(g),
        "n": g.n,
        "e": g.e,
        "d": {"num": d.numerator, "den": d.denominator},
        "min_degree": min((g.degree(v) for v in g.vertices()), default=0),
        "degeneracy": degeneracy_coloring(g).degeneracy,
    }
    kappa, _ = oracles.vertex_connectivity(g)
    rec["kappa"] = kappa
    if g.n <= gates["chi"]:
        chi, _ = oracles.chromatic_number(g)
        rec["chi"] = chi
    if g.n <= gates["alpha"]:
        alpha, _ = oracles.independence_number(g)
        rec["alpha"] = alpha
    if g.n <= gates["rho"]:
        rho, _ = oracles.hall_ratio(g)
        rec["rho"] = {"num": rho.numerator, "den": rho.denominator}
    if g.n <= gates["hadwiger"]:
        h, _ = oracles.hadwiger_number(g)
        rec["hadwiger"] = h
        if g.n <= gates["rho"]:
            report = bounds.check_duchet_meyniel(g)
            rec["duchet_meyniel_satisfied"] = report.satisfied
    return rec


def cmd_analyze(args: argparse.Namespace) -> int:
    gates = dict(DEFAULT_GATES)
    for key, val in _parse_kv(args.gates or [], "--gates").items():
        if key not in gates:
            raise _usage_error(f"error: unknown gate {key!r}; known: {sorted(gates)}")
        gates[key] = int(val)
    graphs, errors = load_inputs(args)
    if not graphs and not errors:
        print("warning: no inputs", file=sys.stderr)
        _emit([], args.out)
        return 0
    if args.jobs > 1 and graphs:
        from multiprocessing import Pool
        with Pool(args.jobs) as pool:
            records = pool.starmap(_analyze_one, [(nm, g, gates) for nm, g in graphs])
    else:
        records = [_analyze_one(nm, g, gates) for nm, g in graphs]
    records.extend(errors)
    _emit(records, args.out)
    return 2 if errors and not graphs else 0


# ---------------------------------------------------------------------------

def cmd_extract(args: argparse.Namespace) -> int:
    profile = resolve_profile(args.profile, _parse_kv(args.set or [], "--set"))
    graphs, errors = load_inputs(args)
    if not graphs and errors:
        _emit(errors, args.out)
        return 2
    records: list[dict[str, Any]] = list(errors)
    falsified = False
    for name, g in graphs:
        rec: dict[str, Any] = {"input": name, "graph6": encode_graph6(g), "op": args.op}
        try:
            if args.op == "small_dense":
                report = extraction.small_dense_subgraph(g, args.t, args.k, profile)
                rec.update(report.to_record())
                if report.outcome == "dense_subgraph":
                    rec["certificate"] = certificates.connectivity_certificate(
                        g, report.vertices, args.k)
                elif report.outcome == "minor_found":
                    rec["certificate"] = certificates.model_certificate(g, report.model_parts)
            elif args.op == "mader":
                res = extraction.mader_connected_subgraph(g)
                rec.update({"outcome": "dense_subgraph" if res.verified else "unverified-candidate",
                            "target": res.target, "kappa": res.kappa,
                            "vertices": sorted(res.vertices) if res.vertices else None})
                if res.verified:
                    rec["certificate"] = certificates.connectivity_certificate(
                        g, res.vertices, res.target)
            elif args.op == "disjoint":
                res = extraction.extract_disjoint_connected_subgraphs(
                    g, args.k, args.r, args.size_cap, profile)
                rec.update({"outcome": "extracted", "found": len(res.subgraphs),
                            "kappas": list(res.kappas),
                            "subgraphs": [sorted(s) for s in res.subgraphs],
                            "residual_density": {"num": res.residual_density.numerator,
                                                 "den": res.residual_density.denominator}})
                rec["certificates"] = [certificates.connectivity_certificate(g, s, args.k)
                                       for s in res.subgraphs]
            elif args.op == "high_chi":
                res = extraction.high_chromatic_connected_subgraph(g, args.k, profile)
                rec.update({"outcome": "extracted", "kappa": res.kappa,
                            "chi_subgraph": res.chi_subgraph, "chi_host": res.chi_host,
                            "satisfied": res.satisfied, "vertices": sorted(res.vertices)})
            else:
                raise _usage_error(f"error: unknown op {args.op!r}")
        except extraction.PreconditionError as exc:
            rec.update({"outcome": "rejected", "reason": str(exc)})
        except extraction.SymbolicConstantError as exc:
            rec.update({"outcome": "refused", "reason": str(exc)})
            records.append(rec)
            _emit(records, args.out)
            return 2
        except oracles.OracleSizeError as exc:
            rec.update({"outcome": "rejected", "reason": str(exc)})
        if args.verify and "certificate" in rec:
            result = certificates.verify_certificate(rec["certificate"])
            rec["verified"] = result.valid
            if not result.valid:
                falsified = True
        if args.verify and "certificates" in rec:
            oks = [certificates.verify_certificate(c).valid for c in rec["certificates"]]
            rec["verified"] = all(oks)
            if not all(oks):
                falsified = True
        records.append(rec)
    _emit(records, args.out)
    return 1 if falsified else 0


# ---------------------------------------------------------------------------

def cmd_experiment(args: argparse.Namespace) -> int:
    if args.suite not in suites.SUITES:
        raise _usage_error(f"error: unknown suite {args.suite!r}; known: {sorted(suites.SUITES)}")
    kwargs: dict[str, Any] = {}
    if args.suite in ("special_subset", "menger_variant", "steiner", "menger_duality"):
        kwargs = {"count": args.count, "seed": args.seed}
    elif args.suite == "lem_small":
        kwargs = {"random_count": args.count, "seed": args.seed}
    start = time.monotonic()
    rows, summary = suites.SUITES[args.suite](**kwargs)
    elapsed = time.monotonic() - start
    print(f"{args.suite}: {summary['instances']} instances, "
          f"{summary['failures']} failures, {elapsed:.1f}s", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=sorted({k for r in rows for k in r}))
            writer.writeheader()
            writer.writerows(rows)
    sys.stdout.write(json.dumps(summary, sort_keys=True) + "\n")
    if summary["failures"]:
        for row in rows:
            if not row["pass"]:
                sys.stdout.write(json.dumps({"falsified": row}, sort_keys=True) + "\n")
        return 1
    return 0


# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    records = []
    worst = 0
    for path in args.certificates:
        try:
            certs = certificates.load_certificates(path)
        except (OSError, json.JSONDecodeError) as exc:
            records.append({"file": path, "status": "unreadable", "detail": str(exc)})
            worst = max(worst, 2)
            continue
        for i, cert in enumerate(certs):
            result = certificates.verify_certificate(cert)
            records.append({"file": path, "index": i, "kind": cert.get("kind"),
                            "status": result.status, "detail": result.detail})
            if result.status in ("invalid", "wrong-host"):
                worst = max(worst, 1)
            elif result.status == "malformed":
                worst = max(worst, 2)
    _emit(records, args.out)
    return worst


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minor-toolkit",
        description="graph-minor and coloring toolkit: analysis, extraction, experiments, verification")
    sub = parser.add_subparsers(dest="command", required=True)

    def common_inputs(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", action="append", help="graph6 or DIMACS .col file (repeatable)")
        p.add_argument("--generate", help="generator spec, e.g. 'gnp(40,0.5)' or 'petersen'")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=1, help="number of generated instances")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--jobs", type=int, default=1)

    pa = sub.add_parser("analyze", help="per-graph quantities, oracles, and bound checks")
    common_inputs(pa)
    pa.add_argument("--gates", action="append", help="oracle size gate override, e.g. chi=18")
    pa.set_defaults(func=cmd_analyze)

    pe = sub.add_parser("extract", help="dense-subgraph and minor extraction")
    common_inputs(pe)
    pe.add_argument("--op", default="small_dense", choices=["small_dense", "mader", "disjoint", "high_chi"])
    pe.add_argument("--profile", default="desk-small")
    pe.add_argument("--set", action="append", help="profile constant override, e.g. y_frac=1/4")
    pe.add_argument("--t", type=int, default=3)
    pe.add_argument("--k", type=int, default=4)
    pe.add_argument("--r", type=int, default=2)
    pe.add_argument("--size-cap", type=int, default=1000, dest="size_cap")
    pe.add_argument("--verify", action="store_true", help="re-check every emitted certificate")
    pe.set_defaults(func=cmd_extract)

    px = sub.add_parser("experiment", help="batch property suites")
    px.add_argument("--suite", required=True)
    px.add_argument("--count", type=int, default=100)
    px.add_argument("--seed", type=int, default=0)
    px.add_argument("--out", help="CSV output path")
    px.set_defaults(func=cmd_experiment)

    pv = sub.add_parser("verify", help="re-check certificate files")
    pv.add_argument("certificates", nargs="+")
    pv.add_argument("--out", help="output path (default stdout)")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
