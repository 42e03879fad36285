"""Command-line interface.

Certificates go to stdout as JSON (one object per input graph), diagnostics
to stderr.  Exit codes: 0 property holds, 1 property fails (with witness),
2 input/parse error, 3 input is not P4-free, 4 a certificate failed
re-verification.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .cograph import NotCographError, P4Witness, random_cograph, recognize
from .graph import Graph, GraphFormatError, components, emit_graph, parse_graph
from .oracle import SizeGuardError, oracle_k_walk, oracle_prism_hamiltonian, oracle_toughness
from .prism_walks import (
    KWalk,
    PrismCycle,
    find_k_walk,
    prism_cycle_from_sbep,
    two_walk_from_prism_cycle,
    validate_k_walk,
    validate_prism_cycle,
)
from .sbep import sbep_from_json, single_block_vertices, spanning_sbep, validate_sbep
from .sweep import KINDS, digest, sweep
from .toughness import INF, NotTough, format_ratio, toughness_exact

log = logging.getLogger("cotough")

EXIT_OK, EXIT_FAILS, EXIT_INPUT, EXIT_NOT_COGRAPH, EXIT_VERIFY = 0, 1, 2, 3, 4


def _read_graphs(source: str, fmt: str) -> list[Graph]:
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    if not text.strip():
        raise GraphFormatError("empty input")
    if fmt == "auto":
        fmt = "edge_list" if text.lstrip()[0].isdigit() else "graph6"
    if fmt == "edge_list":
        return [parse_graph(text, "edge_list")]
    return [parse_graph(line, "graph6") for line in text.splitlines() if line.strip()]


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _for_each_graph(args, handler) -> int:
    try:
        graphs = _read_graphs(args.input, args.format)
    except (OSError, GraphFormatError, UnicodeError) as exc:
        log.error("cannot read graph: %s", exc)
        return EXIT_INPUT
    worst = EXIT_OK
    for g in graphs:
        start = time.perf_counter()
        try:
            code, body = handler(g, args)
        except NotCographError as exc:
            code, body = EXIT_NOT_COGRAPH, {"error": "not P4-free", **exc.witness.to_json()}
        report = {"input": digest(g), "command": args.command, "n": g.n, **body}
        if args.timing:
            report["wall_time"] = round(time.perf_counter() - start, 6)
        _emit(report)
        worst = max(worst, code)
    return worst


# -- subcommands -------------------------------------------------------------


def _recognize(g: Graph, args):
    tree = recognize(g)
    if isinstance(tree, P4Witness):
        return EXIT_FAILS, {"cograph": False, **tree.to_json()}
    return EXIT_OK, {"cograph": True, "cotree": tree.to_text(), "cotree_json": tree.to_json()}


def _toughness(g: Graph, args):
    res = toughness_exact(g)
    body = {"result": res.to_json()}
    if args.oracle:
        try:
            value, _ = oracle_toughness(g)
        except SizeGuardError as exc:
            body["oracle"] = {"skipped": str(exc)}
        else:
            expected = INF if value is None else value
            agree = expected == res.value
            body["oracle"] = {"toughness": format_ratio(expected), "agree": agree}
            if not agree:
                return EXIT_VERIFY, body
    return EXIT_OK, body


def _prism_ham(g: Graph, args):
    if g.n < 2:
        return EXIT_INPUT, {"error": "prism-hamiltonicity needs at least two vertices"}
    res = spanning_sbep(g)
    if isinstance(res, NotTough):
        body = {"prism_hamiltonian": False, "result": res.to_json()}
        code = EXIT_FAILS
        cyc = None
    else:
        cyc = prism_cycle_from_sbep(res)
        body = {"prism_hamiltonian": True, "result": cyc.to_json()}
        if args.emit_sbep:
            body["sbep"] = res.to_json()
        if args.emit_2walk:
            body["two_walk"] = two_walk_from_prism_cycle(cyc).to_json()
        code = EXIT_OK
    if args.verify:
        checks = {}
        if cyc is not None:
            checks["sbep"] = validate_sbep(res) and res.is_spanning()
            checks["prism_cycle"] = validate_prism_cycle(g, cyc, vertical_at=single_block_vertices(res))
            checks["two_walk"] = validate_k_walk(g, two_walk_from_prism_cycle(cyc))
        try:
            checks["oracle_agrees"] = oracle_prism_hamiltonian(g).holds == (cyc is not None)
        except SizeGuardError:
            checks["oracle_agrees"] = None
        body["verify"] = checks
        if any(v is False for v in checks.values()):
            return EXIT_VERIFY, body
    return code, body


def _k_walk(g: Graph, args):
    k = args.k
    if not g.is_connected():
        res = NotTough(Fraction(1, k), toughness_exact(g))
    else:
        res = find_k_walk(g, k)
    if isinstance(res, NotTough):
        body, code = {"k_walk": False, "result": res.to_json()}, EXIT_FAILS
    else:
        body, code = {"k_walk": True, "result": res.to_json()}, EXIT_OK
    if args.verify:
        checks = {}
        if isinstance(res, KWalk):
            checks["walk"] = validate_k_walk(g, res)
        try:
            checks["oracle_agrees"] = oracle_k_walk(g, k).holds == isinstance(res, KWalk)
        except SizeGuardError:
            checks["oracle_agrees"] = None
        body["verify"] = checks
        if any(v is False for v in checks.values()):
            return EXIT_VERIFY, body
    return code, body


def _verify(g: Graph, args):
    """Check a certificate JSON object against the graph."""
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            cert = json.load(fh)
    except (OSError, ValueError) as exc:
        return EXIT_INPUT, {"error": f"cannot read certificate: {exc}"}
    cert = cert.get("result", cert) if "blocks" not in cert else cert
    checks: dict = {}
    if "cycle" in cert:
        pc = PrismCycle(tuple((int(v), int(s)) for v, s in cert["cycle"]))
        checks["prism_cycle"] = validate_prism_cycle(g, pc)
    if "walk" in cert:
        checks["k_walk"] = validate_k_walk(g, KWalk(int(cert["k"]), tuple(int(v) for v in cert["walk"])))
    if "blocks" in cert:
        try:
            s = sbep_from_json(g, cert)
            checks["sbep"] = validate_sbep(s) and s.is_spanning()
        except (KeyError, ValueError):
            checks["sbep"] = False
    if "p4" in cert:
        checks["p4"] = P4Witness(*map(int, cert["p4"])).verify(g)
    if "toughness" in cert:
        checks["toughness"] = _check_toughness_claim(g, cert)
    if not checks:
        return EXIT_INPUT, {"error": "no recognised certificate fields"}
    code = EXIT_OK if all(checks.values()) else EXIT_FAILS
    return code, {"valid": code == EXIT_OK, "checks": checks}


def _check_toughness_claim(g: Graph, cert: dict) -> bool:
    claimed = cert["toughness"]
    tough_set = cert.get("tough_set")
    if claimed == "inf":
        return g.is_complete()
    value = Fraction(claimed)
    if tough_set is None:
        return False
    s = frozenset(int(v) for v in tough_set)
    c = len(components(g, frozenset(g.vertices) - s))
    if c < 2 or Fraction(len(s), c) != value:
        return False
    return toughness_exact(g).value == value


def cmd_sweep(args) -> int:
    kinds = [k for k in args.kinds.split(",") if k]
    unknown = set(kinds) - set(KINDS)
    if unknown:
        log.error("unknown kinds: %s", ",".join(sorted(unknown)))
        return EXIT_INPUT
    bad = total = 0
    start = time.perf_counter()
    for rec in sweep(args.nmax, kinds, args.seed, args.random, args.random_nmax, not args.no_oracle):
        total += 1
        bad += not rec["ok"]
        if not args.summary_only or not rec["ok"]:
            _emit(rec)
    summary = {"graphs": total, "discrepancies": bad, "kinds": kinds, "nmax": args.nmax, "seed": args.seed}
    if args.timing:
        summary["wall_time"] = round(time.perf_counter() - start, 3)
    _emit({"summary": summary})
    return EXIT_OK if bad == 0 else EXIT_FAILS


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    for _ in range(args.count):
        g = random_cograph(args.n, rng, p_join=args.p_join, connected=not args.allow_disconnected)
        sys.stdout.write(emit_graph(g, args.out_format) + "\n")
    return EXIT_OK


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cotough", description="Toughness, prism and walk certificates for cographs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin (default)")
        sp.add_argument("--format", choices=("auto", "graph6", "edge_list"), default="auto")
        sp.add_argument("--timing", action="store_true", help="add wall_time to each report")
        return sp

    graph_cmd("recognize", "cotree or induced P4")
    sp = graph_cmd("toughness", "exact toughness with a tough-set")
    sp.add_argument("--oracle", action="store_true", help="cross-check by full subset enumeration")
    sp = graph_cmd("prism-ham", "prism hamiltonian cycle or toughness obstruction")
    sp.add_argument("--emit-sbep", action="store_true")
    sp.add_argument("--emit-2walk", action="store_true")
    sp.add_argument("--verify", action="store_true")
    sp = graph_cmd("k-walk", "spanning k-walk or toughness obstruction")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    sp = graph_cmd("verify", "check a certificate against a graph")
    sp.add_argument("--certificate", required=True, help="JSON file")

    sp = sub.add_parser("sweep", help="cross-check constructions against oracles")
    sp.add_argument("--nmax", type=int, default=7)
    sp.add_argument("--kinds", default="toughness,prism,kwalk,ham", help=f"comma list from {','.join(KINDS)}")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--random", type=int, default=0, help="number of extra random cographs")
    sp.add_argument("--random-nmax", type=int, default=20)
    sp.add_argument("--no-oracle", action="store_true")
    sp.add_argument("--summary-only", action="store_true", help="print failing records and the summary only")
    sp.add_argument("--timing", action="store_true")

    sp = sub.add_parser("gen", help="random cographs")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--p-join", type=float, default=0.5)
    sp.add_argument("--allow-disconnected", action="store_true")
    sp.add_argument("--out-format", choices=("graph6", "edge_list"), default="graph6")
    return p


_HANDLERS = {
    "recognize": _recognize,
    "toughness": _toughness,
    "prism-ham": _prism_ham,
    "k-walk": _k_walk,
    "verify": _verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    if args.command == "sweep":
        return cmd_sweep(args)
    if args.command == "gen":
        if args.n < 1 or args.count < 0:
            log.error("need n >= 1 and count >= 0")
            return EXIT_INPUT
        return cmd_gen(args)
    if getattr(args, "k", 1) < 1:
        log.error("k must be positive")
        return EXIT_INPUT
    return _for_each_graph(args, _HANDLERS[args.command])


if __name__ == "__main__":
    sys.exit(main())
