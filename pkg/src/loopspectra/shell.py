"""Ingestion, egress, and the command-line interface.

Graphs travel as graph6 strings (single-byte header, so n <= 62) with a
sidecar loop specification: ``<graph6> | <loops>`` where the loop field is
``-`` (none), ``*`` (every vertex), or comma-separated vertex indices.
Reports are JSON with a mandatory schema version and stable key order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from . import bounds as bounds_mod
from . import harness as harness_mod
from .construct import adjacency, complement, line_graph
from .graphcore import LoopedGraph, SimpleGraph, family, make_looped
from .invariants import energy
from .numerics import (
    NumericIntegrityError,
    charpoly_exact,
    closed_form_Kn_sigma_spectrum,
    eig_sym,
    multiset_distance,
    verify_linegraph_identity,
)

SCHEMA_VERSION = 1
MAX_GRAPH6_ORDER = 62


class ParseError(ValueError):
    """Malformed graph6 or loop-line input."""


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> SimpleGraph:
    """Decode a graph6 string (standard 6-bit encoding, n <= 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for byte in data:
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} outside the graph6 alphabet")
    n = data[0] - 63
    if data[0] == 126:
        raise ParseError("multi-byte graph6 headers (n > 62) are not supported")
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = data[1:]
    if len(body) != need_bytes:
        raise ParseError(
            f"graph6 body for n={n} needs {need_bytes} bytes, got {len(body)}"
        )
    bits = []
    for byte in body:
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[need_bits:]):
        raise ParseError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph.from_edges(n, edges)


def print_graph6(g: SimpleGraph) -> str:
    """Encode a simple graph as a graph6 string."""
    if g.n > MAX_GRAPH6_ORDER:
        raise ParseError(f"graph6 output limited to n <= {MAX_GRAPH6_ORDER}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k : k + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# loop-line codec
# ---------------------------------------------------------------------------


def parse_loopline(line: str) -> LoopedGraph:
    """Parse ``<graph6> | <loop spec>`` into a looped graph.

    The split is on the last ``|`` because the graph6 alphabet itself
    contains ``|``; the loop field never does.
    """
    if "|" not in line:
        raise ParseError("missing '|' separator between graph6 and loop spec")
    head, _, tail = line.rpartition("|")
    g = parse_graph6(head.strip())
    spec = tail.strip()
    if not spec:
        raise ParseError("empty loop spec (use '-' for no loops)")
    if spec == "-":
        loops: frozenset[int] = frozenset()
    elif spec == "*":
        loops = frozenset(range(g.n))
    else:
        items = []
        for token in spec.split(","):
            token = token.strip()
            if not token.isdigit():
                raise ParseError(f"bad loop index {token!r}")
            items.append(int(token))
        if len(set(items)) != len(items):
            raise ParseError("duplicate loop indices")
        if any(v >= g.n for v in items):
            raise ParseError("loop index out of range")
        loops = frozenset(items)
    return make_looped(g, loops)


def print_loopline(gs: LoopedGraph) -> str:
    if gs.sigma == 0:
        spec = "-"
    elif gs.sigma == gs.n:
        spec = "*"
    else:
        spec = ",".join(str(v) for v in sorted(gs.loops))
    return f"{print_graph6(gs.base)} | {spec}"


# ---------------------------------------------------------------------------
# report helpers
# ---------------------------------------------------------------------------


def format_real(x: float) -> str:
    """Decimal string with up to 12 significant digits (reproducible reports)."""
    if x == 0:
        x = 0.0
    return format(float(x), ".12g")


def instance_echo(gs: LoopedGraph) -> dict:
    return {
        "n": gs.n,
        "m": gs.m,
        "sigma": gs.sigma,
        "loopline": print_loopline(gs),
    }


def _base_report(gs: LoopedGraph) -> dict:
    return {"schema_version": SCHEMA_VERSION, "instance": instance_echo(gs)}


def spectrum_report(gs: LoopedGraph) -> dict:
    report = _base_report(gs)
    report["spectrum"] = [format_real(x) for x in eig_sym(adjacency(gs)).values]
    return report


def energy_report(gs: LoopedGraph) -> dict:
    report = _base_report(gs)
    e = energy(gs)
    report["energy"] = format_real(e.value)
    report["center"] = f"{e.center.numerator}/{e.center.denominator}"
    return report


def charpoly_report(gs: LoopedGraph) -> dict:
    report = _base_report(gs)
    report["charpoly"] = [str(c) for c in charpoly_exact(adjacency(gs))]
    return report


def bounds_report(gs: LoopedGraph, only: Iterable[str] | None, margin: float) -> dict:
    report = _base_report(gs)
    report["bounds"] = {
        r.bound: r.to_json_dict() for r in bounds_mod.evaluate_all(gs, only=only, margin=margin)
    }
    return report


def identity_report(gs: LoopedGraph) -> dict:
    report = _base_report(gs)
    check = verify_linegraph_identity(gs.base)
    report["identity"] = {
        "equal": check.equal,
        "lhs": [str(c) for c in check.lhs],
        "rhs": [str(c) for c in check.rhs],
    }
    return report


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def _read_lines(path: str) -> list[str]:
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as handle:
            raw = handle.read()
    return [line for line in (l.strip() for l in raw.splitlines()) if line and not line.startswith("#")]


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _parse_only(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    ids = tuple(t.strip() for t in text.split(",") if t.strip())
    if not ids:
        raise ParseError("--only got an empty bound list")
    return ids


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopspectra",
        description="Spectra, energies, and verified bounds for graphs with self-loops.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="loop-line file, or - for stdin")

    for name in ("spectrum", "energy", "charpoly", "linegraph", "complement"):
        add_input(sub.add_parser(name))

    p_bounds = sub.add_parser("bounds")
    add_input(p_bounds)
    p_bounds.add_argument("--only", default=None, help="comma-separated bound ids, e.g. B7,B17")
    p_bounds.add_argument("--tol", type=float, default=bounds_mod.VIOLATION_MARGIN)

    add_input(sub.add_parser("identity"))

    p_fuzz = sub.add_parser("fuzz")
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--n-min", type=int, default=1)
    p_fuzz.add_argument("--n-max", type=int, default=8)
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument("--edge-probs", default="0.2,0.5,0.8")
    p_fuzz.add_argument("--sigma-policy", default="uniform", choices=["uniform", "bernoulli", "fixed"])
    p_fuzz.add_argument("--sigma-param", type=float, default=None)
    p_fuzz.add_argument("--only", default=None)
    p_fuzz.add_argument("--exhaustive", type=int, default=None, metavar="N",
                        help="enumerate all graphs up to order N instead of sampling")
    p_fuzz.add_argument("--stable", action="store_true", help="omit runtime for byte-stable output")

    p_family = sub.add_parser("family")
    p_family.add_argument("--name", required=True)
    p_family.add_argument("--n", type=int, default=None)
    p_family.add_argument("--sigma", type=int, default=None)
    p_family.add_argument("--k", type=int, default=None)
    p_family.add_argument("--p", type=int, default=None)
    p_family.add_argument("--sizes", default=None, help="comma-separated part sizes")
    p_family.add_argument("--loops", default=None, help="comma-separated loop vertices")

    p_oracle = sub.add_parser("oracle")
    p_oracle.add_argument("--n-max", type=int, default=40)
    p_oracle.add_argument("--kn-max", type=int, default=12)

    return parser


def _run_per_line(args, out) -> int:
    exit_code = 0
    for line in _read_lines(args.input):
        gs = parse_loopline(line)
        if args.command == "spectrum":
            _emit(spectrum_report(gs), out)
        elif args.command == "energy":
            _emit(energy_report(gs), out)
        elif args.command == "charpoly":
            _emit(charpoly_report(gs), out)
        elif args.command == "linegraph":
            out.write(print_loopline(line_graph(gs).graph) + "\n")
        elif args.command == "complement":
            out.write(print_loopline(complement(gs)) + "\n")
        elif args.command == "identity":
            report = identity_report(gs)
            _emit(report, out)
            if not report["identity"]["equal"]:
                exit_code = 1
        elif args.command == "bounds":
            report = bounds_report(gs, _parse_only(args.only), args.tol)
            _emit(report, out)
            if any(b["verdict"] == "violated" for b in report["bounds"].values()):
                exit_code = 1
    return exit_code


def _run_fuzz(args, out) -> int:
    probs = tuple(float(t) for t in args.edge_probs.split(",") if t.strip())
    config = harness_mod.CampaignConfig(
        seed=args.seed,
        n_min=args.n_min,
        n_max=args.exhaustive if args.exhaustive is not None else args.n_max,
        edge_probs=probs,
        sigma_policy=args.sigma_policy,
        sigma_param=args.sigma_param,
        count=args.count,
        bounds=_parse_only(args.only),
        exhaustive=args.exhaustive is not None,
    )
    try:
        report = harness_mod.run_campaign(config)
    except harness_mod.HardGateViolation as exc:
        _emit({"schema_version": SCHEMA_VERSION, "hard_gate_violation": {
            "gate": exc.gate, "witness": exc.witness, "detail": exc.detail}}, out)
        return 1
    out.write(json.dumps(report.to_json_dict(include_runtime=not args.stable), indent=2) + "\n")
    return 1 if report.violations else 0


def _run_family(args, out) -> int:
    params: dict = {}
    if args.n is not None:
        params["n"] = args.n
    if args.sigma is not None:
        params["sigma"] = args.sigma
    if args.k is not None:
        params["k"] = args.k
    if args.p is not None:
        params["p"] = args.p
    if args.sizes is not None:
        params["sizes"] = [int(t) for t in args.sizes.split(",") if t.strip()]
    if args.loops is not None:
        params["loops"] = [int(t) for t in args.loops.split(",") if t.strip()]
    out.write(print_loopline(family(args.name, **params)) + "\n")
    return 0


def _run_oracle(args, out) -> int:
    report = harness_mod.oracle_ng_aux(args.n_max)
    closed_ok = True
    worst = 0.0
    for n in range(1, args.kn_max + 1):
        for sigma in range(0, n + 1):
            expected = closed_form_Kn_sigma_spectrum(n, sigma).values
            actual = eig_sym(adjacency(family("kn_sigma", n=n, sigma=sigma))).values
            dist = multiset_distance(expected, actual)
            worst = max(worst, dist)
            if dist > 1e-9:
                closed_ok = False
    payload = {
        "schema_version": SCHEMA_VERSION,
        "aux_matrix_oracle": {
            "ok": report.ok,
            "checked": report.checked,
            "failures": [list(f) for f in report.failures],
        },
        "kn_sigma_closed_form": {"ok": closed_ok, "max_distance": format_real(worst)},
    }
    out.write(json.dumps(payload, indent=2) + "\n")
    return 0 if report.ok and closed_ok else 1


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "fuzz":
            return _run_fuzz(args, out)
        if args.command == "family":
            return _run_family(args, out)
        if args.command == "oracle":
            return _run_oracle(args, out)
        return _run_per_line(args, out)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericIntegrityError, harness_mod.HardGateViolation) as exc:
        print(f"numeric integrity failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
